#include "frieze/frieze.hpp"

#include <utility>

namespace frieze {

namespace {

// Flattens and validates the row-major upper triangle used by make_frieze
// and verify_ptolemy.  Throws BadShape / NonPositiveLabel.
std::vector<Int> flatten_rows(int n, const std::vector<std::vector<Int>>& rows) {
  if (n < 3) throw BadShape("polygon needs at least 3 vertices, got " + std::to_string(n));
  if (static_cast<int>(rows.size()) != n - 1)
    throw BadShape("expected " + std::to_string(n - 1) + " rows, got " +
                   std::to_string(rows.size()));
  std::vector<Int> flat;
  flat.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n - 1; ++i) {
    int want = n - 1 - i;
    if (static_cast<int>(rows[i].size()) != want)
      throw BadShape("row " + std::to_string(i) + " should have " +
                     std::to_string(want) + " labels, got " +
                     std::to_string(rows[i].size()));
    for (int j = i + 1; j < n; ++j) {
      const Int& v = rows[i][j - i - 1];
      if (v < 1)
        throw NonPositiveLabel("label of {" + std::to_string(i) + "," +
                               std::to_string(j) + "} is " + v.get_str());
      flat.push_back(v);
    }
  }
  return flat;
}

}  // namespace

const Int& Frieze::label(int i, int j) const {
  static const Int kZero = 0;
  if (i < 0 || j < 0 || i >= n_ || j >= n_)
    throw std::out_of_range("Frieze::label: vertex out of range");
  if (i == j) return kZero;
  if (i > j) std::swap(i, j);
  return lab_[idx(i, j)];
}

Frieze Frieze::unchecked(int n, std::vector<Int> labels) {
  Frieze f;
  f.n_ = n;
  f.lab_ = std::move(labels);
  return f;
}

Frieze make_frieze(int n, const std::vector<std::vector<Int>>& rows) {
  Frieze f = Frieze::unchecked(n, flatten_rows(n, rows));
  // First violated quadruple in lexicographic order, if any.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          Int lhs = f.label(i, k) * f.label(j, l);
          Int rhs = f.label(i, l) * f.label(j, k) + f.label(i, j) * f.label(k, l);
          if (lhs != rhs) throw PtolemyViolation(i, j, k, l, lhs, rhs);
        }
  return f;
}

ValidationReport verify_ptolemy(int n, const std::vector<std::vector<Int>>& rows) {
  return verify_ptolemy(Frieze::unchecked(n, flatten_rows(n, rows)));
}

ValidationReport verify_ptolemy(const Frieze& f) {
  int n = f.size();
  ValidationReport report;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          Int lhs = f.label(i, k) * f.label(j, l);
          Int rhs = f.label(i, l) * f.label(j, k) + f.label(i, j) * f.label(k, l);
          if (lhs != rhs) report.violations.push_back({i, j, k, l, lhs, rhs});
        }
  report.ok = report.violations.empty();
  return report;
}

Frieze restrict(const Frieze& f, const std::vector<int>& vertices) {
  int k = static_cast<int>(vertices.size());
  if (k < 3) throw BadSubset("need at least 3 vertices, got " + std::to_string(k));
  for (int a = 0; a < k; ++a) {
    if (vertices[a] < 0 || vertices[a] >= f.size())
      throw BadSubset("vertex " + std::to_string(vertices[a]) + " out of range");
    if (a > 0 && vertices[a - 1] >= vertices[a])
      throw BadSubset("vertices must be strictly increasing");
  }
  std::vector<Int> labels;
  labels.reserve(static_cast<size_t>(k) * (k - 1) / 2);
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      labels.push_back(f.label(vertices[a], vertices[b]));
  // Every exchange relation of the restriction is one of f's, so the result
  // needs no re-validation.
  return Frieze::unchecked(k, std::move(labels));
}

Frieze scale(const Frieze& f, const Int& t) {
  if (t < 1) throw NonPositiveScalar("scalar must be positive, got " + t.get_str());
  std::vector<Int> labels;
  labels.reserve(static_cast<size_t>(f.size()) * (f.size() - 1) / 2);
  for (int i = 0; i < f.size(); ++i)
    for (int j = i + 1; j < f.size(); ++j) labels.push_back(t * f.label(i, j));
  // Both sides of each exchange relation are quadratic in the labels, so
  // scaling preserves validity.
  return Frieze::unchecked(f.size(), std::move(labels));
}

bool is_conway_coxeter(const Frieze& f) {
  for (int i = 0; i < f.size(); ++i)
    if (f.label(i, (i + 1) % f.size()) != 1) return false;
  return true;
}

Int pattern_entry(const Frieze& f, long i, long j) {
  long n = f.size();
  if (j < i || j > i + n)
    throw std::out_of_range("pattern_entry: column outside the band of row " +
                            std::to_string(i));
  // Shift the row index into 0..n-1 (the array repeats along the diagonal).
  long ir = ((i % n) + n) % n;
  long jr = j - (i - ir);
  if (jr <= n - 1) return f.label(static_cast<int>(ir), static_cast<int>(jr));
  // Right half of the band folds back by the glide symmetry.
  return f.label(static_cast<int>(jr - n), static_cast<int>(ir));
}

PatternWindow pattern_rows(const Frieze& f, long first_row, int row_count) {
  if (row_count < 1) throw BadShape("row_count must be >= 1");
  PatternWindow w;
  w.polygon_size = f.size();
  w.rows.reserve(row_count);
  for (long i = first_row; i < first_row + row_count; ++i) {
    std::vector<Int> row;
    row.reserve(f.size() + 1);
    for (long j = i; j <= i + f.size(); ++j) row.push_back(pattern_entry(f, i, j));
    w.rows.push_back(std::move(row));
  }
  return w;
}

bool tame_check(const PatternWindow& w) {
  int rows = static_cast<int>(w.rows.size());
  if (rows < 3)
    throw WindowTooSmall("need at least 3 rows, got " + std::to_string(rows));
  int n = w.polygon_size;
  for (const auto& row : w.rows)
    if (static_cast<int>(row.size()) != n + 1)
      throw BadShape("window rows must have " + std::to_string(n + 1) + " entries");
  for (int r = 0; r + 2 < rows; ++r)
    for (int t = 2; t <= n - 2; ++t) {
      const auto& r0 = w.rows[r];
      const auto& r1 = w.rows[r + 1];
      const auto& r2 = w.rows[r + 2];
      const Int &a = r0[t], &b = r0[t + 1], &c = r0[t + 2];
      const Int &d = r1[t - 1], &e = r1[t], &g = r1[t + 1];
      const Int &h = r2[t - 2], &p = r2[t - 1], &q = r2[t];
      Int det = a * (e * q - g * p) - b * (d * q - g * h) + c * (d * p - e * h);
      if (det != 0) return false;
    }
  return true;
}

}  // namespace frieze
