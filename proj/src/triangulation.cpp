#include "frieze/triangulation.hpp"

#include <algorithm>
#include <string>

namespace frieze {

namespace {

bool crossing(std::pair<int, int> d, std::pair<int, int> e) {
  auto [a, b] = d;
  auto [c, f] = e;
  return (a < c && c < b && b < f) || (c < a && a < f && f < b);
}

// All ways to triangulate the convex polygon on the (circularly ordered)
// vertex list vs, returned as diagonal sets in original vertex numbers.
void gen(int n, const std::vector<int>& vs,
         std::vector<std::pair<int, int>>& acc,
         std::vector<std::vector<std::pair<int, int>>>& out) {
  int k = static_cast<int>(vs.size());
  if (k < 3) {
    out.push_back(acc);
    return;
  }
  auto chord = [&](int u, int v) {
    int gap = std::abs(u - v);
    return gap != 1 && gap != n - 1;  // skip boundary edges of the n-gon
  };
  // Pick the apex of the triangle resting on the edge (vs.front(), vs.back()).
  for (int t = 1; t <= k - 2; ++t) {
    size_t mark = acc.size();
    if (chord(vs[0], vs[t])) acc.emplace_back(std::min(vs[0], vs[t]), std::max(vs[0], vs[t]));
    if (chord(vs[t], vs[k - 1]))
      acc.emplace_back(std::min(vs[t], vs[k - 1]), std::max(vs[t], vs[k - 1]));
    std::vector<int> left(vs.begin(), vs.begin() + t + 1);
    std::vector<int> right(vs.begin() + t, vs.end());
    std::vector<std::vector<std::pair<int, int>>> lefts;
    std::vector<std::pair<int, int>> empty;
    gen(n, left, empty, lefts);
    for (auto& ld : lefts) {
      size_t mark2 = acc.size();
      acc.insert(acc.end(), ld.begin(), ld.end());
      gen(n, right, acc, out);
      acc.resize(mark2);
    }
    acc.resize(mark);
  }
}

}  // namespace

Triangulation make_triangulation(int n, std::vector<std::pair<int, int>> diagonals) {
  if (n < 3) throw NotATriangulation("polygon needs at least 3 vertices");
  for (auto& [i, j] : diagonals) {
    if (i > j) std::swap(i, j);
    if (i < 0 || j >= n)
      throw NotATriangulation("diagonal {" + std::to_string(i) + "," +
                              std::to_string(j) + "} out of range");
    int gap = j - i;
    if (gap == 0 || gap == 1 || gap == n - 1)
      throw NotATriangulation("{" + std::to_string(i) + "," + std::to_string(j) +
                              "} is not a diagonal of the " + std::to_string(n) + "-gon");
  }
  std::sort(diagonals.begin(), diagonals.end());
  if (std::adjacent_find(diagonals.begin(), diagonals.end()) != diagonals.end())
    throw NotATriangulation("repeated diagonal");
  if (static_cast<int>(diagonals.size()) != n - 3)
    throw NotATriangulation("expected " + std::to_string(n - 3) + " diagonals, got " +
                            std::to_string(diagonals.size()));
  for (size_t a = 0; a < diagonals.size(); ++a)
    for (size_t b = a + 1; b < diagonals.size(); ++b)
      if (crossing(diagonals[a], diagonals[b]))
        throw NotATriangulation("diagonals {" + std::to_string(diagonals[a].first) + "," +
                                std::to_string(diagonals[a].second) + "} and {" +
                                std::to_string(diagonals[b].first) + "," +
                                std::to_string(diagonals[b].second) + "} cross");
  return Triangulation{n, std::move(diagonals)};
}

std::vector<Triangulation> enumerate_triangulations(int n, int cap) {
  if (n < 3 || n > cap)
    throw CapExceeded("vertex count " + std::to_string(n) + " outside [3, " +
                      std::to_string(cap) + "]");
  std::vector<int> vs(n);
  for (int i = 0; i < n; ++i) vs[i] = i;
  std::vector<std::vector<std::pair<int, int>>> sets;
  std::vector<std::pair<int, int>> acc;
  gen(n, vs, acc, sets);
  for (auto& s : sets) std::sort(s.begin(), s.end());
  std::sort(sets.begin(), sets.end());
  std::vector<Triangulation> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.push_back(Triangulation{n, std::move(s)});
  return out;
}

Triangulation fan(int n, int apex) {
  if (n < 3) throw BadApex("polygon needs at least 3 vertices");
  if (apex < 0 || apex >= n)
    throw BadApex("apex " + std::to_string(apex) + " out of range for n=" +
                  std::to_string(n));
  std::vector<std::pair<int, int>> diagonals;
  for (int j = 0; j < n; ++j) {
    int gap = std::abs(j - apex);
    if (gap == 0 || gap == 1 || gap == n - 1) continue;
    diagonals.emplace_back(std::min(apex, j), std::max(apex, j));
  }
  std::sort(diagonals.begin(), diagonals.end());
  return Triangulation{n, std::move(diagonals)};
}

Quiddity quiddity(const Triangulation& t) {
  // The triangles at a vertex form a fan between its two boundary edges, so
  // their number is one more than the vertex's diagonal degree.
  std::vector<int> counts(t.n, 1);
  for (auto [i, j] : t.diagonals) {
    ++counts[i];
    ++counts[j];
  }
  return Quiddity{std::move(counts)};
}

Frieze frieze_of(const Triangulation& t) {
  int n = t.n;
  Quiddity q = quiddity(t);
  std::vector<std::vector<Int>> rows(n - 1);
  for (int i = 0; i < n - 1; ++i) {
    std::vector<Int>& row = rows[i];
    row.resize(n - 1 - i);
    Int prev = 0, cur = 1;  // c(i,i) and c(i,i+1)
    row[0] = cur;
    for (int j = i + 1; j < n - 1; ++j) {
      Int next = q.counts[j] * cur - prev;
      prev = cur;
      cur = next;
      row[j - i] = cur;
      if (cur < 1)
        throw InternalInconsistency("label recurrence gave " + cur.get_str() +
                                    " at {" + std::to_string(i) + "," +
                                    std::to_string(j + 1) + "}");
    }
  }
  return make_frieze(n, rows);
}

Triangulation triangulation_of(const Frieze& f) {
  if (!is_conway_coxeter(f))
    throw NotConwayCoxeter("a boundary edge has label != 1");
  std::vector<std::pair<int, int>> diagonals;
  for (int i = 0; i < f.size(); ++i)
    for (int j = i + 2; j < f.size(); ++j) {
      if (i == 0 && j == f.size() - 1) continue;
      if (f.label(i, j) == 1) diagonals.emplace_back(i, j);
    }
  return make_triangulation(f.size(), std::move(diagonals));
}

}  // namespace frieze
