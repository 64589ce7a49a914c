#include "frieze/oracle.hpp"

#include <algorithm>

namespace frieze {

namespace {

std::vector<Int> sorted_labels(const Frieze& f) {
  std::vector<Int> out;
  out.reserve(static_cast<size_t>(f.size()) * (f.size() - 1) / 2);
  for (int i = 0; i < f.size(); ++i)
    for (int j = i + 1; j < f.size(); ++j) out.push_back(f.label(i, j));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<DihedralMap> placement(const Frieze& query, const Frieze& target) {
  int k = query.size();
  auto matches = [&](auto&& g) {
    for (int x = 0; x < k; ++x)
      for (int y = x + 1; y < k; ++y)
        if (query.label(x, y) != target.label(g(x), g(y))) return false;
    return true;
  };
  for (int off = 0; off < k; ++off)
    if (matches([&](int x) { return (off + x) % k; })) return DihedralMap{off, false};
  for (int off = 0; off < k; ++off)
    if (matches([&](int x) { return ((off - x) % k + k) % k; }))
      return DihedralMap{off, true};
  return std::nullopt;
}

// Visits k-subsets of 0..n-1 in lexicographic order until the callback
// returns true.
template <typename Fn>
void for_subsets(int n, int k, Fn&& visit) {
  if (k > n) return;
  std::vector<int> s(k);
  for (int i = 0; i < k; ++i) s[i] = i;
  while (true) {
    if (visit(s)) return;
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i) --i;
    if (i < 0) return;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

}  // namespace

std::optional<OccurrenceWitness> occurs_in_cc(const Frieze& f, int n_max, int cap) {
  if (f.size() > n_max || n_max > cap)
    throw CapExceeded("need query size <= n_max <= " + std::to_string(cap));
  std::vector<Int> want = sorted_labels(f);
  int k = f.size();
  std::optional<OccurrenceWitness> found;
  for (int n = k; n <= n_max && !found; ++n) {
    for (const Triangulation& t : enumerate_triangulations(n)) {
      Frieze cc = frieze_of(t);
      for_subsets(n, k, [&](const std::vector<int>& subset) {
        Frieze sub = restrict(cc, subset);
        // Cheap multiset filter before trying the 2k placements.
        if (sorted_labels(sub) != want) return false;
        if (auto map = placement(f, sub)) {
          found = OccurrenceWitness{n, t, subset, *map};
          return true;
        }
        return false;
      });
      if (found) break;
    }
  }
  return found;
}

std::vector<std::string> cross_validate(int n_max, int k_max,
                                        const std::vector<Frieze>& negative_corpus) {
  if (n_max > 9 || k_max > n_max)
    throw CapExceeded("need k_max <= n_max <= 9");
  std::vector<std::string> mismatches;
  for (int n = 3; n <= n_max; ++n) {
    for (const Triangulation& t : enumerate_triangulations(n)) {
      Frieze cc = frieze_of(t);
      for (int k = 3; k <= std::min(k_max, n); ++k) {
        for_subsets(n, k, [&](const std::vector<int>& subset) {
          if (!is_embeddable(restrict(cc, subset)).embeddable()) {
            std::string desc = "restriction of the " + std::to_string(n) +
                               "-gon triangulation [";
            for (auto [a, b] : t.diagonals)
              desc += " {" + std::to_string(a) + "," + std::to_string(b) + "}";
            desc += " ] to {";
            for (int v : subset) desc += " " + std::to_string(v);
            desc += " } fails the criterion";
            mismatches.push_back(desc);
          }
          return false;
        });
      }
    }
  }
  for (size_t i = 0; i < negative_corpus.size(); ++i) {
    if (auto w = occurs_in_cc(negative_corpus[i], n_max, std::max(n_max, 12)))
      mismatches.push_back("corpus entry " + std::to_string(i) +
                           " occurs in a frieze on " + std::to_string(w->n_cc) +
                           " vertices despite failing the criterion");
  }
  return mismatches;
}

}  // namespace frieze
