#include "frieze/criterion.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace frieze {

namespace {

bool is_prime_int(const Int& p) {
  if (p < 2) return false;
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Visits k-subsets of `pool` (ascending) in lexicographic order until the
// callback returns true; reports whether the callback ever did.
bool first_subset(const std::vector<int>& pool, int k,
                  const std::function<bool(const std::vector<int>&)>& visit) {
  int sz = static_cast<int>(pool.size());
  if (k > sz) return false;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  std::vector<int> subset(k);
  while (true) {
    for (int i = 0; i < k; ++i) subset[i] = pool[idx[i]];
    if (visit(subset)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == sz - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::pair<bool, std::optional<GcdWitness>> check_gcd_condition(const Frieze& f) {
  int n = f.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Int g1 = gcd(f.label(i, j), f.label(j, k));
        Int g2 = gcd(f.label(j, k), f.label(i, k));
        Int g3 = gcd(f.label(i, j), f.label(i, k));
        if (g1 != g2 || g2 != g3) {
          GcdWitness w;
          w.vertices = {i, j, k};
          w.gcds = {g1, g2, g3};
          return {false, w};
        }
      }
  return {true, std::nullopt};
}

std::pair<bool, std::optional<ValuationWitness>> check_valuation_condition(
    const Frieze& f) {
  int n = f.size();
  for (int p_small : primes_below(n)) {
    Int p = p_small;
    // A violating set is a clique in the graph whose edges are the pairs
    // with label divisible by p, so every member needs degree >= p there.
    bool divides_any = false;
    std::vector<int> degree(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (f.label(i, j) % p == 0) {
          divides_any = true;
          ++degree[i];
          ++degree[j];
        }
    if (!divides_any) continue;
    std::vector<int> pool;
    for (int v = 0; v < n; ++v)
      if (degree[v] >= p_small) pool.push_back(v);
    std::optional<ValuationWitness> found;
    first_subset(pool, p_small + 1, [&](const std::vector<int>& s) {
      int m = -1;
      for (size_t a = 0; a < s.size(); ++a)
        for (size_t b = a + 1; b < s.size(); ++b) {
          const Int& lab = f.label(s[a], s[b]);
          if (lab % p != 0) return false;
          int v = valuation(lab, p);
          if (m < 0) m = v;
          if (v != m) return false;
        }
      found = ValuationWitness{p, s, m};
      return true;
    });
    if (found) return {false, found};
  }
  return {true, std::nullopt};
}

CriterionReport is_embeddable(const Frieze& f) {
  CriterionReport r;
  std::tie(r.gcd_ok, r.gcd_witness) = check_gcd_condition(f);
  std::tie(r.valuation_ok, r.valuation_witness) = check_valuation_condition(f);
  return r;
}

bool check_triangle_criterion(const Int& a, const Int& b, const Int& c) {
  if (a < 1 || b < 1 || c < 1) throw NonPositiveLabel("triangle labels must be positive");
  if (gcd(a, b) != gcd(b, c) || gcd(b, c) != gcd(a, c)) return false;
  std::set<int> v2{valuation(a, 2), valuation(b, 2), valuation(c, 2)};
  return (v2 == std::set<int>{0}) || v2.size() > 1;
}

std::pair<int, bool> pm_divisibility(const Frieze& f, const Int& p,
                                     const std::vector<int>& s) {
  if (!is_prime_int(p)) throw PreconditionUnmet("p = " + p.get_str() + " is not prime");
  if (Int(static_cast<long>(s.size())) != p + 1)
    throw PreconditionUnmet("vertex set must have p+1 elements");
  for (size_t a = 0; a < s.size(); ++a) {
    if (s[a] < 0 || s[a] >= f.size())
      throw PreconditionUnmet("vertex " + std::to_string(s[a]) + " out of range");
    if (a > 0 && s[a - 1] >= s[a])
      throw PreconditionUnmet("vertices must be strictly increasing");
  }
  if (!check_gcd_condition(f).first)
    throw PreconditionUnmet("frieze fails the gcd condition");
  int m = -1;
  for (size_t a = 0; a < s.size(); ++a)
    for (size_t b = a + 1; b < s.size(); ++b) {
      int v = valuation(f.label(s[a], s[b]), p);
      if (m < 0) m = v;
      if (v != m)
        throw PreconditionUnmet("pair labels within s do not share one p-valuation");
    }
  Int pm = int_pow(p, m);
  bool ok = true;
  for (int i = 0; i < f.size() && ok; ++i)
    for (int j = i + 1; j < f.size(); ++j)
      if (f.label(i, j) % pm != 0) {
        ok = false;
        break;
      }
  return {m, ok};
}

}  // namespace frieze
