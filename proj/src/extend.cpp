#include "frieze/extend.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace frieze {

namespace {

// View of f rotated so that the edge being extended is (n-1, 0):
// vertex v of f becomes (v - (a+1)) mod n.  c[j] = label(j, n-1) in the
// rotated frame; c[0] is the edge label.
struct EdgeFrame {
  int n = 0;
  int a = 0;  // left endpoint of the edge in f's own numbering
  Frieze rot;
  std::vector<Int> c;
};

EdgeFrame make_frame(const Frieze& f, std::pair<int, int> edge) {
  int n = f.size();
  auto [a, b] = edge;
  if (n < 3 || a < 0 || a >= n || b != (a + 1) % n)
    throw NotBoundaryEdge("(" + std::to_string(a) + "," + std::to_string(b) +
                          ") is not a boundary edge of the " + std::to_string(n) +
                          "-gon");
  EdgeFrame fr;
  fr.n = n;
  fr.a = a;
  std::vector<Int> labels;
  labels.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      labels.push_back(f.label((i + a + 1) % n, (j + a + 1) % n));
  fr.rot = Frieze::unchecked(n, std::move(labels));
  fr.c.reserve(n - 1);
  for (int j = 0; j <= n - 2; ++j) fr.c.push_back(fr.rot.label(j, n - 1));
  if (fr.c[0] == 1)
    throw EdgeLabelOne("edge (" + std::to_string(a) + "," + std::to_string(b) +
                       ") has label 1");
  return fr;
}

// Sieve output for one prime divisor of the edge label.
struct SievedPrime {
  Int p;
  int ell = 0;
  int m = 0;
  std::vector<int> candidates;
  std::vector<std::vector<Int>> forbidden;  // parallel to candidates
};

SievedPrime sieve_prime(const EdgeFrame& fr, const Int& p, int ell) {
  SievedPrime sp;
  sp.p = p;
  sp.ell = ell;
  int n = fr.n;
  std::vector<int> val(n - 1);
  int m = ell;
  for (int j = 0; j <= n - 2; ++j) {
    val[j] = valuation(fr.c[j], p);
    m = std::min(m, val[j]);
  }
  sp.m = m;
  for (int j = 0; j <= n - 2; ++j)
    if (val[j] == m) sp.candidates.push_back(j);
  Int pm = int_pow(p, m);
  for (int ip : sp.candidates) {
    std::set<Int> forb{Int(0)};
    for (int j = 0; j <= n - 2; ++j) {
      if (j == ip || val[j] != m) continue;
      const Int& cij = fr.rot.label(ip, j);
      if (valuation(cij, p) != m) continue;
      // Residue of y_ip that would force an extra factor of p into the
      // label closing the triangle (ip, j, new vertex).
      Int r = mod_floor(mod_inverse(fr.c[j] / pm, p) * (cij / pm), p);
      if (j > ip) r = mod_floor(-r, p);
      forb.insert(r);
    }
    sp.forbidden.emplace_back(forb.begin(), forb.end());
  }
  return sp;
}

std::vector<SievedPrime> sieve_all(const EdgeFrame& fr) {
  std::vector<SievedPrime> out;
  for (const auto& [p, ell] : factorize(fr.c[0])) out.push_back(sieve_prime(fr, p, ell));
  return out;
}

std::vector<Int> admissible_digits(const Int& p, const std::vector<Int>& forbidden) {
  std::vector<Int> out;
  for (Int d = 1; d < p; ++d)
    if (!std::binary_search(forbidden.begin(), forbidden.end(), d)) out.push_back(d);
  return out;
}

// Digit recorded for a choice at a prime where m = 0: the eventual residue
// of y_0 is already forced there, so the value is inert; we keep the
// smallest digit the sieve does not name, or 1 when it names them all.
Int inert_digit(const Int& p, const std::vector<Int>& forbidden) {
  auto adm = admissible_digits(p, forbidden);
  return adm.empty() ? Int(1) : adm.front();
}

PrimeLocal to_prime_local(const SievedPrime& sp, int candidate_index) {
  PrimeLocal pl;
  pl.p = sp.p;
  pl.ell = sp.ell;
  pl.m = sp.m;
  pl.ip_candidates = sp.candidates;
  pl.candidate = sp.candidates[candidate_index];
  pl.forbidden = sp.forbidden[candidate_index];
  return pl;
}

int candidate_index_of(const SievedPrime& sp, int ip) {
  auto it = std::find(sp.candidates.begin(), sp.candidates.end(), ip);
  if (it == sp.candidates.end())
    throw PreconditionUnmet("vertex " + std::to_string(ip) +
                            " does not attain the minimum valuation at p = " +
                            sp.p.get_str());
  return static_cast<int>(it - sp.candidates.begin());
}

// Residue of y_0 mod p^ell determined by choosing value y_aux for y_ip.
Int y0_residue(const EdgeFrame& fr, const SievedPrime& sp, int ip, const Int& y_aux) {
  Int pm = int_pow(sp.p, sp.m);
  Int pl = int_pow(sp.p, sp.ell);
  const Int& ci0 = fr.rot.label(ip, 0);
  if (ci0 % pm != 0)
    throw PreconditionUnmet("label(" + std::to_string(ip) +
                            ",0) is not divisible by the minimum power of " +
                            sp.p.get_str());
  Int num = (fr.c[0] / pm) * y_aux - ci0 / pm;
  return mod_floor(mod_inverse(fr.c[ip] / pm, pl) * num, pl);
}

// Checks a resolved row against the sieve and returns the reduced residue.
Int validate_row(const SievedPrime& sp, const PrimeLocal& row, int& ip_out) {
  if (!row.chosen_ip || !row.chosen_residue)
    throw PreconditionUnmet("choice at p = " + sp.p.get_str() +
                            " is missing its chosen vertex or residue");
  ip_out = *row.chosen_ip;
  candidate_index_of(sp, ip_out);  // throws when not a candidate
  Int pl = int_pow(sp.p, sp.ell);
  Int r = mod_floor(*row.chosen_residue, pl);
  if (r % sp.p == 0)
    throw PreconditionUnmet("chosen residue " + row.chosen_residue->get_str() +
                            " is not a unit mod " + sp.p.get_str());
  if (sp.m >= 1) {
    const auto& forb = sp.forbidden[candidate_index_of(sp, ip_out)];
    if (std::binary_search(forb.begin(), forb.end(), mod_floor(r, sp.p)))
      throw PreconditionUnmet("chosen residue " + r.get_str() +
                              " is forbidden mod " + sp.p.get_str());
  }
  return r;
}

}  // namespace

std::vector<Int> admissible_residues(const PrimeLocal& pl) {
  return admissible_digits(pl.p, pl.forbidden);
}

std::vector<PrimeLocal> admissible_choices(const Frieze& f, std::pair<int, int> edge) {
  EdgeFrame fr = make_frame(f, edge);
  std::vector<PrimeLocal> out;
  for (const SievedPrime& sp : sieve_all(fr)) {
    if (sp.m >= 1) {
      bool any = false;
      for (const auto& forb : sp.forbidden)
        if (!admissible_digits(sp.p, forb).empty()) any = true;
      if (!any)
        throw NoAdmissibleResidue("every residue mod " + sp.p.get_str() +
                                  " is ruled out at each minimizing vertex");
    }
    for (size_t ci = 0; ci < sp.candidates.size(); ++ci)
      out.push_back(to_prime_local(sp, static_cast<int>(ci)));
  }
  return out;
}

ExtensionChoice default_choice(const Frieze& f, std::pair<int, int> edge) {
  EdgeFrame fr = make_frame(f, edge);
  ExtensionChoice choice;
  choice.edge = edge;
  for (const SievedPrime& sp : sieve_all(fr)) {
    int ci = -1;
    Int digit;
    if (sp.m == 0) {
      ci = 0;
      digit = inert_digit(sp.p, sp.forbidden[0]);
    } else {
      for (size_t k = 0; k < sp.candidates.size(); ++k) {
        auto adm = admissible_digits(sp.p, sp.forbidden[k]);
        if (!adm.empty()) {
          ci = static_cast<int>(k);
          digit = adm.front();
          break;
        }
      }
      if (ci < 0)
        throw NoAdmissibleResidue("every residue mod " + sp.p.get_str() +
                                  " is ruled out at each minimizing vertex");
    }
    PrimeLocal row = to_prime_local(sp, ci);
    row.chosen_ip = sp.candidates[ci];
    row.chosen_residue = digit;  // lifted unchanged to a class mod p^ell
    choice.per_prime.push_back(std::move(row));
  }
  return choice;
}

ExtensionChoice choice_with(const Frieze& f, std::pair<int, int> edge,
                            const std::vector<std::tuple<Int, int, Int>>& picks) {
  EdgeFrame fr = make_frame(f, edge);
  std::vector<SievedPrime> sieved = sieve_all(fr);
  if (picks.size() != sieved.size())
    throw PreconditionUnmet("expected one pick per prime divisor, got " +
                            std::to_string(picks.size()));
  ExtensionChoice choice;
  choice.edge = edge;
  for (const SievedPrime& sp : sieved) {
    const std::tuple<Int, int, Int>* pick = nullptr;
    for (const auto& pk : picks)
      if (std::get<0>(pk) == sp.p) pick = &pk;
    if (!pick)
      throw PreconditionUnmet("no pick supplied for prime " + sp.p.get_str());
    PrimeLocal row = to_prime_local(sp, candidate_index_of(sp, std::get<1>(*pick)));
    row.chosen_ip = std::get<1>(*pick);
    row.chosen_residue = mod_floor(std::get<2>(*pick), int_pow(sp.p, sp.ell));
    int ip_unused = 0;
    validate_row(sp, row, ip_unused);
    choice.per_prime.push_back(std::move(row));
  }
  return choice;
}

std::pair<Frieze, ExtensionTrace> extend_step(const Frieze& f,
                                              const ExtensionChoice& choice) {
  EdgeFrame fr = make_frame(f, choice.edge);
  int n = fr.n;
  const Int& c0 = fr.c[0];
  std::vector<SievedPrime> sieved = sieve_all(fr);
  if (choice.per_prime.size() != sieved.size())
    throw PreconditionUnmet("choice must cover exactly the prime divisors of " +
                            c0.get_str());

  ExtensionChoice resolved;
  resolved.edge = choice.edge;
  Int y0_res = 0, mod = 1;
  for (const SievedPrime& sp : sieved) {
    const PrimeLocal* row = nullptr;
    for (const auto& r : choice.per_prime)
      if (r.p == sp.p) row = &r;
    if (!row)
      throw PreconditionUnmet("choice is missing prime " + sp.p.get_str());
    int ip = -1;
    Int r = validate_row(sp, *row, ip);
    Int pl = int_pow(sp.p, sp.ell);
    // A choice of y_ip pins down y_0 at this prime; check the degenerate
    // self-consistency of that map before using it.
    if (mod_floor(mod_inverse(fr.c[ip] / int_pow(sp.p, sp.m), pl) *
                      ((fr.c[ip] / int_pow(sp.p, sp.m)) * r),
                  pl) != mod_floor(r, pl))
      throw PostconditionFailed("residue map is not the identity at its own vertex");
    Int rp = y0_residue(fr, sp, ip, r);
    y0_res = crt_pair(y0_res, mod, rp, pl);
    mod *= pl;

    PrimeLocal out_row = to_prime_local(sp, candidate_index_of(sp, ip));
    out_row.chosen_ip = ip;
    out_row.chosen_residue = r;
    resolved.per_prime.push_back(std::move(out_row));
  }

  Int y0 = mod_floor(y0_res, c0);
  if (y0 == 0 || gcd(y0, c0) != 1)
    throw PostconditionFailed("combined residue " + y0.get_str() +
                              " is not a unit mod " + c0.get_str());
  std::vector<Int> y(n - 1);
  y[0] = y0;
  for (int j = 1; j <= n - 2; ++j) {
    Int num = fr.c[j] * y0 + fr.rot.label(0, j);
    if (num % c0 != 0)
      throw NonIntegralY("closing label at vertex " + std::to_string(j) +
                         ": " + num.get_str() + " not divisible by " + c0.get_str());
    y[j] = num / c0;
  }
  for (int i = 0; i <= n - 2; ++i)
    for (int j = i + 1; j <= n - 2; ++j)
      if (fr.c[i] * y[j] != fr.c[j] * y[i] + fr.rot.label(i, j))
        throw PostconditionFailed("cross identity fails at (" + std::to_string(i) +
                                  "," + std::to_string(j) + ")");

  // Assemble the grown polygon in the original numbering: the new vertex
  // takes index a+1 and everything after it shifts up by one.
  int nn = n + 1;
  int new_vertex = fr.a + 1;
  auto to_rot = [&](int x) {
    if (x == new_vertex) return n;
    int old = x < new_vertex ? x : x - 1;
    return ((old - (fr.a + 1)) % n + n) % n;
  };
  auto label_of = [&](int x, int yv) -> Int {
    int rx = to_rot(x), ry = to_rot(yv);
    if (rx != n && ry != n) return fr.rot.label(rx, ry);
    int other = rx == n ? ry : rx;
    return other == n - 1 ? Int(1) : y[other];
  };
  std::vector<std::vector<Int>> rows(nn - 1);
  for (int i = 0; i < nn - 1; ++i) {
    rows[i].reserve(nn - 1 - i);
    for (int j = i + 1; j < nn; ++j) rows[i].push_back(label_of(i, j));
  }
  ValidationReport report = verify_ptolemy(nn, rows);
  if (!report.ok)
    throw PostconditionFailed("extension violates an exchange relation at (" +
                              std::to_string(report.violations[0].i) + "," +
                              std::to_string(report.violations[0].j) + "," +
                              std::to_string(report.violations[0].k) + "," +
                              std::to_string(report.violations[0].l) + ")");
  std::vector<Int> flat;
  flat.reserve(static_cast<size_t>(nn) * (nn - 1) / 2);
  for (const auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
  Frieze grown = Frieze::unchecked(nn, std::move(flat));

  CriterionReport crit = is_embeddable(grown);
  if (!crit.embeddable())
    throw PostconditionFailed("extension no longer satisfies the embeddability conditions");
  std::vector<int> original;
  original.reserve(n);
  for (int v = 0; v < nn; ++v)
    if (v != new_vertex) original.push_back(v);
  if (!(restrict(grown, original) == f))
    throw PostconditionFailed("extension does not restrict back to its input");

  ExtensionTrace trace;
  trace.choice = std::move(resolved);
  trace.y0_mod_c0 = y0;
  trace.y = std::move(y);
  trace.new_vertex = new_vertex;
  return {std::move(grown), std::move(trace)};
}

namespace {

// Smallest left endpoint of a boundary edge with label > 1, or -1 if none.
int default_edge(const Frieze& f) {
  for (int a = 0; a < f.size(); ++a)
    if (f.label(a, (a + 1) % f.size()) > 1) return a;
  return -1;
}

Int step_bound(const Frieze& f) {
  Int cap = 0;
  for (int a = 0; a < f.size(); ++a) cap += f.label(a, (a + 1) % f.size()) - 1;
  return cap;
}

void require_embeddable(const Frieze& f) {
  CriterionReport r = is_embeddable(f);
  if (r.embeddable()) return;
  std::string what = "input fails the embeddability criterion:";
  if (!r.gcd_ok)
    what += " triangle (" + std::to_string(r.gcd_witness->vertices[0]) + "," +
            std::to_string(r.gcd_witness->vertices[1]) + "," +
            std::to_string(r.gcd_witness->vertices[2]) + ") has unequal gcds;";
  if (!r.valuation_ok)
    what += " a " + Int(r.valuation_witness->p + 1).get_str() +
            "-subset shares one positive " + r.valuation_witness->p.get_str() +
            "-valuation;";
  throw NotEmbeddable(what);
}

void shift_map(std::vector<int>& vmap, int new_vertex) {
  for (int& v : vmap)
    if (v >= new_vertex) ++v;
}

}  // namespace

Embedding embed(const Frieze& f, const EmbedPolicy& policy) {
  require_embeddable(f);
  Int cap = step_bound(f);
  Frieze cur = f;
  std::vector<int> vmap(f.size());
  for (int i = 0; i < f.size(); ++i) vmap[i] = i;
  std::vector<ExtensionTrace> traces;
  Int steps = 0;
  while (!is_conway_coxeter(cur)) {
    if (steps >= cap)
      throw StepLimitExceeded("not done after " + steps.get_str() + " steps");
    ExtensionChoice choice;
    if (steps < Int(static_cast<long>(policy.scripted.size()))) {
      const StepPick& pick = policy.scripted[steps.get_si()];
      std::pair<int, int> edge{pick.edge_a, (pick.edge_a + 1) % cur.size()};
      choice = choice_with(cur, edge, pick.primes);
    } else {
      int a = default_edge(cur);
      choice = default_choice(cur, {a, (a + 1) % cur.size()});
    }
    auto [next, trace] = extend_step(cur, choice);
    shift_map(vmap, trace.new_vertex);
    traces.push_back(std::move(trace));
    cur = std::move(next);
    ++steps;
  }
  Embedding emb;
  emb.tri = triangulation_of(cur);
  emb.cc = std::move(cur);
  emb.vertex_map = std::move(vmap);
  emb.traces = std::move(traces);
  if (!(restrict(emb.cc, emb.vertex_map) == f))
    throw PostconditionFailed("embedding does not restrict back to its input");
  return emb;
}

std::vector<Embedding> enumerate_embeddings(const Frieze& f, int limit) {
  if (limit < 1) throw PreconditionUnmet("limit must be >= 1");
  require_embeddable(f);
  std::vector<Embedding> out;

  struct Branch {
    Int p;
    int ip;
    Int residue;
  };

  // Depth-first walk over every choice that can change the outcome; returns
  // true when the limit is reached.
  auto dfs = [&](auto&& self, const Frieze& cur, std::vector<int> vmap,
                 std::vector<ExtensionTrace> traces) -> bool {
    if (is_conway_coxeter(cur)) {
      for (const Embedding& e : out)
        if (e.cc == cur) return false;
      Embedding emb;
      emb.tri = triangulation_of(cur);
      emb.cc = cur;
      emb.vertex_map = std::move(vmap);
      emb.traces = std::move(traces);
      out.push_back(std::move(emb));
      return static_cast<int>(out.size()) >= limit;
    }
    int a = default_edge(cur);
    std::pair<int, int> edge{a, (a + 1) % cur.size()};
    EdgeFrame fr = make_frame(cur, edge);
    std::vector<SievedPrime> sieved = sieve_all(fr);
    // Options per prime, deduplicated by the residue they force on y_0.
    std::vector<std::vector<Branch>> options;
    for (const SievedPrime& sp : sieved) {
      std::vector<Branch> branches;
      std::set<Int> seen;
      for (size_t ci = 0; ci < sp.candidates.size(); ++ci) {
        int ip = sp.candidates[ci];
        std::vector<Int> residues;
        if (sp.m == 0) {
          residues.push_back(inert_digit(sp.p, sp.forbidden[ci]));
        } else {
          Int lifts = int_pow(sp.p, sp.ell - 1);
          for (const Int& d : admissible_digits(sp.p, sp.forbidden[ci]))
            for (Int t = 0; t < lifts; ++t) residues.push_back(d + t * sp.p);
        }
        for (const Int& r : residues) {
          Int forced = y0_residue(fr, sp, ip, r);
          if (seen.insert(forced).second) branches.push_back({sp.p, ip, r});
        }
      }
      if (branches.empty())
        throw NoAdmissibleResidue("every residue mod " + sp.p.get_str() +
                                  " is ruled out at each minimizing vertex");
      options.push_back(std::move(branches));
    }
    std::vector<const Branch*> combo(options.size());
    auto walk = [&](auto&& go, size_t k) -> bool {
      if (k == options.size()) {
        std::vector<std::tuple<Int, int, Int>> picks;
        picks.reserve(combo.size());
        for (const Branch* b : combo) picks.emplace_back(b->p, b->ip, b->residue);
        auto [next, trace] = extend_step(cur, choice_with(cur, edge, picks));
        std::vector<int> vmap2 = vmap;
        shift_map(vmap2, trace.new_vertex);
        std::vector<ExtensionTrace> traces2 = traces;
        traces2.push_back(std::move(trace));
        return self(self, next, std::move(vmap2), std::move(traces2));
      }
      for (const Branch& b : options[k]) {
        combo[k] = &b;
        if (go(go, k + 1)) return true;
      }
      return false;
    };
    return walk(walk, 0);
  };

  std::vector<int> vmap(f.size());
  for (int i = 0; i < f.size(); ++i) vmap[i] = i;
  dfs(dfs, f, std::move(vmap), {});
  return out;
}

}  // namespace frieze
