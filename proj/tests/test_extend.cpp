// Tests for the prime-local extension machinery: sieve data, explicit and
// default choices, single extension steps, full embeddings, and the
// depth-first enumeration of alternatives.

#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <set>
#include <tuple>
#include <vector>

#include "frieze/extend.hpp"
#include "frieze/frieze.hpp"
#include "frieze/triangulation.hpp"
#include "helpers.hpp"

using namespace frieze;
using frieze::testing::scaled_square;
using frieze::testing::triangle;
using frieze::testing::worked_square;

namespace {

const std::vector<std::pair<int, int>> kDecagonDiagonals = {
    {1, 9}, {2, 7}, {2, 8}, {2, 9}, {3, 5}, {3, 6}, {3, 7}};

std::vector<std::tuple<Int, int, Int>> picks(
    std::initializer_list<std::tuple<Int, int, Int>> xs) {
  return xs;
}

}  // namespace

TEST_CASE("admissible_choices exposes sieve data per prime and candidate", "[extend]") {
  std::vector<PrimeLocal> rows = admissible_choices(worked_square(), {3, 0});
  REQUIRE(rows.size() == 4);

  REQUIRE(rows[0].p == 2);
  REQUIRE(rows[0].ell == 2);
  REQUIRE(rows[0].m == 1);
  REQUIRE(rows[0].ip_candidates == std::vector<int>{1, 2});
  REQUIRE(rows[0].candidate == 1);
  REQUIRE(rows[0].forbidden == std::vector<Int>{Int(0)});
  REQUIRE(admissible_residues(rows[0]) == std::vector<Int>{Int(1)});

  REQUIRE(rows[1].p == 2);
  REQUIRE(rows[1].candidate == 2);
  REQUIRE(rows[1].forbidden == std::vector<Int>{Int(0)});
  REQUIRE(admissible_residues(rows[1]) == std::vector<Int>{Int(1)});

  REQUIRE(rows[2].p == 3);
  REQUIRE(rows[2].ell == 1);
  REQUIRE(rows[2].m == 0);
  REQUIRE(rows[2].candidate == 1);
  REQUIRE(rows[2].forbidden == std::vector<Int>{Int(0), Int(1)});
  REQUIRE(admissible_residues(rows[2]) == std::vector<Int>{Int(2)});

  REQUIRE(rows[3].p == 3);
  REQUIRE(rows[3].candidate == 2);
  REQUIRE(rows[3].forbidden == std::vector<Int>{Int(0), Int(2)});
  REQUIRE(admissible_residues(rows[3]) == std::vector<Int>{Int(1)});

  for (const auto& r : rows) {
    REQUIRE_FALSE(r.chosen_ip.has_value());
    REQUIRE_FALSE(r.chosen_residue.has_value());
  }
}

TEST_CASE("admissible_choices rejects unusable edges", "[extend]") {
  REQUIRE_THROWS_AS(admissible_choices(worked_square(), {0, 2}), NotBoundaryEdge);
  REQUIRE_THROWS_AS(admissible_choices(worked_square(), {1, 0}), NotBoundaryEdge);
  REQUIRE_THROWS_AS(admissible_choices(frieze_of(fan(4, 0)), {0, 1}), EdgeLabelOne);
}

TEST_CASE("a fully blocked prime raises NoAdmissibleResidue", "[extend]") {
  REQUIRE_THROWS_AS(admissible_choices(scaled_square(), {3, 0}), NoAdmissibleResidue);
}

TEST_CASE("default_choice picks the smallest workable data", "[extend]") {
  ExtensionChoice ch = default_choice(worked_square(), {3, 0});
  REQUIRE(ch.edge == std::pair<int, int>{3, 0});
  REQUIRE(ch.per_prime.size() == 2);
  REQUIRE(ch.per_prime[0].p == 2);
  REQUIRE(ch.per_prime[0].chosen_ip == 1);
  REQUIRE(ch.per_prime[0].chosen_residue == 1);
  REQUIRE(ch.per_prime[1].p == 3);
  REQUIRE(ch.per_prime[1].chosen_ip == 1);
}

TEST_CASE("explicit extension reproduces the worked chain", "[extend]") {
  Frieze f = worked_square();

  auto [pent, t1] = extend_step(
      f, choice_with(f, {3, 0}, picks({{2, 2, 1}, {3, 2, 1}})));
  REQUIRE(t1.y0_mod_c0 == 5);
  REQUIRE(t1.y == std::vector<Int>{5, 1, 3});
  REQUIRE(t1.new_vertex == 4);
  REQUIRE(pent.size() == 5);
  REQUIRE(pent.label(3, 4) == 1);
  REQUIRE(pent.label(0, 4) == 5);
  REQUIRE(pent.label(1, 4) == 1);
  REQUIRE(pent.label(2, 4) == 3);
  REQUIRE(restrict(pent, {0, 1, 2, 3}) == f);

  auto [hexa, t2] = extend_step(pent, choice_with(pent, {4, 0}, picks({{5, 3, 1}})));
  REQUIRE(t2.y0_mod_c0 == 3);
  REQUIRE(t2.y == std::vector<Int>{3, 1, 7, 3});
  REQUIRE(t2.new_vertex == 5);

  auto [hept, t3] = extend_step(hexa, choice_with(hexa, {5, 0}, picks({{3, 4, 2}})));
  REQUIRE(t3.y0_mod_c0 == 1);
  REQUIRE(t3.y == std::vector<Int>{1, 1, 11, 5, 2});
  REQUIRE(t3.new_vertex == 6);
  REQUIRE(verify_ptolemy(hept).ok);
  REQUIRE(restrict(hept, {0, 1, 2, 3}) == f);
}

TEST_CASE("every lift of an admissible residue is accepted", "[extend]") {
  // At p = 2 the admissible digit is 1 and ell = 2, so 3 = 1 + 2 is an
  // equally valid residue mod 4.  Here every lift lands on the same y0.
  Frieze f = worked_square();
  auto [pent, tr] = extend_step(
      f, choice_with(f, {3, 0}, picks({{2, 1, 3}, {3, 1, 1}})));
  REQUIRE(tr.y0_mod_c0 == 5);
  REQUIRE(tr.y == std::vector<Int>{5, 1, 3});
  REQUIRE(verify_ptolemy(pent).ok);
  REQUIRE(restrict(pent, {0, 1, 2, 3}) == f);
}

TEST_CASE("choice_with validates explicit picks", "[extend]") {
  Frieze f = worked_square();
  // Missing prime 3.
  REQUIRE_THROWS_AS(choice_with(f, {3, 0}, picks({{2, 2, 1}})), PreconditionUnmet);
  // Prime 5 does not divide the edge label 12.
  REQUIRE_THROWS_AS(choice_with(f, {3, 0}, picks({{2, 2, 1}, {5, 2, 1}})),
                    PreconditionUnmet);
  // Vertex 0 is not a candidate at p = 2.
  REQUIRE_THROWS_AS(choice_with(f, {3, 0}, picks({{2, 0, 1}, {3, 2, 1}})),
                    PreconditionUnmet);
  // Residue 2 is not a unit mod 2.
  REQUIRE_THROWS_AS(choice_with(f, {3, 0}, picks({{2, 2, 2}, {3, 2, 1}})),
                    PreconditionUnmet);
}

TEST_CASE("scripted and default embeddings agree on the worked square", "[extend]") {
  Frieze f = worked_square();

  EmbedPolicy policy;
  policy.scripted = {
      {3, picks({{2, 2, 1}, {3, 2, 1}})},
      {4, picks({{5, 3, 1}})},
      {5, picks({{3, 4, 2}})},
  };
  Embedding s = embed(f, policy);
  REQUIRE(s.cc.size() == 10);
  REQUIRE(is_conway_coxeter(s.cc));
  REQUIRE(s.tri.diagonals == kDecagonDiagonals);
  REQUIRE(s.vertex_map == std::vector<int>{0, 2, 4, 6});
  REQUIRE(restrict(s.cc, s.vertex_map) == f);
  REQUIRE(triangulation_of(s.cc) == s.tri);
  REQUIRE(s.traces.size() == 6);
  std::vector<Int> y0s, expect_y0s = {5, 3, 1, 1, 1, 1};
  std::vector<int> edges, expect_edges = {3, 4, 5, 0, 2, 4};
  for (const auto& t : s.traces) {
    y0s.push_back(t.y0_mod_c0);
    edges.push_back(t.choice.edge.first);
  }
  REQUIRE(y0s == expect_y0s);
  REQUIRE(edges == expect_edges);

  Embedding d = embed(f);
  REQUIRE(d.cc == s.cc);
  REQUIRE(d.tri == s.tri);
  REQUIRE(d.vertex_map == s.vertex_map);
  std::vector<Int> dy0s, expect_dy0s = {1, 1, 1, 5, 3, 1};
  std::vector<int> dedges, expect_dedges = {0, 2, 4, 6, 7, 8};
  for (const auto& t : d.traces) {
    dy0s.push_back(t.y0_mod_c0);
    dedges.push_back(t.choice.edge.first);
  }
  REQUIRE(dy0s == expect_dy0s);
  REQUIRE(dedges == expect_dedges);

  // Step count stays within sum(boundary label - 1) = 16.
  REQUIRE(d.traces.size() <= 16);
}

TEST_CASE("embedding small inputs", "[extend]") {
  Embedding e = embed(triangle(1, 1, 2));
  REQUIRE(e.cc.size() == 4);
  REQUIRE(e.tri.diagonals == std::vector<std::pair<int, int>>{{1, 3}});
  REQUIRE(e.vertex_map == std::vector<int>{0, 1, 2});
  REQUIRE(e.traces.size() == 1);
  REQUIRE(e.traces[0].y0_mod_c0 == 1);

  Embedding unit = embed(triangle(1, 1, 1));
  REQUIRE(unit.cc == triangle(1, 1, 1));
  REQUIRE(unit.traces.empty());
  REQUIRE(unit.vertex_map == std::vector<int>{0, 1, 2});
}

TEST_CASE("embed refuses inputs that fail the criterion", "[extend]") {
  REQUIRE_THROWS_AS(embed(scaled_square()), NotEmbeddable);
  REQUIRE_THROWS_AS(embed(triangle(2, 3, 4)), NotEmbeddable);
  REQUIRE_THROWS_AS(embed(triangle(2, 2, 2)), NotEmbeddable);
}

TEST_CASE("enumerate_embeddings lists valid distinct embeddings", "[extend]") {
  Frieze f = worked_square();
  std::vector<Embedding> all = enumerate_embeddings(f, 3);
  REQUIRE_FALSE(all.empty());
  REQUIRE(all.size() <= 3);
  REQUIRE(all[0].cc == embed(f).cc);
  std::set<std::vector<std::pair<int, int>>> seen;
  for (const auto& e : all) {
    REQUIRE(is_conway_coxeter(e.cc));
    REQUIRE(restrict(e.cc, e.vertex_map) == f);
    REQUIRE(triangulation_of(e.cc) == e.tri);
    seen.insert(e.tri.diagonals);
  }

  std::vector<Embedding> small = enumerate_embeddings(triangle(1, 1, 2), 10);
  REQUIRE_FALSE(small.empty());
  REQUIRE(small[0].cc == embed(triangle(1, 1, 2)).cc);
  for (const auto& e : small) {
    REQUIRE(restrict(e.cc, e.vertex_map) == triangle(1, 1, 2));
  }

  REQUIRE_THROWS_AS(enumerate_embeddings(f, 0), PreconditionUnmet);
  REQUIRE_THROWS_AS(enumerate_embeddings(scaled_square(), 4), NotEmbeddable);
}

TEST_CASE("default extension succeeds on every small restriction", "[extend]") {
  // Every restriction of a unit-boundary frieze is embeddable, so a default
  // step across any heavy boundary edge must succeed and restrict back.
  for (int n = 4; n <= 5; ++n) {
    for (const auto& t : enumerate_triangulations(n)) {
      Frieze big = frieze_of(t);
      for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> s;
        for (int v = 0; v < n; ++v) {
          if (mask & (1 << v)) s.push_back(v);
        }
        if (s.size() < 3) continue;
        Frieze f = restrict(big, s);
        int k = f.size();
        for (int a = 0; a < k; ++a) {
          if (f.label(a, (a + 1) % k) == 1) continue;
          auto [g, tr] = extend_step(f, default_choice(f, {a, (a + 1) % k}));
          REQUIRE(g.size() == k + 1);
          REQUIRE(tr.new_vertex == a + 1);
          REQUIRE(tr.y0_mod_c0 > 0);
          REQUIRE(tr.y0_mod_c0 < f.label(a, (a + 1) % k));
          REQUIRE(gcd(tr.y0_mod_c0, f.label(a, (a + 1) % k)) == 1);
          std::vector<int> keep;
          for (int v = 0; v <= k; ++v) {
            if (v != a + 1) keep.push_back(v);
          }
          REQUIRE(restrict(g, keep) == f);
        }
      }
    }
  }
}
