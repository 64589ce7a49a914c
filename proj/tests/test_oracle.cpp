// Tests for the brute-force occurrence oracle and the criterion/ground-truth
// cross check.

#include <catch2/catch_amalgamated.hpp>

#include <optional>
#include <vector>

#include "frieze/oracle.hpp"
#include "frieze/frieze.hpp"
#include "frieze/triangulation.hpp"
#include "helpers.hpp"

using namespace frieze;
using frieze::testing::scaled_square;
using frieze::testing::triangle;
using frieze::testing::worked_square;

namespace {

// Re-validate a witness from first principles: the transformed restriction
// must reproduce the query's labels.
void check_witness(const Frieze& f, const OccurrenceWitness& w) {
  REQUIRE(w.n_cc == w.tri.n);
  Frieze r = restrict(frieze_of(w.tri), w.vertex_subset);
  int k = f.size();
  auto g = [&](int x) {
    if (w.transform.reflected) return ((w.transform.offset - x) % k + k) % k;
    return (w.transform.offset + x) % k;
  };
  for (int x = 0; x < k; ++x) {
    for (int y = x + 1; y < k; ++y) {
      REQUIRE(f.label(x, y) == r.label(g(x), g(y)));
    }
  }
}

}  // namespace

TEST_CASE("oracle finds the unit triangle immediately", "[oracle]") {
  auto w = occurs_in_cc(triangle(1, 1, 1), 3);
  REQUIRE(w.has_value());
  REQUIRE(w->n_cc == 3);
  REQUIRE(w->tri.diagonals.empty());
  REQUIRE(w->vertex_subset == std::vector<int>{0, 1, 2});
  REQUIRE(w->transform == DihedralMap{0, false});
  check_witness(triangle(1, 1, 1), *w);
}

TEST_CASE("oracle finds (1,1,2) on the square", "[oracle]") {
  Frieze f = triangle(1, 1, 2);
  auto w = occurs_in_cc(f, 4);
  REQUIRE(w.has_value());
  REQUIRE(w->n_cc == 4);
  REQUIRE(w->tri.diagonals == std::vector<std::pair<int, int>>{{0, 2}});
  REQUIRE(w->vertex_subset == std::vector<int>{0, 1, 3});
  REQUIRE(w->transform == DihedralMap{2, false});
  check_witness(f, *w);
}

TEST_CASE("oracle witnesses for embeddable triangles", "[oracle]") {
  Frieze a = triangle(3, 3, 6);
  auto wa = occurs_in_cc(a, 9);
  REQUIRE(wa.has_value());
  REQUIRE(wa->n_cc == 8);
  REQUIRE(wa->tri == fan(8, 0));
  REQUIRE(wa->vertex_subset == std::vector<int>{1, 4, 7});
  REQUIRE(wa->transform == DihedralMap{0, false});
  check_witness(a, *wa);

  Frieze b = triangle(4, 4, 8);
  auto wb = occurs_in_cc(b, 9);
  REQUIRE(wb.has_value());
  REQUIRE(wb->n_cc == 8);
  REQUIRE(wb->tri.diagonals ==
          std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {0, 6}, {3, 6}, {4, 6}});
  REQUIRE(wb->vertex_subset == std::vector<int>{1, 5, 7});
  REQUIRE(wb->transform == DihedralMap{1, false});
  check_witness(b, *wb);
}

TEST_CASE("oracle reports no occurrence for criterion failures", "[oracle]") {
  REQUIRE_FALSE(occurs_in_cc(triangle(2, 2, 2), 9).has_value());
  REQUIRE_FALSE(occurs_in_cc(triangle(2, 3, 4), 9).has_value());
  REQUIRE_FALSE(occurs_in_cc(scaled_square(), 9).has_value());
}

TEST_CASE("oracle confirms the worked square inside a decagon", "[oracle]") {
  Frieze f = worked_square();
  auto w = occurs_in_cc(f, 10);
  REQUIRE(w.has_value());
  REQUIRE(w->n_cc == 10);
  REQUIRE(w->tri.diagonals ==
          std::vector<std::pair<int, int>>{
              {0, 2}, {0, 3}, {0, 4}, {4, 9}, {5, 9}, {6, 8}, {6, 9}});
  REQUIRE(w->vertex_subset == std::vector<int>{1, 3, 7, 9});
  REQUIRE(w->transform == DihedralMap{2, false});
  check_witness(f, *w);
}

TEST_CASE("oracle enforces its caps", "[oracle]") {
  REQUIRE_THROWS_AS(occurs_in_cc(triangle(1, 1, 1), 13), CapExceeded);
  REQUIRE_THROWS_AS(occurs_in_cc(worked_square(), 3), CapExceeded);
  // A raised cap permits a larger n_max.
  REQUIRE(occurs_in_cc(triangle(1, 1, 2), 4, 13).has_value());
}

TEST_CASE("cross_validate finds no disagreement on small polygons", "[oracle]") {
  REQUIRE(cross_validate(6, 4).empty());
  REQUIRE(cross_validate(7, 3, {scaled_square(), triangle(2, 2, 2)}).empty());
}

TEST_CASE("cross_validate enforces its caps", "[oracle]") {
  REQUIRE_THROWS_AS(cross_validate(10, 3), CapExceeded);
  REQUIRE_THROWS_AS(cross_validate(5, 6), CapExceeded);
}
