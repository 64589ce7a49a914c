#pragma once

#include <vector>

#include "frieze/frieze.hpp"
#include "frieze/triangulation.hpp"

namespace frieze::testing {

// Square with boundary labels 2, 4, 2, 12 and diagonals 26, 2; satisfies
// both embeddability conditions and is the running example for extension.
inline Frieze worked_square() {
  return make_frieze(4, {{2, 26, 12}, {4, 2}, {2}});
}

// Square with all boundary labels 3 and diagonals 3, 6: the 3-fold scaling
// of a triangulated square, failing the valuation condition at p = 3.
inline Frieze scaled_square() {
  return make_frieze(4, {{3, 3, 3}, {3, 6}, {3}});
}

// Triangle with labels a = label(0,1), b = label(1,2), c = label(0,2).
inline Frieze triangle(const Int& a, const Int& b, const Int& c) {
  return make_frieze(3, {{a, c}, {b}});
}

}  // namespace frieze::testing
