#pragma once

#include <utility>
#include <vector>

#include "frieze/frieze.hpp"

namespace frieze {

/// Requested vertex count is outside the configured enumeration range.
struct CapExceeded : Error {
  explicit CapExceeded(const std::string& what) : Error(what) {}
};

/// Fan apex is not a vertex of the polygon.
struct BadApex : Error {
  explicit BadApex(const std::string& what) : Error(what) {}
};

/// An internal construction produced an impossible value; indicates a bug
/// rather than bad input.
struct InternalInconsistency : Error {
  explicit InternalInconsistency(const std::string& what) : Error(what) {}
};

/// Frieze passed where one with all boundary edges equal to 1 is required.
struct NotConwayCoxeter : Error {
  explicit NotConwayCoxeter(const std::string& what) : Error(what) {}
};

/// Diagonal set does not describe a triangulation of the polygon.
struct NotATriangulation : Error {
  explicit NotATriangulation(const std::string& what) : Error(what) {}
};

/// A triangulation of a convex n-gon: exactly n-3 pairwise non-crossing
/// diagonals.  Diagonals are stored as (i,j) with i < j, sorted.
struct Triangulation {
  int n = 0;
  std::vector<std::pair<int, int>> diagonals;

  bool operator==(const Triangulation&) const = default;
};

/// Normalizes (orients and sorts) the diagonal list and checks the
/// Triangulation invariants.  Throws NotATriangulation.
Triangulation make_triangulation(int n, std::vector<std::pair<int, int>> diagonals);

/// Per-vertex triangle counts of a triangulation.
struct Quiddity {
  std::vector<int> counts;

  bool operator==(const Quiddity&) const = default;
};

/// All triangulations of the n-gon in lexicographic order on their sorted
/// diagonal lists.  Throws CapExceeded when n is outside [3, cap].
std::vector<Triangulation> enumerate_triangulations(int n, int cap = 14);

/// Triangulation whose diagonals all start at `apex`.  Throws BadApex.
Triangulation fan(int n, int apex);

/// Number of triangles incident to each vertex.
Quiddity quiddity(const Triangulation& t);

/// The frieze with all boundary edges 1 attached to a triangulation: labels
/// grow out of the triangle counts by the recurrence
/// c(i,j+1) = q(j)*c(i,j) - c(i,j-1) from c(i,i) = 0, c(i,i+1) = 1, and the
/// result is re-validated.  Throws InternalInconsistency on a non-positive
/// label (a bug, not bad input).
Frieze frieze_of(const Triangulation& t);

/// Inverse of frieze_of: reads the triangulation back off a frieze whose
/// boundary edges are all 1 by collecting its label-1 diagonals.  Throws
/// NotConwayCoxeter or NotATriangulation.
Triangulation triangulation_of(const Frieze& f);

}  // namespace frieze
