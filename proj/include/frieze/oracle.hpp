#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frieze/criterion.hpp"
#include "frieze/triangulation.hpp"

namespace frieze {

/// Placement of a query polygon onto a vertex subset: query vertex x lands
/// on subset position (offset + x) mod k, or (offset - x) mod k when
/// reflected.
struct DihedralMap {
  int offset = 0;
  bool reflected = false;

  bool operator==(const DihedralMap&) const = default;
};

/// Proof that a frieze occurs inside the frieze of a triangulated polygon:
/// restricting frieze_of(tri) to vertex_subset and composing with the
/// transform reproduces the query's labels exactly.
struct OccurrenceWitness {
  int n_cc = 0;
  Triangulation tri;
  std::vector<int> vertex_subset;
  DihedralMap transform;
};

/// Exhaustive search for an occurrence of f inside any frieze with all
/// boundary edges 1 on N = f.size()..n_max vertices, scanning triangulations
/// in canonical order, vertex subsets lexicographically, and placements
/// rotations-first.  Returns the first witness found, or nothing.  Throws
/// CapExceeded unless f.size() <= n_max <= cap.
std::optional<OccurrenceWitness> occurs_in_cc(const Frieze& f, int n_max, int cap = 12);

/// Exhaustive agreement check between the criterion and ground truth:
/// every restriction (subset sizes 3..k_max) of the frieze of every
/// triangulation on <= n_max vertices must pass is_embeddable, and every
/// member of negative_corpus (valid friezes failing the criterion) must not
/// occur up to n_max.  Returns descriptions of any disagreements; the
/// expected result is an empty list.  Throws CapExceeded when n_max > 9 or
/// k_max > n_max.
std::vector<std::string> cross_validate(int n_max, int k_max,
                                        const std::vector<Frieze>& negative_corpus = {});

}  // namespace frieze
