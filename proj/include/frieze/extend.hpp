#pragma once

#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "frieze/criterion.hpp"
#include "frieze/triangulation.hpp"

namespace frieze {

/// Edge has label 1, so there is nothing to extend across it.
struct EdgeLabelOne : Error {
  explicit EdgeLabelOne(const std::string& what) : Error(what) {}
};

/// For some prime every residue is ruled out; on input satisfying the
/// embeddability conditions this cannot happen, so it flags a precondition
/// breach.
struct NoAdmissibleResidue : Error {
  explicit NoAdmissibleResidue(const std::string& what) : Error(what) {}
};

/// The vertex pair is not a boundary edge (a, a+1 mod n).
struct NotBoundaryEdge : Error {
  explicit NotBoundaryEdge(const std::string& what) : Error(what) {}
};

/// The closing division for some y_j was not exact — internal invariant breach.
struct NonIntegralY : Error {
  explicit NonIntegralY(const std::string& what) : Error(what) {}
};

/// Re-validation of an extension result failed — internal invariant breach.
struct PostconditionFailed : Error {
  explicit PostconditionFailed(const std::string& what) : Error(what) {}
};

/// Input fails the embeddability criterion, so no extension chain can reach
/// a frieze with all boundary edges 1.
struct NotEmbeddable : Error {
  explicit NotEmbeddable(const std::string& what) : Error(what) {}
};

/// Safety cap on extension steps hit; never triggers below the bound
/// sum(boundary label - 1).
struct StepLimitExceeded : Error {
  explicit StepLimitExceeded(const std::string& what) : Error(what) {}
};

/// Local data at one prime p dividing the label c0 of the edge being
/// extended.  Indices refer to the internally rotated frame in which the
/// edge is (n-1, 0) and c_i = label(i, n-1):
///   - ell = v_p(c0), m = min over i in 0..n-2 of v_p(c_i);
///   - ip_candidates = all i attaining m, `candidate` = the one this row's
///     sieve was run for;
///   - forbidden = residues mod p ruled out for y_candidate (always
///     contains 0).
/// admissible_choices returns one row per (prime, candidate) with the
/// chosen_* fields unset; a row inside an ExtensionChoice has them set and
/// chosen_residue is a class mod p^ell.  When m = 0 the eventual residue of
/// y_0 at p is already forced and the choice here has no effect.
struct PrimeLocal {
  Int p;
  int ell = 0;
  int m = 0;
  std::vector<int> ip_candidates;
  int candidate = -1;
  std::vector<Int> forbidden;  // sorted, distinct, residues mod p
  std::optional<int> chosen_ip;
  std::optional<Int> chosen_residue;

  bool operator==(const PrimeLocal&) const = default;
};

/// Nonzero residues mod p not in the forbidden set, ascending.
std::vector<Int> admissible_residues(const PrimeLocal& pl);

/// One fully specified extension step: the boundary edge (a, a+1 mod n)
/// with label c0 > 1 and one resolved PrimeLocal per prime divisor of c0.
struct ExtensionChoice {
  std::pair<int, int> edge{-1, -1};
  std::vector<PrimeLocal> per_prime;  // ascending by p; chosen_* fields set

  bool operator==(const ExtensionChoice&) const = default;
};

/// Record of one executed extension step.  y holds y_0..y_{n-2} in the
/// rotated frame; new_vertex is the index of the inserted vertex in the
/// grown polygon's numbering.
struct ExtensionTrace {
  ExtensionChoice choice;
  Int y0_mod_c0;
  std::vector<Int> y;
  int new_vertex = -1;

  bool operator==(const ExtensionTrace&) const = default;
};

/// A completed embedding: a frieze with all boundary edges 1 together with
/// its triangulation, the order-preserving image of the input vertices, and
/// the per-step traces that produced it.
struct Embedding {
  Frieze cc;
  Triangulation tri;
  std::vector<int> vertex_map;  // input vertex i -> cc vertex
  std::vector<ExtensionTrace> traces;
};

/// Scripted parameters for one step of embed(): extend across the edge
/// (edge_a, edge_a+1 mod n) using, per prime, the candidate i_p and the
/// residue mod p^ell given as (p, i_p, residue).
struct StepPick {
  int edge_a = -1;
  std::vector<std::tuple<Int, int, Int>> primes;
};

/// Choice policy for embed(): scripted picks are consumed first, one per
/// step; once exhausted every remaining step uses the defaults (edge with
/// label > 1 of smallest left endpoint, smallest candidate, smallest
/// admissible residue lifted unchanged).
struct EmbedPolicy {
  std::vector<StepPick> scripted;
};

/// Per-prime sieve data for extending f across `edge`: for every prime
/// p | c0 and every candidate i_p, the forbidden residue set.  Chosen
/// fields are left unset.  Throws EdgeLabelOne, NotBoundaryEdge, or
/// NoAdmissibleResidue (the latter only when some prime has m >= 1 and
/// every candidate's admissible set is empty, which conforming input cannot
/// produce).
std::vector<PrimeLocal> admissible_choices(const Frieze& f, std::pair<int, int> edge);

/// The default policy's fully resolved choice for one step across `edge`.
ExtensionChoice default_choice(const Frieze& f, std::pair<int, int> edge);

/// Resolves explicit picks (p, i_p, residue mod p^ell) into an
/// ExtensionChoice, validating them against the computed sieve data.
ExtensionChoice choice_with(const Frieze& f, std::pair<int, int> edge,
                            const std::vector<std::tuple<Int, int, Int>>& picks);

/// Executes one extension step: derives y_0's residue at each prime from
/// the chosen data, combines them to y_0 mod c0, closes the new labels with
/// y_j = (c_j*y_0 + c_{0,j}) / c0, and inserts the new vertex after the
/// edge's left endpoint with edge labels 1 (toward the left endpoint) and
/// y_0 (toward the right).  The result is re-validated in full.  Throws
/// NonIntegralY or PostconditionFailed on internal breaches.
std::pair<Frieze, ExtensionTrace> extend_step(const Frieze& f,
                                              const ExtensionChoice& choice);

/// Repeats extend_step until every boundary edge has label 1.  Throws
/// NotEmbeddable before any work when the criterion fails, and
/// StepLimitExceeded if the step count would pass sum(boundary label - 1).
Embedding embed(const Frieze& f, const EmbedPolicy& policy = {});

/// Depth-first enumeration over all choice points (candidates, admissible
/// residues, and their lifts), deduplicated by exact equality of the
/// resulting frieze, truncated at `limit`.
std::vector<Embedding> enumerate_embeddings(const Frieze& f, int limit);

}  // namespace frieze
