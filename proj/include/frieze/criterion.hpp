#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "frieze/frieze.hpp"

namespace frieze {

/// Arguments fail a documented precondition of the diagnostic being run.
struct PreconditionUnmet : Error {
  explicit PreconditionUnmet(const std::string& what) : Error(what) {}
};

/// A triangle {i,j,k} whose three pairwise label gcds are not all equal.
/// With a = label(i,j), b = label(j,k), c = label(i,k), the reported gcds
/// are (gcd(a,b), gcd(b,c), gcd(a,c)).
struct GcdWitness {
  std::array<int, 3> vertices{};
  std::array<Int, 3> gcds{};

  bool operator==(const GcdWitness&) const = default;
};

/// A (p+1)-subset of vertices all of whose pair labels share one positive
/// p-valuation m.
struct ValuationWitness {
  Int p;
  std::vector<int> vertices;
  int m = 0;

  bool operator==(const ValuationWitness&) const = default;
};

/// Verdict of the two-part embeddability test, with the lexicographically
/// smallest witness for each failing part.
struct CriterionReport {
  bool gcd_ok = false;
  bool valuation_ok = false;
  std::optional<GcdWitness> gcd_witness;
  std::optional<ValuationWitness> valuation_witness;

  bool embeddable() const { return gcd_ok && valuation_ok; }
};

/// True iff every vertex triple has equal pairwise label gcds; otherwise the
/// lexicographically smallest violating triple.
std::pair<bool, std::optional<GcdWitness>> check_gcd_condition(const Frieze& f);

/// True iff for every prime p below the vertex count, no (p+1)-subset of
/// vertices has all its pair labels sharing one p-valuation m >= 1;
/// otherwise the smallest witness (ordered by p, then by vertex set).
std::pair<bool, std::optional<ValuationWitness>> check_valuation_condition(const Frieze& f);

/// Runs both checks.  The frieze embeds into some frieze with all boundary
/// edges 1 exactly when both pass.
CriterionReport is_embeddable(const Frieze& f);

/// Specialization to a triangle with labels a = label(0,1), b = label(1,2),
/// c = label(0,2): embeddable iff the three pairwise gcds agree and the
/// 2-valuations are not all equal to one common positive value.
bool check_triangle_criterion(const Int& a, const Int& b, const Int& c);

/// Diagnostic for a (p+1)-subset s whose pair labels share one p-valuation
/// m on a frieze passing the gcd check: returns m and whether p^m divides
/// every label of the whole frieze.  Throws PreconditionUnmet when the
/// inputs do not have that shape.
std::pair<int, bool> pm_divisibility(const Frieze& f, const Int& p,
                                     const std::vector<int>& s);

}  // namespace frieze
