#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "frieze/numeric.hpp"

namespace frieze {

/// Base class for every error this library throws on bad input or broken
/// invariants, so callers can catch one type when they don't care which.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Label table has the wrong number of rows or row lengths.
struct BadShape : Error {
  explicit BadShape(const std::string& what) : Error(what) {}
};

/// A label was zero or negative.
struct NonPositiveLabel : Error {
  explicit NonPositiveLabel(const std::string& what) : Error(what) {}
};

/// A quadruple of vertices violates the exchange relation
/// c(i,k)c(j,l) = c(i,l)c(j,k) + c(i,j)c(k,l).
struct PtolemyViolation : Error {
  int i, j, k, l;
  Int lhs, rhs;
  PtolemyViolation(int i_, int j_, int k_, int l_, Int lhs_, Int rhs_)
      : Error("exchange relation fails at (" + std::to_string(i_) + "," +
              std::to_string(j_) + "," + std::to_string(k_) + "," +
              std::to_string(l_) + "): " + lhs_.get_str() +
              " != " + rhs_.get_str()),
        i(i_), j(j_), k(k_), l(l_), lhs(std::move(lhs_)), rhs(std::move(rhs_)) {}
};

/// Vertex subset passed to restrict() is not usable (too small, out of
/// range, or not strictly increasing).
struct BadSubset : Error {
  explicit BadSubset(const std::string& what) : Error(what) {}
};

/// Scalar passed to scale() was zero or negative.
struct NonPositiveScalar : Error {
  explicit NonPositiveScalar(const std::string& what) : Error(what) {}
};

/// Pattern window is too small to test the local rules.
struct WindowTooSmall : Error {
  explicit WindowTooSmall(const std::string& what) : Error(what) {}
};

/// One violated exchange relation, with both sides of the identity.
struct Violation {
  int i, j, k, l;
  Int lhs, rhs;
  bool operator==(const Violation&) const = default;
};

/// Result of a full-table validation pass.
struct ValidationReport {
  bool ok = false;
  std::vector<Violation> violations;  // sorted by (i, j, k, l)
};

/// Positive integer labels on all vertex pairs of an n-gon, subject to all
/// exchange relations.  Vertices are 0..n-1; label(i,i) == 0 is implicit and
/// never stored.  Immutable after construction.
class Frieze {
 public:
  Frieze() = default;

  int size() const { return n_; }

  /// Label of the pair {i,j}; order of the arguments does not matter.
  const Int& label(int i, int j) const;

  bool operator==(const Frieze&) const = default;

  /// Builds a Frieze from precomputed pair labels without validation.
  /// `labels` is indexed by pairs (i,j), i < j, in lexicographic order.
  static Frieze unchecked(int n, std::vector<Int> labels);

 private:
  int n_ = 0;
  std::vector<Int> lab_;  // pair (i,j), i<j, at index i*(2n-i-1)/2 + (j-i-1)

  int idx(int i, int j) const { return i * (2 * n_ - i - 1) / 2 + (j - i - 1); }
};

/// Builds and validates a frieze on an n-gon.  `rows` has n-1 rows; row i
/// holds the labels c(i,i+1), ..., c(i,n-1).  Throws BadShape,
/// NonPositiveLabel, or PtolemyViolation (for the lexicographically first
/// violated quadruple).
Frieze make_frieze(int n, const std::vector<std::vector<Int>>& rows);

/// Checks every exchange relation on a raw label table of the same shape as
/// make_frieze takes, without throwing on failure.  Shape and positivity
/// problems still throw.
ValidationReport verify_ptolemy(int n, const std::vector<std::vector<Int>>& rows);

/// Same check on an already constructed frieze (useful for values built by
/// Frieze::unchecked or for re-validation).
ValidationReport verify_ptolemy(const Frieze& f);

/// Restriction of f to a strictly increasing vertex subset of size >= 3.
/// Throws BadSubset on bad input.  The result is again a valid frieze.
Frieze restrict(const Frieze& f, const std::vector<int>& vertices);

/// Multiplies every label by t > 0.  Throws NonPositiveScalar otherwise.
Frieze scale(const Frieze& f, const Int& t);

/// True when every boundary edge {i, i+1 mod n} has label 1.
bool is_conway_coxeter(const Frieze& f);

/// Rectangular window of the doubly infinite array attached to f.
struct PatternWindow {
  int polygon_size = 0;
  std::vector<std::vector<Int>> rows;  // each row has polygon_size + 1 entries
};

/// Entry (i, j) of the doubly infinite array: row i occupies columns
/// i..i+n, starts and ends with 0, and repeats with the glide symmetry
/// entry(i, j) == entry(j, i + n).
Int pattern_entry(const Frieze& f, long i, long j);

/// Rows first_row..first_row+row_count-1 of the array, each given over its
/// own column range (i..i+n).
PatternWindow pattern_rows(const Frieze& f, long first_row, int row_count);

/// True iff every complete adjacent 3x3 submatrix of the window has
/// determinant 0.  Rows are staggered one column per row, so the block at
/// local offset t of row r continues at t-1 and t-2 in the two rows below.
/// Throws WindowTooSmall when fewer than 3 rows are supplied; a window too
/// narrow for any complete block (the triangle band) passes vacuously.
bool tame_check(const PatternWindow& w);

}  // namespace frieze
