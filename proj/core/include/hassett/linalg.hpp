#pragma once

#include "hassett/int_matrix.hpp"

#include <cstddef>
#include <optional>

namespace hassett {

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
/// Throws std::invalid_argument for a non-square matrix.
BigInt determinant(const IntMatrix& m);

/// Rank over the rationals.
std::size_t rank(const IntMatrix& m);

/// left * m * right == diagonal, with left and right unimodular, the nonzero
/// diagonal entries nonnegative and forming a divisibility chain d1 | d2 | ...
struct SmithForm {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;

  /// Nonzero diagonal entries in order.
  IntVector invariants() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Invariant factors only; cheaper than smith_normal_form since no transforms are kept.
IntVector smith_invariants(const IntMatrix& m);

/// hermite == m * transform with transform unimodular and hermite in column
/// echelon form: the first `rank` columns carry strictly increasing pivot rows
/// with positive pivots, entries left of a pivot are reduced into [0, pivot),
/// and the remaining columns are zero.
struct HermiteForm {
  IntMatrix hermite;
  IntMatrix transform;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;
};

HermiteForm hermite_normal_form(const IntMatrix& m);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Sylvester inertia via exact symmetric (congruence) elimination over Q.
/// Throws std::invalid_argument for a non-symmetric matrix.
Inertia inertia(const IntMatrix& g);

/// True iff every leading principal minor is positive.
/// Throws std::invalid_argument for a non-symmetric matrix.
bool is_positive_definite(const IntMatrix& g);

/// Some integer x with a * x == b, or nullopt if none exists.
/// Throws std::invalid_argument when b.size() != a.rows().
std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b);

/// Exact inverse over Q. Throws std::invalid_argument if g is not square or is singular.
RatMatrix rational_inverse(const IntMatrix& g);

}  // namespace hassett
