#pragma once

#include "hassett/int_matrix.hpp"

#include <vector>

namespace hassett {

/// All nonzero x with x^T g x <= c, one per +/- pair (first nonzero entry
/// positive), sorted lexicographically. Fincke-Pohst over an exact rational
/// LDL^T factorization.
/// Throws std::invalid_argument if g is not positive definite or c < 0.
std::vector<IntVector> short_vectors(const IntMatrix& g, const BigInt& c);

/// Least nonzero value of x^T g x.
BigInt minimum(const IntMatrix& g);

/// Flip sign so the first nonzero entry is positive.
IntVector canonical_sign(IntVector x);

}  // namespace hassett
