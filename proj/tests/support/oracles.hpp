#pragma once

// Independent reference computations for tests. Nothing here calls the
// library's enumeration, Smith, or Hermite code.

#include "hassett/int_matrix.hpp"

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using hassett::BigInt;
using hassett::IntMatrix;
using hassett::IntVector;

/// Cofactor expansion; fine up to about 8x8.
BigInt laplace_det(const IntMatrix& m);

/// Box search with |x_i| <= sqrt(c * adj(g)_ii / det g) from cofactors.
std::vector<IntVector> box_short_vectors(const IntMatrix& g, long c);

/// gcd of all k x k minors of a rows x k matrix (1 iff the columns span a primitive sublattice).
BigInt maximal_minor_gcd(const IntMatrix& m);

/// Naive trial division over every integer.
std::vector<std::pair<std::uint64_t, unsigned>> trial_factor(std::uint64_t n);

/// Random positive definite symmetric matrix with entries in [-maxEntry, maxEntry].
IntMatrix random_positive_definite(std::mt19937_64& rng, std::size_t n, long maxEntry);

/// Random symmetric matrix with entries in [-maxEntry, maxEntry].
IntMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, long maxEntry);

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long maxEntry);

}  // namespace oracle
