#pragma once

#include "hassett/factor.hpp"
#include "hassett/int_matrix.hpp"
#include "hassett/lattice.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace hassett {

inline constexpr std::int64_t kMaxDiscriminant = 1'000'000'000'000;

/// d >= 8 and d = 0, 2 mod 6.
bool satisfies_star(std::int64_t d);

/// m >= 2 with d = 6 m^2 or d = 6 m^2 + 2.
std::optional<std::int64_t> satisfies_double_star(std::int64_t d);

/// 4 does not divide d, 9 does not divide d, and no odd prime p = 2 mod 3 divides d.
/// Throws std::invalid_argument for d < 1.
bool has_associated_k3(std::int64_t d);

struct DiscriminantReport {
  std::int64_t d = 0;
  bool star = false;
  bool doubleStar = false;
  std::optional<std::int64_t> doubleStarWitness;
  bool k3Admissible = false;
  std::vector<PrimePower> factorization;
};

/// Throws std::invalid_argument for d outside [1, 10^12].
DiscriminantReport discriminant_report(std::int64_t d);

struct CriterionReport {
  bool containsHSquared = false;
  bool positiveDefinite = false;
  bool saturated = false;
  std::optional<BigInt> minimumNorm;
  bool pass = false;

  friend bool operator==(const CriterionReport&, const CriterionReport&) = default;
};

/// h^2 in M, M positive definite, M saturated in L, and no nonzero vector of norm < 3.
CriterionReport yang_yu_certifiable(const Sublattice& m);

struct ConjectureShape {
  std::int64_t k = 0;
  std::int64_t s = 0;

  friend bool operator==(const ConjectureShape&, const ConjectureShape&) = default;
};

/// d = 6 * 4^k * s^2 + 2 with k >= 1 and s >= 2, taking the largest such k.
std::optional<ConjectureShape> conjecture_shape(std::int64_t d);

struct ConjectureRow {
  std::int64_t d = 0;
  std::int64_t k = 0;
  std::int64_t s = 0;
  bool admissible = false;
  std::vector<PrimePower> factorization;
};

/// Every conjecture-shaped d <= limit, ascending.
/// Throws std::invalid_argument for limit outside [1, 10^12].
std::vector<ConjectureRow> conjecture_sweep(std::int64_t limit);

}  // namespace hassett
