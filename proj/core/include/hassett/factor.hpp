#pragma once

#include <cstdint>
#include <vector>

namespace hassett {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization in increasing prime order; empty for n = 1.
/// Trial division up to 10^6, then Pollard rho on the remaining cofactor.
/// Throws std::invalid_argument for n = 0.
std::vector<PrimePower> factorize(std::uint64_t n);

bool is_prime(std::uint64_t n);

}  // namespace hassett
