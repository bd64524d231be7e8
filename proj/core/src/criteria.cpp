#include "hassett/criteria.hpp"

#include "hassett/enumeration.hpp"
#include "hassett/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hassett {
namespace {

std::optional<std::int64_t> exact_sqrt(std::int64_t n) {
  if (n < 0) return std::nullopt;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  if (r * r != n) return std::nullopt;
  return r;
}

}  // namespace

bool satisfies_star(std::int64_t d) { return d >= 8 && (d % 6 == 0 || d % 6 == 2); }

std::optional<std::int64_t> satisfies_double_star(std::int64_t d) {
  if (d < 24) return std::nullopt;
  for (std::int64_t base : {d, d - 2}) {
    if (base % 6 != 0) continue;
    auto m = exact_sqrt(base / 6);
    if (m && *m >= 2) return m;
  }
  return std::nullopt;
}

bool has_associated_k3(std::int64_t d) {
  if (d < 1) throw std::invalid_argument("has_associated_k3: d must be positive");
  if (d % 4 == 0 || d % 9 == 0) return false;
  for (const PrimePower& pp : factorize(static_cast<std::uint64_t>(d)))
    if (pp.prime != 2 && pp.prime % 3 == 2) return false;
  return true;
}

DiscriminantReport discriminant_report(std::int64_t d) {
  if (d < 1 || d > kMaxDiscriminant)
    throw std::invalid_argument("d = " + std::to_string(d) + " is outside [1, 10^12]");
  DiscriminantReport r;
  r.d = d;
  r.star = satisfies_star(d);
  r.doubleStarWitness = satisfies_double_star(d);
  r.doubleStar = r.doubleStarWitness.has_value();
  r.k3Admissible = has_associated_k3(d);
  r.factorization = factorize(static_cast<std::uint64_t>(d));
  return r;
}

CriterionReport yang_yu_certifiable(const Sublattice& m) {
  CriterionReport r;
  r.containsHSquared = contains(m, AmbientVector::h_squared());
  r.positiveDefinite = is_positive_definite(m.gram());
  r.saturated = is_saturated(m);
  if (r.positiveDefinite) r.minimumNorm = minimum(m.gram());
  r.pass = r.containsHSquared && r.positiveDefinite && r.saturated && r.minimumNorm && *r.minimumNorm >= 3;
  return r;
}

std::optional<ConjectureShape> conjecture_shape(std::int64_t d) {
  if (d < 2 || (d - 2) % 6 != 0) return std::nullopt;
  std::int64_t q = (d - 2) / 6;
  auto root = exact_sqrt(q);
  if (!root) return std::nullopt;
  // q = (2^k s)^2; move factors of 2 into k while s stays >= 2.
  std::int64_t t = *root;
  std::int64_t k = 0;
  while (t % 2 == 0 && t / 2 >= 2) {
    t /= 2;
    ++k;
  }
  if (k < 1) return std::nullopt;
  return ConjectureShape{k, t};
}

std::vector<ConjectureRow> conjecture_sweep(std::int64_t limit) {
  if (limit < 1 || limit > kMaxDiscriminant)
    throw std::invalid_argument("limit = " + std::to_string(limit) + " is outside [1, 10^12]");
  std::vector<ConjectureRow> rows;
  // d = 6 T^2 + 2 with T = 2^k s even.
  for (std::int64_t t = 2;; t += 2) {
    const std::int64_t d = 6 * t * t + 2;
    if (d > limit) break;
    auto shape = conjecture_shape(d);
    if (!shape) continue;
    ConjectureRow row;
    row.d = d;
    row.k = shape->k;
    row.s = shape->s;
    row.admissible = has_associated_k3(d);
    row.factorization = factorize(static_cast<std::uint64_t>(d));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace hassett
