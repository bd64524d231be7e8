#pragma once

#include "hassett/constructions.hpp"
#include "hassett/criteria.hpp"
#include "hassett/int_matrix.hpp"
#include "hassett/lattice.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hassett {

struct LabellingCheck {
  std::int64_t targetD = 0;
  BigInt realizedD;
  bool saturatedInM = false;

  friend bool operator==(const LabellingCheck&, const LabellingCheck&) = default;
};

enum class Verdict { Pass, Fail };

struct WitnessReport {
  CriterionReport criterion;
  std::vector<LabellingCheck> labellings;
  std::optional<bool> gramMatchesPaper;
  std::optional<IntMatrix> realizedGram;
  Verdict verdict = Verdict::Fail;
  std::vector<std::string> failureReasons;

  friend bool operator==(const WitnessReport&, const WitnessReport&) = default;
};

/// Recomputes every check from the raw basis. Labelling i is <h^2, basis[i+1]>
/// against targets[i]. Malformed input gives FAIL with reason codes:
/// BASIS_EMPTY, FIRST_NOT_H2, TARGET_COUNT_MISMATCH, DEPENDENT_BASIS,
/// H2_NOT_CONTAINED, NOT_POSITIVE_DEFINITE, NOT_SATURATED, MIN_NORM_<k>,
/// DISC_MISMATCH(<i>), LABELLING_NOT_SATURATED(<i>).
WitnessReport verify_witness(std::span<const AmbientVector> basis, std::span<const std::int64_t> targets,
                             const std::optional<IntMatrix>& expectedGram = std::nullopt);

/// Box enumeration with |x_i| <= sqrt(c (g^-1)_ii); same output contract as short_vectors.
std::vector<IntVector> oracle_short_vectors(const IntMatrix& g, const BigInt& c);

const std::vector<std::int64_t>& corollary_targets();

struct CorollaryReport {
  RealizationOutcome outcome;
  WitnessReport witness;
  std::vector<DiscriminantReport> discriminants;
  bool allStar = false;
  bool allK3 = false;
  bool distinct = false;
  bool pass = false;
};

CorollaryReport verify_corollary20();

/// lhs == rhs of expected_identity at `trials` points with coordinates uniform in [-50, 50].
bool check_identity(CaseId id, std::span<const std::int64_t> params, std::uint64_t trials, std::uint64_t seed,
                    IdentityVariant variant = IdentityVariant::Corrected);

}  // namespace hassett
