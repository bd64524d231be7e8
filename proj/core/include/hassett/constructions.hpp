#pragma once

#include "hassett/int_matrix.hpp"
#include "hassett/lattice.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hassett {

enum class CaseId {
  LemmaCase1,
  LemmaCase2,
  LemmaCase3,
  LemmaCase4,
  PropN4,
  PropN20Zero,
  ThmCase1,
  ThmCase2,
  ThmCase3,
  ThmCase4,
  ThmCase5,
  ThmN20Two,
  Generic,
};

std::string_view to_string(CaseId id);
/// Throws std::invalid_argument for an unknown name.
CaseId case_from_string(std::string_view name);

enum class SlotFamily { U, A2, E8 };

/// U(copy), A2(copy) meaning a1/a2, or E8(copy, root).
struct SlotKind {
  SlotFamily family = SlotFamily::U;
  int copy = 1;
  int root = 0;

  friend bool operator==(const SlotKind&, const SlotKind&) = default;
};

std::string to_string(const SlotKind& kind);

/// e^k_1 for U slots, a1/a2 or t^k_i otherwise.
AmbientVector slot_base(const SlotKind& kind);

struct SlotSpec {
  SlotKind kind;
  std::int64_t n = 1;
  int residue = 0;
  std::optional<AmbientVector> perturbation;

  /// sqrt(n) for scaled slots, 1 for U slots.
  std::int64_t scale() const;
  /// e1 + n e2 for U slots, sqrt(n) * base otherwise; perturbation added if set.
  AmbientVector generator() const;
  std::int64_t target_discriminant() const { return 6 * n + residue; }
};

/// The slot pool in witness order after the two U slots.
const std::vector<SlotKind>& scaled_slot_pool();

struct Recipe {
  CaseId caseId = CaseId::Generic;
  std::vector<SlotSpec> slots;
  std::optional<IntMatrix> targetGram;
};

enum class RealizationStatus { RealizedStrict, RealizedGoal, NotRealizable };
std::string_view to_string(RealizationStatus s);

struct RealizationOutcome {
  RealizationStatus status = RealizationStatus::NotRealizable;
  std::optional<std::vector<AmbientVector>> basis;
  std::optional<IntMatrix> realizedGram;
  std::optional<IntMatrix> gramDelta;
  std::vector<SlotSpec> slots;
};

enum class BuildMode { Strict, Goal };

inline constexpr int kStrictSearchBound = 1;
inline constexpr int kGoalSearchBound = 3;
inline int default_search_bound(BuildMode mode) {
  return mode == BuildMode::Strict ? kStrictSearchBound : kGoalSearchBound;
}

/// Number of parameters a case takes.
std::size_t case_arity(CaseId id);

/// The printed Gram matrix at concrete parameters. Throws std::invalid_argument
/// for out-of-range or non-square scaled parameters.
IntMatrix paper_gram(CaseId id, std::span<const std::int64_t> params);

/// Slots (without perturbations) and printed Gram for a case.
Recipe make_recipe(CaseId id, std::span<const std::int64_t> params);

/// Perturbations p in I3 with p.h^2 = 1, |p_i| <= bound and
/// (sqrt(n) base + p)^2 = 2n + 1, ordered by norm then reverse lexicographically.
std::vector<AmbientVector> perturbation_candidates(const SlotSpec& slot, int bound);

/// Basis h^2 followed by each slot generator.
std::vector<AmbientVector> assemble_basis(std::span<const SlotSpec> slots);

/// Search for perturbations reproducing target exactly; otherwise the closest
/// realization found (fewest mismatched entries, then least total deviation).
/// Throws std::invalid_argument for bound < 1 or a target of the wrong size.
RealizationOutcome realize_perturbations(std::vector<SlotSpec> slots, const IntMatrix& target, int bound);

/// Search for perturbations giving a witness that passes the lattice criterion.
/// If none exists, returns NotRealizable with a positive definite realization
/// of minimum >= 3 when one was found.
RealizationOutcome realize_goal(std::vector<SlotSpec> slots, int bound);

RealizationOutcome build(CaseId id, std::span<const std::int64_t> params, BuildMode mode,
                         std::optional<int> searchBound = std::nullopt);

/// Slots for a target list: targets[0], targets[1] on U1, U2, the rest on the pool.
/// Throws std::invalid_argument naming the first offending target.
std::vector<SlotSpec> generic_slots(std::span<const std::int64_t> targets);

/// The Gram with zero perturbation cross terms: base products, diagonal
/// 2n + residue/2, and h^2 pairing 1 on residue-2 slots.
IntMatrix generic_target_gram(std::span<const SlotSpec> slots);

RealizationOutcome build_generic(std::span<const std::int64_t> targets, BuildMode mode,
                                 std::optional<int> searchBound = std::nullopt);

enum class IdentityVariant { Corrected, AsPrinted };

struct IdentityValues {
  BigInt lhs;
  BigInt rhs;
};

/// lhs: the printed Gram form at point; rhs: the printed sum-of-squares expression.
/// Throws std::invalid_argument for cases without an identity or a point of the wrong size.
IdentityValues expected_identity(CaseId id, std::span<const std::int64_t> params,
                                 std::span<const std::int64_t> point,
                                 IdentityVariant variant = IdentityVariant::Corrected);

bool has_identity(CaseId id);

}  // namespace hassett
