#include "hassett/constructions.hpp"

#include "hassett/criteria.hpp"
#include "hassett/enumeration.hpp"
#include "hassett/linalg.hpp"

#include <limits>
#include <stdexcept>

namespace hassett {
namespace {

constexpr std::uint64_t kStrictNodeBudget = 1'000'000;
constexpr std::uint64_t kGoalNodeBudget = 200'000;

// Every slot's options (perturbed generators) with all pairwise inner products cached.
struct Options {
  std::vector<SlotSpec> slots;
  std::vector<std::vector<std::optional<AmbientVector>>> perturbations;
  std::vector<std::vector<AmbientVector>> vectors;
  std::vector<std::vector<BigInt>> withH;

  // ip(i, a, j, b) for j < i.
  std::vector<std::vector<std::vector<std::vector<BigInt>>>> cross;

  Options(std::vector<SlotSpec> s, int bound) : slots(std::move(s)) {
    if (bound < 1) throw std::invalid_argument("search bound must be at least 1");
    const AmbientVector h = AmbientVector::h_squared();
    for (auto& slot : slots) {
      std::vector<std::optional<AmbientVector>> ps;
      if (slot.residue == 2)
        for (auto& p : perturbation_candidates(slot, bound)) ps.emplace_back(p);
      else
        ps.emplace_back(std::nullopt);
      std::vector<AmbientVector> vs;
      std::vector<BigInt> hs;
      for (const auto& p : ps) {
        SlotSpec t = slot;
        t.perturbation = p;
        vs.push_back(t.generator());
        hs.push_back(inner_product(h, vs.back()));
      }
      perturbations.push_back(std::move(ps));
      vectors.push_back(std::move(vs));
      withH.push_back(std::move(hs));
    }
    cross.resize(slots.size());
    for (std::size_t i = 0; i < slots.size(); ++i) {
      cross[i].resize(vectors[i].size());
      for (std::size_t a = 0; a < vectors[i].size(); ++a) {
        cross[i][a].resize(i + 1);
        for (std::size_t j = 0; j <= i; ++j)
          for (std::size_t b = 0; b < vectors[j].size(); ++b)
            cross[i][a][j].push_back(inner_product(vectors[i][a], vectors[j][b]));
      }
    }
  }

  std::size_t size() const { return slots.size(); }
  bool empty_slot() const {
    for (const auto& v : vectors)
      if (v.empty()) return true;
    return false;
  }

  // Gram of h^2 and the first `count` chosen slot vectors.
  IntMatrix gram(const std::vector<std::size_t>& choice, std::size_t count) const {
    IntMatrix g(count + 1, count + 1);
    g(0, 0) = 3;
    for (std::size_t i = 0; i < count; ++i) {
      g(0, i + 1) = g(i + 1, 0) = withH[i][choice[i]];
      for (std::size_t j = 0; j <= i; ++j) g(i + 1, j + 1) = g(j + 1, i + 1) = cross[i][choice[i]][j][choice[j]];
    }
    return g;
  }

  std::vector<AmbientVector> basis(const std::vector<std::size_t>& choice, std::size_t count) const {
    std::vector<AmbientVector> out{AmbientVector::h_squared()};
    for (std::size_t i = 0; i < count; ++i) out.push_back(vectors[i][choice[i]]);
    return out;
  }

  std::vector<SlotSpec> chosen_slots(const std::vector<std::size_t>& choice) const {
    std::vector<SlotSpec> out = slots;
    for (std::size_t i = 0; i < out.size(); ++i) out[i].perturbation = perturbations[i][choice[i]];
    return out;
  }
};

RealizationOutcome outcome(const Options& opt, const std::vector<std::size_t>& choice, RealizationStatus status,
                           const IntMatrix* target) {
  RealizationOutcome out;
  out.status = status;
  out.basis = opt.basis(choice, opt.size());
  out.realizedGram = gram_of(*out.basis);
  if (target) out.gramDelta = *out.realizedGram - *target;
  out.slots = opt.chosen_slots(choice);
  return out;
}

struct Cost {
  std::uint64_t mismatches = 0;
  BigInt deviation = 0;

  friend bool operator<(const Cost& a, const Cost& b) {
    if (a.mismatches != b.mismatches) return a.mismatches < b.mismatches;
    return a.deviation < b.deviation;
  }
};

class StrictSearch {
public:
  StrictSearch(const Options& opt, const IntMatrix& target) : opt_(opt), target_(target), choice_(opt.size()) {}

  bool exact() { return exact_from(0); }

  // Branch and bound on the mismatch cost; false if the budget ran out before the tree was closed.
  bool closest() {
    best_.reset();
    nodes_ = 0;
    closest_from(0, Cost{});
    return nodes_ < kStrictNodeBudget;
  }

  const std::vector<std::size_t>& choice() const { return choice_; }
  const std::optional<std::vector<std::size_t>>& best_choice() const { return bestChoice_; }

private:
  Cost row_cost(std::size_t i, std::size_t a) const {
    Cost c;
    auto add = [&](const BigInt& got, const BigInt& want) {
      if (got != want) {
        ++c.mismatches;
        c.deviation += abs(got - want);
      }
    };
    add(opt_.withH[i][a], target_(0, i + 1));
    for (std::size_t j = 0; j < i; ++j) add(opt_.cross[i][a][j][choice_[j]], target_(i + 1, j + 1));
    add(opt_.cross[i][a][i][a], target_(i + 1, i + 1));
    return c;
  }

  bool exact_from(std::size_t i) {
    if (i == opt_.size()) return true;
    for (std::size_t a = 0; a < opt_.vectors[i].size(); ++a) {
      if (row_cost(i, a).mismatches != 0) continue;
      choice_[i] = a;
      if (exact_from(i + 1)) return true;
    }
    return false;
  }

  void closest_from(std::size_t i, const Cost& sofar) {
    if (++nodes_ > kStrictNodeBudget) return;
    if (best_ && !(sofar < *best_)) return;
    if (i == opt_.size()) {
      best_ = sofar;
      bestChoice_ = choice_;
      return;
    }
    // Cheapest extensions first so that a good bound appears early.
    std::vector<std::pair<Cost, std::size_t>> order;
    for (std::size_t a = 0; a < opt_.vectors[i].size(); ++a) {
      Cost c = row_cost(i, a);
      c.mismatches += sofar.mismatches;
      c.deviation += sofar.deviation;
      order.emplace_back(std::move(c), a);
    }
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [c, a] : order) {
      choice_[i] = a;
      closest_from(i + 1, c);
    }
  }

  const Options& opt_;
  const IntMatrix& target_;
  std::vector<std::size_t> choice_;
  std::optional<Cost> best_;
  std::optional<std::vector<std::size_t>> bestChoice_;
  std::uint64_t nodes_ = 0;
};

class GoalSearch {
public:
  GoalSearch(const Options& opt, bool requireSaturation)
      : opt_(opt), saturation_(requireSaturation), choice_(opt.size()) {}

  bool run() { return from(0); }
  const std::vector<std::size_t>& choice() const { return choice_; }

private:
  // All three checks are monotone in the prefix.
  bool prefix_ok(std::size_t count) const {
    const IntMatrix g = opt_.gram(choice_, count);
    if (!is_positive_definite(g)) return false;
    if (!short_vectors(g, 2).empty()) return false;
    if (saturation_ && !is_saturated(Sublattice(opt_.basis(choice_, count)))) return false;
    return true;
  }

  bool from(std::size_t i) {
    if (i == opt_.size()) return true;
    for (std::size_t a = 0; a < opt_.vectors[i].size(); ++a) {
      if (++nodes_ > kGoalNodeBudget) return false;
      choice_[i] = a;
      if (prefix_ok(i + 1) && from(i + 1)) return true;
    }
    return false;
  }

  const Options& opt_;
  bool saturation_;
  std::vector<std::size_t> choice_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

RealizationOutcome realize_perturbations(std::vector<SlotSpec> slots, const IntMatrix& target, int bound) {
  if (target.rows() != slots.size() + 1 || !target.is_square())
    throw std::invalid_argument("target Gram must be " + std::to_string(slots.size() + 1) + " x " +
                                std::to_string(slots.size() + 1));
  Options opt(std::move(slots), bound);
  RealizationOutcome none;
  none.slots = opt.slots;
  if (opt.empty_slot()) return none;

  StrictSearch search(opt, target);
  if (search.exact()) return outcome(opt, search.choice(), RealizationStatus::RealizedStrict, &target);
  search.closest();
  if (!search.best_choice()) return none;
  return outcome(opt, *search.best_choice(), RealizationStatus::NotRealizable, &target);
}

RealizationOutcome realize_goal(std::vector<SlotSpec> slots, int bound) {
  Options opt(std::move(slots), bound);
  RealizationOutcome none;
  none.slots = opt.slots;
  if (opt.empty_slot()) return none;

  GoalSearch full(opt, true);
  if (full.run()) {
    RealizationOutcome out = outcome(opt, full.choice(), RealizationStatus::RealizedGoal, nullptr);
    if (yang_yu_certifiable(Sublattice(*out.basis)).pass) return out;
  }
  GoalSearch relaxed(opt, false);
  if (relaxed.run()) return outcome(opt, relaxed.choice(), RealizationStatus::NotRealizable, nullptr);
  return outcome(opt, std::vector<std::size_t>(opt.size(), 0), RealizationStatus::NotRealizable, nullptr);
}

}  // namespace hassett
