#include "hassett/constructions.hpp"
#include "hassett/enumeration.hpp"
#include "hassett/linalg.hpp"
#include "hassett/verifier.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

using namespace hassett;

namespace {

using Params = std::vector<std::int64_t>;

const std::vector<CaseId> kIdentityCases = {CaseId::LemmaCase1, CaseId::LemmaCase2, CaseId::LemmaCase3,
                                            CaseId::LemmaCase4, CaseId::PropN4,     CaseId::ThmCase1,
                                            CaseId::ThmCase2,   CaseId::ThmCase3,   CaseId::ThmCase4,
                                            CaseId::ThmCase5};

// Two U parameters followed by perfect squares.
Params random_params(std::mt19937_64& rng, std::size_t arity) {
  std::uniform_int_distribution<std::int64_t> u(2, 40), m(2, 12);
  Params p;
  for (std::size_t i = 0; i < arity; ++i) {
    if (i < 2) p.push_back(u(rng));
    else {
      auto s = m(rng);
      p.push_back(s * s);
    }
  }
  return p;
}

std::vector<std::int64_t> discriminants(const RealizationOutcome& o) {
  std::vector<std::int64_t> out;
  for (std::size_t i = 1; i < o.basis->size(); ++i) out.push_back(labelling_discriminant((*o.basis)[i]).get_si());
  return out;
}

void check_slot_norms(const RealizationOutcome& o) {
  REQUIRE(o.basis.has_value());
  const auto h = AmbientVector::h_squared();
  for (std::size_t i = 0; i < o.slots.size(); ++i) {
    const auto& v = (*o.basis)[i + 1];
    const auto& s = o.slots[i];
    CHECK(v == s.generator());
    if (s.residue == 0) {
      CHECK(inner_product(h, v) == 0);
      CHECK(norm(v) == 2 * s.n);
    } else {
      CHECK(inner_product(h, v) == 1);
      CHECK(norm(v) == 2 * s.n + 1);
    }
    CHECK(labelling_discriminant(v) == s.target_discriminant());
  }
}

}  // namespace

TEST_CASE("case names round trip") {
  for (int i = 0; i <= static_cast<int>(CaseId::Generic); ++i) {
    auto id = static_cast<CaseId>(i);
    CHECK(case_from_string(to_string(id)) == id);
  }
  CHECK(to_string(CaseId::PropN4) == "Prop_n4");
  CHECK_THROWS_AS(case_from_string("LemmaCase9"), std::invalid_argument);
}

TEST_CASE("printed Gram examples") {
  CHECK(paper_gram(CaseId::LemmaCase1, Params{2, 2, 4}) == IntMatrix::diagonal(make_int_vector({3, 4, 4, 8})));
  CHECK(paper_gram(CaseId::LemmaCase2, Params{2, 2, 4}) ==
        IntMatrix{{3, 0, 0, 1}, {0, 4, 0, 0}, {0, 0, 4, 0}, {1, 0, 0, 9}});
  CHECK(paper_gram(CaseId::ThmCase5, Params{1, 1, 4, 4}) ==
        IntMatrix{{3, 1, 1, 1, 1}, {1, 3, 0, 0, 0}, {1, 0, 3, 0, 0}, {1, 0, 0, 9, 4}, {1, 0, 0, 4, 9}});
}

TEST_CASE("printed Gram parameter validation") {
  CHECK_THROWS_AS(paper_gram(CaseId::LemmaCase1, Params{1, 2, 4}), std::invalid_argument);
  CHECK_THROWS_AS(paper_gram(CaseId::LemmaCase1, Params{2, 2, 5}), std::invalid_argument);
  CHECK_THROWS_AS(paper_gram(CaseId::LemmaCase1, Params{2, 2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(paper_gram(CaseId::LemmaCase1, Params{2, 2}), std::invalid_argument);
  CHECK_NOTHROW(paper_gram(CaseId::LemmaCase4, Params{1, 1, 4}));
  CHECK_THROWS_AS(paper_gram(CaseId::Generic, Params{}), std::invalid_argument);
}

TEST_CASE("printed Grams are symmetric with the slot diagonal") {
  std::mt19937_64 rng(51);
  for (auto id : kIdentityCases) {
    for (int t = 0; t < 5; ++t) {
      Params p = random_params(rng, case_arity(id));
      Recipe r = make_recipe(id, p);
      REQUIRE(r.targetGram.has_value());
      const IntMatrix& g = *r.targetGram;
      CHECK(g.is_symmetric());
      CHECK(g.rows() == r.slots.size() + 1);
      CHECK(g(0, 0) == 3);
      for (std::size_t i = 0; i < r.slots.size(); ++i) {
        CHECK(g(i + 1, i + 1) == 2 * r.slots[i].n + r.slots[i].residue / 2);
        CHECK(g(0, i + 1) == r.slots[i].residue / 2);
      }
    }
  }
}

TEST_CASE("perturbation candidates") {
  SlotSpec scaled{scaled_slot_pool()[0], 4, 2, std::nullopt};
  auto units = perturbation_candidates(scaled, 1);
  // 2 * 2 (a1 . p) + p^2 = 1 forces a1 . p = 0 for unit p, so only (0,0,1).
  REQUIRE(units.size() == 1);
  CHECK(units[0] == AmbientVector::i3(0, 0, 1));

  SlotSpec u{SlotKind{SlotFamily::U, 1, 0}, 1, 2, std::nullopt};
  CHECK(perturbation_candidates(u, 1).size() == 3);
  for (int bound = 1; bound <= 3; ++bound) {
    for (const auto& p : perturbation_candidates(scaled, bound)) {
      SlotSpec s = scaled;
      s.perturbation = p;
      CHECK(inner_product(p, AmbientVector::h_squared()) == 1);
      CHECK(norm(s.generator()) == 9);
    }
  }
  CHECK_THROWS_AS(perturbation_candidates(u, 0), std::invalid_argument);
}

TEST_CASE("strict realization of the lemma cases") {
  auto c1 = build(CaseId::LemmaCase1, Params{2, 2, 4}, BuildMode::Strict);
  CHECK(c1.status == RealizationStatus::RealizedStrict);
  REQUIRE(c1.basis.has_value());
  CHECK((*c1.basis)[1] == AmbientVector::hyperbolic(1, 1) + 2 * AmbientVector::hyperbolic(1, 2));
  CHECK((*c1.basis)[3] == 2 * AmbientVector::a1());
  CHECK(*c1.realizedGram == IntMatrix::diagonal(make_int_vector({3, 4, 4, 8})));
  CHECK(c1.gramDelta->is_zero());

  auto c2 = build(CaseId::LemmaCase2, Params{2, 2, 4}, BuildMode::Strict);
  CHECK(c2.status == RealizationStatus::RealizedStrict);
  REQUIRE(c2.slots[2].perturbation.has_value());
  CHECK(*c2.slots[2].perturbation == AmbientVector::i3(0, 0, 1));
  CHECK(*c2.realizedGram == paper_gram(CaseId::LemmaCase2, Params{2, 2, 4}));
  check_slot_norms(c2);

  auto c3 = build(CaseId::LemmaCase3, Params{2, 2, 4}, BuildMode::Strict);
  CHECK(c3.status == RealizationStatus::NotRealizable);
  REQUIRE(c3.gramDelta.has_value());
  CHECK_FALSE(c3.gramDelta->is_zero());

  auto c4 = build(CaseId::LemmaCase4, Params{1, 1, 4}, BuildMode::Strict);
  CHECK(c4.status == RealizationStatus::NotRealizable);
  REQUIRE(c4.gramDelta.has_value());
  CHECK_FALSE(c4.gramDelta->is_zero());
}

TEST_CASE("theorem case 3 needs cross terms") {
  auto strict = build(CaseId::ThmCase3, Params{2, 2, 4, 4}, BuildMode::Strict, 1);
  CHECK(strict.status == RealizationStatus::NotRealizable);
  REQUIRE(strict.gramDelta.has_value());
  CHECK_FALSE(strict.gramDelta->is_zero());

  // h^2, 2 a1 + p, 2 a2 + q lie in I3 with Gram [[3,1,1],[1,9,x],[1,x,9]] of
  // determinant 225 + 2x - 3x^2, never 1, so M cannot be saturated.
  auto goal = build(CaseId::ThmCase3, Params{2, 2, 4, 4}, BuildMode::Goal);
  CHECK(goal.status == RealizationStatus::NotRealizable);
  REQUIRE(goal.basis.has_value());
  CHECK(discriminants(goal) == std::vector<std::int64_t>{12, 12, 26, 26});
  check_slot_norms(goal);
  CriterionReport c = yang_yu_certifiable(Sublattice(*goal.basis));
  CHECK(c.positiveDefinite);
  CHECK(c.minimumNorm >= 3);
  CHECK_FALSE(c.saturated);
  for (long x = -20; x <= 20; ++x) CHECK(225 + 2 * x - 3 * x * x != 1);
}

TEST_CASE("goal realization of the lemma cases") {
  struct Row {
    CaseId id;
    Params params;
    std::vector<std::int64_t> ds;
  };
  for (const auto& row : {Row{CaseId::LemmaCase2, {2, 2, 4}, {12, 12, 26}},
                          Row{CaseId::LemmaCase3, {2, 2, 4}, {12, 14, 26}},
                          Row{CaseId::LemmaCase4, {2, 2, 4}, {14, 14, 26}},
                          Row{CaseId::LemmaCase4, {1, 1, 4}, {8, 8, 26}}}) {
    CAPTURE(to_string(row.id));
    auto o = build(row.id, row.params, BuildMode::Goal);
    CHECK(o.status == RealizationStatus::RealizedGoal);
    REQUIRE(o.basis.has_value());
    CHECK(discriminants(o) == row.ds);
    check_slot_norms(o);
  }
}

TEST_CASE("a residue-zero scaled slot is never primitive") {
  auto o = build(CaseId::LemmaCase1, Params{2, 2, 4}, BuildMode::Goal);
  CHECK(o.status == RealizationStatus::NotRealizable);
  REQUIRE(o.basis.has_value());
  CHECK(is_positive_definite(*o.realizedGram));
  CHECK_FALSE(is_saturated(Sublattice(*o.basis)));
}

TEST_CASE("rank five zero construction") {
  auto o = build(CaseId::PropN4, Params{2, 2, 4, 4}, BuildMode::Strict);
  CHECK(o.status == RealizationStatus::RealizedStrict);
  CHECK(*o.realizedGram == paper_gram(CaseId::PropN4, Params{2, 2, 4, 4}));
}

TEST_CASE("rank 21 all-zero construction at minimal parameters") {
  Params p(20, 4);
  p[0] = p[1] = 2;
  auto o = build(CaseId::PropN20Zero, p, BuildMode::Strict);
  CHECK(o.status == RealizationStatus::RealizedStrict);
  REQUIRE(o.realizedGram.has_value());
  const IntMatrix& g = *o.realizedGram;
  CHECK(g.rows() == 21);
  CHECK(g == paper_gram(CaseId::PropN20Zero, p));
  CHECK(is_positive_definite(g));
  CHECK(minimum(g) == 3);
  // t1_1 and t1_2 are E8-adjacent: entry -sqrt(4 * 4).
  CHECK(g(5, 11) == -4);
}

TEST_CASE("generic slots") {
  auto slots = generic_slots(std::vector<std::int64_t>{12, 12, 24});
  REQUIRE(slots.size() == 3);
  CHECK(slots[0].kind.family == SlotFamily::U);
  CHECK(slots[2].kind == scaled_slot_pool()[0]);
  CHECK(slots[2].n == 4);
  CHECK(assemble_basis(slots) == *build(CaseId::LemmaCase1, Params{2, 2, 4}, BuildMode::Strict).basis);

  auto o = build_generic(std::vector<std::int64_t>{12, 12, 24}, BuildMode::Strict);
  CHECK(o.status == RealizationStatus::RealizedStrict);
  CHECK(*o.realizedGram == IntMatrix::diagonal(make_int_vector({3, 4, 4, 8})));

  auto two = build_generic(std::vector<std::int64_t>{8, 8}, BuildMode::Goal);
  CHECK(two.status == RealizationStatus::RealizedGoal);
  CHECK(two.basis->size() == 3);
  CHECK(discriminants(two) == std::vector<std::int64_t>{8, 8});

  auto cor = generic_slots(corollary_targets());
  const std::vector<std::int64_t> ns{2,   6,   4,   16,  36,  49,  64,  100, 144, 196,
                                     256, 324, 361, 400, 484, 576, 676, 784, 1024, 1156};
  REQUIRE(cor.size() == 20);
  for (std::size_t i = 0; i < 20; ++i) CHECK(cor[i].n == ns[i]);

  CHECK_THROWS_AS(generic_slots(std::vector<std::int64_t>{14, 38, 40}), std::invalid_argument);
  CHECK_THROWS_AS(generic_slots(std::vector<std::int64_t>{14}), std::invalid_argument);
  CHECK_THROWS_AS(generic_slots(std::vector<std::int64_t>{10, 14}), std::invalid_argument);
  CHECK_THROWS_AS(generic_slots(std::vector<std::int64_t>(21, 26)), std::invalid_argument);
  CHECK_NOTHROW(generic_slots(std::vector<std::int64_t>{26, 26, 26, 26}));
}

TEST_CASE("generic builds permute per-labelling verdicts with the tail") {
  const std::vector<std::int64_t> targets{14, 20, 26, 56, 98, 152};
  std::vector<std::int64_t> tail(targets.begin() + 2, targets.end());
  std::mt19937_64 rng(52);
  auto verdicts = [](const std::vector<std::int64_t>& ts) {
    auto o = build_generic(ts, BuildMode::Goal);
    REQUIRE(o.basis.has_value());
    auto r = verify_witness(*o.basis, ts);
    std::vector<std::tuple<std::int64_t, bool, bool>> rows;
    for (const auto& l : r.labellings) rows.emplace_back(l.targetD, l.realizedD == l.targetD, l.saturatedInM);
    return rows;
  };
  auto base = verdicts(targets);
  for (int t = 0; t < 4; ++t) {
    std::shuffle(tail.begin(), tail.end(), rng);
    std::vector<std::int64_t> ts{targets[0], targets[1]};
    ts.insert(ts.end(), tail.begin(), tail.end());
    auto got = verdicts(ts);
    REQUIRE(got.size() == base.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
      auto it = std::find(targets.begin(), targets.end(), ts[i]);
      CHECK(got[i] == base[static_cast<std::size_t>(it - targets.begin())]);
    }
  }
}

TEST_CASE("identity examples") {
  auto v = expected_identity(CaseId::LemmaCase2, Params{2, 2, 4}, Params{1, 0, 0, -1});
  CHECK(v.lhs == 10);
  CHECK(v.rhs == 10);
  auto z = expected_identity(CaseId::LemmaCase2, Params{5, 3, 9}, Params{0, 0, 0, 0});
  CHECK(z.lhs == 0);
  CHECK(z.rhs == 0);
  auto printed = expected_identity(CaseId::LemmaCase4, Params{1, 1, 4}, Params{1, 1, 1, 1}, IdentityVariant::AsPrinted);
  auto fixed = expected_identity(CaseId::LemmaCase4, Params{1, 1, 4}, Params{1, 1, 1, 1});
  CHECK(printed.lhs != printed.rhs);
  CHECK(fixed.lhs == fixed.rhs);
  CHECK_THROWS_AS(expected_identity(CaseId::LemmaCase2, Params{2, 2, 4}, Params{1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(expected_identity(CaseId::PropN20Zero, Params(20, 4), Params(21, 0)), std::invalid_argument);
  CHECK_FALSE(has_identity(CaseId::Generic));
}

TEST_CASE("identities hold at random points") {
  std::mt19937_64 rng(53);
  for (auto id : kIdentityCases) {
    CAPTURE(to_string(id));
    for (int t = 0; t < 5; ++t) {
      Params p = random_params(rng, case_arity(id));
      CHECK(check_identity(id, p, 10000, 1000 + t));
    }
  }
  CHECK(check_identity(CaseId::ThmCase5, Params{1, 1, 4, 4}, 10000, 0));
  CHECK_FALSE(check_identity(CaseId::LemmaCase4, Params{1, 1, 4}, 10000, 0, IdentityVariant::AsPrinted));
}
