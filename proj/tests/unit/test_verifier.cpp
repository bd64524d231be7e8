#include "hassett/constructions.hpp"
#include "hassett/enumeration.hpp"
#include "hassett/verifier.hpp"

#include <doctest.h>

#include <algorithm>

using namespace hassett;

namespace {

AmbientVector e(int copy, int which) { return AmbientVector::hyperbolic(copy, which); }

using Targets = std::vector<std::int64_t>;

bool has_reason(const WitnessReport& r, const std::string& code) {
  return std::find(r.failureReasons.begin(), r.failureReasons.end(), code) != r.failureReasons.end();
}

std::vector<AmbientVector> case2_basis() {
  return {AmbientVector::h_squared(), e(1, 1) + 2 * e(1, 2), e(2, 1) + 2 * e(2, 2),
          2 * AmbientVector::a1() + AmbientVector::i3(0, 0, 1)};
}

}  // namespace

TEST_CASE("a saturated witness passes") {
  auto r = verify_witness(case2_basis(), Targets{12, 12, 26});
  CHECK(r.verdict == Verdict::Pass);
  CHECK(r.failureReasons.empty());
  CHECK(r.criterion.pass);
  CHECK(r.criterion.minimumNorm == 3);
  REQUIRE(r.labellings.size() == 3);
  CHECK(r.labellings[2].realizedD == 26);
  CHECK(r.labellings[2].saturatedInM);
  CHECK(*r.realizedGram == IntMatrix{{3, 0, 0, 1}, {0, 4, 0, 0}, {0, 0, 4, 0}, {1, 0, 0, 9}});
  CHECK_FALSE(r.gramMatchesPaper.has_value());

  auto withGram = verify_witness(case2_basis(), Targets{12, 12, 26}, paper_gram(CaseId::LemmaCase2, std::vector<std::int64_t>{2, 2, 4}));
  CHECK(withGram.gramMatchesPaper == true);
  CHECK(withGram.verdict == Verdict::Pass);
}

TEST_CASE("the lemma case 1 witness has the right discriminants but is not saturated") {
  std::vector<AmbientVector> basis{AmbientVector::h_squared(), e(1, 1) + 2 * e(1, 2), e(2, 1) + 2 * e(2, 2),
                                   2 * AmbientVector::a1()};
  auto r = verify_witness(basis, Targets{12, 12, 24});
  for (const auto& l : r.labellings) {
    CHECK(l.realizedD == l.targetD);
    CHECK(l.saturatedInM);
  }
  CHECK(r.criterion.minimumNorm == 3);
  CHECK(r.verdict == Verdict::Fail);
  CHECK(r.failureReasons == std::vector<std::string>{"NOT_SATURATED"});
}

TEST_CASE("sabotaged witness has a norm 2 vector") {
  auto basis = case2_basis();
  basis[1] = e(1, 1) + e(1, 2);
  auto r = verify_witness(basis, Targets{12, 12, 26});
  CHECK(r.verdict == Verdict::Fail);
  CHECK(r.criterion.minimumNorm == 2);
  CHECK(has_reason(r, "MIN_NORM_2"));
  CHECK(has_reason(r, "DISC_MISMATCH(0)"));
}

TEST_CASE("malformed witnesses give structured failures") {
  CHECK(verify_witness({}, Targets{}).failureReasons == std::vector<std::string>{"BASIS_EMPTY"});

  auto swapped = case2_basis();
  std::swap(swapped[0], swapped[1]);
  CHECK(has_reason(verify_witness(swapped, Targets{12, 12, 26}), "FIRST_NOT_H2"));

  CHECK(has_reason(verify_witness(case2_basis(), Targets{12, 12}), "TARGET_COUNT_MISMATCH"));

  auto dependent = case2_basis();
  dependent[2] = dependent[1];
  auto d = verify_witness(dependent, Targets{12, 12, 26});
  CHECK(d.verdict == Verdict::Fail);
  CHECK(has_reason(d, "DEPENDENT_BASIS"));

  auto doubled = case2_basis();
  doubled[1] = 2 * doubled[1];
  auto s = verify_witness(doubled, Targets{48, 12, 26});
  CHECK(has_reason(s, "NOT_SATURATED"));
  // <h^2, 2 alpha_1> is a sub-basis, so it stays saturated inside M.
  CHECK_FALSE(has_reason(s, "LABELLING_NOT_SATURATED(0)"));

  std::vector<AmbientVector> indefinite{AmbientVector::h_squared(), e(1, 1)};
  auto i = verify_witness(indefinite, Targets{8});
  CHECK(has_reason(i, "NOT_POSITIVE_DEFINITE"));
  CHECK_FALSE(i.criterion.minimumNorm.has_value());

  CHECK(has_reason(verify_witness(case2_basis(), Targets{12, 12, 24}), "DISC_MISMATCH(2)"));
}

TEST_CASE("verification is deterministic") {
  auto a = verify_witness(case2_basis(), Targets{12, 12, 26});
  auto b = verify_witness(case2_basis(), Targets{12, 12, 26});
  CHECK(a == b);
}

TEST_CASE("oracle short vectors") {
  CHECK(oracle_short_vectors(IntMatrix{{2, 1}, {1, 2}}, 2).size() == 3);
  CHECK(oracle_short_vectors(IntMatrix{{3}}, 3) == std::vector<IntVector>{make_int_vector({1})});
  const IntMatrix d4{{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}};
  CHECK(oracle_short_vectors(d4, 2).size() == 12);
  CHECK(oracle_short_vectors(d4, 4) == short_vectors(d4, 4));
  CHECK_THROWS_AS(oracle_short_vectors(IntMatrix{{0, 1}, {1, 0}}, 2), std::invalid_argument);
}

TEST_CASE("corollary witness") {
  CorollaryReport r = verify_corollary20();
  CHECK(r.allStar);
  CHECK(r.allK3);
  CHECK(r.distinct);
  REQUIRE(r.discriminants.size() == 20);
  std::vector<std::int64_t> ms;
  for (const auto& d : r.discriminants)
    if (d.doubleStarWitness) ms.push_back(*d.doubleStarWitness);
  std::sort(ms.begin(), ms.end());
  CHECK(ms == std::vector<std::int64_t>{2, 4, 6, 7, 8, 10, 12, 14, 16, 18, 19, 20, 22, 24, 26, 28, 32, 34});

  REQUIRE(r.outcome.basis.has_value());
  const IntMatrix& g = *r.witness.realizedGram;
  CHECK(g.rows() == 21);
  CHECK(r.witness.criterion.containsHSquared);
  CHECK(r.witness.criterion.positiveDefinite);
  CHECK(short_vectors(g, 2).empty());
  CHECK_FALSE(short_vectors(g, 3).empty());
  CHECK(r.witness.criterion.minimumNorm == 3);
  for (std::size_t i = 0; i < 20; ++i) {
    CHECK(r.witness.labellings[i].targetD == corollary_targets()[i]);
    CHECK(r.witness.labellings[i].realizedD == corollary_targets()[i]);
    CHECK(r.witness.labellings[i].saturatedInM);
  }
}

TEST_CASE("identity checks") {
  CHECK(check_identity(CaseId::LemmaCase2, std::vector<std::int64_t>{2, 2, 4}, 10000, 0));
  CHECK_FALSE(check_identity(CaseId::LemmaCase4, std::vector<std::int64_t>{1, 1, 4}, 10000, 0, IdentityVariant::AsPrinted));
  CHECK(check_identity(CaseId::ThmCase5, std::vector<std::int64_t>{1, 1, 4, 4}, 10000, 0));
}
