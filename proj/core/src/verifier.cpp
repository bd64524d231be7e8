#include "hassett/verifier.hpp"

#include "hassett/enumeration.hpp"
#include "hassett/linalg.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace hassett {
namespace {

std::string indexed(const char* code, std::size_t i) { return std::string(code) + "(" + std::to_string(i) + ")"; }

}  // namespace

WitnessReport verify_witness(std::span<const AmbientVector> basis, std::span<const std::int64_t> targets,
                             const std::optional<IntMatrix>& expectedGram) {
  WitnessReport r;
  auto fail = [&](std::string code) { r.failureReasons.push_back(std::move(code)); };
  if (basis.empty()) {
    fail("BASIS_EMPTY");
    return r;
  }
  const AmbientVector h = AmbientVector::h_squared();
  if (!(basis[0] == h)) fail("FIRST_NOT_H2");
  if (targets.size() + 1 != basis.size()) fail("TARGET_COUNT_MISMATCH");

  r.realizedGram = gram_of(basis);
  if (expectedGram) r.gramMatchesPaper = *expectedGram == *r.realizedGram;

  std::optional<Sublattice> m;
  try {
    m.emplace(std::vector<AmbientVector>(basis.begin(), basis.end()));
  } catch (const std::invalid_argument&) {
    fail("DEPENDENT_BASIS");
    return r;
  }

  r.criterion = yang_yu_certifiable(*m);
  if (!r.criterion.containsHSquared) fail("H2_NOT_CONTAINED");
  if (!r.criterion.positiveDefinite) fail("NOT_POSITIVE_DEFINITE");
  if (!r.criterion.saturated) fail("NOT_SATURATED");
  if (r.criterion.minimumNorm && *r.criterion.minimumNorm < 3) fail("MIN_NORM_" + r.criterion.minimumNorm->get_str());

  const std::size_t count = std::min(targets.size(), basis.size() - 1);
  bool labellingsOk = true;
  for (std::size_t i = 0; i < count; ++i) {
    const AmbientVector& v = basis[i + 1];
    LabellingCheck lc;
    lc.targetD = targets[i];
    lc.realizedD = labelling_discriminant(v);
    try {
      lc.saturatedInM = saturation_in(Sublattice({h, v}), *m);
    } catch (const std::invalid_argument&) {
      lc.saturatedInM = false;
    }
    if (lc.realizedD != lc.targetD) {
      fail(indexed("DISC_MISMATCH", i));
      labellingsOk = false;
    }
    if (!lc.saturatedInM) {
      fail(indexed("LABELLING_NOT_SATURATED", i));
      labellingsOk = false;
    }
    r.labellings.push_back(std::move(lc));
  }
  const bool wellFormed = basis[0] == h && targets.size() + 1 == basis.size();
  r.verdict = wellFormed && r.criterion.pass && labellingsOk ? Verdict::Pass : Verdict::Fail;
  return r;
}

std::vector<IntVector> oracle_short_vectors(const IntMatrix& g, const BigInt& c) {
  if (!is_positive_definite(g)) throw std::invalid_argument("oracle_short_vectors: form is not positive definite");
  if (sgn(c) < 0) throw std::invalid_argument("oracle_short_vectors: bound must be nonnegative");
  const std::size_t n = g.rows();
  const RatMatrix inv = rational_inverse(g);
  IntVector bound(n);
  for (std::size_t i = 0; i < n; ++i) {
    RatScalar t = c * inv(i, i);
    BigInt fl;
    mpz_fdiv_q(fl.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    bound[i] = sqrt(fl);
  }
  std::vector<IntVector> out;
  IntVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = -bound[i];
  for (;;) {
    const IntVector cx = canonical_sign(x);
    bool nonzero = std::any_of(x.begin(), x.end(), [](const BigInt& v) { return sgn(v) != 0; });
    if (nonzero && cx == x && g.quadratic_form(x) <= c) out.push_back(x);
    std::size_t k = 0;
    while (k < n && x[k] == bound[k]) {
      x[k] = -bound[k];
      ++k;
    }
    if (k == n) break;
    ++x[k];
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

const std::vector<std::int64_t>& corollary_targets() {
  static const std::vector<std::int64_t> t = {14,   38,   26,   98,   218,  294,  386,  602,  866,  1178,
                                              1538, 1946, 2166, 2402, 2906, 3458, 4058, 4706, 6146, 6938};
  return t;
}

CorollaryReport verify_corollary20() {
  CorollaryReport r;
  const auto& targets = corollary_targets();
  r.outcome = build_generic(targets, BuildMode::Goal);
  if (r.outcome.basis)
    r.witness = verify_witness(*r.outcome.basis, targets);
  else
    r.witness.failureReasons.push_back("BASIS_EMPTY");
  for (auto d : targets) r.discriminants.push_back(discriminant_report(d));
  r.allStar = std::all_of(r.discriminants.begin(), r.discriminants.end(), [](const auto& x) { return x.star; });
  r.allK3 = std::all_of(r.discriminants.begin(), r.discriminants.end(), [](const auto& x) { return x.k3Admissible; });
  r.distinct = std::set<std::int64_t>(targets.begin(), targets.end()).size() == targets.size();
  r.pass = r.allStar && r.allK3 && r.distinct && r.witness.verdict == Verdict::Pass;
  return r;
}

bool check_identity(CaseId id, std::span<const std::int64_t> params, std::uint64_t trials, std::uint64_t seed,
                    IdentityVariant variant) {
  if (trials < 1) throw std::invalid_argument("check_identity: need at least one trial");
  const std::size_t dim = paper_gram(id, params).rows();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coord(-50, 50);
  std::vector<std::int64_t> point(dim);
  for (std::uint64_t t = 0; t < trials; ++t) {
    for (auto& v : point) v = coord(rng);
    const auto values = expected_identity(id, params, point, variant);
    if (values.lhs != values.rhs) return false;
  }
  return true;
}

}  // namespace hassett
