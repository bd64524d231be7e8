#include "hassett/constructions.hpp"

#include <stdexcept>

namespace hassett {
namespace {

BigInt sq(const BigInt& x) { return x * x; }

std::int64_t root(std::int64_t n) {
  BigInt v = n;
  if (!mpz_perfect_square_p(v.get_mpz_t())) throw std::invalid_argument("parameter is not a perfect square");
  return BigInt(sqrt(v)).get_si();
}

}  // namespace

bool has_identity(CaseId id) {
  switch (id) {
    case CaseId::LemmaCase1:
    case CaseId::LemmaCase2:
    case CaseId::LemmaCase3:
    case CaseId::LemmaCase4:
    case CaseId::PropN4:
    case CaseId::ThmCase1:
    case CaseId::ThmCase2:
    case CaseId::ThmCase3:
    case CaseId::ThmCase4:
    case CaseId::ThmCase5:
      return true;
    default:
      return false;
  }
}

IdentityValues expected_identity(CaseId id, std::span<const std::int64_t> params,
                                 std::span<const std::int64_t> point, IdentityVariant variant) {
  if (!has_identity(id)) throw std::invalid_argument("no sum-of-squares identity for " + std::string(to_string(id)));
  const IntMatrix g = paper_gram(id, params);
  if (point.size() != g.rows())
    throw std::invalid_argument("point has " + std::to_string(point.size()) + " coordinates, expected " +
                                std::to_string(g.rows()));
  IntVector x;
  for (auto v : point) x.emplace_back(v);
  const BigInt lhs = g.quadratic_form(x);

  const BigInt n1 = params[0], n2 = params[1], n3 = params[2];
  const BigInt& x1 = x[0];
  const BigInt& x2 = x[1];
  const BigInt& x3 = x[2];
  const BigInt& x4 = x[3];
  BigInt rhs;
  switch (id) {
    case CaseId::LemmaCase1:
      rhs = 3 * sq(x1) + 2 * n1 * sq(x2) + 2 * n2 * sq(x3) + 2 * n3 * sq(x4);
      break;
    case CaseId::LemmaCase2:
      rhs = 2 * sq(x1) + 2 * n1 * sq(x2) + 2 * n2 * sq(x3) + 2 * n3 * sq(x4) + sq(x1 + x4);
      break;
    case CaseId::LemmaCase3:
      rhs = sq(x1) + 2 * n1 * sq(x2) + 2 * n2 * sq(x3) + 2 * n3 * sq(x4) + sq(x1 + x3) + sq(x1 + x4);
      break;
    case CaseId::LemmaCase4:
      rhs = 2 * n1 * sq(x2) + 2 * n2 * sq(x3) + 2 * n3 * sq(x4) + sq(x1 + x4);
      if (variant == IdentityVariant::Corrected)
        rhs += sq(x1 + x2) + sq(x1 + x3);
      else
        rhs += sq(x1 + x2) * sq(x1 + x3);
      break;
    default: {
      const BigInt n4 = params[3];
      const BigInt m3 = root(params[2]), m4 = root(params[3]);
      const BigInt& x5 = x[4];
      const BigInt common = 2 * n1 * sq(x2) + 2 * n2 * sq(x3) + n3 * sq(x4) + n4 * sq(x5) + sq(m3 * x4 + m4 * x5);
      switch (id) {
        case CaseId::PropN4:
        case CaseId::ThmCase1:
          rhs = 3 * sq(x1) + common;
          break;
        case CaseId::ThmCase2:
          rhs = 2 * sq(x1) + common + sq(x1 + x5);
          break;
        case CaseId::ThmCase3:
          rhs = sq(x1) + common + sq(x1 + x5) + sq(x1 + x4);
          break;
        case CaseId::ThmCase4:
          rhs = common + sq(x1 + x5) + sq(x1 + x4) + sq(x1 + x3);
          break;
        case CaseId::ThmCase5:
          rhs = common + sq(x1 + x5) + sq(x1 + x4) + sq(x1 + x3) + sq(x1 + x2) - sq(x1);
          break;
        default:
          break;
      }
    }
  }
  return {lhs, rhs};
}

}  // namespace hassett
