#include "hassett/enumeration.hpp"

#include "hassett/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace hassett {
namespace {

// g = L^T D L with L unit upper triangular: q(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2.
struct Cholesky {
  std::vector<RatScalar> d;
  std::vector<std::vector<RatScalar>> mu;
};

Cholesky ldl(const IntMatrix& g) {
  const std::size_t n = g.rows();
  std::vector<std::vector<RatScalar>> a(n, std::vector<RatScalar>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = g(i, j);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) a[i][j] /= a[i][i];
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) a[k][l] -= a[i][k] * a[i][l] * a[i][i];
  }
  Cholesky out;
  out.d.resize(n);
  out.mu.assign(n, std::vector<RatScalar>(n));
  for (std::size_t i = 0; i < n; ++i) {
    out.d[i] = a[i][i];
    for (std::size_t j = i + 1; j < n; ++j) out.mu[i][j] = a[i][j];
  }
  return out;
}

class Enumerator {
public:
  Enumerator(const Cholesky& q, const BigInt& c, std::vector<IntVector>& out)
      : q_(q), n_(q.d.size()), x_(n_), out_(out), bound_(c) {}

  void run() { descend(n_, bound_); }

private:
  bool fits(std::size_t i, const RatScalar& center, const BigInt& xi, const RatScalar& rem) const {
    RatScalar t = RatScalar(xi) + center;
    return q_.d[i] * t * t <= rem;
  }

  void descend(std::size_t level, const RatScalar& rem) {
    if (level == 0) {
      record();
      return;
    }
    const std::size_t i = level - 1;
    RatScalar center = 0;
    for (std::size_t j = i + 1; j < n_; ++j)
      if (sgn(x_[j]) != 0) center += q_.mu[i][j] * x_[j];
    // Valid x_i form an interval around -center; walk out from floor(-center).
    BigInt start;
    RatScalar neg = -center;
    mpz_fdiv_q(start.get_mpz_t(), neg.get_num_mpz_t(), neg.get_den_mpz_t());
    for (BigInt v = start; fits(i, center, v, rem); --v) visit(i, center, v, rem);
    for (BigInt v = start + 1; fits(i, center, v, rem); ++v) visit(i, center, v, rem);
    x_[i] = 0;
  }

  void visit(std::size_t i, const RatScalar& center, const BigInt& v, const RatScalar& rem) {
    x_[i] = v;
    RatScalar t = RatScalar(v) + center;
    descend(i, rem - q_.d[i] * t * t);
  }

  void record() {
    auto first = std::find_if(x_.begin(), x_.end(), [](const BigInt& v) { return sgn(v) != 0; });
    if (first == x_.end() || sgn(*first) < 0) return;
    out_.push_back(x_);
  }

  const Cholesky& q_;
  std::size_t n_;
  IntVector x_;
  std::vector<IntVector>& out_;
  RatScalar bound_;
};

}  // namespace

IntVector canonical_sign(IntVector x) {
  auto first = std::find_if(x.begin(), x.end(), [](const BigInt& v) { return sgn(v) != 0; });
  if (first != x.end() && sgn(*first) < 0)
    for (auto& v : x) v = -v;
  return x;
}

std::vector<IntVector> short_vectors(const IntMatrix& g, const BigInt& c) {
  if (!is_positive_definite(g)) throw std::invalid_argument("short_vectors: form is not positive definite");
  if (sgn(c) < 0) throw std::invalid_argument("short_vectors: bound must be nonnegative");
  std::vector<IntVector> out;
  const Cholesky q = ldl(g);
  Enumerator(q, c, out).run();
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

BigInt minimum(const IntMatrix& g) {
  if (!is_positive_definite(g)) throw std::invalid_argument("minimum: form is not positive definite");
  for (BigInt c = 1;; ++c) {
    auto v = short_vectors(g, c);
    if (v.empty()) continue;
    BigInt best = g.quadratic_form(v.front());
    for (const auto& x : v) best = std::min(best, g.quadratic_form(x));
    return best;
  }
}

}  // namespace hassett
