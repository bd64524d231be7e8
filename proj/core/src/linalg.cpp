#include "hassett/linalg.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace hassett {
namespace {

void require_square(const IntMatrix& m, const char* what) {
  if (!m.is_square()) throw std::invalid_argument(std::string(what) + ": matrix must be square");
}

void require_symmetric(const IntMatrix& m, const char* what) {
  if (!m.is_symmetric()) throw std::invalid_argument(std::string(what) + ": matrix must be symmetric");
}

// Fraction-free elimination on a copy; returns rank and, for square input, the determinant.
std::pair<std::size_t, BigInt> bareiss(IntMatrix a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  BigInt prev = 1;
  int sign = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && sgn(a(pivot, c)) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      a.swap_rows(pivot, r);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        BigInt v = a(i, j) * a(r, c) - a(i, c) * a(r, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(v);
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  BigInt det = 0;
  if (rows == cols && r == rows) det = sign > 0 ? prev : BigInt(-prev);
  return {r, det};
}

// Smallest nonzero |entry| in the trailing block starting at (t, t).
bool find_min_pivot(const IntMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  BigInt best;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (sgn(d(i, j)) == 0) continue;
      BigInt v = abs(d(i, j));
      if (!found || v < best) {
        best = std::move(v);
        pi = i;
        pj = j;
        found = true;
      }
    }
  return found;
}

// Shared Smith reduction; `left`/`right` may be null when transforms are not needed.
void smith_reduce(IntMatrix& d, IntMatrix* left, IntMatrix* right) {
  const std::size_t n = std::min(d.rows(), d.cols());
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t pi = 0, pj = 0;
    if (!find_min_pivot(d, t, pi, pj)) return;
    for (;;) {
      d.swap_rows(t, pi);
      if (left) left->swap_rows(t, pi);
      d.swap_columns(t, pj);
      if (right) right->swap_columns(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (sgn(d(i, t)) == 0) continue;
        BigInt q;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        q = -q;
        d.add_row_multiple(i, t, q);
        if (left) left->add_row_multiple(i, t, q);
        if (sgn(d(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (sgn(d(t, j)) == 0) continue;
        BigInt q;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        q = -q;
        d.add_column_multiple(j, t, q);
        if (right) right->add_column_multiple(j, t, q);
        if (sgn(d(t, j)) != 0) clean = false;
      }
      if (!clean) {
        find_min_pivot(d, t, pi, pj);
        continue;
      }

      // Row and column of the pivot are clear; enforce divisibility of the rest.
      bool divisible = true;
      for (std::size_t i = t + 1; i < d.rows() && divisible; ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j) {
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            d.add_row_multiple(t, i, BigInt(1));
            if (left) left->add_row_multiple(t, i, BigInt(1));
            divisible = false;
            break;
          }
        }
      if (!divisible) {
        find_min_pivot(d, t, pi, pj);
        continue;
      }
      break;
    }
    if (sgn(d(t, t)) < 0) {
      d.negate_row(t);
      if (left) left->negate_row(t);
    }
  }
}

}  // namespace

BigInt determinant(const IntMatrix& m) {
  require_square(m, "determinant");
  return bareiss(m).second;
}

std::size_t rank(const IntMatrix& m) { return bareiss(m).first; }

IntVector SmithForm::invariants() const {
  IntVector out;
  const std::size_t n = std::min(diagonal.rows(), diagonal.cols());
  for (std::size_t i = 0; i < n; ++i)
    if (sgn(diagonal(i, i)) != 0) out.push_back(diagonal(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm f{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  smith_reduce(f.diagonal, &f.left, &f.right);
  return f;
}

IntVector smith_invariants(const IntMatrix& m) {
  IntMatrix d = m;
  smith_reduce(d, nullptr, nullptr);
  IntVector out;
  const std::size_t n = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < n; ++i)
    if (sgn(d(i, i)) != 0) out.push_back(d(i, i));
  return out;
}

HermiteForm hermite_normal_form(const IntMatrix& m) {
  HermiteForm f{m, IntMatrix::identity(m.cols()), 0, {}};
  IntMatrix& h = f.hermite;
  IntMatrix& t = f.transform;
  std::size_t col = 0;
  for (std::size_t row = 0; row < h.rows() && col < h.cols(); ++row) {
    // Euclid across columns col.. until a single nonzero remains in this row.
    for (;;) {
      std::size_t best = h.cols();
      for (std::size_t j = col; j < h.cols(); ++j) {
        if (sgn(h(row, j)) == 0) continue;
        if (best == h.cols() || abs(h(row, j)) < abs(h(row, best))) best = j;
      }
      if (best == h.cols()) break;
      h.swap_columns(col, best);
      t.swap_columns(col, best);
      bool done = true;
      for (std::size_t j = col + 1; j < h.cols(); ++j) {
        if (sgn(h(row, j)) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), h(row, j).get_mpz_t(), h(row, col).get_mpz_t());
        q = -q;
        h.add_column_multiple(j, col, q);
        t.add_column_multiple(j, col, q);
        if (sgn(h(row, j)) != 0) done = false;
      }
      if (done) break;
    }
    if (sgn(h(row, col)) == 0) continue;
    if (sgn(h(row, col)) < 0) {
      h.negate_column(col);
      t.negate_column(col);
    }
    for (std::size_t j = 0; j < col; ++j) {
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), h(row, j).get_mpz_t(), h(row, col).get_mpz_t());
      q = -q;
      h.add_column_multiple(j, col, q);
      t.add_column_multiple(j, col, q);
    }
    f.pivot_rows.push_back(row);
    ++col;
  }
  f.rank = col;
  return f;
}

Inertia inertia(const IntMatrix& g) {
  require_symmetric(g, "inertia");
  const std::size_t n = g.rows();
  std::vector<RatScalar> a(n * n);
  auto at = [&](std::size_t i, std::size_t j) -> RatScalar& { return a[i * n + j]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) at(i, j) = RatScalar(g(i, j));

  auto swap_sym = [&](std::size_t p, std::size_t q) {
    if (p == q) return;
    for (std::size_t k = 0; k < n; ++k) std::swap(at(p, k), at(q, k));
    for (std::size_t k = 0; k < n; ++k) std::swap(at(k, p), at(k, q));
  };

  Inertia out;
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t p = n;
    for (std::size_t i = t; i < n; ++i)
      if (sgn(at(i, i)) != 0) {
        p = i;
        break;
      }
    if (p == n) {
      // Zero diagonal: replace e_i by e_i + e_j for some a_ij != 0, giving diagonal 2 a_ij.
      std::size_t pi = n, pj = n;
      for (std::size_t i = t; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (sgn(at(i, j)) != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) {
        out.zero += n - t;
        break;
      }
      for (std::size_t k = 0; k < n; ++k) at(pi, k) += at(pj, k);
      for (std::size_t k = 0; k < n; ++k) at(k, pi) += at(k, pj);
      p = pi;
    }
    swap_sym(t, p);
    const RatScalar pivot = at(t, t);
    if (sgn(pivot) > 0)
      ++out.positive;
    else
      ++out.negative;
    for (std::size_t i = t + 1; i < n; ++i) {
      if (sgn(at(i, t)) == 0) continue;
      const RatScalar f = at(i, t) / pivot;
      for (std::size_t j = t + 1; j < n; ++j) at(i, j) -= f * at(t, j);
    }
    for (std::size_t i = t + 1; i < n; ++i) at(i, t) = at(t, i) = 0;
  }
  return out;
}

bool is_positive_definite(const IntMatrix& g) {
  require_symmetric(g, "is_positive_definite");
  // Without pivoting the k-th Bareiss pivot equals the k-th leading principal minor.
  IntMatrix a = g;
  const std::size_t n = a.rows();
  BigInt prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(a(k, k)) <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(v);
      }
    prev = a(k, k);
  }
  return true;
}

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_integer: dimension mismatch");
  const HermiteForm hf = hermite_normal_form(a);
  const IntMatrix& h = hf.hermite;

  IntVector y(a.cols(), BigInt(0));
  for (std::size_t p = 0; p < hf.rank; ++p) {
    const std::size_t r = hf.pivot_rows[p];
    BigInt rhs = b[r];
    for (std::size_t q = 0; q < p; ++q) rhs -= h(r, q) * y[q];
    if (!mpz_divisible_p(rhs.get_mpz_t(), h(r, p).get_mpz_t())) return std::nullopt;
    mpz_divexact(y[p].get_mpz_t(), rhs.get_mpz_t(), h(r, p).get_mpz_t());
  }
  if (h * y != b) return std::nullopt;
  IntVector x = hf.transform * y;
  if (a * x != b) throw std::logic_error("solve_integer: verification failed");
  return x;
}

RatMatrix rational_inverse(const IntMatrix& g) {
  require_square(g, "rational_inverse");
  const std::size_t n = g.rows();
  RatMatrix a(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = RatScalar(g(i, j));
    a(i, n + i) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) throw std::invalid_argument("rational_inverse: matrix is singular");
    if (p != c)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(a(p, j), a(c, j));
    const RatScalar pivot = a(c, c);
    for (std::size_t j = 0; j < 2 * n; ++j) a(c, j) /= pivot;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(a(i, c)) == 0) continue;
      const RatScalar f = a(i, c);
      for (std::size_t j = 0; j < 2 * n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = a(i, n + j);
  return inv;
}

}  // namespace hassett
