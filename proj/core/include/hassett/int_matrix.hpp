#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace hassett {

using BigInt = mpz_class;

// Exact rational scalar. Every value produced by this library is canonical
// (lowest terms, positive denominator).
using RatScalar = mpq_class;

using IntVector = std::vector<BigInt>;

IntVector make_int_vector(std::initializer_list<long> values);
std::string to_string(const IntVector& v);

// Lexicographic order on equal-length integer vectors.
bool lex_less(const IntVector& a, const IntVector& b);

// Dense row-major matrix of arbitrary-precision integers, rows >= 1 and cols >= 1.
class IntMatrix {
public:
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const IntVector& diag);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);
  static IntMatrix from_columns(const std::vector<IntVector>& cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_zero() const;

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;

  IntMatrix transpose() const;
  // Leading k x k principal block.
  IntMatrix leading(std::size_t k) const;

  // Elementary operations, used by the normal-form routines.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_columns(std::size_t a, std::size_t b);
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
  // col[dst] += factor * col[src]
  void add_column_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
  void negate_row(std::size_t i);
  void negate_column(std::size_t j);

  // Value of x^T * this * x for a square matrix.
  BigInt quadratic_form(const IntVector& x) const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b);
  friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigInt> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& x);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

// Dense matrix of exact rationals.
class RatMatrix {
public:
  RatMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  RatScalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const RatScalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const RatMatrix& a, const RatMatrix& b);

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<RatScalar> data_;
};

std::ostream& operator<<(std::ostream& os, const RatMatrix& m);

}  // namespace hassett
