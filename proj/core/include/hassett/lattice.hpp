#pragma once

// The ambient lattice L = E8 + E8 + U + U + I3 of rank 23 and signature (21, 2),
// with coordinates ordered by block:
//
//   0..7    t1_1 .. t1_8   (first E8)
//   8..15   t2_1 .. t2_8   (second E8)
//   16, 17  e1_1, e1_2     (first hyperbolic plane)
//   18, 19  e2_1, e2_2     (second hyperbolic plane)
//   20..22  i_1, i_2, i_3  (odd unimodular I3 = diag(1,1,1))
//
// h^2 = (1,1,1) in the I3 block. The A2 roots orthogonal to h^2 are fixed as
// a1 = (1,-1,0) and a2 = (0,-1,1) in the I3 block.

#include "hassett/int_matrix.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace hassett {

inline constexpr std::size_t kAmbientRank = 23;

/// The E8 Cartan matrix in the t_1..t_8 basis (branch node t_3).
const IntMatrix& e8_gram();

/// Block-diagonal Gram of the ambient lattice.
const IntMatrix& ambient_gram();

/// Coordinate label ("t1_3", "e2_1", "i_2", ...).
std::string_view basis_label(std::size_t index);

class AmbientVector {
public:
  AmbientVector() = default;
  explicit AmbientVector(const IntVector& coords);

  static AmbientVector unit(std::size_t index);
  /// t^copy_root, copy in {1,2}, root in 1..8.
  static AmbientVector e8_root(int copy, int root);
  /// e^copy_which, copy in {1,2}, which in {1,2}.
  static AmbientVector hyperbolic(int copy, int which);
  static AmbientVector i3(long x, long y, long z);
  static AmbientVector h_squared();
  static AmbientVector a1();
  static AmbientVector a2();

  const BigInt& operator[](std::size_t i) const { return coords_[i]; }
  BigInt& operator[](std::size_t i) { return coords_[i]; }
  const std::array<BigInt, kAmbientRank>& coords() const noexcept { return coords_; }
  IntVector to_vector() const;
  bool is_zero() const;

  AmbientVector& operator+=(const AmbientVector& o);
  AmbientVector& operator-=(const AmbientVector& o);
  AmbientVector& operator*=(const BigInt& s);

  friend AmbientVector operator+(AmbientVector a, const AmbientVector& b) { return a += b; }
  friend AmbientVector operator-(AmbientVector a, const AmbientVector& b) { return a -= b; }
  friend AmbientVector operator*(const BigInt& s, AmbientVector a) { return a *= s; }
  friend bool operator==(const AmbientVector& a, const AmbientVector& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const AmbientVector& a, const AmbientVector& b);

private:
  std::array<BigInt, kAmbientRank> coords_{};
};

/// u^T G_L v.
BigInt inner_product(const AmbientVector& u, const AmbientVector& v);
inline BigInt norm(const AmbientVector& v) { return inner_product(v, v); }

/// Pairwise inner products. Throws std::invalid_argument on an empty list.
IntMatrix gram_of(std::span<const AmbientVector> basis);

/// 23 x k matrix whose columns are the given vectors.
IntMatrix coordinate_matrix(std::span<const AmbientVector> vectors);

/// An ordered, linearly independent family of ambient vectors with its Gram matrix.
class Sublattice {
public:
  /// Throws std::invalid_argument if the list is empty or linearly dependent.
  explicit Sublattice(std::vector<AmbientVector> basis);

  const std::vector<AmbientVector>& basis() const noexcept { return basis_; }
  const IntMatrix& gram() const noexcept { return gram_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  IntMatrix coordinates() const { return coordinate_matrix(basis_); }

private:
  std::vector<AmbientVector> basis_;
  IntMatrix gram_;
};

/// Rank-two sublattice <h^2, v> with its discriminant 3 v.v - (h^2.v)^2.
class Labelling {
public:
  /// Throws std::invalid_argument if v is a rational multiple of h^2.
  explicit Labelling(const AmbientVector& v);

  const Sublattice& sublattice() const noexcept { return sub_; }
  const AmbientVector& generator() const { return sub_.basis()[1]; }
  const BigInt& discriminant() const noexcept { return discriminant_; }

private:
  Sublattice sub_;
  BigInt discriminant_;
};

BigInt labelling_discriminant(const AmbientVector& v);

/// True iff L / M is torsion free, i.e. all Smith invariants of the coordinate matrix are 1.
bool is_saturated(const Sublattice& m);

bool contains(const Sublattice& m, const AmbientVector& v);

/// Coordinates of v in m's basis, if v lies in m.
std::optional<IntVector> coordinates_in(const Sublattice& m, const AmbientVector& v);

/// Whether k is saturated inside m. Throws std::invalid_argument if some basis
/// vector of k is not in m.
bool saturation_in(const Sublattice& k, const Sublattice& m);

}  // namespace hassett
