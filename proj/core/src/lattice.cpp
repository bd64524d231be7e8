#include "hassett/lattice.hpp"

#include "hassett/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>

namespace hassett {
namespace {

constexpr std::size_t kE8First = 0;
constexpr std::size_t kE8Second = 8;
constexpr std::size_t kUFirst = 16;
constexpr std::size_t kUSecond = 18;
constexpr std::size_t kI3 = 20;

struct GramEntry {
  std::size_t i;
  std::size_t j;
  long value;
};

// Nonzero entries of the ambient Gram, for sparse inner products.
const std::vector<GramEntry>& ambient_entries() {
  static const std::vector<GramEntry> entries = [] {
    std::vector<GramEntry> out;
    const IntMatrix& g = ambient_gram();
    for (std::size_t i = 0; i < kAmbientRank; ++i)
      for (std::size_t j = 0; j < kAmbientRank; ++j)
        if (sgn(g(i, j)) != 0) out.push_back({i, j, g(i, j).get_si()});
    return out;
  }();
  return entries;
}

}  // namespace

const IntMatrix& e8_gram() {
  static const IntMatrix g{
      {2, -1, 0, 0, 0, 0, 0, 0},   //
      {-1, 2, -1, 0, 0, 0, 0, 0},  //
      {0, -1, 2, -1, -1, 0, 0, 0}, //
      {0, 0, -1, 2, 0, 0, 0, 0},   //
      {0, 0, -1, 0, 2, -1, 0, 0},  //
      {0, 0, 0, 0, -1, 2, -1, 0},  //
      {0, 0, 0, 0, 0, -1, 2, -1},  //
      {0, 0, 0, 0, 0, 0, -1, 2},
  };
  return g;
}

const IntMatrix& ambient_gram() {
  static const IntMatrix g = [] {
    IntMatrix m(kAmbientRank, kAmbientRank);
    const IntMatrix& e8 = e8_gram();
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) {
        m(kE8First + i, kE8First + j) = e8(i, j);
        m(kE8Second + i, kE8Second + j) = e8(i, j);
      }
    m(kUFirst, kUFirst + 1) = m(kUFirst + 1, kUFirst) = 1;
    m(kUSecond, kUSecond + 1) = m(kUSecond + 1, kUSecond) = 1;
    for (std::size_t i = 0; i < 3; ++i) m(kI3 + i, kI3 + i) = 1;
    return m;
  }();
  return g;
}

std::string_view basis_label(std::size_t index) {
  static const std::array<std::string, kAmbientRank> labels = [] {
    std::array<std::string, kAmbientRank> out;
    for (int i = 0; i < 8; ++i) {
      out[kE8First + i] = "t1_" + std::to_string(i + 1);
      out[kE8Second + i] = "t2_" + std::to_string(i + 1);
    }
    out[kUFirst] = "e1_1";
    out[kUFirst + 1] = "e1_2";
    out[kUSecond] = "e2_1";
    out[kUSecond + 1] = "e2_2";
    for (int i = 0; i < 3; ++i) out[kI3 + i] = "i_" + std::to_string(i + 1);
    return out;
  }();
  if (index >= kAmbientRank) throw std::out_of_range("basis_label: index out of range");
  return labels[index];
}

AmbientVector::AmbientVector(const IntVector& coords) {
  if (coords.size() != kAmbientRank)
    throw std::invalid_argument("AmbientVector: expected 23 coordinates, got " +
                                std::to_string(coords.size()));
  std::copy(coords.begin(), coords.end(), coords_.begin());
}

AmbientVector AmbientVector::unit(std::size_t index) {
  if (index >= kAmbientRank) throw std::out_of_range("AmbientVector::unit: index out of range");
  AmbientVector v;
  v.coords_[index] = 1;
  return v;
}

AmbientVector AmbientVector::e8_root(int copy, int root) {
  if ((copy != 1 && copy != 2) || root < 1 || root > 8)
    throw std::invalid_argument("e8_root: copy must be 1 or 2 and root in 1..8");
  return unit((copy == 1 ? kE8First : kE8Second) + static_cast<std::size_t>(root - 1));
}

AmbientVector AmbientVector::hyperbolic(int copy, int which) {
  if ((copy != 1 && copy != 2) || (which != 1 && which != 2))
    throw std::invalid_argument("hyperbolic: copy and index must be 1 or 2");
  return unit((copy == 1 ? kUFirst : kUSecond) + static_cast<std::size_t>(which - 1));
}

AmbientVector AmbientVector::i3(long x, long y, long z) {
  AmbientVector v;
  v.coords_[kI3] = x;
  v.coords_[kI3 + 1] = y;
  v.coords_[kI3 + 2] = z;
  return v;
}

AmbientVector AmbientVector::h_squared() { return i3(1, 1, 1); }
AmbientVector AmbientVector::a1() { return i3(1, -1, 0); }
AmbientVector AmbientVector::a2() { return i3(0, -1, 1); }

IntVector AmbientVector::to_vector() const { return IntVector(coords_.begin(), coords_.end()); }

bool AmbientVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const BigInt& x) { return sgn(x) == 0; });
}

AmbientVector& AmbientVector::operator+=(const AmbientVector& o) {
  for (std::size_t i = 0; i < kAmbientRank; ++i) coords_[i] += o.coords_[i];
  return *this;
}

AmbientVector& AmbientVector::operator-=(const AmbientVector& o) {
  for (std::size_t i = 0; i < kAmbientRank; ++i) coords_[i] -= o.coords_[i];
  return *this;
}

AmbientVector& AmbientVector::operator*=(const BigInt& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

bool operator<(const AmbientVector& a, const AmbientVector& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                      b.coords_.end(),
                                      [](const BigInt& x, const BigInt& y) { return x < y; });
}

BigInt inner_product(const AmbientVector& u, const AmbientVector& v) {
  BigInt total = 0;
  for (const GramEntry& e : ambient_entries()) {
    if (sgn(u[e.i]) == 0 || sgn(v[e.j]) == 0) continue;
    total += e.value * (u[e.i] * v[e.j]);
  }
  return total;
}

IntMatrix gram_of(std::span<const AmbientVector> basis) {
  if (basis.empty()) throw std::invalid_argument("gram_of: empty basis");
  const std::size_t k = basis.size();
  IntMatrix g(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      g(i, j) = inner_product(basis[i], basis[j]);
      if (i != j) g(j, i) = g(i, j);
    }
  return g;
}

IntMatrix coordinate_matrix(std::span<const AmbientVector> vectors) {
  if (vectors.empty()) throw std::invalid_argument("coordinate_matrix: empty list");
  IntMatrix m(kAmbientRank, vectors.size());
  for (std::size_t j = 0; j < vectors.size(); ++j)
    for (std::size_t i = 0; i < kAmbientRank; ++i) m(i, j) = vectors[j][i];
  return m;
}

Sublattice::Sublattice(std::vector<AmbientVector> basis)
    : basis_(std::move(basis)), gram_(basis_.empty() ? IntMatrix(1, 1) : gram_of(basis_)) {
  if (basis_.empty()) throw std::invalid_argument("Sublattice: empty basis");
  if (hassett::rank(coordinate_matrix(basis_)) != basis_.size())
    throw std::invalid_argument("Sublattice: basis vectors are linearly dependent");
}

Labelling::Labelling(const AmbientVector& v)
    : sub_({AmbientVector::h_squared(), v}), discriminant_(determinant(sub_.gram())) {}

BigInt labelling_discriminant(const AmbientVector& v) {
  const BigInt hv = inner_product(AmbientVector::h_squared(), v);
  return 3 * norm(v) - hv * hv;
}

bool is_saturated(const Sublattice& m) {
  const IntVector inv = smith_invariants(m.coordinates());
  return std::all_of(inv.begin(), inv.end(), [](const BigInt& d) { return d == 1; });
}

std::optional<IntVector> coordinates_in(const Sublattice& m, const AmbientVector& v) {
  return solve_integer(m.coordinates(), v.to_vector());
}

bool contains(const Sublattice& m, const AmbientVector& v) { return coordinates_in(m, v).has_value(); }

bool saturation_in(const Sublattice& k, const Sublattice& m) {
  const IntMatrix mc = m.coordinates();
  std::vector<IntVector> columns;
  columns.reserve(k.rank());
  for (std::size_t i = 0; i < k.rank(); ++i) {
    auto x = solve_integer(mc, k.basis()[i].to_vector());
    if (!x)
      throw std::invalid_argument("saturation_in: basis vector " + std::to_string(i) +
                                  " does not lie in the containing lattice");
    columns.push_back(std::move(*x));
  }
  const IntVector inv = smith_invariants(IntMatrix::from_columns(columns));
  return std::all_of(inv.begin(), inv.end(), [](const BigInt& d) { return d == 1; });
}

}  // namespace hassett
