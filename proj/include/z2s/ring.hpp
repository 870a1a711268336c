#pragma once

// Arithmetic in Z_{2^s}: residues, residue vectors, binary expansions, the
// bitwise product (odot), element orders and bit planes.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "z2s/bitvector.hpp"

namespace z2s {

inline constexpr int kMaxModulusExponent = 30;

/// Throws ModulusMismatch when the two exponents differ.
void check_same_modulus(int lhs, int rhs);
/// Throws InvalidType for s outside [1, kMaxModulusExponent].
void check_modulus_exponent(int s);

inline std::uint32_t modulus_mask(int s) {
  return static_cast<std::uint32_t>((std::uint64_t{1} << s) - 1);
}

/// An element of Z_{2^s}. Values are reduced by masking on construction, so
/// negative inputs wrap as expected.
class Residue {
 public:
  Residue(std::int64_t value, int s);

  std::uint32_t value() const { return value_; }
  int s() const { return s_; }
  std::uint64_t modulus() const { return std::uint64_t{1} << s_; }
  int bit(int i) const { return static_cast<int>((value_ >> i) & 1U); }

  friend Residue operator+(Residue a, Residue b);
  friend Residue operator-(Residue a, Residue b);
  friend Residue operator-(Residue a) { return Residue(-static_cast<std::int64_t>(a.value_), a.s_); }
  friend Residue operator*(std::int64_t k, Residue a);

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  std::uint32_t value_;
  int s_;
};

/// Bits [u_0, ..., u_{s-1}], least significant first.
struct BinaryExpansion {
  std::vector<std::uint8_t> bits;

  std::uint64_t value() const;
  friend bool operator==(const BinaryExpansion&, const BinaryExpansion&) = default;
};

BinaryExpansion binary_expansion(Residue u);

/// u ⊙ v = Σ 2^i u_i v_i, i.e. the bitwise AND of the two expansions.
Residue odot(Residue u, Residue v);

/// Smallest m ≥ 1 with m·u = 0. Always a power of two; order(0) = 1.
std::uint64_t element_order(Residue u);

class ResidueVector {
 public:
  ResidueVector(std::vector<std::uint32_t> values, int s);
  ResidueVector(std::initializer_list<std::int64_t> values, int s);

  static ResidueVector constant(std::size_t n, std::int64_t value, int s);
  static ResidueVector zero(std::size_t n, int s) { return constant(n, 0, s); }

  std::size_t size() const { return values_.size(); }
  int s() const { return s_; }
  std::uint32_t operator[](std::size_t i) const { return values_[i]; }
  Residue at(std::size_t i) const;
  std::span<const std::uint32_t> values() const { return values_; }

  ResidueVector& operator+=(const ResidueVector& other);
  ResidueVector& operator-=(const ResidueVector& other);
  friend ResidueVector operator+(ResidueVector a, const ResidueVector& b) { return a += b; }
  friend ResidueVector operator-(ResidueVector a, const ResidueVector& b) { return a -= b; }
  friend ResidueVector operator*(std::int64_t k, ResidueVector v);

  friend bool operator==(const ResidueVector&, const ResidueVector&) = default;

 private:
  std::vector<std::uint32_t> values_;
  int s_;
};

/// Entrywise odot.
ResidueVector odot(const ResidueVector& u, const ResidueVector& v);

/// Maximum of the entry orders (1 for the zero vector).
std::uint64_t vector_order(const ResidueVector& v);

/// The binary vector whose i-th coordinate is bit p of entry i.
BitVector bit_plane(const ResidueVector& v, int p);

}  // namespace z2s
