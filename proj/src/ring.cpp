#include "z2s/ring.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "z2s/errors.hpp"

namespace z2s {

void check_same_modulus(int lhs, int rhs) {
  if (lhs != rhs) throw ModulusMismatch(lhs, rhs);
}

void check_modulus_exponent(int s) {
  if (s < 1 || s > kMaxModulusExponent) {
    throw InvalidType("modulus exponent s=" + std::to_string(s) + " outside [1, " +
                      std::to_string(kMaxModulusExponent) + "]");
  }
}

Residue::Residue(std::int64_t value, int s) : s_(s) {
  check_modulus_exponent(s);
  value_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(value) & modulus_mask(s));
}

Residue operator+(Residue a, Residue b) {
  check_same_modulus(a.s_, b.s_);
  return Residue(static_cast<std::int64_t>(a.value_) + b.value_, a.s_);
}

Residue operator-(Residue a, Residue b) {
  check_same_modulus(a.s_, b.s_);
  return Residue(static_cast<std::int64_t>(a.value_) - b.value_, a.s_);
}

Residue operator*(std::int64_t k, Residue a) {
  return Residue(static_cast<std::int64_t>(static_cast<std::uint64_t>(k) * a.value_), a.s_);
}

std::uint64_t BinaryExpansion::value() const {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) v |= std::uint64_t{bits[i]} << i;
  return v;
}

BinaryExpansion binary_expansion(Residue u) {
  BinaryExpansion e;
  e.bits.resize(static_cast<std::size_t>(u.s()));
  for (int i = 0; i < u.s(); ++i) e.bits[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(u.bit(i));
  return e;
}

Residue odot(Residue u, Residue v) {
  check_same_modulus(u.s(), v.s());
  return Residue(u.value() & v.value(), u.s());
}

std::uint64_t element_order(Residue u) {
  if (u.value() == 0) return 1;
  return u.modulus() >> std::countr_zero(u.value());
}

ResidueVector::ResidueVector(std::vector<std::uint32_t> values, int s)
    : values_(std::move(values)), s_(s) {
  check_modulus_exponent(s);
  const auto mask = modulus_mask(s);
  for (auto& v : values_) v &= mask;
}

ResidueVector::ResidueVector(std::initializer_list<std::int64_t> values, int s) : s_(s) {
  check_modulus_exponent(s);
  values_.reserve(values.size());
  for (auto v : values) values_.push_back(Residue(v, s).value());
}

ResidueVector ResidueVector::constant(std::size_t n, std::int64_t value, int s) {
  return ResidueVector(std::vector<std::uint32_t>(n, Residue(value, s).value()), s);
}

Residue ResidueVector::at(std::size_t i) const {
  if (i >= values_.size()) throw IndexError("residue vector index out of range");
  return Residue(values_[i], s_);
}

ResidueVector& ResidueVector::operator+=(const ResidueVector& other) {
  check_same_modulus(s_, other.s_);
  if (size() != other.size()) throw ShapeError("residue vector length mismatch");
  const auto mask = modulus_mask(s_);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] = (values_[i] + other.values_[i]) & mask;
  return *this;
}

ResidueVector& ResidueVector::operator-=(const ResidueVector& other) {
  check_same_modulus(s_, other.s_);
  if (size() != other.size()) throw ShapeError("residue vector length mismatch");
  const auto mask = modulus_mask(s_);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] = (values_[i] - other.values_[i]) & mask;
  return *this;
}

ResidueVector operator*(std::int64_t k, ResidueVector v) {
  const auto mask = modulus_mask(v.s_);
  const auto factor = static_cast<std::uint32_t>(static_cast<std::uint64_t>(k) & mask);
  for (auto& x : v.values_) x = static_cast<std::uint32_t>(std::uint64_t{x} * factor) & mask;
  return v;
}

ResidueVector odot(const ResidueVector& u, const ResidueVector& v) {
  check_same_modulus(u.s(), v.s());
  if (u.size() != v.size()) throw ShapeError("residue vector length mismatch");
  std::vector<std::uint32_t> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] & v[i];
  return ResidueVector(std::move(out), u.s());
}

std::uint64_t vector_order(const ResidueVector& v) {
  std::uint64_t order = 1;
  for (auto x : v.values()) order = std::max(order, element_order(Residue(x, v.s())));
  return order;
}

BitVector bit_plane(const ResidueVector& v, int p) {
  if (p < 0 || p >= v.s()) {
    throw IndexError("bit plane " + std::to_string(p) + " outside [0, " + std::to_string(v.s() - 1) + "]");
  }
  BitVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if ((v[i] >> p) & 1U) out.set(i);
  }
  return out;
}

}  // namespace z2s
