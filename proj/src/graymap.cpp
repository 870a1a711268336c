#include "z2s/graymap.hpp"

#include <string>
#include <unordered_set>

#include "z2s/errors.hpp"

namespace z2s {

CarletMatrix::CarletMatrix(int s) : s_(s) {
  check_modulus_exponent(s);
  if (s > kMaxGrayTableExponent) {
    throw CapExceeded("Gray map tables are limited to s <= " + std::to_string(kMaxGrayTableExponent));
  }
  const std::size_t cols = columns();
  rows_.assign(static_cast<std::size_t>(s - 1), BitVector(cols));
  for (std::size_t j = 0; j < cols; ++j) {
    for (int i = 0; i + 1 < s; ++i) {
      if ((j >> i) & 1U) rows_[static_cast<std::size_t>(i)].set(j);
    }
  }
}

BitVector CarletMatrix::combine(std::uint64_t coefficients) const {
  BitVector out(columns());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if ((coefficients >> i) & 1U) out ^= rows_[i];
  }
  return out;
}

GrayTable::GrayTable(int s) : s_(s), block_(0) {
  const CarletMatrix y(s);
  block_ = y.columns();
  const std::uint32_t count = std::uint32_t{1} << s;
  const std::uint64_t low_mask = (std::uint64_t{1} << (s - 1)) - 1;
  images_.reserve(count);
  preimages_.reserve(count);
  const BitVector all_ones = BitVector::ones(block_);
  for (std::uint32_t u = 0; u < count; ++u) {
    BitVector img = y.combine(u & low_mask);
    if ((u >> (s - 1)) & 1U) img ^= all_ones;
    preimages_.emplace(img, u);
    images_.push_back(std::move(img));
  }
}

std::optional<std::uint32_t> GrayTable::preimage(const BitVector& block) const {
  auto it = preimages_.find(block);
  if (it == preimages_.end()) return std::nullopt;
  return it->second;
}

GrayTable build_gray(int s) { return GrayTable(s); }

const BitVector& phi(Residue u, const GrayTable& table) {
  check_same_modulus(u.s(), table.s());
  return table.image(u.value());
}

BitVector phi_vec(const ResidueVector& v, const GrayTable& table) {
  check_same_modulus(v.s(), table.s());
  const std::size_t block = table.block_length();
  BitVector out(v.size() * block);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) out.or_at(i * block, table.image(v[i]));
  }
  return out;
}

std::optional<ResidueVector> phi_inverse(const BitVector& b, const GrayTable& table) {
  const std::size_t block = table.block_length();
  if (b.size() % block != 0) {
    throw ShapeError("length " + std::to_string(b.size()) + " is not a multiple of " + std::to_string(block));
  }
  std::vector<std::uint32_t> values(b.size() / block);
  for (std::size_t i = 0; i < values.size(); ++i) {
    auto u = table.preimage(b.slice(i * block, block));
    if (!u) return std::nullopt;
    values[i] = *u;
  }
  return ResidueVector(std::move(values), table.s());
}

namespace identities {

namespace {

BitVector sum(const GrayTable& table, Residue u, Residue v) {
  return phi(u, table) ^ phi(v, table);
}

Residue power(int p, int s) { return Residue(std::int64_t{1} << p, s); }

}  // namespace

bool odot_sum(const GrayTable& table, Residue u, Residue v) {
  const Residue rhs = u + v - 2 * odot(u, v);
  return sum(table, u, v) == phi(rhs, table);
}

bool power_of_two_sum(const GrayTable& table, Residue u, int p) {
  const int s = table.s();
  if (p < 0 || p >= s) throw IndexError("bit position out of range");
  const Residue rhs = u + power(p, s) - (std::int64_t{u.bit(p)} << (p + 1)) * Residue(1, s);
  return sum(table, u, power(p, s)) == phi(rhs, table);
}

bool complement_sum(const GrayTable& table, Residue u) {
  const int s = table.s();
  return sum(table, u, power(s - 1, s)) == phi(u + power(s - 1, s), table);
}

bool second_bit_sum(const GrayTable& table, Residue u) {
  const int s = table.s();
  if (s < 2 || u.bit(s - 2) == 0) throw PreconditionError("requires bit s-2 of u to be set");
  const Residue rhs = u + power(s - 2, s) + power(s - 1, s);
  return sum(table, u, power(s - 2, s)) == phi(rhs, table);
}

bool quarter_sum(const GrayTable& table, Residue u, Residue v) {
  const int s = table.s();
  if (s < 2) throw PreconditionError("requires s >= 2");
  const std::int64_t quarter = std::int64_t{1} << (s - 2);
  if (v.value() != quarter && v.value() != 3 * quarter) {
    throw PreconditionError("v must be 2^(s-2) or 3*2^(s-2)");
  }
  // u ∈ U exactly when bit s−2 of u is set.
  const Residue rhs = u.bit(s - 2) ? u + v + power(s - 1, s) : u + v;
  return sum(table, u, v) == phi(rhs, table);
}

bool low_bits_linear(const GrayTable& table, std::uint64_t lambda) {
  const int s = table.s();
  BitVector lhs(table.block_length());
  std::int64_t total = 0;
  for (int i = 0; i + 1 < s; ++i) {
    if (!((lambda >> i) & 1U)) continue;
    lhs ^= phi(power(i, s), table);
    total += std::int64_t{1} << i;
  }
  return lhs == phi(Residue(total, s), table);
}

bool distance_is_difference_weight(const GrayTable& table, Residue u, Residue v) {
  return phi(u, table).distance(phi(v, table)) == phi(u - v, table).weight();
}

bool antipodal_distance(const GrayTable& table, Residue u) {
  const int s = table.s();
  const auto& img = phi(u, table);
  return img.distance(phi(power(s - 1, s), table)) + img.distance(phi(Residue(0, s), table)) ==
         table.block_length();
}

bool antipodal_pair_distance(const GrayTable& table, Residue u, Residue v) {
  const int s = table.s();
  const auto& img = phi(u, table);
  return img.distance(phi(v + power(s - 1, s), table)) + img.distance(phi(v, table)) ==
         table.block_length();
}

bool injective(const GrayTable& table) {
  std::unordered_set<BitVector, BitVectorHash> seen(table.images().begin(), table.images().end());
  return seen.size() == table.size();
}

}  // namespace identities

}  // namespace z2s
