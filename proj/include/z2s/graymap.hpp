#pragma once

// Carlet's generalized Gray map φ: Z_{2^s} -> Z_2^{2^{s-1}},
//   φ(u) = (u_{s-1}, ..., u_{s-1}) + (u_0, ..., u_{s-2}) Y,
// and its coordinatewise extension Φ to residue vectors.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "z2s/bitvector.hpp"
#include "z2s/ring.hpp"

namespace z2s {

/// Largest s for which a full Gray table is materialized (2^s images of
/// 2^{s-1} bits each).
inline constexpr int kMaxGrayTableExponent = 14;

/// The (s-1) x 2^{s-1} matrix Y. Column j is the binary expansion of j with
/// the low bit in row 0, so every element of Z_2^{s-1} occurs exactly once.
class CarletMatrix {
 public:
  explicit CarletMatrix(int s);

  int s() const { return s_; }
  std::size_t columns() const { return std::size_t{1} << (s_ - 1); }
  const std::vector<BitVector>& rows() const { return rows_; }

  /// (c_0, ..., c_{s-2}) Y for the coefficient bits of `coefficients`.
  BitVector combine(std::uint64_t coefficients) const;

 private:
  int s_;
  std::vector<BitVector> rows_;
};

class GrayTable {
 public:
  explicit GrayTable(int s);

  int s() const { return s_; }
  std::size_t block_length() const { return block_; }
  std::size_t size() const { return images_.size(); }
  const BitVector& image(std::uint32_t u) const { return images_[u]; }
  const std::vector<BitVector>& images() const { return images_; }

  std::optional<std::uint32_t> preimage(const BitVector& block) const;

 private:
  int s_;
  std::size_t block_;
  std::vector<BitVector> images_;
  std::unordered_map<BitVector, std::uint32_t, BitVectorHash> preimages_;
};

GrayTable build_gray(int s);

const BitVector& phi(Residue u, const GrayTable& table);

/// Concatenation of φ(v_i) in coordinate order; length n·2^{s-1}.
BitVector phi_vec(const ResidueVector& v, const GrayTable& table);

/// Unique preimage under Φ, or nullopt if some block is not a Gray image.
std::optional<ResidueVector> phi_inverse(const BitVector& b, const GrayTable& table);

/// Checkable forms of the algebraic identities satisfied by φ. Each returns
/// whether the identity holds for the given arguments; residues must share
/// the table's s.
namespace identities {

// φ(u) + φ(v) = φ(u + v − 2(u ⊙ v))
bool odot_sum(const GrayTable& table, Residue u, Residue v);

// φ(u) + φ(2^p) = φ(u + 2^p − 2^{p+1} u_p), 0 ≤ p ≤ s−1
bool power_of_two_sum(const GrayTable& table, Residue u, int p);

// φ(u) + φ(2^{s−1}) = φ(u + 2^{s−1})
bool complement_sum(const GrayTable& table, Residue u);

// For u with u_{s−2} = 1: φ(u) + φ(2^{s−2}) = φ(u + 2^{s−2} + 2^{s−1}).
// Throws PreconditionError when u_{s−2} = 0.
bool second_bit_sum(const GrayTable& table, Residue u);

// For v ∈ {2^{s−2}, 3·2^{s−2}}: φ(u) + φ(v) equals φ(u + v + 2^{s−1}) when
// u_{s−2} = 1 and φ(u + v) otherwise. Throws PreconditionError for other v.
bool quarter_sum(const GrayTable& table, Residue u, Residue v);

// Σ λ_i φ(2^i) = φ(Σ λ_i 2^i) over i < s−1, λ given as a bit mask.
bool low_bits_linear(const GrayTable& table, std::uint64_t lambda);

// d_H(φ(u), φ(v)) = wt_H(φ(u − v))
bool distance_is_difference_weight(const GrayTable& table, Residue u, Residue v);

// d_H(φ(u), φ(2^{s−1})) + d_H(φ(u), φ(0)) = 2^{s−1}
bool antipodal_distance(const GrayTable& table, Residue u);

// d_H(φ(u), φ(v + 2^{s−1})) + d_H(φ(u), φ(v)) = 2^{s−1}
bool antipodal_pair_distance(const GrayTable& table, Residue u, Residue v);

// All 2^s images are distinct.
bool injective(const GrayTable& table);

}  // namespace identities

}  // namespace z2s
