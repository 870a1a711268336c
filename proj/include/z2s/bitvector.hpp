#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace z2s {

/// Dense binary vector with an explicit length. Storage is packed into 64-bit
/// words, coordinate i living in bit (i % 64) of word (i / 64). Bits past the
/// length are always zero, so equality and hashing can work word-wise.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t length);

  /// Parses a string of '0'/'1' characters, coordinate 0 first.
  static BitVector from_string(std::string_view bits);

  /// Parses lowercase (or uppercase) hex where hex digit k holds coordinates
  /// 4k..4k+3, coordinate 4k in the digit's lowest bit.
  static BitVector from_hex(std::string_view hex, std::size_t length);

  static BitVector ones(std::size_t length);

  std::size_t size() const { return length_; }
  bool empty() const { return length_ == 0; }

  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1U;
  }
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::size_t weight() const;
  bool is_zero() const;
  std::optional<std::size_t> lowest_set_bit() const;

  /// Popcount of the coordinatewise AND.
  std::size_t and_count(const BitVector& other) const;
  std::size_t distance(const BitVector& other) const;

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }
  friend BitVector operator&(BitVector lhs, const BitVector& rhs) { return lhs &= rhs; }

  /// ORs `src` into this vector starting at coordinate `offset`.
  void or_at(std::size_t offset, const BitVector& src);
  BitVector slice(std::size_t offset, std::size_t length) const;

  std::string to_string() const;
  std::string to_hex() const;

  std::span<const std::uint64_t> words() const { return words_; }
  std::size_t hash() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend auto operator<=>(const BitVector&, const BitVector&) = default;

 private:
  std::size_t length_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitVectorHash {
  std::size_t operator()(const BitVector& v) const { return v.hash(); }
};

}  // namespace z2s

namespace z2s {

/// Calls fn(i) for every set coordinate i, in increasing order.
template <class Fn>
void for_each_set_bit(const BitVector& v, Fn&& fn) {
  const auto words = v.words();
  for (std::size_t k = 0; k < words.size(); ++k) {
    std::uint64_t w = words[k];
    while (w != 0) {
      fn(k * 64 + static_cast<std::size_t>(__builtin_ctzll(w)));
      w &= w - 1;
    }
  }
}

}  // namespace z2s
