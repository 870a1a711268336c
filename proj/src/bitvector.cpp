#include "z2s/bitvector.hpp"

#include <bit>

#include "z2s/errors.hpp"

namespace z2s {

namespace {

std::size_t word_count(std::size_t length) { return (length + 63) / 64; }

void require_same_length(const BitVector& a, const BitVector& b) {
  if (a.size() != b.size()) {
    throw ShapeError("bit vector length mismatch: " + std::to_string(a.size()) + " vs " +
                     std::to_string(b.size()));
  }
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

BitVector::BitVector(std::size_t length) : length_(length), words_(word_count(length), 0) {}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw ShapeError("invalid bit character '" + std::string(1, bits[i]) + "'");
    }
  }
  return v;
}

BitVector BitVector::from_hex(std::string_view hex, std::size_t length) {
  if (hex.size() != (length + 3) / 4) {
    throw ShapeError("hex string has " + std::to_string(hex.size()) + " digits, expected " +
                     std::to_string((length + 3) / 4));
  }
  BitVector v(length);
  for (std::size_t k = 0; k < hex.size(); ++k) {
    int d = hex_value(hex[k]);
    if (d < 0) throw ShapeError("invalid hex digit '" + std::string(1, hex[k]) + "'");
    for (int b = 0; b < 4; ++b) {
      if (!((d >> b) & 1)) continue;
      std::size_t i = 4 * k + static_cast<std::size_t>(b);
      if (i >= length) throw ShapeError("hex string sets a bit past the vector length");
      v.set(i);
    }
  }
  return v;
}

BitVector BitVector::ones(std::size_t length) {
  BitVector v(length);
  for (auto& w : v.words_) w = ~std::uint64_t{0};
  if (length % 64 != 0) v.words_.back() = (std::uint64_t{1} << (length % 64)) - 1;
  return v;
}

void BitVector::set(std::size_t i, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (i & 63);
  if (value) {
    words_[i >> 6] |= mask;
  } else {
    words_[i >> 6] &= ~mask;
  }
}

std::size_t BitVector::weight() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitVector::is_zero() const {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::optional<std::size_t> BitVector::lowest_set_bit() const {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k] != 0) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
  }
  return std::nullopt;
}

std::size_t BitVector::and_count(const BitVector& other) const {
  require_same_length(*this, other);
  std::size_t total = 0;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    total += static_cast<std::size_t>(std::popcount(words_[k] & other.words_[k]));
  }
  return total;
}

std::size_t BitVector::distance(const BitVector& other) const {
  require_same_length(*this, other);
  std::size_t total = 0;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    total += static_cast<std::size_t>(std::popcount(words_[k] ^ other.words_[k]));
  }
  return total;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  require_same_length(*this, other);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  require_same_length(*this, other);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
  return *this;
}

void BitVector::or_at(std::size_t offset, const BitVector& src) {
  if (offset + src.size() > length_) {
    throw ShapeError("or_at writes past the end of the vector");
  }
  const std::size_t shift = offset & 63;
  std::size_t dst = offset >> 6;
  for (std::size_t k = 0; k < src.words_.size(); ++k, ++dst) {
    const std::uint64_t x = src.words_[k];
    if (x == 0) continue;
    words_[dst] |= x << shift;
    if (shift != 0 && dst + 1 < words_.size()) words_[dst + 1] |= x >> (64 - shift);
  }
}

BitVector BitVector::slice(std::size_t offset, std::size_t length) const {
  if (offset + length > length_) throw ShapeError("slice out of range");
  BitVector out(length);
  for (std::size_t i = 0; i < length; ++i) {
    if (test(offset + i)) out.set(i);
  }
  return out;
}

std::string BitVector::to_string() const {
  std::string out(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if (test(i)) out[i] = '1';
  }
  return out;
}

std::string BitVector::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out((length_ + 3) / 4, '0');
  for (std::size_t k = 0; k < out.size(); ++k) {
    const std::uint64_t nibble = (words_[(4 * k) >> 6] >> ((4 * k) & 63)) & 0xF;
    out[k] = kDigits[nibble];
  }
  return out;
}

std::size_t BitVector::hash() const {
  // FNV-1a over the packed words, seeded with the length.
  std::uint64_t h = 1469598103934665603ULL ^ length_;
  for (auto w : words_) {
    h ^= w;
    h *= 1099511628211ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace z2s
