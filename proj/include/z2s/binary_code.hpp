#pragma once

#include <cstddef>
#include <unordered_set>
#include <vector>

#include "z2s/bitvector.hpp"

namespace z2s {

/// A set of binary words of a common length. Words keep their insertion order
/// (duplicates are dropped) and are indexed by a hash set for membership.
class BinaryCode {
 public:
  BinaryCode(std::size_t length, std::vector<BitVector> words);

  std::size_t length() const { return length_; }
  std::size_t size() const { return words_.size(); }
  const std::vector<BitVector>& words() const { return words_; }

  bool contains(const BitVector& w) const { return index_.contains(w); }
  bool has_zero() const;

  /// {w + shift : w ∈ C}
  BinaryCode translated(const BitVector& shift) const;

 private:
  std::size_t length_;
  std::vector<BitVector> words_;
  std::unordered_set<BitVector, BitVectorHash> index_;
};

}  // namespace z2s
