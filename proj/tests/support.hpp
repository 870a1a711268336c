#pragma once

#include <random>
#include <set>

#include "oracles.hpp"
#include "z2s/binary_code.hpp"
#include "z2s/bitvector.hpp"

namespace support {

inline oracle::Word to_word(const z2s::BitVector& v) {
  oracle::Word w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = v.test(i) ? 1 : 0;
  return w;
}

inline std::set<oracle::Word> to_set(const z2s::BinaryCode& code) {
  std::set<oracle::Word> out;
  for (const auto& w : code.words()) out.insert(to_word(w));
  return out;
}

inline z2s::BitVector random_bits(std::mt19937_64& rng, std::size_t length) {
  z2s::BitVector v(length);
  for (std::size_t i = 0; i < length; ++i) {
    if (rng() & 1) v.set(i);
  }
  return v;
}

inline std::vector<std::size_t> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace support
