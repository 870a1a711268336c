#pragma once

// Slow, direct reimplementations used to cross-check the library. Nothing
// here calls into the code under test beyond plain data types.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using Word = std::vector<std::uint8_t>;

inline std::uint64_t mod(int s) { return std::uint64_t{1} << s; }

inline std::uint64_t order(std::uint64_t u, int s) {
  for (std::uint64_t m = 1;; ++m) {
    if ((m * u) % mod(s) == 0) return m;
  }
}

inline std::uint64_t odot(std::uint64_t u, std::uint64_t v, int s) {
  std::uint64_t out = 0;
  for (int i = 0; i < s; ++i) {
    if (((u >> i) & 1) && ((v >> i) & 1)) out += std::uint64_t{1} << i;
  }
  return out;
}

// φ(u)_j = u_{s-1} + Σ_i u_i j_i over the s-1 low bits.
inline Word phi(std::uint64_t u, int s) {
  if (s == 1) return {static_cast<std::uint8_t>(u & 1)};
  const std::uint64_t len = std::uint64_t{1} << (s - 1);
  const std::uint8_t top = (u >> (s - 1)) & 1;
  Word out(len);
  for (std::uint64_t j = 0; j < len; ++j) {
    std::uint8_t bit = top;
    for (int i = 0; i < s - 1; ++i) bit ^= static_cast<std::uint8_t>(((u >> i) & 1) & ((j >> i) & 1));
    out[j] = bit;
  }
  return out;
}

inline std::size_t weight(const Word& w) { return static_cast<std::size_t>(std::count(w.begin(), w.end(), 1)); }

inline Word add(Word a, const Word& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
  return a;
}

inline std::size_t rank(std::vector<Word> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && !rows[pivot][c]) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && rows[i][c]) rows[i] = add(rows[i], rows[r]);
    }
    ++r;
  }
  return r;
}

// Columns {1} × T_1^{t_1-1} × ... × T_s^{t_s} in no particular order, where
// T_k = {0, 2^{k-1}, 2·2^{k-1}, ...}.
inline std::vector<std::vector<std::uint64_t>> type_columns(int s, const std::vector<int>& counts) {
  std::vector<std::uint64_t> steps;  // one entry per row after the first
  for (int k = 1; k <= s; ++k) {
    const int rows = counts[static_cast<std::size_t>(k - 1)] - (k == 1 ? 1 : 0);
    for (int i = 0; i < rows; ++i) steps.push_back(std::uint64_t{1} << (k - 1));
  }
  std::vector<std::vector<std::uint64_t>> columns{{1}};
  for (auto step : steps) {
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& col : columns) {
      for (std::uint64_t v = 0; v < mod(s); v += step) {
        auto c = col;
        c.push_back(v);
        next.push_back(c);
      }
    }
    columns = std::move(next);
  }
  return columns;
}

// The Gray image as a set of words: Φ(λ·A) for every λ ∈ Z_{2^s}^τ.
inline std::set<Word> hadamard_image(int s, const std::vector<int>& counts) {
  const auto columns = type_columns(s, counts);
  const std::size_t tau = columns.front().size();
  std::set<Word> words;
  std::vector<std::uint64_t> lambda(tau, 0);
  while (true) {
    Word w;
    for (const auto& col : columns) {
      std::uint64_t value = 0;
      for (std::size_t i = 0; i < tau; ++i) value += lambda[i] * col[i];
      const auto block = phi(value % mod(s), s);
      w.insert(w.end(), block.begin(), block.end());
    }
    words.insert(w);
    std::size_t i = 0;
    while (i < tau && ++lambda[i] == mod(s)) lambda[i++] = 0;
    if (i == tau) break;
  }
  return words;
}

inline std::set<Word> kernel(const std::set<Word>& code) {
  std::set<Word> out;
  for (const auto& x : code) {
    bool keeps = std::all_of(code.begin(), code.end(), [&](const Word& c) { return code.contains(add(x, c)); });
    if (keeps) out.insert(x);
  }
  return out;
}

inline std::set<Word> span(const std::vector<Word>& basis, std::size_t length) {
  std::set<Word> out{Word(length, 0)};
  for (const auto& b : basis) {
    std::set<Word> next = out;
    for (const auto& w : out) next.insert(add(w, b));
    out = std::move(next);
  }
  return out;
}

inline std::uint64_t log2_exact(std::uint64_t x) { return static_cast<std::uint64_t>(std::countr_zero(x)); }

}  // namespace oracle
