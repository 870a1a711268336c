#pragma once

// Z_{2^s}-additive Hadamard codes H^{t_1,...,t_s}: type enumeration,
// generator matrices A^{t_1,...,t_s}, codeword streaming and Gray images.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "z2s/binary_code.hpp"
#include "z2s/graymap.hpp"
#include "z2s/ring.hpp"

namespace z2s {

/// Codes with t above this are rejected unless explicitly allowed.
inline constexpr int kDefaultMaxT = 12;

/// The type (s; t_1, ..., t_s). t_k counts generators of order 2^{s-k+1}.
class TypeSpec {
 public:
  TypeSpec(int s, std::vector<int> counts);

  int s() const { return s_; }
  std::span<const int> counts() const { return counts_; }
  /// t_k for 1 ≤ k ≤ s.
  int count(int k) const { return counts_[static_cast<std::size_t>(k - 1)]; }

  /// t = (Σ (s-k+1) t_k) - 1; the binary length is 2^t.
  int t() const { return t_; }
  int tau() const;
  std::uint64_t n() const { return std::uint64_t{1} << (t_ - s_ + 1); }
  std::uint64_t N() const { return std::uint64_t{1} << t_; }

  /// "t_1,...,t_s"
  std::string to_string() const;

  friend bool operator==(const TypeSpec&, const TypeSpec&) = default;
  friend auto operator<=>(const TypeSpec&, const TypeSpec&) = default;

 private:
  int s_;
  std::vector<int> counts_;
  int t_;
};

TypeSpec make_spec(int s, std::vector<int> counts);

/// Throws CapExceeded when spec.t() > kDefaultMaxT and !allow_large.
void require_within_cap(const TypeSpec& spec, bool allow_large);
void require_within_cap(int t, bool allow_large);

/// All types with the given t and s, t_1 ≥ 1, in lexicographic order.
std::vector<TypeSpec> enumerate_type_specs(int t, int s);

struct GeneratorMatrix {
  TypeSpec spec;
  std::vector<ResidueVector> rows;
  std::vector<std::uint64_t> row_orders;

  std::size_t length() const { return rows.empty() ? 0 : rows.front().size(); }
};

/// Columns are {1} × T_1^{t_1-1} × T_2^{t_2} × ... × T_s^{t_s} with row 2
/// varying fastest and the last row slowest.
GeneratorMatrix generator_direct(const TypeSpec& spec);

/// Starts from A^{1,0,...,0} = (1) and appends rows in order of decreasing
/// order, replicating the current matrix for each new row.
GeneratorMatrix generator_recursive(const TypeSpec& spec);

/// 2^{t+1}.
std::uint64_t codeword_count(const GeneratorMatrix& gen);

/// Codeword number `index` in enumeration order (mixed radix over the
/// coefficients, last coefficient fastest).
ResidueVector codeword_at(const GeneratorMatrix& gen, std::uint64_t index);

/// Streams Σ λ_i w_i for every coefficient tuple, λ_i ∈ [0, ord(w_i)),
/// starting with the zero word. The update per step is one or more row
/// additions: wrapping a digit adds ord(w_i)·w_i = 0 back in, so the running
/// sum stays exact without recomputation.
class CodewordStream {
 public:
  explicit CodewordStream(const GeneratorMatrix& gen, std::uint64_t first = 0,
                          std::uint64_t count = UINT64_MAX);

  /// Writes the next codeword into `out`; false once the range is exhausted.
  bool next(ResidueVector& out);

 private:
  const GeneratorMatrix* gen_;
  std::vector<std::uint64_t> digits_;
  ResidueVector current_;
  std::uint64_t remaining_;
  bool started_ = false;
};

template <class Fn>
void for_each_codeword(const GeneratorMatrix& gen, Fn&& fn) {
  CodewordStream stream(gen);
  ResidueVector c = ResidueVector::zero(gen.length(), gen.spec.s());
  while (stream.next(c)) fn(static_cast<const ResidueVector&>(c));
}

/// σ = 1 if t_1 > 1, otherwise the smallest k ≥ 2 with t_k > 0, and s when
/// no such k exists. ord(w_2) = 2^{s+1-σ}.
int sigma(const TypeSpec& spec);

/// Φ of every codeword. Throws CapExceeded for t > kDefaultMaxT unless
/// allow_large.
BinaryCode gray_image(const GeneratorMatrix& gen, const GrayTable& table, bool allow_large = false);

}  // namespace z2s
