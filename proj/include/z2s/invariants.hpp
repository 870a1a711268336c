#pragma once

// Rank, kernel, linearity and distance invariants of binary codes, with the
// closed forms that hold for the Gray images of Z_{2^s}-additive Hadamard
// codes.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "z2s/binary_code.hpp"
#include "z2s/bitvector.hpp"
#include "z2s/graymap.hpp"
#include "z2s/hadamard.hpp"

namespace z2s {

/// Incremental GF(2) row reduction. Pivot rows are indexed by their lowest
/// set coordinate; an inserted vector is reduced against them until it is
/// zero or lands on a free pivot position.
class RowReducer {
 public:
  explicit RowReducer(std::size_t length);

  /// Returns true when `v` was independent of the rows seen so far.
  bool insert(BitVector v);
  bool in_span(BitVector v) const;

  std::size_t rank() const { return basis_.size(); }
  const std::vector<BitVector>& basis() const { return basis_; }

 private:
  // Reduces in place; returns the pivot position left over, if any.
  std::optional<std::size_t> reduce(BitVector& v) const;

  std::size_t length_;
  std::vector<BitVector> basis_;
  std::vector<std::int32_t> pivot_row_;  // coordinate -> index into basis_, or -1
};

/// Dimension of the GF(2) span of the words.
std::size_t rank(const BinaryCode& code);

/// Rank of Φ(H) computed by streaming codewords through a RowReducer without
/// materializing the binary code.
std::size_t rank_streaming(const GeneratorMatrix& gen, const GrayTable& table, bool allow_large = false);

/// {x ∈ C : x + C = C}. Requires the zero word to be in C.
BinaryCode kernel_bruteforce(const BinaryCode& code);

/// log2 of the size of a linear code (throws if the size is not a power of two).
int linear_dimension(const BinaryCode& linear_code);

bool is_linear_theorem(const TypeSpec& spec);

/// t+1 for linear types, σ + τ otherwise.
int kernel_dim_theorem(const TypeSpec& spec);

enum class KernelSource {
  half_order_row,  // (ord(w_i)/2)·w_i
  power_of_two,    // the constant vector 2^p, p ≤ σ-2
  low_bits_sum,    // the constant vector Σ_{i<s-1} 2^i
};

struct KernelBasis {
  std::vector<BitVector> vectors;
  std::vector<KernelSource> sources;
};

/// Φ(Q) ∪ Φ(P) ∪ {Φ(Σ_{i=0}^{s-2} 2^i)} for a nonlinear type; throws
/// NotApplicable for linear types.
KernelBasis kernel_basis(const TypeSpec& spec, const GeneratorMatrix& gen, const GrayTable& table);

enum class DistanceMethod {
  min_weight,  // valid when C - C = C, e.g. Gray images of additive codes
  pairwise,
};

std::size_t min_distance(const BinaryCode& code, DistanceMethod method = DistanceMethod::min_weight);

/// |C| = 2N and d(C) = N/2.
bool is_hadamard(const BinaryCode& code, DistanceMethod method = DistanceMethod::min_weight);

std::map<std::size_t, std::size_t> weight_distribution(const BinaryCode& code);

enum class KernelCheck { formula_only, verified_bruteforce };

struct InvariantRecord {
  TypeSpec spec;
  int t = 0;
  std::uint64_t n = 0;
  std::uint64_t N = 0;
  std::size_t rank = 0;
  int kernel_dim = 0;
  bool linear = false;
  std::size_t min_distance = 0;
  KernelCheck kernel_check = KernelCheck::formula_only;

  friend bool operator==(const InvariantRecord&, const InvariantRecord&) = default;
};

struct InvariantOptions {
  bool verify_kernel = false;
  bool allow_large = false;
};

/// Builds Φ(H) for the type and fills in every field. With verify_kernel the
/// kernel is also computed by brute force; a disagreement with the closed
/// form raises VerificationError.
InvariantRecord compute_invariants(const TypeSpec& spec, const InvariantOptions& options = {});

}  // namespace z2s
