#include "z2s/invariants.hpp"

#include <bit>
#include <limits>
#include <string>

#include "z2s/errors.hpp"

namespace z2s {

RowReducer::RowReducer(std::size_t length) : length_(length), pivot_row_(length, -1) {}

std::optional<std::size_t> RowReducer::reduce(BitVector& v) const {
  if (v.size() != length_) throw ShapeError("row length differs from reducer length");
  while (auto lead = v.lowest_set_bit()) {
    const auto row = pivot_row_[*lead];
    if (row < 0) return lead;
    v ^= basis_[static_cast<std::size_t>(row)];
  }
  return std::nullopt;
}

bool RowReducer::insert(BitVector v) {
  auto lead = reduce(v);
  if (!lead) return false;
  pivot_row_[*lead] = static_cast<std::int32_t>(basis_.size());
  basis_.push_back(std::move(v));
  return true;
}

bool RowReducer::in_span(BitVector v) const { return !reduce(v).has_value(); }

std::size_t rank(const BinaryCode& code) {
  RowReducer reducer(code.length());
  for (const auto& w : code.words()) reducer.insert(w);
  return reducer.rank();
}

std::size_t rank_streaming(const GeneratorMatrix& gen, const GrayTable& table, bool allow_large) {
  require_within_cap(gen.spec, allow_large);
  RowReducer reducer(gen.length() * table.block_length());
  for_each_codeword(gen, [&](const ResidueVector& c) { reducer.insert(phi_vec(c, table)); });
  return reducer.rank();
}

BinaryCode kernel_bruteforce(const BinaryCode& code) {
  if (!code.has_zero()) {
    throw PreconditionError("kernel computation requires the zero word in the code; translate first");
  }
  std::vector<BitVector> kernel;
  BitVector sum(code.length());
  for (const auto& x : code.words()) {
    bool keeps = true;
    for (const auto& c : code.words()) {
      sum = x;
      sum ^= c;
      if (!code.contains(sum)) {
        keeps = false;
        break;
      }
    }
    if (keeps) kernel.push_back(x);
  }
  return BinaryCode(code.length(), std::move(kernel));
}

int linear_dimension(const BinaryCode& linear_code) {
  const auto size = linear_code.size();
  if (size == 0 || !std::has_single_bit(size)) {
    throw PreconditionError("code size " + std::to_string(size) + " is not a power of two");
  }
  return std::countr_zero(size);
}

bool is_linear_theorem(const TypeSpec& spec) {
  const int s = spec.s();
  if (spec.count(1) != 1) return s == 2 && spec.count(1) == 2;
  if (s == 2) return true;
  for (int k = 2; k <= s - 2; ++k) {
    if (spec.count(k) != 0) return false;
  }
  return spec.count(s - 1) <= 1;
}

int kernel_dim_theorem(const TypeSpec& spec) {
  if (is_linear_theorem(spec)) return spec.t() + 1;
  return sigma(spec) + spec.tau();
}

KernelBasis kernel_basis(const TypeSpec& spec, const GeneratorMatrix& gen, const GrayTable& table) {
  if (is_linear_theorem(spec)) {
    throw NotApplicable("kernel basis is only defined for nonlinear types; " + spec.to_string() + " is linear");
  }
  check_same_modulus(spec.s(), table.s());
  const int s = spec.s();
  const std::size_t n = gen.length();
  KernelBasis basis;
  for (std::size_t i = 0; i < gen.rows.size(); ++i) {
    const auto half = static_cast<std::int64_t>(gen.row_orders[i] / 2);
    basis.vectors.push_back(phi_vec(half * gen.rows[i], table));
    basis.sources.push_back(KernelSource::half_order_row);
  }
  for (int p = 0; p <= sigma(spec) - 2; ++p) {
    basis.vectors.push_back(phi_vec(ResidueVector::constant(n, std::int64_t{1} << p, s), table));
    basis.sources.push_back(KernelSource::power_of_two);
  }
  const std::int64_t low_sum = (std::int64_t{1} << (s - 1)) - 1;
  basis.vectors.push_back(phi_vec(ResidueVector::constant(n, low_sum, s), table));
  basis.sources.push_back(KernelSource::low_bits_sum);
  return basis;
}

std::size_t min_distance(const BinaryCode& code, DistanceMethod method) {
  if (code.size() < 2) throw PreconditionError("minimum distance needs at least two words");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  if (method == DistanceMethod::min_weight) {
    for (const auto& w : code.words()) {
      const auto wt = w.weight();
      if (wt != 0 && wt < best) best = wt;
    }
    if (best == std::numeric_limits<std::size_t>::max()) {
      throw PreconditionError("code has no nonzero word");
    }
    return best;
  }
  const auto& words = code.words();
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) best = std::min(best, words[i].distance(words[j]));
  }
  return best;
}

bool is_hadamard(const BinaryCode& code, DistanceMethod method) {
  const std::size_t n = code.length();
  if (code.size() != 2 * n || n % 2 != 0) return false;
  return min_distance(code, method) == n / 2;
}

std::map<std::size_t, std::size_t> weight_distribution(const BinaryCode& code) {
  std::map<std::size_t, std::size_t> census;
  for (const auto& w : code.words()) ++census[w.weight()];
  return census;
}

InvariantRecord compute_invariants(const TypeSpec& spec, const InvariantOptions& options) {
  require_within_cap(spec, options.allow_large);
  const GrayTable table = build_gray(spec.s());
  const GeneratorMatrix gen = generator_direct(spec);
  const BinaryCode code = gray_image(gen, table, options.allow_large);

  InvariantRecord rec{spec};
  rec.t = spec.t();
  rec.n = spec.n();
  rec.N = spec.N();
  rec.rank = rank(code);
  rec.linear = rec.rank == static_cast<std::size_t>(spec.t() + 1);
  rec.min_distance = min_distance(code);
  rec.kernel_dim = kernel_dim_theorem(spec);
  if (options.verify_kernel) {
    const int measured = linear_dimension(kernel_bruteforce(code));
    if (measured != rec.kernel_dim) {
      throw VerificationError("brute-force kernel dimension " + std::to_string(measured) + " disagrees with " +
                              std::to_string(rec.kernel_dim) + " for type " + spec.to_string());
    }
    rec.kernel_check = KernelCheck::verified_bruteforce;
  }
  return rec;
}

}  // namespace z2s
