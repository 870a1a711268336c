#pragma once

// Equivalence of binary codes under translation plus coordinate permutation:
// C_2 = {a + π(c) : c ∈ C_1}.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "z2s/binary_code.hpp"
#include "z2s/bitvector.hpp"

namespace z2s {

struct EquivalenceBudget {
  std::chrono::milliseconds time{std::chrono::seconds(60)};
  std::uint64_t max_nodes = 2'000'000;
};

/// Maps A onto B: B = {translation + π(c) : c ∈ A} where π sends coordinate i
/// to coordinate permutation[i].
struct EquivalenceWitness {
  BitVector translation;
  std::vector<std::size_t> permutation;
};

enum class EquivalenceOutcome { equivalent, inequivalent, unknown };

struct EquivalenceVerdict {
  EquivalenceOutcome outcome = EquivalenceOutcome::unknown;
  std::optional<EquivalenceWitness> witness;
  // Names the invariant that separates the codes for `inequivalent`.
  std::string separating_invariant;
  std::uint64_t nodes = 0;
  std::size_t translations_tried = 0;
};

const char* to_string(EquivalenceOutcome outcome);

/// Both codes must contain the zero word. Invariant mismatches (length, size,
/// distance distribution, kernel dimension, rank) reject immediately. Then
/// one translation a ∈ B per coset of the kernel of B is tried, zero first:
/// a coordinate-permutation search matches A against B + a, with the
/// searches for different a interleaved under a growing node limit. Every
/// returned witness has been replayed against B.
EquivalenceVerdict equivalence_search(const BinaryCode& a, const BinaryCode& b, const EquivalenceBudget& budget = {});

BinaryCode apply_witness(const BinaryCode& a, const EquivalenceWitness& witness);
bool verify_witness(const BinaryCode& a, const BinaryCode& b, const EquivalenceWitness& witness);

/// Census of d(x, y) over unordered pairs x ≠ y; invariant under translation
/// and coordinate permutation.
std::map<std::size_t, std::size_t> distance_distribution(const BinaryCode& code);

}  // namespace z2s
