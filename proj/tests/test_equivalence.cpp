#include "doctest.h"

#include <algorithm>
#include <random>

#include "support.hpp"
#include "z2s/equivalence.hpp"
#include "z2s/errors.hpp"
#include "z2s/hadamard.hpp"
#include "z2s/invariants.hpp"

using namespace z2s;

namespace {

BinaryCode image_of(const TypeSpec& spec) { return gray_image(generator_direct(spec), build_gray(spec.s())); }

void check_equivalent(const BinaryCode& a, const BinaryCode& b) {
  const auto v = equivalence_search(a, b);
  REQUIRE(v.outcome == EquivalenceOutcome::equivalent);
  REQUIRE(v.witness.has_value());
  CHECK(verify_witness(a, b, *v.witness));
  CHECK(support::to_set(apply_witness(a, *v.witness)) == support::to_set(b));
}

}  // namespace

TEST_CASE("witness application") {
  const BinaryCode a(3, {BitVector::from_string("000"), BitVector::from_string("110")});
  const BinaryCode b(3, {BitVector::from_string("001"), BitVector::from_string("100")});
  const EquivalenceWitness w{BitVector::from_string("001"), {2, 0, 1}};
  // 110 → coordinates {2, 0} → 101, plus 001 → 100.
  CHECK(verify_witness(a, b, w));
  CHECK_FALSE(verify_witness(a, b, {BitVector::from_string("001"), {0, 0, 1}}));
  CHECK_FALSE(verify_witness(a, b, {BitVector::from_string("000"), {2, 0, 1}}));
  CHECK_THROWS_AS(apply_witness(a, {BitVector(2), {0, 1}}), ShapeError);
}

TEST_CASE("a code is equivalent to itself") {
  const auto c = image_of(TypeSpec(3, {2, 0, 0}));
  const auto v = equivalence_search(c, c);
  REQUIRE(v.outcome == EquivalenceOutcome::equivalent);
  CHECK(verify_witness(c, c, *v.witness));
}

TEST_CASE("fast rejection") {
  const auto v = equivalence_search(image_of(TypeSpec(2, {3, 0})), image_of(TypeSpec(3, {2, 0, 0})));
  CHECK(v.outcome == EquivalenceOutcome::inequivalent);
  CHECK(v.separating_invariant == "kernel_dim");
  CHECK(equivalence_search(image_of(TypeSpec(2, {3, 0})), image_of(TypeSpec(2, {3, 1}))).separating_invariant ==
        "length");
  const BinaryCode a(4, {BitVector(4), BitVector::from_string("1100")});
  const BinaryCode b(4, {BitVector(4), BitVector::from_string("1110")});
  CHECK(equivalence_search(a, b).separating_invariant == "distance_distribution");
  const BinaryCode no_zero(4, {BitVector::from_string("1000"), BitVector::from_string("0100")});
  CHECK_THROWS_AS(equivalence_search(no_zero, no_zero), PreconditionError);
}

TEST_CASE("small random codes agree with brute force") {
  // Brute force over every translation in B and every permutation.
  auto brute = [](const BinaryCode& a, const BinaryCode& b) {
    const auto target = support::to_set(b);
    std::vector<std::size_t> perm(a.length());
    for (const auto& shift : b.words()) {
      for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
      do {
        if (support::to_set(apply_witness(a, {shift, perm})) == target) return true;
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return false;
  };
  std::mt19937_64 rng(31);
  int equivalent = 0, inequivalent = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 4 + rng() % 3;
    const std::size_t m = 2 + rng() % 4;
    auto random_code = [&] {
      std::vector<BitVector> words{BitVector(n)};
      while (words.size() < m) {
        auto w = support::random_bits(rng, n);
        if (std::find(words.begin(), words.end(), w) == words.end()) words.push_back(w);
      }
      return BinaryCode(n, words);
    };
    const auto a = random_code();
    // Half the time derive b from a so equivalent pairs are common.
    auto b = random_code();
    if (trial % 2) {
      const auto permuted = apply_witness(a, {BitVector(n), support::random_permutation(rng, n)});
      b = permuted.translated(permuted.words()[rng() % m]);
    }
    const auto v = equivalence_search(a, b);
    REQUIRE(v.outcome != EquivalenceOutcome::unknown);
    const bool expected = brute(a, b);
    CHECK((v.outcome == EquivalenceOutcome::equivalent) == expected);
    if (v.witness) CHECK(verify_witness(a, b, *v.witness));
    (expected ? equivalent : inequivalent)++;
  }
  CHECK(equivalent > 50);
  CHECK(inequivalent > 50);
}

TEST_CASE("random translations and permutations are recovered") {
  std::mt19937_64 rng(23);
  const std::vector<TypeSpec> specs{TypeSpec(2, {2, 1}), TypeSpec(3, {2, 0, 0}), TypeSpec(2, {3, 0}),
                                    TypeSpec(3, {1, 2, 0}), TypeSpec(4, {1, 1, 0, 0})};
  for (const auto& spec : specs) {
    const auto code = image_of(spec);
    for (int trial = 0; trial < 3; ++trial) {
      const auto permuted = apply_witness(code, {BitVector(code.length()), support::random_permutation(rng, code.length())});
      const auto moved = permuted.translated(permuted.words()[rng() % permuted.size()]);
      CHECK(moved.has_zero());
      check_equivalent(code, moved);
      check_equivalent(moved, code);
    }
  }
}

TEST_CASE("non-members as translations are rejected by the precondition") {
  const auto code = image_of(TypeSpec(2, {2, 1}));
  std::mt19937_64 rng(29);
  BitVector shift = support::random_bits(rng, code.length());
  while (code.contains(shift)) shift = support::random_bits(rng, code.length());
  const auto moved = code.translated(shift);
  CHECK_FALSE(moved.has_zero());
  CHECK_THROWS_AS(equivalence_search(code, moved), PreconditionError);
}

TEST_CASE("same (rank, kernel) pairs at t = 6") {
  check_equivalent(image_of(TypeSpec(2, {3, 1})), image_of(TypeSpec(3, {1, 2, 0})));
  check_equivalent(image_of(TypeSpec(3, {2, 0, 1})), image_of(TypeSpec(4, {1, 1, 0, 0})));
}

TEST_CASE("budget exhaustion reports unknown") {
  const auto a = image_of(TypeSpec(2, {3, 1}));
  const auto b = image_of(TypeSpec(3, {1, 2, 0}));
  const auto v = equivalence_search(a, b, EquivalenceBudget{std::chrono::milliseconds(60000), 3});
  CHECK(v.outcome == EquivalenceOutcome::unknown);
  CHECK_FALSE(v.witness.has_value());
}

TEST_CASE("distance distribution") {
  const auto d = distance_distribution(image_of(TypeSpec(3, {2, 0, 0})));
  // Hadamard: all distances N/2 except the 32 antipodal pairs at N.
  CHECK(d == std::map<std::size_t, std::size_t>{{16, 64 * 63 / 2 - 32}, {32, 32}});
}
