#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "support.hpp"
#include "z2s/errors.hpp"
#include "z2s/hadamard.hpp"
#include "z2s/invariants.hpp"

using namespace z2s;

namespace {

BinaryCode image_of(const TypeSpec& spec) { return gray_image(generator_direct(spec), build_gray(spec.s())); }

std::vector<TypeSpec> all_specs(int t_min, int t_max) {
  std::vector<TypeSpec> out;
  for (int t = t_min; t <= t_max; ++t) {
    for (int s = 2; s <= t + 1; ++s) {
      for (auto& spec : enumerate_type_specs(t, s)) out.push_back(spec);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("row reducer") {
  RowReducer reducer(8);
  CHECK(reducer.insert(BitVector::from_string("11000000")));
  CHECK(reducer.insert(BitVector::from_string("01100000")));
  CHECK_FALSE(reducer.insert(BitVector::from_string("10100000")));
  CHECK_FALSE(reducer.insert(BitVector(8)));
  CHECK(reducer.rank() == 2);
  CHECK(reducer.in_span(BitVector::from_string("10100000")));
  CHECK_FALSE(reducer.in_span(BitVector::from_string("00000001")));

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 90;
    const std::size_t m = rng() % 40;
    RowReducer r(n);
    std::vector<oracle::Word> rows;
    for (std::size_t i = 0; i < m; ++i) {
      auto v = support::random_bits(rng, n);
      if (rng() % 3 == 0) v = BitVector(n);  // sprinkle dependencies
      r.insert(v);
      rows.push_back(support::to_word(v));
    }
    CHECK(r.rank() == oracle::rank(rows));
  }
}

TEST_CASE("rank") {
  CHECK(rank(image_of(TypeSpec(3, {3, 0, 0}))) == 17);
  CHECK(rank(image_of(TypeSpec(2, {3, 0}))) == 7);
  for (const auto& spec : all_specs(1, 7)) {
    CAPTURE(spec.to_string());
    const auto code = image_of(spec);
    CHECK(rank(code) == rank_streaming(generator_direct(spec), build_gray(spec.s())));
    if (is_linear_theorem(spec)) CHECK(rank(code) == static_cast<std::size_t>(spec.t() + 1));
  }
  for (const auto& spec : all_specs(2, 5)) {
    const auto code = image_of(spec);
    std::vector<oracle::Word> rows;
    for (const auto& w : code.words()) rows.push_back(support::to_word(w));
    CHECK(rank(code) == oracle::rank(rows));
  }
}

TEST_CASE("brute-force kernel") {
  const auto h200 = image_of(TypeSpec(3, {2, 0, 0}));
  CHECK(linear_dimension(kernel_bruteforce(h200)) == 3);
  CHECK(linear_dimension(kernel_bruteforce(image_of(TypeSpec(3, {2, 1, 1})))) == 5);
  const auto linear = image_of(TypeSpec(3, {1, 1, 1}));
  CHECK(kernel_bruteforce(linear).size() == linear.size());
  CHECK(oracle::kernel(support::to_set(h200)) == support::to_set(kernel_bruteforce(h200)));
  const BinaryCode no_zero(2, {BitVector::from_string("10"), BitVector::from_string("01")});
  CHECK_THROWS_AS(kernel_bruteforce(no_zero), PreconditionError);
  CHECK_THROWS_AS(linear_dimension(BinaryCode(2, {BitVector(2), BitVector::from_string("10"),
                                                  BitVector::from_string("01")})),
                  PreconditionError);
}

TEST_CASE("kernel dimension formula") {
  CHECK(kernel_dim_theorem(TypeSpec(3, {2, 0, 0})) == 3);
  CHECK(kernel_dim_theorem(TypeSpec(3, {2, 0, 3})) == 6);
  for (int t1 = 1; t1 <= 2; ++t1) {
    for (int t2 = 0; t2 <= 5; ++t2) CHECK(kernel_dim_theorem(TypeSpec(2, {t1, t2})) == 2 * t1 + t2);
  }
  for (const auto& spec : all_specs(1, 8)) {
    CAPTURE(spec.s());
    CAPTURE(spec.to_string());
    CHECK(linear_dimension(kernel_bruteforce(image_of(spec))) == kernel_dim_theorem(spec));
  }
}

TEST_CASE("linearity criterion") {
  CHECK(is_linear_theorem(TypeSpec(3, {1, 0, 3})));
  CHECK(is_linear_theorem(TypeSpec(3, {1, 1, 1})));
  CHECK_FALSE(is_linear_theorem(TypeSpec(3, {2, 0, 0})));
  for (int t2 = 0; t2 <= 6; ++t2) CHECK(is_linear_theorem(TypeSpec(2, {2, t2})));
  for (const auto& spec : all_specs(1, 8)) {
    const bool linear = rank(image_of(spec)) == static_cast<std::size_t>(spec.t() + 1);
    CHECK(is_linear_theorem(spec) == linear);
  }
}

TEST_CASE("kernel basis") {
  const TypeSpec h200(3, {2, 0, 0});
  const auto gen = generator_direct(h200);
  const auto table = build_gray(3);
  const auto basis = kernel_basis(h200, gen, table);
  REQUIRE(basis.vectors.size() == 3);
  std::set<oracle::Word> got;
  for (const auto& v : basis.vectors) got.insert(support::to_word(v));
  const std::set<oracle::Word> want{
      support::to_word(phi_vec(ResidueVector::constant(8, 4, 3), table)),
      support::to_word(phi_vec(ResidueVector({0, 4, 0, 4, 0, 4, 0, 4}, 3), table)),
      support::to_word(phi_vec(ResidueVector::constant(8, 3, 3), table))};
  CHECK(got == want);

  const TypeSpec h120(3, {1, 2, 0});
  CHECK(kernel_basis(h120, generator_direct(h120), table).vectors.size() == 5);
  CHECK_THROWS_AS(kernel_basis(TypeSpec(3, {1, 1, 1}), generator_direct(TypeSpec(3, {1, 1, 1})), table),
                  NotApplicable);

  for (const auto& spec : all_specs(3, 7)) {
    if (is_linear_theorem(spec)) continue;
    CAPTURE(spec.to_string());
    const auto g = generator_direct(spec);
    const auto tab = build_gray(spec.s());
    const auto kb = kernel_basis(spec, g, tab);
    CHECK(kb.vectors.size() == static_cast<std::size_t>(sigma(spec) + spec.tau()));
    const auto code = gray_image(g, tab);
    std::vector<oracle::Word> basis_words;
    for (const auto& v : kb.vectors) basis_words.push_back(support::to_word(v));
    CHECK(oracle::span(basis_words, code.length()) == support::to_set(kernel_bruteforce(code)));
  }
}

TEST_CASE("distance and Hadamard property") {
  const auto h200 = image_of(TypeSpec(3, {2, 0, 0}));
  CHECK(min_distance(h200) == 16);
  CHECK(min_distance(h200, DistanceMethod::pairwise) == 16);
  CHECK(weight_distribution(h200) == std::map<std::size_t, std::size_t>{{0, 1}, {16, 62}, {32, 1}});
  CHECK(weight_distribution(image_of(TypeSpec(3, {1, 0, 0}))) ==
        std::map<std::size_t, std::size_t>{{0, 1}, {2, 6}, {4, 1}});
  CHECK(weight_distribution(BinaryCode(4, {BitVector(4)})) == std::map<std::size_t, std::size_t>{{0, 1}});
  for (int s = 2; s <= 8; ++s) {
    const TypeSpec h1(s, [&] {
      std::vector<int> c(static_cast<std::size_t>(s), 0);
      c[0] = 1;
      return c;
    }());
    CHECK(min_distance(image_of(h1)) == (1U << (s - 2)));
  }
  CHECK(is_hadamard(image_of(TypeSpec(5, {1, 0, 0, 0, 0}))));
  CHECK_FALSE(is_hadamard(BinaryCode(4, {BitVector(4), BitVector::ones(4)})));
  CHECK_THROWS_AS(min_distance(BinaryCode(4, {BitVector(4)})), PreconditionError);
  for (const auto& spec : all_specs(1, 8)) CHECK(is_hadamard(image_of(spec)));
}

TEST_CASE("invariant records") {
  const auto r = compute_invariants(TypeSpec(3, {2, 0, 0}), {true, false});
  CHECK(r.t == 5);
  CHECK(r.n == 8);
  CHECK(r.N == 32);
  CHECK(r.rank == 8);
  CHECK(r.kernel_dim == 3);
  CHECK_FALSE(r.linear);
  CHECK(r.min_distance == 16);
  CHECK(r.kernel_check == KernelCheck::verified_bruteforce);
  const auto formula = compute_invariants(TypeSpec(3, {2, 0, 0}));
  CHECK(formula.kernel_check == KernelCheck::formula_only);
  CHECK(formula.kernel_dim == 3);
  const auto lin = compute_invariants(TypeSpec(3, {1, 1, 1}), {true, false});
  CHECK(lin.linear);
  CHECK(lin.kernel_dim == lin.t + 1);
  CHECK_THROWS_AS(compute_invariants(TypeSpec(2, {1, 12})), CapExceeded);
}

TEST_CASE("kernel structure") {
  for (const auto& spec : all_specs(2, 7)) {
    CAPTURE(spec.to_string());
    const auto code = image_of(spec);
    const auto kernel = kernel_bruteforce(code);
    CHECK(kernel.has_zero());
    for (const auto& x : kernel.words()) {
      CHECK(code.contains(x));
      for (const auto& y : kernel.words()) CHECK(kernel.contains(x ^ y));
    }
    if (!is_linear_theorem(spec)) CHECK(linear_dimension(kernel) >= sigma(spec) + spec.tau());
  }
}

TEST_CASE("linearity criterion matches rank up to t = 10") {
  for (const auto& spec : all_specs(9, 10)) {
    const auto r = rank_streaming(generator_direct(spec), build_gray(spec.s()));
    CHECK((r == static_cast<std::size_t>(spec.t() + 1)) == is_linear_theorem(spec));
  }
}

TEST_CASE("excluded constant and mixed vectors are outside the kernel") {
  // With σ ≤ s-1: N = {Σ_{i=σ-1}^{s-2} λ_i 2^i} minus the all-ones choice of λ,
  // and M = combinations of rows 2..τ-t_s with order above 2. Nothing in
  // (M ∪ {0}) + N other than 0 may land in the kernel.
  std::mt19937_64 rng(19);
  for (const auto& spec : all_specs(3, 7)) {
    if (is_linear_theorem(spec)) continue;
    const int s = spec.s();
    const int sg = sigma(spec);
    if (sg > s - 1) continue;
    CAPTURE(spec.to_string());
    const auto gen = generator_direct(spec);
    const auto table = build_gray(s);
    const auto code = gray_image(gen, table);
    const auto kernel = kernel_bruteforce(code);
    const int low = sg - 1;
    const int bits = s - 1 - low;
    std::vector<ResidueVector> n_set;
    for (std::uint64_t lambda = 0; lambda + 1 < (std::uint64_t{1} << bits); ++lambda) {
      n_set.push_back(ResidueVector::constant(gen.length(), static_cast<std::int64_t>(lambda << low), s));
    }
    for (const auto& v : n_set) {
      if (v == ResidueVector::zero(gen.length(), s)) continue;
      CHECK_FALSE(kernel.contains(phi_vec(v, table)));
    }
    const auto last = static_cast<std::size_t>(spec.tau() - spec.count(s));
    for (int trial = 0; trial < 40 && last >= 2; ++trial) {
      ResidueVector m = ResidueVector::zero(gen.length(), s);
      for (std::size_t i = 1; i < last; ++i) m += static_cast<std::int64_t>(rng() % oracle::mod(s)) * gen.rows[i];
      if (vector_order(m) <= 2) continue;
      const auto v = m + n_set[rng() % n_set.size()];
      CHECK_FALSE(kernel.contains(phi_vec(v, table)));
    }
  }
}
