#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "support.hpp"
#include "z2s/errors.hpp"
#include "z2s/graymap.hpp"

using namespace z2s;
namespace id = z2s::identities;

namespace {

Residue R(std::uint64_t u, int s) { return Residue(static_cast<std::int64_t>(u), s); }

}  // namespace

TEST_CASE("quaternary Gray map") {
  const auto table = build_gray(2);
  CHECK(table.image(0).to_string() == "00");
  CHECK(table.image(1).to_string() == "01");
  CHECK(table.image(2).to_string() == "11");
  CHECK(table.image(3).to_string() == "10");
}

TEST_CASE("table matches the closed form") {
  for (int s = 1; s <= 11; ++s) {
    const auto table = build_gray(s);
    CHECK(table.size() == oracle::mod(s));
    CHECK(table.block_length() == (s == 1 ? 1U : 1U << (s - 1)));
    for (std::uint64_t u = 0; u < oracle::mod(s); ++u) {
      CHECK(support::to_word(phi(R(u, s), table)) == oracle::phi(u, s));
    }
    CHECK(phi(R(0, s), table).is_zero());
    CHECK(phi(R(oracle::mod(s) / 2, s), table) == BitVector::ones(table.block_length()));
    CHECK(id::injective(table));
  }
}

TEST_CASE("Carlet matrix columns enumerate Z_2^{s-1}") {
  for (int s = 2; s <= 9; ++s) {
    const CarletMatrix y(s);
    CHECK(y.rows().size() == static_cast<std::size_t>(s - 1));
    for (std::size_t j = 0; j < y.columns(); ++j) {
      std::uint64_t column = 0;
      for (int i = 0; i < s - 1; ++i) column |= static_cast<std::uint64_t>(y.rows()[static_cast<std::size_t>(i)].test(j)) << i;
      CHECK(column == j);
    }
  }
}

TEST_CASE("weights of single images") {
  const auto table = build_gray(3);
  CHECK(phi(R(1, 3), table).weight() == 2);
  CHECK(phi(R(4, 3), table).to_string() == "1111");
  // Every u ∉ {0, 2^{s-1}} has weight 2^{s-2}.
  for (int s = 2; s <= 10; ++s) {
    const auto t = build_gray(s);
    for (std::uint64_t u = 1; u < oracle::mod(s); ++u) {
      if (u == oracle::mod(s) / 2) continue;
      CHECK(phi(R(u, s), t).weight() == (1U << (s - 2)));
    }
  }
}

TEST_CASE("phi on vectors and its inverse") {
  const auto t3 = build_gray(3);
  const auto v = phi_vec(ResidueVector({0, 4, 0, 4, 0, 4, 0, 4}, 3), t3);
  CHECK(v.size() == 32);
  CHECK(v.weight() == 16);
  CHECK(phi_vec(ResidueVector::zero(6, 3), t3).is_zero());
  for (int s = 1; s <= 8; ++s) {
    const auto t = build_gray(s);
    const auto two = phi_vec(ResidueVector({0, static_cast<std::int64_t>(oracle::mod(s) / 2)}, s), t);
    CHECK(two.slice(0, t.block_length()).is_zero());
    CHECK(two.slice(t.block_length(), t.block_length()) == BitVector::ones(t.block_length()));
  }
  CHECK(phi_inverse(BitVector::from_string("1111"), t3) == ResidueVector({4}, 3));
  CHECK_FALSE(phi_inverse(BitVector::from_string("1000"), t3).has_value());
  CHECK_THROWS_AS(phi_inverse(BitVector(6), t3), ShapeError);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int s = 1 + static_cast<int>(rng() % 8);
    const auto t = build_gray(s);
    std::vector<std::uint32_t> values(1 + rng() % 9);
    for (auto& x : values) x = static_cast<std::uint32_t>(rng() % oracle::mod(s));
    const ResidueVector r(values, s);
    const auto image = phi_vec(r, t);
    CHECK(phi_inverse(image, t) == r);
    oracle::Word expected;
    for (auto x : values) {
      const auto block = oracle::phi(x, s);
      expected.insert(expected.end(), block.begin(), block.end());
    }
    CHECK(support::to_word(image) == expected);
  }
}

TEST_CASE("identities hold exhaustively for s = 2..6") {
  for (int s = 2; s <= 6; ++s) {
    CAPTURE(s);
    const auto table = build_gray(s);
    const std::uint64_t m = oracle::mod(s);
    for (std::uint64_t u = 0; u < m; ++u) {
      CHECK(id::complement_sum(table, R(u, s)));
      CHECK(id::antipodal_distance(table, R(u, s)));
      for (int p = 0; p < s; ++p) CHECK(id::power_of_two_sum(table, R(u, s), p));
      if ((u >> (s - 2)) & 1) {
        CHECK(id::second_bit_sum(table, R(u, s)));
      } else {
        CHECK_THROWS_AS(id::second_bit_sum(table, R(u, s)), PreconditionError);
      }
      CHECK(id::quarter_sum(table, R(u, s), R(m / 4, s)));
      CHECK(id::quarter_sum(table, R(u, s), R(3 * m / 4, s)));
      for (std::uint64_t v = 0; v < m; ++v) {
        CHECK(id::odot_sum(table, R(u, s), R(v, s)));
        CHECK(id::distance_is_difference_weight(table, R(u, s), R(v, s)));
        CHECK(id::antipodal_pair_distance(table, R(u, s), R(v, s)));
      }
    }
    for (std::uint64_t lambda = 0; lambda < m / 2; ++lambda) CHECK(id::low_bits_linear(table, lambda));
    CHECK_THROWS_AS(id::quarter_sum(table, R(0, s), R(1, s) + R(m / 4, s)), PreconditionError);
  }
}

TEST_CASE("identities agree with the closed-form oracle") {
  // Recomputed here without the table so a defect in both the table and the
  // predicate cannot cancel out.
  for (int s = 2; s <= 6; ++s) {
    const std::uint64_t m = oracle::mod(s);
    for (std::uint64_t u = 0; u < m; ++u) {
      for (std::uint64_t v = 0; v < m; ++v) {
        const auto lhs = oracle::add(oracle::phi(u, s), oracle::phi(v, s));
        const std::uint64_t rhs = (u + v + 2 * m - 2 * oracle::odot(u, v, s)) % m;
        CHECK(lhs == oracle::phi(rhs, s));
        CHECK(oracle::weight(lhs) == oracle::weight(oracle::phi((u + m - v) % m, s)));
        const auto flipped = oracle::add(oracle::phi(u, s), oracle::phi((v + m / 2) % m, s));
        CHECK(oracle::weight(flipped) + oracle::weight(lhs) == m / 2);
      }
    }
  }
}

TEST_CASE("modulus and cap checks") {
  const auto table = build_gray(3);
  CHECK_THROWS_AS(phi(R(1, 4), table), ModulusMismatch);
  CHECK_THROWS_AS(id::odot_sum(table, R(1, 3), R(1, 4)), ModulusMismatch);
  CHECK_THROWS_AS(build_gray(kMaxGrayTableExponent + 1), CapExceeded);
  CHECK_THROWS_AS(id::power_of_two_sum(table, R(1, 3), 3), IndexError);
}
