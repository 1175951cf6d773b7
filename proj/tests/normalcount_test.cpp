#include "normalfield/normalcount.hpp"

#include <gtest/gtest.h>

#include <random>

#include "normalfield/errors.hpp"
#include "normalfield/normaltest.hpp"
#include "oracles.hpp"

namespace nf {
namespace {

FqPoly poly(const SmallFieldPtr& f, std::vector<std::uint32_t> c) { return FqPoly(f, std::move(c)); }

TEST(CountNormal, ExamplesAgreeWithInjectivityOracle) {
  struct Case {
    std::uint32_t p, k, n;
    std::uint64_t expected;  // frozen after the oracle confirmed it
  };
  for (const Case& c : {Case{2, 1, 2, 2}, Case{2, 1, 1, 1}, Case{2, 1, 7, 49}, Case{3, 1, 2, 4}, Case{2, 2, 2, 12}}) {
    auto tower = FieldTower::create(c.p, c.k, c.n);
    ASSERT_EQ(oracle::count_normal_by_injectivity(*tower), c.expected);
    EXPECT_EQ(count_normal(c.p, c.k, c.n), c.expected) << c.p << "," << c.k << "," << c.n;
  }
}

TEST(CountNormal, Errors) {
  EXPECT_THROW(count_normal(4, 1, 2), DomainError);
  EXPECT_THROW(count_normal(1, 1, 2), DomainError);
  EXPECT_THROW(count_normal(2, 0, 2), DomainError);
  EXPECT_THROW(count_normal(2, 1, 0), DomainError);
}

TEST(CountNormal, EqualsCyclicUnitCountAndIsBounded) {
  for (std::uint32_t p : {2, 3, 5, 7, 11, 13}) {
    for (std::uint64_t k = 1; k <= 3; ++k) {
      for (std::uint64_t n = 1; n <= 40; ++n) {
        const BigCount a = count_normal(p, k, n);
        ASSERT_EQ(a, count_units_cyclic(p, k, n)) << p << "," << k << "," << n;
        ASSERT_GE(a, 1);
        ASSERT_LT(a, ipow(ipow(p, k), n));
      }
    }
  }
}

TEST(CountNormal, StaysExactBeyondMachineWords) {
  // 2^64 * prod over the 64 ... here n = 64 = 2^6 so d = 1 and N = 2^64 - 2^63.
  EXPECT_EQ(count_normal(2, 1, 64), BigInt(1) << 63);
  const BigCount big = count_normal(101, 1, 100);
  EXPECT_EQ(big, count_units_cyclic(101, 1, 100));
  EXPECT_GT(big, BigInt(1) << 600);
}

TEST(CountUnitsCyclic, Examples) {
  EXPECT_EQ(count_units_cyclic(2, 1, 2), 2);
  EXPECT_EQ(count_units_cyclic(2, 1, 4), 8);
  EXPECT_EQ(count_units_cyclic(2, 1, 3), 3);
  EXPECT_THROW(count_units_cyclic(6, 1, 3), DomainError);
}

TEST(CountUnitsMod, Examples) {
  auto f2 = SmallField::prime(2);
  auto f3 = SmallField::prime(3);
  for (auto field : {f2, f3, SmallField::extension(2, {1, 1, 1})}) {
    EXPECT_EQ(count_units_mod(FqPoly::x(field)), field->order() - 1);
  }
  EXPECT_EQ(oracle::units_by_search(poly(f2, {1, 1, 1})), 3u);
  EXPECT_EQ(count_units_mod(poly(f2, {1, 1, 1})), 3);
  const FqPoly cubic = poly(f3, {0, 2, 0, 1});  // x^3 - x
  EXPECT_EQ(oracle::units_by_search(cubic), 8u);
  EXPECT_EQ(count_units_mod(cubic), 8);
  EXPECT_THROW(count_units_mod(poly(f2, {1})), DomainError);
}

TEST(CountUnitsMod, MatchesSearchOracle) {
  std::mt19937_64 rng(3);
  for (auto field : {SmallField::prime(2), SmallField::prime(3), SmallField::extension(2, {1, 1, 1})}) {
    std::uniform_int_distribution<std::uint32_t> dist(0, field->order() - 1);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<std::uint32_t> c(2 + trial % 4);
      for (auto& v : c) v = dist(rng);
      c.back() = 1 + dist(rng) % (field->order() - 1);
      FqPoly f(field, c);
      ASSERT_EQ(count_units_mod(f), oracle::units_by_search(f)) << to_string(f);
    }
  }
}

TEST(CountUnitsMod, CyclicModulusAgreesWithOrbitRoute) {
  for (std::uint32_t p : {2, 3, 5}) {
    for (std::uint32_t k : {1u, 2u}) {
      auto fp = SmallField::prime(p);
      auto fq = SmallField::extension(p, find_irreducible(fp, k).coeffs());
      for (std::size_t n = 1; n <= 18; ++n) {
        ASSERT_EQ(count_units_mod(FqPoly::cyclic_modulus(fq, n)), count_units_cyclic(p, k, n)) << p << "," << k << "," << n;
      }
    }
  }
}

TEST(CountUnitsMod, MultiplicativeOnCoprimePairs) {
  std::mt19937_64 rng(5);
  auto f3 = SmallField::prime(3);
  std::uniform_int_distribution<std::uint32_t> dist(0, 2);
  int checked = 0;
  while (checked < 100) {
    std::vector<std::uint32_t> a(1 + rng() % 5), b(1 + rng() % 5);
    for (auto& v : a) v = dist(rng);
    for (auto& v : b) v = dist(rng);
    a.push_back(1);
    b.push_back(1);
    FqPoly f(f3, a), g(f3, b);
    if (!gcd(f, g).is_one()) continue;
    ASSERT_EQ(count_units_mod(f * g), count_units_mod(f) * count_units_mod(g));
    ++checked;
  }
}

}  // namespace
}  // namespace nf
