#include "normalfield/normaltest.hpp"

#include <gtest/gtest.h>

#include "normalfield/errors.hpp"
#include "normalfield/parallel.hpp"
#include "normalfield/text_format.hpp"
#include "oracles.hpp"

namespace nf {
namespace {

class F4 : public ::testing::Test {
 protected:
  TowerPtr tower = FieldTower::create(2, 1, 2);
  FieldElement t = parse_element(*tower, "0;1");
  FieldElement t1 = parse_element(*tower, "1;1");
};

TEST_F(F4, RankCriterion) {
  EXPECT_TRUE(is_normal(*tower, t));
  EXPECT_FALSE(is_normal(*tower, tower->one()));
  EXPECT_FALSE(is_normal(*tower, tower->zero()));
}

TEST_F(F4, GcdCriterion) {
  EXPECT_TRUE(is_normal_gcd(*tower, t));
  EXPECT_FALSE(is_normal_gcd(*tower, tower->one()));
  EXPECT_FALSE(is_normal_gcd(*tower, tower->zero()));
}

TEST_F(F4, OrderPolynomial) {
  auto f2 = tower->base_field();
  EXPECT_EQ(order_poly(*tower, tower->zero()), FqPoly(f2, {1}));
  EXPECT_EQ(order_poly(*tower, tower->one()), FqPoly(f2, {1, 1}));
  EXPECT_EQ(order_poly(*tower, t), FqPoly(f2, {1, 0, 1}));
}

TEST_F(F4, Enumeration) {
  EXPECT_EQ(enumerate_normal(*tower), (std::vector<FieldElement>{t, t1}));
  EXPECT_EQ(brute_count_normal(*tower), 2);
}

TEST_F(F4, ForeignElementIsUsageError) {
  auto other = FieldTower::create(2, 1, 3);
  EXPECT_THROW(is_normal(*tower, other->one()), UsageError);
  EXPECT_THROW(is_normal_gcd(*tower, other->one()), UsageError);
  EXPECT_THROW(order_poly(*tower, other->one()), UsageError);
}

TEST(Enumeration, TrivialExtension) {
  auto tower = FieldTower::create(2, 1, 1);
  EXPECT_EQ(enumerate_normal(*tower), std::vector<FieldElement>{tower->one()});
}

TEST(Enumeration, BruteCountsAgreeWithOracle) {
  struct Case {
    std::uint32_t p, k, n;
    std::uint64_t expected;
  };
  for (const Case& c : {Case{2, 1, 3, 3}, Case{2, 1, 2, 2}, Case{3, 1, 2, 4}}) {
    auto tower = FieldTower::create(c.p, c.k, c.n);
    ASSERT_EQ(oracle::count_normal_by_injectivity(*tower), c.expected);
    EXPECT_EQ(brute_count_normal(*tower), c.expected);
    EXPECT_EQ(serial::brute_count_normal(*tower), c.expected);
  }
}

TEST(Enumeration, ResourceGuard) {
  auto tower = FieldTower::create(2, 1, 20);
  try {
    brute_count_normal(*tower);
    FAIL() << "expected the guard to trip";
  } catch (const ResourceLimitError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("1048576"), std::string::npos);
    EXPECT_NE(what.find("65536"), std::string::npos);
    EXPECT_NE(what.find("--limit"), std::string::npos);
  }
  EXPECT_THROW(enumerate_normal(*tower), ResourceLimitError);
  EXPECT_THROW(serial::enumerate_normal(*tower), ResourceLimitError);
  auto small = FieldTower::create(2, 1, 5);
  EXPECT_THROW(brute_count_normal(*small, 31), ResourceLimitError);
  EXPECT_EQ(brute_count_normal(*small, 32), count_normal(2, 1, 5));
}

TEST(Enumeration, ParallelMatchesSerialAndPartitionsConcatenate) {
  for (auto [p, k, n] : std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>{
           {2, 1, 9}, {3, 1, 5}, {2, 2, 4}, {5, 1, 3}}) {
    auto tower = FieldTower::create(p, k, n);
    const auto all = enumerate_normal(*tower);
    EXPECT_EQ(all, serial::enumerate_normal(*tower));
    const auto total = static_cast<std::uint64_t>(tower->order());
    for (int parts : {1, 3, 7}) {
      std::vector<FieldElement> glued;
      for (int w = 0; w < parts; ++w) {
        auto r = partition(total, parts, w);
        auto piece = enumerate_normal_range(*tower, r.begin, r.end);
        glued.insert(glued.end(), piece.begin(), piece.end());
      }
      EXPECT_EQ(glued, all);
    }
    EXPECT_EQ(brute_count_normal(*tower), BigInt(all.size()));
  }
}

struct TowerCase {
  std::uint32_t p, k, n;
};

class CriterionAgreement : public ::testing::TestWithParam<TowerCase> {};

TEST_P(CriterionAgreement, AllCriteriaAgreeOnEveryElement) {
  auto tower = FieldTower::create(GetParam().p, GetParam().k, GetParam().n);
  const auto& T = *tower;
  const auto modulus = FqPoly::cyclic_modulus(T.base_field(), T.n());
  const bool tiny = T.order() <= 256;
  const bool p_power_degree = split_p_part(T.n(), T.characteristic()).d == 1;
  for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(T.order()); ++i) {
    const auto a = T.element_at(i);
    const bool rank_test = is_normal(T, a);
    const FqPoly g = order_poly(T, a);
    ASSERT_EQ(rank_test, is_normal_gcd(T, a)) << T.format(a);
    ASSERT_EQ(rank_test, g == modulus) << T.format(a);
    ASSERT_TRUE(divides(g, modulus));
    ASSERT_EQ(g.lead(), 1u);
    ASSERT_EQ(g.is_one(), T.is_zero(a));
    // g annihilates a under x -> sigma.
    FieldElement acc = T.zero();
    for (std::size_t j = 0; j < g.coeffs().size(); ++j) acc = T.add(acc, T.scale(T.frobenius(a, j), g.coeffs()[j]));
    ASSERT_TRUE(T.is_zero(acc));
    ASSERT_EQ(rank_test, is_normal(T, T.frobenius(a)));
    const bool trace_nonzero = !T.is_zero(T.trace(a));
    if (rank_test) ASSERT_TRUE(trace_nonzero);
    if (p_power_degree) ASSERT_EQ(rank_test, trace_nonzero) << T.format(a);
    if (tiny) ASSERT_EQ(rank_test, oracle::normal_by_injectivity(T, a));
  }
}

INSTANTIATE_TEST_SUITE_P(SmallTowers, CriterionAgreement,
                         ::testing::Values(TowerCase{2, 1, 1}, TowerCase{2, 1, 2}, TowerCase{2, 1, 3},
                                           TowerCase{2, 1, 4}, TowerCase{2, 1, 6}, TowerCase{2, 1, 8},
                                           TowerCase{3, 1, 2}, TowerCase{3, 1, 3}, TowerCase{3, 1, 4},
                                           TowerCase{2, 2, 2}, TowerCase{2, 2, 3}, TowerCase{3, 2, 2},
                                           TowerCase{5, 1, 2}, TowerCase{5, 1, 3}, TowerCase{7, 1, 2}));

TEST(TraceCriterion, FailsToBeSufficientWhenDegreeIsNotAPowerOfP) {
  // n = 3 over F_2: x^3 - 1 has the factor x^2 + x + 1, so some elements with
  // nonzero trace are not normal.
  auto tower = FieldTower::create(2, 1, 3);
  bool found = false;
  for (std::uint64_t i = 0; i < 8; ++i) {
    auto a = tower->element_at(i);
    found = found || (!tower->is_zero(tower->trace(a)) && !is_normal(*tower, a));
  }
  EXPECT_TRUE(found);
}

}  // namespace
}  // namespace nf
