#include "normalfield/numtheory.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "normalfield/errors.hpp"

namespace nf {
namespace {

// Oracles: direct definitions by exhaustive search.
std::uint64_t totient_by_gcd_count(std::uint64_t e) {
  std::uint64_t c = 0;
  for (std::uint64_t a = 1; a <= e; ++a) c += std::gcd(a, e) == 1;
  return c;
}

std::vector<std::uint64_t> divisors_by_scan(std::uint64_t d) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 1; f <= d; ++f) {
    if (d % f == 0) out.push_back(f);
  }
  return out;
}

std::uint64_t order_by_iteration(std::uint64_t q, std::uint64_t e) {
  if (e == 1) return 1;
  std::uint64_t acc = q % e;
  std::uint64_t t = 1;
  while (acc != 1) {
    acc = acc * q % e;
    ++t;
  }
  return t;
}

TEST(Totient, Examples) {
  EXPECT_EQ(totient(1), 1);
  EXPECT_EQ(totient(7), 6);
  EXPECT_EQ(totient(12), totient_by_gcd_count(12));
  EXPECT_EQ(totient(12), 4);
}

TEST(Totient, MatchesGcdCountAndProductFormula) {
  for (std::uint64_t e = 1; e <= 400; ++e) {
    ASSERT_EQ(totient(e), totient_by_gcd_count(e)) << e;
  }
}

TEST(Totient, ZeroIsDomainError) { EXPECT_THROW(totient(0), DomainError); }

TEST(Divisors, Examples) {
  EXPECT_EQ(divisors(1), std::vector<BigInt>{1});
  EXPECT_EQ(divisors(7), (std::vector<BigInt>{1, 7}));
  EXPECT_EQ(divisors(12), (std::vector<BigInt>{1, 2, 3, 4, 6, 12}));
  EXPECT_THROW(divisors(0), DomainError);
}

TEST(Divisors, MatchesScan) {
  for (std::uint64_t d = 1; d <= 300; ++d) {
    auto got = divisors(d);
    auto want = divisors_by_scan(d);
    ASSERT_EQ(got.size(), want.size()) << d;
    for (std::size_t i = 0; i < got.size(); ++i) ASSERT_EQ(got[i], want[i]);
  }
}

TEST(Divisors, TotientSumsToD) {
  for (std::uint64_t d = 1; d <= 500; ++d) {
    BigInt sum = 0;
    for (const auto& e : divisors(d)) sum += totient(e);
    ASSERT_EQ(sum, d);
  }
}

TEST(SplitPPart, Examples) {
  EXPECT_EQ(split_p_part(12, 2), (PPartSplit{3, 2}));
  EXPECT_EQ(split_p_part(7, 2), (PPartSplit{7, 0}));
  EXPECT_EQ(split_p_part(8, 2), (PPartSplit{1, 3}));
  EXPECT_THROW(split_p_part(12, 4), DomainError);
}

TEST(SplitPPart, Recomposes) {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (std::uint64_t n = 1; n <= 200; ++n) {
      auto s = split_p_part(n, p);
      ASSERT_EQ(s.d * ipow(p, s.m), n);
      ASSERT_NE(s.d % p, 0);
    }
  }
}

TEST(MultOrder, Examples) {
  EXPECT_EQ(mult_order(2, 3), 2);
  EXPECT_EQ(mult_order(2, 7), 3);
  for (int q : {2, 3, 9, 16}) EXPECT_EQ(mult_order(q, 1), 1);
  EXPECT_THROW(mult_order(2, 6), DomainError);
  EXPECT_THROW(mult_order(3, 9), DomainError);
}

TEST(MultOrder, MatchesIterationAndDividesTotient) {
  for (std::uint64_t q = 2; q <= 20; ++q) {
    for (std::uint64_t e = 1; e <= 120; ++e) {
      if (std::gcd(q, e) != 1) continue;
      const BigInt o = mult_order(q, e);
      ASSERT_EQ(o, order_by_iteration(q, e)) << q << " mod " << e;
      ASSERT_EQ(totient(e) % o, 0);
      // Reduction invariance.
      if (q % e >= 2 || e <= 2) ASSERT_EQ(mult_order(q % e == 0 ? q : q % e, e), o);
    }
  }
}

TEST(FrobeniusOrbits, Examples) {
  using Orbits = std::vector<std::vector<std::uint64_t>>;
  EXPECT_EQ(frobenius_orbits(1, 2), (Orbits{{0}}));
  EXPECT_EQ(frobenius_orbits(5, 2), (Orbits{{0}, {1, 2, 4, 3}}));
  EXPECT_EQ(frobenius_orbits(7, 2), (Orbits{{0}, {1, 2, 4}, {3, 6, 5}}));
  EXPECT_THROW(frobenius_orbits(4, 2), DomainError);
}

TEST(OrbitStructure, Examples) {
  EXPECT_EQ(orbit_structure(2, 1).entries, (std::vector<OrbitEntry>{{1, 1, 1}}));
  EXPECT_EQ(orbit_structure(2, 7).entries, (std::vector<OrbitEntry>{{1, 1, 1}, {7, 3, 2}}));
  EXPECT_EQ(orbit_structure(2, 5).entries, (std::vector<OrbitEntry>{{1, 1, 1}, {5, 4, 1}}));
  EXPECT_THROW(orbit_structure(3, 6), DomainError);
}

TEST(OrbitStructure, OrbitLengthsMatchExplicitOrbits) {
  for (std::uint64_t q = 2; q <= 16; ++q) {
    for (std::uint64_t d = 1; d <= 60; ++d) {
      if (std::gcd(q, d) != 1) continue;
      std::map<std::uint64_t, std::uint64_t> from_orbits;
      for (const auto& orbit : frobenius_orbits(d, q)) ++from_orbits[orbit.size()];
      std::map<std::uint64_t, std::uint64_t> from_structure;
      BigInt total = 0;
      for (const auto& e : orbit_structure(q, d).entries) {
        ASSERT_EQ(e.order * e.count, totient(e.e));
        total += e.order * e.count;
        from_structure[static_cast<std::uint64_t>(e.order)] += static_cast<std::uint64_t>(e.count);
      }
      ASSERT_EQ(total, d);
      ASSERT_EQ(from_orbits, from_structure) << "q=" << q << " d=" << d;
    }
  }
}

TEST(IsPrime, TrialDivision) {
  std::vector<int> primes;
  for (int i = 0; i < 60; ++i) {
    if (is_prime(i)) primes.push_back(i);
  }
  EXPECT_EQ(primes, (std::vector<int>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59}));
}

TEST(BigArithmetic, NoOverflowAtLargeInputs) {
  // 2^61 - 1 is prime; q^e beyond 64 bits stays exact.
  const BigInt m61 = (BigInt(1) << 61) - 1;
  EXPECT_EQ(split_p_part(m61 * 8, 2), (PPartSplit{m61, 3}));
  EXPECT_EQ(ipow(BigInt(1) << 40, 3), BigInt(1) << 120);
}

}  // namespace
}  // namespace nf
