#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace nf {

using BigInt = boost::multiprecision::cpp_int;

// n = d * p^m with p not dividing d.
struct PPartSplit {
  BigInt d;
  std::uint64_t m = 0;

  bool operator==(const PPartSplit&) const = default;
};

// One divisor e of d together with the Frobenius orbit data on the primitive
// e-th roots of unity: every orbit has length `order` = o_e(q) and there are
// `count` = phi(e) / o_e(q) of them.
struct OrbitEntry {
  BigInt e;
  BigInt order;
  BigInt count;

  bool operator==(const OrbitEntry&) const = default;
};

struct OrbitStructure {
  std::vector<OrbitEntry> entries;  // ascending in e
};

bool is_prime(const BigInt& n);

// Euler's totient. Throws DomainError for e = 0.
BigInt totient(const BigInt& e);

// All divisors of d, strictly increasing. Throws DomainError for d = 0.
std::vector<BigInt> divisors(const BigInt& d);

PPartSplit split_p_part(const BigInt& n, const BigInt& p);

// Least t >= 1 with q^t = 1 (mod e); o_1(q) = 1. Requires gcd(q, e) = 1.
BigInt mult_order(const BigInt& q, const BigInt& e);

// Orbits of a -> q*a mod d on {0, ..., d-1}. Each orbit starts at its least
// element and lists the iterates in order; orbits are sorted by that element.
std::vector<std::vector<std::uint64_t>> frobenius_orbits(std::uint64_t d, const BigInt& q);

OrbitStructure orbit_structure(const BigInt& q, const BigInt& d);

// base^exp for small exponents, exact.
BigInt ipow(const BigInt& base, std::uint64_t exp);

}  // namespace nf
