#include "normalfield/numtheory.hpp"

#include <algorithm>
#include <sstream>

#include "normalfield/errors.hpp"

namespace nf {

namespace {

std::string str(const BigInt& v) { return v.str(); }

void require_positive(const BigInt& v, const char* what) {
  if (v < 1) {
    throw DomainError(std::string(what) + " must be a positive integer, got " + str(v));
  }
}

void require_coprime(const BigInt& q, const BigInt& e) {
  if (boost::multiprecision::gcd(q, e) != 1) {
    throw DomainError("gcd(" + str(q) + ", " + str(e) + ") != 1");
  }
}

}  // namespace

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (BigInt f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

BigInt totient(const BigInt& e) {
  require_positive(e, "totient argument");
  BigInt result = e;
  BigInt rest = e;
  for (BigInt f = 2; f * f <= rest; ++f) {
    if (rest % f != 0) continue;
    while (rest % f == 0) rest /= f;
    result -= result / f;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

std::vector<BigInt> divisors(const BigInt& d) {
  require_positive(d, "divisors argument");
  std::vector<BigInt> low;
  std::vector<BigInt> high;
  for (BigInt f = 1; f * f <= d; ++f) {
    if (d % f != 0) continue;
    low.push_back(f);
    if (f * f != d) high.push_back(d / f);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

PPartSplit split_p_part(const BigInt& n, const BigInt& p) {
  require_positive(n, "n");
  if (!is_prime(p)) throw DomainError(str(p) + " is not prime");
  PPartSplit out{n, 0};
  while (out.d % p == 0) {
    out.d /= p;
    ++out.m;
  }
  return out;
}

BigInt mult_order(const BigInt& q, const BigInt& e) {
  require_positive(e, "modulus");
  require_coprime(q, e);
  if (e == 1) return 1;
  const BigInt base = q % e;
  BigInt acc = base;
  BigInt t = 1;
  while (acc != 1) {
    acc = (acc * base) % e;
    ++t;
  }
  return t;
}

std::vector<std::vector<std::uint64_t>> frobenius_orbits(std::uint64_t d, const BigInt& q) {
  require_positive(d, "d");
  require_coprime(q, d);
  const auto step = static_cast<std::uint64_t>(q % d);
  std::vector<bool> seen(d, false);
  std::vector<std::vector<std::uint64_t>> orbits;
  for (std::uint64_t start = 0; start < d; ++start) {
    if (seen[start]) continue;
    std::vector<std::uint64_t> orbit;
    std::uint64_t a = start;
    do {
      seen[a] = true;
      orbit.push_back(a);
      a = static_cast<std::uint64_t>((BigInt(a) * step) % d);
    } while (a != start);
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

OrbitStructure orbit_structure(const BigInt& q, const BigInt& d) {
  require_positive(d, "d");
  require_coprime(q, d);
  OrbitStructure out;
  for (const BigInt& e : divisors(d)) {
    BigInt order = mult_order(q, e);
    BigInt phi = totient(e);
    // o_e(q) always divides phi(e); a remainder here is a bug, not bad input.
    if (phi % order != 0) {
      throw std::logic_error("order " + str(order) + " does not divide phi(" + str(e) + ")");
    }
    out.entries.push_back({e, order, phi / order});
  }
  return out;
}

BigInt ipow(const BigInt& base, std::uint64_t exp) {
  return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

}  // namespace nf
