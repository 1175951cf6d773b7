#include "normalfield/normalcount.hpp"

#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

#include "normalfield/errors.hpp"

namespace nf {

namespace {

using Rational = boost::multiprecision::cpp_rational;

std::uint64_t to_u64(const BigInt& v) {
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max()) {
    throw DomainError("value " + v.str() + " does not fit a machine exponent");
  }
  return static_cast<std::uint64_t>(v);
}

void validate(const BigInt& p, std::uint64_t k, std::uint64_t n) {
  if (!is_prime(p)) throw DomainError(p.str() + " is not prime");
  if (k == 0) throw DomainError("k must be positive");
  if (n == 0) throw DomainError("n must be positive");
}

}  // namespace

BigCount count_normal(const BigInt& p, std::uint64_t k, std::uint64_t n) {
  validate(p, k, n);
  const BigInt q = ipow(p, k);
  const PPartSplit split = split_p_part(n, p);
  const std::uint64_t d = to_u64(split.d);
  BigCount result = ipow(q, n - d);
  for (const BigInt& e : divisors(split.d)) {
    const BigInt order = mult_order(q, e);
    const BigInt orbits = totient(e) / order;
    result *= ipow(ipow(q, to_u64(order)) - 1, to_u64(orbits));
  }
  return result;
}

BigCount count_units_mod(const FqPoly& f) {
  if (f.degree() < 1) throw DomainError("expected a non-constant polynomial, got " + to_string(f));
  const BigInt q = f.field().order();
  const Factorization fac = factor_poly(f);
  std::uint64_t distinct_degree = 0;
  BigCount result = 1;
  for (const auto& [factor, mult] : fac.factors) {
    const auto deg = static_cast<std::uint64_t>(factor.degree());
    distinct_degree += deg;
    result *= ipow(q, deg) - 1;
  }
  return result * ipow(q, static_cast<std::uint64_t>(f.degree()) - distinct_degree);
}

BigCount count_units_cyclic(const BigInt& p, std::uint64_t k, std::uint64_t n) {
  validate(p, k, n);
  const BigInt q = ipow(p, k);
  const PPartSplit split = split_p_part(n, p);
  Rational result = Rational(ipow(q, n));
  for (const OrbitEntry& entry : orbit_structure(q, split.d).entries) {
    const Rational factor = Rational(1) - Rational(BigInt(1), ipow(q, to_u64(entry.order)));
    for (BigInt i = 0; i < entry.count; ++i) result *= factor;
  }
  if (boost::multiprecision::denominator(result) != 1) {
    throw std::logic_error("unit count is not an integer: " + result.str());
  }
  return boost::multiprecision::numerator(result);
}

}  // namespace nf
