#pragma once

#include <cstdint>

#include "normalfield/factor.hpp"
#include "normalfield/numtheory.hpp"

namespace nf {

// Exact, never rounded.
using BigCount = BigInt;

// Number of normal elements of F_{q^n}/F_q, q = p^k, from the closed form
//   q^(n-d) * prod_{e | d} (q^(o_e(q)) - 1)^(phi(e) / o_e(q)),  n = d p^m.
// DomainError unless p is prime and k, n >= 1.
BigCount count_normal(const BigInt& p, std::uint64_t k, std::uint64_t n);

// |(F_q[x]/(f))^x| from the distinct irreducible factors of f.
// DomainError for constant f.
BigCount count_units_mod(const FqPoly& f);

// |(F_q[x]/(x^n - 1))^x| evaluated as the rational product
//   q^n * prod over Frobenius orbits on Z/dZ of (1 - q^-|orbit|)
// using orbit_structure; no polynomial is factored.
BigCount count_units_cyclic(const BigInt& p, std::uint64_t k, std::uint64_t n);

}  // namespace nf
