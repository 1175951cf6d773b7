#pragma once

// Test-only brute-force oracles. They deliberately avoid the library's
// Gaussian elimination, Frobenius matrix and gcd routines.

#include <cstdint>
#include <set>
#include <vector>

#include "normalfield/factor.hpp"
#include "normalfield/tower.hpp"

namespace nf::oracle {

// alpha is normal iff c -> sum_i c_i alpha^(q^i) is injective on F_q^n.
// Conjugates come from square-and-multiply, not the Frobenius matrix.
inline bool normal_by_injectivity(const FieldTower& t, const FieldElement& alpha) {
  std::vector<FieldElement> conj{alpha};
  for (std::uint32_t i = 1; i < t.n(); ++i) conj.push_back(t.frobenius_by_power(conj.back()));
  const auto total = static_cast<std::uint64_t>(t.order());
  std::set<std::uint64_t> images;
  for (std::uint64_t c = 0; c < total; ++c) {
    FieldElement acc = t.zero();
    std::uint64_t rest = c;
    for (std::uint32_t i = 0; i < t.n(); ++i) {
      const auto coeff = static_cast<std::uint32_t>(rest % t.q());
      rest /= t.q();
      acc = t.add(acc, t.mul(t.embed(coeff), conj[i]));
    }
    if (!images.insert(t.index_of(acc)).second) return false;
  }
  return true;
}

inline std::uint64_t count_normal_by_injectivity(const FieldTower& t) {
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(t.order()); ++i) {
    count += normal_by_injectivity(t, t.element_at(i));
  }
  return count;
}

// |(F_q[x]/(f))^x| as the number of residues u with u * v = 1 (mod f) for
// some residue v.
inline std::uint64_t units_by_search(const FqPoly& f) {
  const auto& field = f.field_ptr();
  const std::size_t deg = static_cast<std::size_t>(f.degree());
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < deg; ++i) total *= field->order();
  auto residue = [&](std::uint64_t idx) {
    std::vector<std::uint32_t> c(deg);
    for (auto& v : c) {
      v = static_cast<std::uint32_t>(idx % field->order());
      idx /= field->order();
    }
    return FqPoly(field, c);
  };
  const FqPoly one = FqPoly::constant(field, 1) % f;
  std::vector<char> is_unit(total, 0);
  for (std::uint64_t a = 0; a < total; ++a) {
    if (is_unit[a]) continue;
    const FqPoly ua = residue(a);
    for (std::uint64_t b = a; b < total; ++b) {
      if ((ua * residue(b)) % f == one) {
        is_unit[a] = is_unit[b] = 1;
        break;
      }
    }
  }
  std::uint64_t count = 0;
  for (char u : is_unit) count += u;
  return count;
}

}  // namespace nf::oracle
