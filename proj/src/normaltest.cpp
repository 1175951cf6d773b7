#include "normalfield/normaltest.hpp"

#include "normalfield/errors.hpp"
#include "normalfield/linalg.hpp"
#include "normalfield/parallel.hpp"

namespace nf {

std::uint64_t require_enumerable(const FieldTower& tower, std::uint64_t limit) {
  const BigInt size = tower.order();
  if (size > limit) {
    throw ResourceLimitError("exhaustive sweep over F_{" + std::to_string(tower.q()) + "^" + std::to_string(tower.n()) +
                             "} needs " + size.str() + " elements, above the limit of " + std::to_string(limit) +
                             "; raise it with --limit");
  }
  return static_cast<std::uint64_t>(size);
}

bool is_normal(const FieldTower& tower, const FieldElement& a) {
  tower.require(a);
  const std::size_t n = tower.n();
  Matrix m(n, n);
  const auto conjugates = tower.orbit(a);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = conjugates[i].coeffs[j];
  }
  return rank(*tower.base_field(), std::move(m)) == n;
}

bool is_normal_gcd(const FieldTower& tower, const FieldElement& a) {
  tower.require(a);
  const std::size_t n = tower.n();
  auto self = tower.ptr();
  auto conjugates = tower.orbit(a);
  std::vector<FieldElement> coeffs(n, tower.zero());
  for (std::size_t i = 0; i < n; ++i) coeffs[n - 1 - i] = std::move(conjugates[i]);
  Poly<FieldTower> pairing(self, std::move(coeffs));
  return gcd(Poly<FieldTower>::cyclic_modulus(self, n), pairing).is_one();
}

FqPoly order_poly(const FieldTower& tower, const FieldElement& a) {
  tower.require(a);
  const std::size_t n = tower.n();
  DependencyTracker tracker(*tower.base_field(), n, n + 1);
  FieldElement cur = a;
  for (std::size_t j = 0; j <= n; ++j) {
    if (auto relation = tracker.insert(std::span<const std::uint32_t>(cur.coeffs.data(), cur.coeffs.size()))) return FqPoly(tower.base_field(), std::move(*relation));
    cur = tower.frobenius(cur);
  }
  // sigma^n(a) = a is always dependent on the first vector.
  throw std::logic_error("no annihilator of degree <= n found");
}

std::vector<FieldElement> enumerate_normal_range(const FieldTower& tower, std::uint64_t begin, std::uint64_t end) {
  std::vector<FieldElement> out;
  for (std::uint64_t i = begin; i < end; ++i) {
    FieldElement a = tower.element_at(i);
    if (is_normal(tower, a)) out.push_back(std::move(a));
  }
  return out;
}

std::vector<FieldElement> enumerate_normal(const FieldTower& tower, std::uint64_t limit) {
  const std::uint64_t total = require_enumerable(tower, limit);
  std::vector<FieldElement> out;
  for (std::uint64_t i : parallel_select(total, [&](std::uint64_t i) { return is_normal(tower, tower.element_at(i)); })) {
    out.push_back(tower.element_at(i));
  }
  return out;
}

BigCount brute_count_normal(const FieldTower& tower, std::uint64_t limit) {
  const std::uint64_t total = require_enumerable(tower, limit);
  return parallel_count(total, [&](std::uint64_t i) { return is_normal(tower, tower.element_at(i)); });
}

namespace serial {

std::vector<FieldElement> enumerate_normal(const FieldTower& tower, std::uint64_t limit) {
  return enumerate_normal_range(tower, 0, require_enumerable(tower, limit));
}

BigCount brute_count_normal(const FieldTower& tower, std::uint64_t limit) {
  const std::uint64_t total = require_enumerable(tower, limit);
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < total; ++i) {
    if (is_normal(tower, tower.element_at(i))) ++count;
  }
  return count;
}

}  // namespace serial

}  // namespace nf
