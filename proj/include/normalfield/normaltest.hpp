#pragma once

#include <cstdint>
#include <vector>

#include "normalfield/normalcount.hpp"
#include "normalfield/tower.hpp"

namespace nf {

// Default element budget for exhaustive sweeps.
inline constexpr std::uint64_t kDefaultEnumerationLimit = std::uint64_t{1} << 16;

// ResourceLimitError when q^n exceeds `limit`; otherwise returns q^n.
std::uint64_t require_enumerable(const FieldTower& tower, std::uint64_t limit);

// Rank of the n x n matrix of F_q coordinates of a, sigma(a), ..., sigma^(n-1)(a)
// equals n.
bool is_normal(const FieldTower& tower, const FieldElement& a);

// gcd(x^n - 1, sum_i sigma^i(a) x^(n-1-i)) = 1 in F_{q^n}[x].
bool is_normal_gcd(const FieldTower& tower, const FieldElement& a);

// Monic g over F_q of least degree with sum_i g_i sigma^i(a) = 0. Divides
// x^n - 1; equals 1 only for a = 0.
FqPoly order_poly(const FieldTower& tower, const FieldElement& a);

// Normal elements in canonical order. OpenMP over contiguous index slices.
std::vector<FieldElement> enumerate_normal(const FieldTower& tower,
                                           std::uint64_t limit = kDefaultEnumerationLimit);

// Normal elements whose canonical index lies in [begin, end); the building
// block for partitioned enumeration.
std::vector<FieldElement> enumerate_normal_range(const FieldTower& tower, std::uint64_t begin, std::uint64_t end);

// Count of normal elements without materializing them. OpenMP reduction.
BigCount brute_count_normal(const FieldTower& tower, std::uint64_t limit = kDefaultEnumerationLimit);

// Single-threaded reference versions of the sweeps above.
namespace serial {
std::vector<FieldElement> enumerate_normal(const FieldTower& tower, std::uint64_t limit = kDefaultEnumerationLimit);
BigCount brute_count_normal(const FieldTower& tower, std::uint64_t limit = kDefaultEnumerationLimit);
}  // namespace serial

}  // namespace nf
