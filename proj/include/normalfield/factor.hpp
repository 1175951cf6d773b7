#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "normalfield/poly.hpp"
#include "normalfield/small_field.hpp"

namespace nf {

using FqPoly = Poly<SmallField>;

struct FactorPower {
  FqPoly factor;  // monic irreducible
  std::size_t multiplicity;

  bool operator==(const FactorPower&) const = default;
};

struct Factorization {
  SmallField::Element unit;  // leading coefficient of the input
  std::vector<FactorPower> factors;  // ascending degree, then canonical index

  bool operator==(const Factorization&) const = default;

  // unit * prod factor^multiplicity
  FqPoly expand(const SmallFieldPtr& field) const;
};

// Rabin's test. DomainError for constant input.
bool is_irreducible(const FqPoly& f);

// First monic irreducible of `degree` when candidates are ordered by their
// coefficient vector read as a base-q integer, constant term least significant.
FqPoly find_irreducible(const SmallFieldPtr& field, std::size_t degree);

// Monic polynomial of `degree` whose lower coefficients are the base-q digits
// of `index`.
FqPoly monic_from_index(const SmallFieldPtr& field, std::size_t degree, std::uint64_t index);

// Pairs (g_i, i) with f = lead * prod g_i^i, each g_i monic, squarefree and
// pairwise coprime. DomainError for constant input.
std::vector<FactorPower> squarefree_decomposition(const FqPoly& f);

struct FactorOptions {
  // A distinct-degree part whose irreducible factors have degree r is split by
  // trial division over the q^r monic candidates when q^r is at most this
  // budget, and by Cantor-Zassenhaus equal-degree splitting otherwise.
  std::uint64_t trial_division_budget = std::uint64_t{1} << 16;
};

// Pairs (h_r, r) where h_r is the product of all degree-r irreducible factors
// of the squarefree monic f.
std::vector<std::pair<FqPoly, std::size_t>> distinct_degree_factorization(const FqPoly& f);

// Squarefree decomposition, distinct-degree split, then trial division (or
// equal-degree splitting past the budget). DomainError for constant input.
Factorization factor_poly(const FqPoly& f, const FactorOptions& options = {});

}  // namespace nf
