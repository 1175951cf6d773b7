#include "normalfield/factor.hpp"

#include <algorithm>
#include <limits>
#include <random>

namespace nf {

namespace {

void require_nonconstant(const FqPoly& f) {
  if (f.degree() < 1) throw DomainError("expected a non-constant polynomial, got " + to_string(f));
}

std::vector<std::size_t> prime_divisors(std::size_t m) {
  std::vector<std::size_t> out;
  for (std::size_t f = 2; f * f <= m; ++f) {
    if (m % f) continue;
    out.push_back(f);
    while (m % f == 0) m /= f;
  }
  if (m > 1) out.push_back(m);
  return out;
}

// Coefficients of f read as a base-q integer with the constant term least
// significant; used only for ordering.
bool canonical_less(const FqPoly& a, const FqPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  return std::lexicographical_compare(ac.rbegin(), ac.rend(), bc.rbegin(), bc.rend());
}

FqPoly pth_root(const FqPoly& f) {
  const SmallField& field = f.field();
  const std::size_t p = field.characteristic();
  std::vector<SmallField::Element> out(f.coeffs().size() / p + 1, 0);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i % p == 0) out[i / p] = field.pth_root(f.coeffs()[i]);
  }
  return FqPoly(f.field_ptr(), std::move(out));
}

std::uint64_t candidate_count(std::uint64_t q, std::size_t r, std::uint64_t cap) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < r; ++i) {
    if (count > cap / q) return cap + 1;
    count *= q;
  }
  return count;
}

// g is a product of distinct monic irreducibles of degree r.
void trial_divide(FqPoly g, std::size_t r, std::size_t multiplicity, std::vector<FactorPower>& out) {
  const auto& field = g.field_ptr();
  const std::uint64_t candidates = candidate_count(field->order(), r, std::numeric_limits<std::uint64_t>::max() / 2);
  for (std::uint64_t idx = 0; idx < candidates && g.degree() > static_cast<int>(r); ++idx) {
    FqPoly h = monic_from_index(field, r, idx);
    auto [quot, rem] = divmod(g, h);
    if (!rem.is_zero()) continue;
    out.push_back({std::move(h), multiplicity});
    g = std::move(quot);
  }
  if (g.degree() >= 1) out.push_back({monic(g), multiplicity});
}

FqPoly random_residue(const FqPoly& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, g.field().order() - 1);
  std::vector<SmallField::Element> c(static_cast<std::size_t>(g.degree()));
  for (auto& v : c) v = dist(rng);
  return FqPoly(g.field_ptr(), std::move(c));
}

// Cantor-Zassenhaus.
void equal_degree_split(const FqPoly& g, std::size_t r, std::size_t multiplicity, std::mt19937_64& rng,
                        std::vector<FactorPower>& out) {
  if (g.degree() <= static_cast<int>(r)) {
    out.push_back({monic(g), multiplicity});
    return;
  }
  const SmallField& field = g.field();
  const BigInt q = field.order();
  while (true) {
    const FqPoly a = random_residue(g, rng);
    if (a.degree() < 1) continue;
    FqPoly b(g.field_ptr());
    if (field.characteristic() == 2) {
      // Absolute trace a + a^2 + ... + a^(2^(k r - 1)) mod g.
      const std::size_t steps = static_cast<std::size_t>(field.degree()) * r;
      FqPoly term = a;
      b = a;
      for (std::size_t i = 1; i < steps; ++i) {
        term = (term * term) % g;
        b = b + term;
      }
    } else {
      b = pow_mod(a, (ipow(q, r) - 1) / 2, g) - FqPoly::constant(g.field_ptr(), field.one());
    }
    FqPoly d = gcd(b, g);
    if (d.degree() < 1 || d.degree() >= g.degree()) continue;
    equal_degree_split(d, r, multiplicity, rng, out);
    equal_degree_split(g / d, r, multiplicity, rng, out);
    return;
  }
}

}  // namespace

FqPoly Factorization::expand(const SmallFieldPtr& field) const {
  FqPoly acc = FqPoly::constant(field, unit);
  for (const auto& [factor, mult] : factors) {
    for (std::size_t i = 0; i < mult; ++i) acc = acc * factor;
  }
  return acc;
}

bool is_irreducible(const FqPoly& f) {
  require_nonconstant(f);
  const std::size_t m = static_cast<std::size_t>(f.degree());
  if (m == 1) return true;
  const BigInt q = f.field().order();
  const FqPoly x = FqPoly::x(f.field_ptr());
  // frob[i] = x^(q^i) mod f
  std::vector<FqPoly> frob{x % f};
  for (std::size_t i = 1; i <= m; ++i) frob.push_back(pow_mod(frob.back(), q, f));
  if (frob[m] != frob[0]) return false;
  for (std::size_t r : prime_divisors(m)) {
    if (!gcd(frob[m / r] - x, f).is_one()) return false;
  }
  return true;
}

FqPoly monic_from_index(const SmallFieldPtr& field, std::size_t degree, std::uint64_t index) {
  std::vector<SmallField::Element> coeffs(degree + 1, 0);
  const std::uint64_t q = field->order();
  for (std::size_t i = 0; i < degree; ++i) {
    coeffs[i] = static_cast<SmallField::Element>(index % q);
    index /= q;
  }
  coeffs[degree] = field->one();
  return FqPoly(field, std::move(coeffs));
}

FqPoly find_irreducible(const SmallFieldPtr& field, std::size_t degree) {
  if (degree == 0) throw DomainError("irreducible polynomials have degree >= 1");
  for (std::uint64_t idx = 0;; ++idx) {
    FqPoly candidate = monic_from_index(field, degree, idx);
    if (is_irreducible(candidate)) return candidate;
  }
}

std::vector<FactorPower> squarefree_decomposition(const FqPoly& f) {
  require_nonconstant(f);
  const std::size_t p = f.field().characteristic();
  std::vector<FactorPower> out;
  FqPoly c = gcd(f, derivative(f));
  FqPoly w = monic(f) / c;
  std::size_t i = 1;
  while (!w.is_one()) {
    FqPoly y = gcd(w, c);
    FqPoly fac = w / y;
    if (!fac.is_one()) out.push_back({monic(fac), i});
    w = std::move(y);
    c = c / w;
    ++i;
  }
  if (c.degree() >= 1) {
    // Remaining part is a p-th power: its derivative vanishes.
    for (auto& [g, mult] : squarefree_decomposition(pth_root(c))) out.push_back({std::move(g), mult * p});
  }
  return out;
}

std::vector<std::pair<FqPoly, std::size_t>> distinct_degree_factorization(const FqPoly& f) {
  require_nonconstant(f);
  const BigInt q = f.field().order();
  const FqPoly x = FqPoly::x(f.field_ptr());
  std::vector<std::pair<FqPoly, std::size_t>> parts;
  FqPoly g = monic(f);
  FqPoly h = x % g;  // x^(q^r) mod g
  for (std::size_t r = 1; g.degree() >= static_cast<int>(2 * r); ++r) {
    h = pow_mod(h, q, g);
    FqPoly d = gcd(h - x, g);
    if (d.is_one()) continue;
    g = g / d;
    h = h % g;
    parts.emplace_back(std::move(d), r);
  }
  if (g.degree() >= 1) {
    const auto deg = static_cast<std::size_t>(g.degree());
    parts.emplace_back(std::move(g), deg);
  }
  return parts;
}

Factorization factor_poly(const FqPoly& f, const FactorOptions& options) {
  require_nonconstant(f);
  Factorization out{f.lead(), {}};
  // Fixed seed: the split itself is sorted below, so output never depends on it.
  std::mt19937_64 rng(0x6e6f726d616cULL);
  const std::uint64_t q = f.field().order();
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    for (const auto& [block, r] : distinct_degree_factorization(part)) {
      if (candidate_count(q, r, options.trial_division_budget) <= options.trial_division_budget) {
        trial_divide(block, r, mult, out.factors);
      } else {
        equal_degree_split(block, r, mult, rng, out.factors);
      }
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const FactorPower& a, const FactorPower& b) { return canonical_less(a.factor, b.factor); });
  // Squarefree parts are pairwise coprime, so no factor appears twice.
  return out;
}

}  // namespace nf
