// Acceptance checks: prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.
#include "normalfield/factor.hpp"
#include "normalfield/groupring.hpp"
#include "normalfield/normalcount.hpp"
#include "normalfield/normaltest.hpp"
#include "normalfield/numtheory.hpp"
#include "normalfield/parallel.hpp"
#include "normalfield/tower.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace nf;

namespace {

constexpr std::uint64_t kLimit = 1u << 16;

struct Params {
  std::uint64_t p, k, n;
};

std::string describe(const Params& s) {
  std::ostringstream os;
  os << "(" << s.p << "," << s.k << "," << s.n << ")";
  return os.str();
}

// Every (p,k,n) with q^n <= 2^16 for the small primes; larger primes would
// only add n = 1, 2 towers with nothing new to say.
std::vector<Params> sweep_range() {
  std::vector<Params> out;
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (std::uint64_t k = 1, q = p; q <= kLimit; ++k, q *= p) {
      for (std::uint64_t n = 1, size = q; size <= kLimit; ++n, size *= q) out.push_back({p, k, n});
    }
  }
  return out;
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

TowerPtr tower_for(const Params& s) {
  return FieldTower::create(static_cast<std::uint32_t>(s.p), static_cast<std::uint32_t>(s.k),
                            static_cast<std::uint32_t>(s.n));
}

FqPoly random_poly(const SmallFieldPtr& field, int degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> coeff(0, field->order() - 1);
  std::vector<std::uint32_t> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = coeff(rng);
  c.back() = 1 + coeff(rng) % (field->order() - 1);
  return FqPoly(field, c);
}

BigInt units_by_gcd(const FqPoly& f) {
  const auto& field = f.field_ptr();
  std::uint64_t total = 1;
  for (int i = 0; i < f.degree(); ++i) total *= field->order();
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < total; ++i) {
    std::vector<std::uint32_t> c;
    for (std::uint64_t r = i; r > 0; r /= field->order()) c.push_back(static_cast<std::uint32_t>(r % field->order()));
    if (gcd(FqPoly(field, c), f).is_one()) ++hits;
  }
  return hits;
}

Outcome formula_matches_brute_force(const std::vector<Params>& towers) {
  Outcome o;
  for (const auto& s : towers) {
    const BigInt formula = count_normal(s.p, s.k, s.n);
    const BigInt brute = brute_count_normal(*tower_for(s), kLimit);
    if (formula != brute) o.fail(describe(s) + " formula " + formula.str() + " vs brute " + brute.str());
  }
  o.detail = o.pass ? std::to_string(towers.size()) + " towers" : o.detail;
  return o;
}

Outcome golden_values() {
  Outcome o;
  const std::vector<std::pair<Params, int>> golden{{{2, 1, 1}, 1},  {{2, 1, 2}, 2},  {{2, 1, 3}, 3},
                                                 {{2, 1, 4}, 8},  {{2, 1, 5}, 15}, {{2, 1, 6}, 24},
                                                 {{2, 1, 7}, 49}, {{3, 1, 2}, 4},  {{2, 2, 2}, 12}};
  for (const auto& [s, want] : golden) {
    const BigInt brute = brute_count_normal(*tower_for(s), kLimit);
    const BigInt formula = count_normal(s.p, s.k, s.n);
    if (brute != want || formula != want) {
      o.fail(describe(s) + " expected " + std::to_string(want) + ", formula " + formula.str() + ", brute " +
             brute.str());
    }
  }
  o.detail = o.pass ? std::to_string(golden.size()) + " values" : o.detail;
  return o;
}

Outcome units_match_normals(const std::vector<Params>& towers) {
  Outcome o;
  for (const auto& s : towers) {
    const auto tower = tower_for(s);
    const GroupRing ring(tower);
    const BigInt formula = count_normal(s.p, s.k, s.n);
    const BigInt cyclic = count_units_cyclic(s.p, s.k, s.n);
    const BigInt listed = enumerate_units(ring, kLimit).size();
    const BigInt mod = count_units_mod(FqPoly::cyclic_modulus(tower->base_field(), s.n));
    if (formula != cyclic || formula != listed || formula != mod) {
      o.fail(describe(s) + " " + formula.str() + "/" + cyclic.str() + "/" + listed.str() + "/" + mod.str());
    }
  }
  o.detail = o.pass ? std::to_string(towers.size()) + " towers" : o.detail;
  return o;
}

Outcome torsor() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (const Params& s : std::vector<Params>{{2, 1, 2}, {2, 1, 3}, {2, 1, 4}, {2, 2, 2}, {3, 1, 2}}) {
    const auto tower = tower_for(s);
    const GroupRing ring(tower);
    const auto normals = enumerate_normal(*tower, kLimit);
    const auto units = enumerate_units(ring, kLimit);
    std::set<std::uint64_t> normal_set, image;
    for (const auto& a : normals) normal_set.insert(tower->index_of(a));
    const auto& alpha = normals.front();
    for (const auto& u : units) {
      const auto beta = ring.act(u, alpha);
      if (!image.insert(tower->index_of(beta)).second) o.fail(describe(s) + " action not injective");
      if (beta == alpha && !(u == ring.one())) o.fail(describe(s) + " nontrivial stabilizer " + ring.format(u));
      if (!(ring.transporter(alpha, beta) == u)) o.fail(describe(s) + " transporter mismatch at " + ring.format(u));
    }
    if (image != normal_set) o.fail(describe(s) + " image differs from the normal set");
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 10.0) o.fail("took " + std::to_string(secs) + " s");
  if (o.pass) {
    std::ostringstream os;
    os << "5 extensions in " << std::fixed << std::setprecision(3) << secs << " s";
    o.detail = os.str();
  }
  return o;
}

Outcome criteria_agree(const std::vector<Params>& towers) {
  Outcome o;
  std::uint64_t elements = 0;
  for (const auto& s : towers) {
    const auto tower = tower_for(s);
    const auto size = require_enumerable(*tower, kLimit);
    const FqPoly modulus = FqPoly::cyclic_modulus(tower->base_field(), s.n);
    const bool ok = parallel_all(size, [&](std::uint64_t i) {
      const auto a = tower->element_at(i);
      const bool rank = is_normal(*tower, a);
      const bool by_gcd = is_normal_gcd(*tower, a);
      const FqPoly ord = order_poly(*tower, a);
      return rank == by_gcd && rank == (ord == modulus) && divides(ord, modulus);
    });
    if (!ok) o.fail(describe(s) + " criteria disagree");
    elements += size;
  }
  o.detail = o.pass ? std::to_string(elements) + " elements" : o.detail;
  return o;
}

bool is_p_power(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

Outcome trace_properties(const std::vector<Params>& towers) {
  Outcome o;
  int equivalence_towers = 0;
  for (const auto& s : towers) {
    const auto tower = tower_for(s);
    const auto size = require_enumerable(*tower, kLimit);
    const bool p_power = is_p_power(s.n, s.p);
    const bool ok = parallel_all(size, [&](std::uint64_t i) {
      const auto a = tower->element_at(i);
      const bool normal = is_normal(*tower, a);
      const bool trace_nonzero = !tower->is_zero(tower->trace(a));
      if (normal && !trace_nonzero) return false;
      return !p_power || normal == trace_nonzero;
    });
    if (!ok) o.fail(describe(s) + (p_power ? " trace equivalence fails" : " normal element with zero trace"));
    equivalence_towers += p_power;
  }
  o.detail = o.pass ? std::to_string(equivalence_towers) + " towers with n a power of p" : o.detail;
  return o;
}

Outcome orbits_match_factors() {
  Outcome o;
  const std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> cases{
      {2, 1, 7}, {2, 1, 5}, {2, 1, 15}, {3, 1, 8}, {2, 2, 9}};
  for (const auto& [p, k, d] : cases) {
    const auto field = FieldTower::create(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k), 1)->base_field();
    const BigInt q = field->order();
    std::multiset<std::uint64_t> predicted, actual;
    BigInt phi_sum = 0;
    for (const auto& e : orbit_structure(q, d).entries) {
      phi_sum += totient(e.e);
      for (BigInt c = 0; c < e.count; ++c) predicted.insert(static_cast<std::uint64_t>(e.order));
    }
    for (const auto& fp : factor_poly(FqPoly::cyclic_modulus(field, d)).factors) {
      for (std::size_t m = 0; m < fp.multiplicity; ++m) actual.insert(static_cast<std::uint64_t>(fp.factor.degree()));
    }
    const std::string tag = "(q=" + q.str() + ",d=" + std::to_string(d) + ")";
    if (predicted != actual) o.fail(tag + " factor degrees differ from orbit lengths");
    if (phi_sum != d) o.fail(tag + " totients sum to " + phi_sum.str());
  }
  o.detail = o.pass ? std::to_string(cases.size()) + " cases" : o.detail;
  return o;
}

Outcome unit_count_multiplicative() {
  Outcome o;
  std::mt19937_64 rng(20181906);
  int pairs = 0, brute = 0;
  for (std::uint32_t p : {2u, 3u}) {
    const auto field = FieldTower::create(p, 1, 1)->base_field();
    std::uniform_int_distribution<int> deg(1, 6);
    for (int found = 0; found < 200;) {
      const FqPoly f = random_poly(field, deg(rng), rng);
      const FqPoly g = random_poly(field, deg(rng), rng);
      if (gcd(f, g).degree() != 0) continue;
      ++found;
      ++pairs;
      if (count_units_mod(f * g) != count_units_mod(f) * count_units_mod(g)) {
        o.fail("multiplicativity fails for " + to_string(f) + " and " + to_string(g));
      }
    }
    std::uniform_int_distribution<int> small_deg(1, 8);
    for (int i = 0; i < 40; ++i) {
      const FqPoly f = random_poly(field, small_deg(rng), rng);
      ++brute;
      if (count_units_mod(f) != units_by_gcd(f)) o.fail("unit count of " + to_string(f) + " disagrees with search");
    }
  }
  o.detail = o.pass ? std::to_string(pairs) + " coprime pairs, " + std::to_string(brute) + " brute counts" : o.detail;
  return o;
}

Outcome additive_matches_action() {
  Outcome o;
  for (const Params& s : std::vector<Params>{{2, 1, 3}, {3, 1, 2}}) {
    const auto tower = tower_for(s);
    const GroupRing ring(tower);
    const auto size = static_cast<std::uint64_t>(tower->order());
    for (std::uint64_t i = 0; i < size; ++i) {
      const auto u = ring.element_at(i);
      const auto f = ring.to_additive(u);
      for (std::uint64_t j = 0; j < size; ++j) {
        const auto a = tower->element_at(j);
        if (!(ring.eval_additive(f, a) == ring.act(u, a))) {
          o.fail(describe(s) + " u=" + ring.format(u) + " alpha=" + tower->format(a));
        }
      }
    }
  }
  o.detail = o.pass ? "F_8/F_2 and F_9/F_3 exhaustive" : o.detail;
  return o;
}

}  // namespace

int main() {
  const auto towers = sweep_range();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> checks{
      {"count formula equals brute-force count", [&] { return formula_matches_brute_force(towers); }},
      {"golden normal-element counts", golden_values},
      {"unit counts equal normal counts", [&] { return units_match_normals(towers); }},
      {"units act freely and transitively on normal elements", torsor},
      {"rank, gcd and order-polynomial criteria agree", [&] { return criteria_agree(towers); }},
      {"trace criterion", [&] { return trace_properties(towers); }},
      {"factor degrees of x^d-1 match Frobenius orbits", orbits_match_factors},
      {"unit count is multiplicative and matches search", unit_count_multiplicative},
      {"additive polynomial evaluation matches group-ring action", additive_matches_action},
  };
  bool all = true;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome r;
    try {
      r = checks[i].second();
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && r.pass;
    std::cout << (r.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << checks[i].first << ": " << r.detail << " ("
              << std::fixed << std::setprecision(2) << secs << " s)" << std::endl;
  }
  return all ? 0 : 1;
}
