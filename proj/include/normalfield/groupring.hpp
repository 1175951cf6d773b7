#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "normalfield/normaltest.hpp"
#include "normalfield/tower.hpp"

namespace nf {

// u = sum_i u_i sigma^i in F_q[<sigma>], stored as F_q codes with u_i the
// coefficient of x^i under sigma -> x.
struct GroupRingElement {
  std::vector<std::uint32_t> coeffs;
  std::uint64_t tower_id = 0;

  bool operator==(const GroupRingElement&) const = default;
};

// sum_i a_i X^(q^i), i = 0..n-1, viewed as a map on F_{q^n}.
struct AdditivePoly {
  std::vector<std::uint32_t> coeffs;
  std::uint64_t tower_id = 0;

  bool operator==(const AdditivePoly&) const = default;
};

// The group algebra of Gal(F_{q^n}/F_q) over F_q, i.e. F_q[x]/(x^n - 1), and
// its action on F_{q^n}.
class GroupRing {
 public:
  explicit GroupRing(TowerPtr tower);

  const FieldTower& tower() const { return *tower_; }
  std::uint32_t n() const { return tower_->n(); }

  GroupRingElement element(std::span<const std::uint32_t> codes) const;
  GroupRingElement zero() const;
  GroupRingElement one() const;
  // x^i, i.e. sigma^i.
  GroupRingElement monomial(std::uint64_t i) const;
  GroupRingElement element_at(std::uint64_t index) const;

  GroupRingElement add(const GroupRingElement& u, const GroupRingElement& v) const;
  GroupRingElement scale(const GroupRingElement& u, std::uint32_t c) const;
  // Cyclic convolution.
  GroupRingElement mul(const GroupRingElement& u, const GroupRingElement& v) const;

  FqPoly to_poly(const GroupRingElement& u) const;
  // f mod x^n - 1.
  GroupRingElement from_poly(const FqPoly& f) const;

  bool is_unit(const GroupRingElement& u) const;
  // Extended Euclid against x^n - 1; DomainError for non-units.
  GroupRingElement inverse(const GroupRingElement& u) const;

  // sum_i u_i sigma^i(a)
  FieldElement act(const GroupRingElement& u, const FieldElement& a) const;

  // The unique u with act(u, alpha) = beta. DomainError unless both are normal.
  GroupRingElement transporter(const FieldElement& alpha, const FieldElement& beta) const;

  AdditivePoly to_additive(const GroupRingElement& u) const;
  // sum_i a_i alpha^(q^i), powers taken by repeated exponentiation.
  FieldElement eval_additive(const AdditivePoly& f, const FieldElement& alpha) const;
  // f o g reduced modulo X^(q^n) - X.
  AdditivePoly compose(const AdditivePoly& f, const AdditivePoly& g) const;

  std::string format(const GroupRingElement& u) const;

  void require(const GroupRingElement& u) const;
  void require(const AdditivePoly& f) const;

 private:
  TowerPtr tower_;
};

// Units of the group ring in canonical order (OpenMP over index slices).
std::vector<GroupRingElement> enumerate_units(const GroupRing& ring,
                                              std::uint64_t limit = kDefaultEnumerationLimit);

namespace serial {
std::vector<GroupRingElement> enumerate_units(const GroupRing& ring, std::uint64_t limit = kDefaultEnumerationLimit);
}  // namespace serial

// Evaluates sum_i c_i alpha^(q^i) for any number of coefficients.
FieldElement eval_linearized(const FieldTower& tower, std::span<const std::uint32_t> coeffs, const FieldElement& alpha);

// Coefficients of the minimal additive polynomial of alpha: c_i multiplies
// X^(q^i). The additive lift of order_poly.
std::vector<std::uint32_t> minimal_additive_poly(const FieldTower& tower, const FieldElement& alpha);

}  // namespace nf
