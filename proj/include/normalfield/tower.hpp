#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "normalfield/factor.hpp"
#include "normalfield/numtheory.hpp"
#include "normalfield/poly.hpp"
#include "normalfield/small_field.hpp"

namespace nf {

// Element of F_{q^n} = F_q[y]/(top_poly): n F_q codes, coefficient of y^0
// first. tower_id ties the element to the tower that produced it.
struct FieldElement {
  using Coeffs = boost::container::small_vector<std::uint32_t, 16>;

  Coeffs coeffs;
  std::uint64_t tower_id = 0;

  bool operator==(const FieldElement&) const = default;
};

// F_p < F_q < F_{q^n}. Immutable once built; always owned by shared_ptr so
// polynomials over F_{q^n} can hold on to it.
class FieldTower : public std::enable_shared_from_this<FieldTower> {
 public:
  using Element = FieldElement;

  // Defining polynomials chosen by find_irreducible.
  static std::shared_ptr<const FieldTower> create(std::uint32_t p, std::uint32_t k, std::uint32_t n);

  // base_poly: F_p digits of a monic irreducible of degree k.
  // top_poly: F_q codes of a monic irreducible of degree n over F_q.
  // Invalid polynomials raise UsageError.
  static std::shared_ptr<const FieldTower> create(std::uint32_t p, const std::vector<std::uint32_t>& base_poly,
                                                  const std::vector<std::uint32_t>& top_poly);

  std::uint32_t characteristic() const { return base_->characteristic(); }
  std::uint32_t k() const { return base_->degree(); }
  std::uint32_t n() const { return n_; }
  std::uint32_t q() const { return base_->order(); }
  // q^n
  BigInt order() const;

  const SmallFieldPtr& base_field() const { return base_; }
  const SmallFieldPtr& prime_field() const { return prime_; }
  const FqPoly& base_poly() const { return base_poly_; }
  const FqPoly& top_poly() const { return top_poly_; }
  std::uint64_t id() const { return id_; }

  // Field interface used by Poly<FieldTower>.
  FieldElement zero() const;
  FieldElement one() const;
  bool is_zero(const FieldElement& a) const;
  bool contains(const FieldElement& a) const;
  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  // DomainError on zero.
  FieldElement inv(const FieldElement& a) const;
  FieldElement pow(const FieldElement& a, const BigInt& e) const;
  std::string format(const FieldElement& a) const;
  bool operator==(const FieldTower& other) const { return id_ == other.id_; }

  // F_q-scalar multiple.
  FieldElement scale(const FieldElement& a, std::uint32_t c) const;

  // Validates length and canonical range of the codes.
  FieldElement element(std::span<const std::uint32_t> codes) const;
  // Image of c in F_q under F_q -> F_{q^n}.
  FieldElement embed(std::uint32_t c) const;
  // The class of y.
  FieldElement generator() const;

  // Canonical enumeration order: the codes are base-q digits of the index,
  // constant coefficient least significant. Requires q^n < 2^64.
  FieldElement element_at(std::uint64_t index) const;
  std::uint64_t index_of(const FieldElement& a) const;

  // sigma^i(a) = a^(q^i) by i applications of the one-step map.
  FieldElement frobenius(const FieldElement& a, std::uint64_t i = 1) const;
  // a^q by square-and-multiply; the reference route for the one-step map.
  FieldElement frobenius_by_power(const FieldElement& a) const;
  // sum of the n conjugates; lies in F_q.
  FieldElement trace(const FieldElement& a) const;
  // sigma^i(a) for i = 0..n-1.
  std::vector<FieldElement> orbit(const FieldElement& a) const;

  // UsageError unless a was produced by this tower.
  void require(const FieldElement& a) const;

  std::shared_ptr<const FieldTower> ptr() const { return shared_from_this(); }

 private:
  FieldTower(SmallFieldPtr prime, SmallFieldPtr base, FqPoly base_poly, FqPoly top_poly);

  void apply_frobenius(const FieldElement::Coeffs& in, FieldElement::Coeffs& out) const;

  SmallFieldPtr prime_;
  SmallFieldPtr base_;
  FqPoly base_poly_;
  FqPoly top_poly_;
  std::uint32_t n_;
  std::uint64_t id_;
  std::vector<std::uint32_t> reduction_;  // -top_poly coefficients below y^n
  std::vector<std::uint32_t> frobenius_matrix_;  // row-major; column j = sigma(y^j)
};

using TowerPtr = std::shared_ptr<const FieldTower>;

}  // namespace nf
