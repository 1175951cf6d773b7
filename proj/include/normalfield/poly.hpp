#pragma once

#include <algorithm>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "normalfield/errors.hpp"
#include "normalfield/numtheory.hpp"

namespace nf {

// Dense univariate polynomial over `Field`, constant term first. The stored
// coefficient vector never ends in a zero; the zero polynomial is empty.
//
// Field must provide Element, zero(), one(), is_zero(), contains(), add(),
// sub(), neg(), mul(), inv(), format() and structural operator==.
template <class Field>
class Poly {
 public:
  using Element = typename Field::Element;
  using FieldPtr = std::shared_ptr<const Field>;

  explicit Poly(FieldPtr field) : field_(std::move(field)) {}

  Poly(FieldPtr field, std::vector<Element> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (const Element& c : coeffs_) {
      if (!field_->contains(c)) throw UsageError("polynomial coefficient outside its field");
    }
    trim();
  }

  static Poly constant(FieldPtr field, Element c) { return Poly(std::move(field), {std::move(c)}); }

  static Poly monomial(FieldPtr field, Element c, std::size_t degree) {
    std::vector<Element> coeffs(degree + 1, field->zero());
    coeffs[degree] = std::move(c);
    return Poly(std::move(field), std::move(coeffs));
  }

  static Poly x(FieldPtr field) {
    Element one = field->one();
    return monomial(std::move(field), one, 1);
  }

  // x^n - 1
  static Poly cyclic_modulus(FieldPtr field, std::size_t n) {
    std::vector<Element> coeffs(n + 1, field->zero());
    coeffs[0] = field->neg(field->one());
    coeffs[n] = field->one();
    return Poly(std::move(field), std::move(coeffs));
  }

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  const std::vector<Element>& coeffs() const { return coeffs_; }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == field_->one(); }
  const Element& lead() const { return coeffs_.back(); }
  Element coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_->zero(); }

  bool same_field(const Poly& other) const {
    return field_ == other.field_ || *field_ == *other.field_;
  }

  void require_same_field(const Poly& other) const {
    if (!same_field(other)) throw UsageError("polynomials are over different coefficient fields");
  }

  bool operator==(const Poly& other) const { return same_field(other) && coeffs_ == other.coeffs_; }

  // Callers that mutate coefficients through this must call trim().
  std::vector<Element>& mutable_coeffs() { return coeffs_; }

  void trim() {
    while (!coeffs_.empty() && field_->is_zero(coeffs_.back())) coeffs_.pop_back();
  }

 private:
  FieldPtr field_;
  std::vector<Element> coeffs_;
};

template <class F>
Poly<F> operator+(const Poly<F>& a, const Poly<F>& b) {
  a.require_same_field(b);
  const F& f = a.field();
  std::vector<typename F::Element> out(std::max(a.coeffs().size(), b.coeffs().size()), f.zero());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(a.coeff(i), b.coeff(i));
  return Poly<F>(a.field_ptr(), std::move(out));
}

template <class F>
Poly<F> operator-(const Poly<F>& a) {
  const F& f = a.field();
  std::vector<typename F::Element> out(a.coeffs().size(), f.zero());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.neg(a.coeffs()[i]);
  return Poly<F>(a.field_ptr(), std::move(out));
}

template <class F>
Poly<F> operator-(const Poly<F>& a, const Poly<F>& b) {
  a.require_same_field(b);
  const F& f = a.field();
  std::vector<typename F::Element> out(std::max(a.coeffs().size(), b.coeffs().size()), f.zero());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(a.coeff(i), b.coeff(i));
  return Poly<F>(a.field_ptr(), std::move(out));
}

template <class F>
Poly<F> operator*(const Poly<F>& a, const Poly<F>& b) {
  a.require_same_field(b);
  if (a.is_zero() || b.is_zero()) return Poly<F>(a.field_ptr());
  const F& f = a.field();
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  std::vector<typename F::Element> out(ac.size() + bc.size() - 1, f.zero());
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (f.is_zero(ac[i])) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(ac[i], bc[j]));
  }
  return Poly<F>(a.field_ptr(), std::move(out));
}

template <class F>
Poly<F> scale(const Poly<F>& a, const typename F::Element& c) {
  const F& f = a.field();
  std::vector<typename F::Element> out(a.coeffs().size(), f.zero());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.mul(a.coeffs()[i], c);
  return Poly<F>(a.field_ptr(), std::move(out));
}

template <class F>
Poly<F> monic(const Poly<F>& a) {
  if (a.is_zero()) return a;
  return scale(a, a.field().inv(a.lead()));
}

// Quotient and remainder; DomainError when dividing by zero.
template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
  a.require_same_field(b);
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const F& f = a.field();
  if (a.degree() < b.degree()) return {Poly<F>(a.field_ptr()), a};
  const auto& bc = b.coeffs();
  const auto lead_inv = f.inv(b.lead());
  std::vector<typename F::Element> rem = a.coeffs();
  std::vector<typename F::Element> quot(rem.size() - bc.size() + 1, f.zero());
  for (std::size_t shift = quot.size(); shift-- > 0;) {
    const std::size_t top = shift + bc.size() - 1;
    if (f.is_zero(rem[top])) continue;
    auto factor = f.mul(rem[top], lead_inv);
    quot[shift] = factor;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[shift + j] = f.sub(rem[shift + j], f.mul(factor, bc[j]));
  }
  rem.resize(bc.size() - 1);
  return {Poly<F>(a.field_ptr(), std::move(quot)), Poly<F>(a.field_ptr(), std::move(rem))};
}

template <class F>
Poly<F> operator/(const Poly<F>& a, const Poly<F>& b) {
  return divmod(a, b).first;
}

template <class F>
Poly<F> operator%(const Poly<F>& a, const Poly<F>& b) {
  return divmod(a, b).second;
}

template <class F>
bool divides(const Poly<F>& d, const Poly<F>& a) {
  return (a % d).is_zero();
}

// Monic gcd; gcd(0, 0) = 0.
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  a.require_same_field(b);
  while (!b.is_zero()) {
    Poly<F> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

template <class F>
struct ExtGcd {
  Poly<F> g;  // monic gcd
  Poly<F> s;  // s*a + t*b = g
  Poly<F> t;
};

template <class F>
ExtGcd<F> ext_gcd(const Poly<F>& a, const Poly<F>& b) {
  a.require_same_field(b);
  auto field = a.field_ptr();
  Poly<F> r0 = a, r1 = b;
  Poly<F> s0 = Poly<F>::constant(field, field->one()), s1(field);
  Poly<F> t0(field), t1 = Poly<F>::constant(field, field->one());
  while (!r1.is_zero()) {
    auto [quot, rem] = divmod(r0, r1);
    Poly<F> s2 = s0 - quot * s1;
    Poly<F> t2 = t0 - quot * t1;
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  auto c = field->inv(r0.lead());
  return {scale(r0, c), scale(s0, c), scale(t0, c)};
}

template <class F>
Poly<F> derivative(const Poly<F>& a) {
  const F& f = a.field();
  if (a.degree() < 1) return Poly<F>(a.field_ptr());
  std::vector<typename F::Element> out(a.coeffs().size() - 1, f.zero());
  for (std::size_t i = 1; i < a.coeffs().size(); ++i) {
    // i * a_i as repeated addition keeps this generic over the field type.
    typename F::Element acc = f.zero();
    const std::size_t reps = i % f.characteristic();
    for (std::size_t r = 0; r < reps; ++r) acc = f.add(acc, a.coeffs()[i]);
    out[i - 1] = acc;
  }
  return Poly<F>(a.field_ptr(), std::move(out));
}

// base^exp mod modulus.
template <class F>
Poly<F> pow_mod(Poly<F> base, BigInt exp, const Poly<F>& modulus) {
  base = base % modulus;
  Poly<F> result = Poly<F>::constant(base.field_ptr(), base.field().one()) % modulus;
  while (exp > 0) {
    if ((exp & 1) != 0) result = (result * base) % modulus;
    exp >>= 1;
    if (exp > 0) base = (base * base) % modulus;
  }
  return result;
}

template <class F>
std::string to_string(const Poly<F>& a) {
  if (a.is_zero()) return "0";
  const F& f = a.field();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    const auto& c = a.coeffs()[i];
    if (f.is_zero(c)) continue;
    if (!first) os << " + ";
    first = false;
    std::string cs = f.format(c);
    bool unit = c == f.one();
    bool compound = cs.find_first_of(",;") != std::string::npos;
    if (i == 0) {
      os << (compound ? "(" + cs + ")" : cs);
      continue;
    }
    if (!unit) os << (compound ? "(" + cs + ")" : cs) << '*';
    os << 'x';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

}  // namespace nf
