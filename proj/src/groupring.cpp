#include "normalfield/groupring.hpp"

#include <sstream>

#include "normalfield/errors.hpp"
#include "normalfield/linalg.hpp"
#include "normalfield/parallel.hpp"

namespace nf {

GroupRing::GroupRing(TowerPtr tower) : tower_(std::move(tower)) {
  if (!tower_) throw UsageError("group ring needs a tower");
}

void GroupRing::require(const GroupRingElement& u) const {
  if (u.tower_id != tower_->id() || u.coeffs.size() != n()) {
    throw UsageError("group ring element does not belong to this tower");
  }
}

void GroupRing::require(const AdditivePoly& f) const {
  if (f.tower_id != tower_->id() || f.coeffs.size() != n()) {
    throw UsageError("additive polynomial does not belong to this tower");
  }
}

GroupRingElement GroupRing::element(std::span<const std::uint32_t> codes) const {
  if (codes.size() != n()) {
    throw UsageError("expected " + std::to_string(n()) + " group ring coefficients, got " + std::to_string(codes.size()));
  }
  for (auto c : codes) {
    if (!tower_->base_field()->contains(c)) throw UsageError("coefficient code " + std::to_string(c) + " outside F_q");
  }
  return {std::vector<std::uint32_t>(codes.begin(), codes.end()), tower_->id()};
}

GroupRingElement GroupRing::zero() const { return {std::vector<std::uint32_t>(n(), 0), tower_->id()}; }

GroupRingElement GroupRing::one() const { return monomial(0); }

GroupRingElement GroupRing::monomial(std::uint64_t i) const {
  GroupRingElement out = zero();
  out.coeffs[i % n()] = 1;
  return out;
}

GroupRingElement GroupRing::element_at(std::uint64_t index) const {
  GroupRingElement out = zero();
  const std::uint32_t q = tower_->q();
  for (auto& c : out.coeffs) {
    c = static_cast<std::uint32_t>(index % q);
    index /= q;
  }
  return out;
}

GroupRingElement GroupRing::add(const GroupRingElement& u, const GroupRingElement& v) const {
  require(u);
  require(v);
  GroupRingElement out = u;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] = tower_->base_field()->add(u.coeffs[i], v.coeffs[i]);
  return out;
}

GroupRingElement GroupRing::scale(const GroupRingElement& u, std::uint32_t c) const {
  require(u);
  GroupRingElement out = u;
  for (auto& x : out.coeffs) x = tower_->base_field()->mul(x, c);
  return out;
}

GroupRingElement GroupRing::mul(const GroupRingElement& u, const GroupRingElement& v) const {
  require(u);
  require(v);
  const SmallField& f = *tower_->base_field();
  const std::size_t len = n();
  GroupRingElement out = zero();
  for (std::size_t i = 0; i < len; ++i) {
    if (u.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < len; ++j) {
      const std::size_t at = (i + j) % len;
      out.coeffs[at] = f.add(out.coeffs[at], f.mul(u.coeffs[i], v.coeffs[j]));
    }
  }
  return out;
}

FqPoly GroupRing::to_poly(const GroupRingElement& u) const {
  require(u);
  return FqPoly(tower_->base_field(), u.coeffs);
}

GroupRingElement GroupRing::from_poly(const FqPoly& f) const {
  if (!(f.field() == *tower_->base_field())) throw UsageError("polynomial is not over this tower's F_q");
  const SmallField& field = *tower_->base_field();
  GroupRingElement out = zero();
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const std::size_t at = i % n();
    out.coeffs[at] = field.add(out.coeffs[at], f.coeffs()[i]);
  }
  return out;
}

bool GroupRing::is_unit(const GroupRingElement& u) const {
  return gcd(to_poly(u), FqPoly::cyclic_modulus(tower_->base_field(), n())).is_one();
}

GroupRingElement GroupRing::inverse(const GroupRingElement& u) const {
  auto eg = ext_gcd(to_poly(u), FqPoly::cyclic_modulus(tower_->base_field(), n()));
  if (!eg.g.is_one()) throw DomainError("group ring element " + format(u) + " is not a unit");
  return from_poly(eg.s);
}

FieldElement GroupRing::act(const GroupRingElement& u, const FieldElement& a) const {
  require(u);
  const auto conjugates = tower_->orbit(a);
  FieldElement acc = tower_->zero();
  for (std::size_t i = 0; i < n(); ++i) {
    if (u.coeffs[i] != 0) acc = tower_->add(acc, tower_->scale(conjugates[i], u.coeffs[i]));
  }
  return acc;
}

GroupRingElement GroupRing::transporter(const FieldElement& alpha, const FieldElement& beta) const {
  if (!is_normal(*tower_, alpha)) throw DomainError(tower_->format(alpha) + " is not a normal element");
  if (!is_normal(*tower_, beta)) throw DomainError(tower_->format(beta) + " is not a normal element");
  const std::size_t len = n();
  Matrix basis(len, len);
  const auto conjugates = tower_->orbit(alpha);
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t r = 0; r < len; ++r) basis.at(r, i) = conjugates[i].coeffs[r];
  }
  auto u = solve(*tower_->base_field(), std::move(basis), std::vector<std::uint32_t>(beta.coeffs.begin(), beta.coeffs.end()));
  if (!u) throw std::logic_error("orbit of a normal element is singular");
  return {std::move(*u), tower_->id()};
}

AdditivePoly GroupRing::to_additive(const GroupRingElement& u) const {
  require(u);
  return {u.coeffs, u.tower_id};
}

FieldElement GroupRing::eval_additive(const AdditivePoly& f, const FieldElement& alpha) const {
  require(f);
  return eval_linearized(*tower_, f.coeffs, alpha);
}

AdditivePoly GroupRing::compose(const AdditivePoly& f, const AdditivePoly& g) const {
  require(f);
  require(g);
  // (a X^(q^i)) o (b X^(q^j)) = a b^(q^i) X^(q^(i+j)) and b^(q^i) = b for b in
  // F_q; X^(q^n) acts as X on F_{q^n}.
  const SmallField& field = *tower_->base_field();
  AdditivePoly out{std::vector<std::uint32_t>(n(), 0), tower_->id()};
  for (std::size_t i = 0; i < n(); ++i) {
    for (std::size_t j = 0; j < n(); ++j) {
      const std::size_t at = (i + j) % n();
      out.coeffs[at] = field.add(out.coeffs[at], field.mul(f.coeffs[i], g.coeffs[j]));
    }
  }
  return out;
}

std::string GroupRing::format(const GroupRingElement& u) const {
  std::ostringstream os;
  const SmallField& field = *tower_->base_field();
  for (std::size_t i = 0; i < u.coeffs.size(); ++i) {
    if (i) os << ';';
    os << field.format(u.coeffs[i]);
  }
  return os.str();
}

FieldElement eval_linearized(const FieldTower& tower, std::span<const std::uint32_t> coeffs, const FieldElement& alpha) {
  tower.require(alpha);
  FieldElement acc = tower.zero();
  FieldElement power = alpha;  // alpha^(q^i)
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i > 0) power = tower.frobenius_by_power(power);
    if (coeffs[i] != 0) acc = tower.add(acc, tower.scale(power, coeffs[i]));
  }
  return acc;
}

std::vector<std::uint32_t> minimal_additive_poly(const FieldTower& tower, const FieldElement& alpha) {
  return order_poly(tower, alpha).coeffs();
}

std::vector<GroupRingElement> enumerate_units(const GroupRing& ring, std::uint64_t limit) {
  const std::uint64_t total = require_enumerable(ring.tower(), limit);
  std::vector<GroupRingElement> out;
  for (std::uint64_t i : parallel_select(total, [&](std::uint64_t i) { return ring.is_unit(ring.element_at(i)); })) {
    out.push_back(ring.element_at(i));
  }
  return out;
}

namespace serial {

std::vector<GroupRingElement> enumerate_units(const GroupRing& ring, std::uint64_t limit) {
  const std::uint64_t total = require_enumerable(ring.tower(), limit);
  std::vector<GroupRingElement> out;
  for (std::uint64_t i = 0; i < total; ++i) {
    GroupRingElement u = ring.element_at(i);
    if (ring.is_unit(u)) out.push_back(std::move(u));
  }
  return out;
}

}  // namespace serial

}  // namespace nf
