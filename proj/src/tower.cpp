#include "normalfield/tower.hpp"

#include <sstream>

#include "normalfield/errors.hpp"

namespace nf {

namespace {

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xff;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::shared_ptr<const FieldTower> FieldTower::create(std::uint32_t p, std::uint32_t k, std::uint32_t n) {
  if (k == 0 || n == 0) throw UsageError("k and n must be positive");
  auto prime = SmallField::prime(p);
  FqPoly base_poly = find_irreducible(prime, k);
  auto base = SmallField::extension(p, base_poly.coeffs());
  FqPoly top_poly = find_irreducible(base, n);
  return std::shared_ptr<const FieldTower>(
      new FieldTower(std::move(prime), std::move(base), std::move(base_poly), std::move(top_poly)));
}

std::shared_ptr<const FieldTower> FieldTower::create(std::uint32_t p, const std::vector<std::uint32_t>& base_digits,
                                                     const std::vector<std::uint32_t>& top_codes) {
  auto prime = SmallField::prime(p);
  auto base = SmallField::extension(p, base_digits);
  FqPoly base_poly(prime, base_digits);
  for (std::uint32_t c : top_codes) {
    if (!base->contains(c)) {
      throw UsageError("top polynomial coefficient " + std::to_string(c) + " is not a code in F_" +
                       std::to_string(base->order()));
    }
  }
  FqPoly top_poly(base, top_codes);
  if (top_poly.degree() < 1) throw UsageError("top polynomial must have degree >= 1");
  if (top_poly.lead() != base->one()) throw UsageError("top polynomial must be monic");
  if (!is_irreducible(top_poly)) {
    throw UsageError("top polynomial " + to_string(top_poly) + " is reducible over F_" + std::to_string(base->order()));
  }
  return std::shared_ptr<const FieldTower>(
      new FieldTower(std::move(prime), std::move(base), std::move(base_poly), std::move(top_poly)));
}

FieldTower::FieldTower(SmallFieldPtr prime, SmallFieldPtr base, FqPoly base_poly, FqPoly top_poly)
    : prime_(std::move(prime)),
      base_(std::move(base)),
      base_poly_(std::move(base_poly)),
      top_poly_(std::move(top_poly)),
      n_(static_cast<std::uint32_t>(top_poly_.degree())) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  h = fnv1a(h, base_->characteristic());
  for (auto c : base_poly_.coeffs()) h = fnv1a(h, c);
  h = fnv1a(h, 0xffffffffULL);
  for (auto c : top_poly_.coeffs()) h = fnv1a(h, c);
  id_ = h == 0 ? 1 : h;

  reduction_.resize(n_);
  for (std::uint32_t j = 0; j < n_; ++j) reduction_[j] = base_->neg(top_poly_.coeff(j));

  frobenius_matrix_.assign(std::size_t{n_} * n_, 0);
  FieldElement power = one();
  const FieldElement y = generator();
  for (std::uint32_t j = 0; j < n_; ++j) {
    FieldElement image = frobenius_by_power(power);
    for (std::uint32_t r = 0; r < n_; ++r) frobenius_matrix_[std::size_t{r} * n_ + j] = image.coeffs[r];
    power = mul(power, y);
  }
}

BigInt FieldTower::order() const { return ipow(q(), n_); }

FieldElement FieldTower::zero() const { return FieldElement{FieldElement::Coeffs(n_, 0), id_}; }

FieldElement FieldTower::one() const { return embed(base_->one()); }

bool FieldTower::is_zero(const FieldElement& a) const {
  for (auto c : a.coeffs) {
    if (c != 0) return false;
  }
  return true;
}

bool FieldTower::contains(const FieldElement& a) const {
  if (a.tower_id != id_ || a.coeffs.size() != n_) return false;
  for (auto c : a.coeffs) {
    if (!base_->contains(c)) return false;
  }
  return true;
}

void FieldTower::require(const FieldElement& a) const {
  if (a.tower_id != id_ || a.coeffs.size() != n_) {
    throw UsageError("field element does not belong to this tower");
  }
}

FieldElement FieldTower::add(const FieldElement& a, const FieldElement& b) const {
  require(a);
  require(b);
  FieldElement out = a;
  for (std::uint32_t i = 0; i < n_; ++i) out.coeffs[i] = base_->add(a.coeffs[i], b.coeffs[i]);
  return out;
}

FieldElement FieldTower::sub(const FieldElement& a, const FieldElement& b) const {
  require(a);
  require(b);
  FieldElement out = a;
  for (std::uint32_t i = 0; i < n_; ++i) out.coeffs[i] = base_->sub(a.coeffs[i], b.coeffs[i]);
  return out;
}

FieldElement FieldTower::neg(const FieldElement& a) const {
  require(a);
  FieldElement out = a;
  for (auto& c : out.coeffs) c = base_->neg(c);
  return out;
}

FieldElement FieldTower::scale(const FieldElement& a, std::uint32_t c) const {
  require(a);
  FieldElement out = a;
  for (auto& v : out.coeffs) v = base_->mul(v, c);
  return out;
}

FieldElement FieldTower::mul(const FieldElement& a, const FieldElement& b) const {
  require(a);
  require(b);
  const SmallField& f = *base_;
  boost::container::small_vector<std::uint32_t, 32> prod(2 * n_ - 1, 0);
  for (std::uint32_t i = 0; i < n_; ++i) {
    const auto ai = a.coeffs[i];
    if (ai == 0) continue;
    for (std::uint32_t j = 0; j < n_; ++j) prod[i + j] = f.add(prod[i + j], f.mul(ai, b.coeffs[j]));
  }
  // y^n = sum_j reduction_[j] y^j
  for (std::size_t top = prod.size(); top-- > n_;) {
    const auto c = prod[top];
    if (c == 0) continue;
    const std::size_t base = top - n_;
    for (std::uint32_t j = 0; j < n_; ++j) prod[base + j] = f.add(prod[base + j], f.mul(c, reduction_[j]));
  }
  FieldElement out{FieldElement::Coeffs(prod.begin(), prod.begin() + n_), id_};
  return out;
}

FieldElement FieldTower::inv(const FieldElement& a) const {
  require(a);
  if (is_zero(a)) throw DomainError("inverse of zero in F_{q^n}");
  // Extended Euclid in F_q[y] against top_poly, tracking s with s*a = r.
  const SmallField& f = *base_;
  using Vec = boost::container::small_vector<std::uint32_t, 24>;
  auto trim = [](Vec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  Vec r0(top_poly_.coeffs().begin(), top_poly_.coeffs().end());
  Vec r1(a.coeffs.begin(), a.coeffs.end());
  Vec s0;
  Vec s1{f.one()};
  trim(r1);
  while (r1.size() > 1) {
    // r0 <- r0 mod r1, s0 <- s0 - quot * s1, then swap roles.
    const auto lead_inv = f.inv(r1.back());
    while (r0.size() >= r1.size()) {
      const auto c = f.mul(r0.back(), lead_inv);
      const std::size_t shift = r0.size() - r1.size();
      for (std::size_t j = 0; j < r1.size(); ++j) r0[shift + j] = f.sub(r0[shift + j], f.mul(c, r1[j]));
      if (s0.size() < s1.size() + shift) s0.resize(s1.size() + shift, 0);
      for (std::size_t j = 0; j < s1.size(); ++j) s0[shift + j] = f.sub(s0[shift + j], f.mul(c, s1[j]));
      trim(r0);
    }
    trim(s0);
    std::swap(r0, r1);
    std::swap(s0, s1);
  }
  // r1 is a nonzero constant because top_poly is irreducible.
  const auto c = f.inv(r1[0]);
  FieldElement out = zero();
  for (std::size_t j = 0; j < s1.size(); ++j) out.coeffs[j] = f.mul(s1[j], c);
  return out;
}

FieldElement FieldTower::pow(const FieldElement& a, const BigInt& e) const {
  require(a);
  if (e < 0) return pow(inv(a), -e);
  FieldElement result = one();
  FieldElement base = a;
  BigInt rest = e;
  while (rest > 0) {
    if ((rest & 1) != 0) result = mul(result, base);
    rest >>= 1;
    if (rest > 0) base = mul(base, base);
  }
  return result;
}

std::string FieldTower::format(const FieldElement& a) const {
  std::ostringstream os;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (i) os << ';';
    auto ds = base_->digits(a.coeffs[i]);
    for (std::size_t j = 0; j < ds.size(); ++j) {
      if (j) os << ',';
      os << ds[j];
    }
  }
  return os.str();
}

FieldElement FieldTower::element(std::span<const std::uint32_t> codes) const {
  if (codes.size() != n_) {
    throw UsageError("expected " + std::to_string(n_) + " coefficients over F_" + std::to_string(q()) + ", got " +
                     std::to_string(codes.size()));
  }
  FieldElement out{FieldElement::Coeffs(codes.begin(), codes.end()), id_};
  for (auto c : out.coeffs) {
    if (!base_->contains(c)) throw UsageError("coefficient code " + std::to_string(c) + " outside F_" + std::to_string(q()));
  }
  return out;
}

FieldElement FieldTower::embed(std::uint32_t c) const {
  if (!base_->contains(c)) throw UsageError("code " + std::to_string(c) + " outside F_" + std::to_string(q()));
  FieldElement out = zero();
  out.coeffs[0] = c;
  return out;
}

FieldElement FieldTower::generator() const {
  FieldElement out = zero();
  if (n_ == 1) {
    // y is the root of the linear top polynomial y + c.
    out.coeffs[0] = reduction_[0];
  } else {
    out.coeffs[1] = base_->one();
  }
  return out;
}

FieldElement FieldTower::element_at(std::uint64_t index) const {
  FieldElement out = zero();
  for (std::uint32_t i = 0; i < n_; ++i) {
    out.coeffs[i] = static_cast<std::uint32_t>(index % q());
    index /= q();
  }
  return out;
}

std::uint64_t FieldTower::index_of(const FieldElement& a) const {
  require(a);
  std::uint64_t index = 0;
  for (std::size_t i = n_; i-- > 0;) index = index * q() + a.coeffs[i];
  return index;
}

void FieldTower::apply_frobenius(const FieldElement::Coeffs& in, FieldElement::Coeffs& out) const {
  const SmallField& f = *base_;
  for (std::uint32_t r = 0; r < n_; ++r) {
    std::uint32_t acc = 0;
    const std::uint32_t* row = frobenius_matrix_.data() + std::size_t{r} * n_;
    for (std::uint32_t j = 0; j < n_; ++j) {
      if (in[j] != 0) acc = f.add(acc, f.mul(row[j], in[j]));
    }
    out[r] = acc;
  }
}

FieldElement FieldTower::frobenius(const FieldElement& a, std::uint64_t i) const {
  require(a);
  FieldElement cur = a;
  FieldElement next = a;
  for (std::uint64_t step = 0; step < i % n_; ++step) {
    apply_frobenius(cur.coeffs, next.coeffs);
    std::swap(cur, next);
  }
  return cur;
}

FieldElement FieldTower::frobenius_by_power(const FieldElement& a) const { return pow(a, BigInt(q())); }

FieldElement FieldTower::trace(const FieldElement& a) const {
  FieldElement acc = zero();
  for (const auto& c : orbit(a)) acc = add(acc, c);
  return acc;
}

std::vector<FieldElement> FieldTower::orbit(const FieldElement& a) const {
  require(a);
  std::vector<FieldElement> out;
  out.reserve(n_);
  out.push_back(a);
  for (std::uint32_t i = 1; i < n_; ++i) {
    FieldElement next = a;
    apply_frobenius(out.back().coeffs, next.coeffs);
    out.push_back(std::move(next));
  }
  return out;
}

}  // namespace nf
