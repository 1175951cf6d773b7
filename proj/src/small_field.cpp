#include "normalfield/small_field.hpp"

#include <algorithm>
#include <sstream>

#include "normalfield/errors.hpp"
#include "normalfield/factor.hpp"
#include "normalfield/numtheory.hpp"

namespace nf {

std::shared_ptr<const SmallField> SmallField::prime(std::uint32_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (p >= kMaxOrder) {
    throw UsageError("characteristic " + std::to_string(p) + " exceeds the supported bound 2^16");
  }
  return std::shared_ptr<const SmallField>(new SmallField(p, {0, 1}));
}

std::shared_ptr<const SmallField> SmallField::extension(std::uint32_t p,
                                                        std::vector<std::uint32_t> modulus) {
  auto fp = prime(p);
  while (!modulus.empty() && modulus.back() == 0) modulus.pop_back();
  if (modulus.size() < 2) throw UsageError("defining polynomial must have degree >= 1");
  if (modulus.back() != 1) throw UsageError("defining polynomial must be monic");
  for (std::uint32_t c : modulus) {
    if (c >= p) throw UsageError("coefficient " + std::to_string(c) + " is not reduced mod " + std::to_string(p));
  }
  if (modulus.size() == 2) return fp;
  Poly<SmallField> f(fp, modulus);
  if (!is_irreducible(f)) throw UsageError("defining polynomial " + to_string(f) + " is reducible over F_" + std::to_string(p));
  BigInt q = ipow(p, modulus.size() - 1);
  if (q > kMaxOrder) throw UsageError("field order " + q.str() + " exceeds the supported bound 2^16");
  return std::shared_ptr<const SmallField>(new SmallField(p, std::move(modulus)));
}

SmallField::SmallField(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), k_(static_cast<std::uint32_t>(modulus.size() - 1)), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < k_; ++i) q_ *= p_;
  if (k_ > 1) build_tables();
}

SmallField::Element SmallField::add(Element a, Element b) const {
  if (p_ == 2) return a ^ b;
  if (k_ == 1) {
    Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element out = 0;
  Element scale = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    Element s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    out += s * scale;
    scale *= p_;
    a /= p_;
    b /= p_;
  }
  return out;
}

SmallField::Element SmallField::neg(Element a) const {
  if (p_ == 2) return a;
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  Element out = 0;
  Element scale = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    Element d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * scale;
    scale *= p_;
    a /= p_;
  }
  return out;
}

SmallField::Element SmallField::sub(Element a, Element b) const { return add(a, neg(b)); }

SmallField::Element SmallField::inv(Element a) const {
  if (a == 0) throw DomainError("inverse of zero in F_" + std::to_string(q_));
  if (k_ > 1) return exp_[log_[a] == 0 ? 0 : q_ - 1 - log_[a]];
  // Fermat; p is small.
  return pow(a, p_ - 2);
}

SmallField::Element SmallField::pow(Element a, std::uint64_t e) const {
  Element result = 1;
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

SmallField::Element SmallField::pth_root(Element a) const {
  // a^(q/p) is the inverse of the Frobenius a -> a^p on F_q.
  return pow(a, q_ / p_);
}

SmallField::Element SmallField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Element>(r);
}

std::vector<std::uint32_t> SmallField::digits(Element a) const {
  std::vector<std::uint32_t> out(k_);
  for (std::uint32_t i = 0; i < k_; ++i) {
    out[i] = a % p_;
    a /= p_;
  }
  return out;
}

SmallField::Element SmallField::from_digits(std::span<const std::uint32_t> ds) const {
  if (ds.size() != k_) {
    throw UsageError("expected " + std::to_string(k_) + " F_" + std::to_string(p_) + " digits, got " +
                     std::to_string(ds.size()));
  }
  Element out = 0;
  for (std::size_t i = ds.size(); i-- > 0;) {
    if (ds[i] >= p_) throw UsageError("digit " + std::to_string(ds[i]) + " is not reduced mod " + std::to_string(p_));
    out = out * p_ + ds[i];
  }
  return out;
}

std::string SmallField::format(Element a) const {
  if (k_ == 1) return std::to_string(a);
  std::ostringstream os;
  auto ds = digits(a);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (i) os << ',';
    os << ds[i];
  }
  return os.str();
}

SmallField::Element SmallField::slow_mul(Element a, Element b) const {
  auto da = digits(a);
  auto db = digits(b);
  std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
  for (std::uint32_t i = 0; i < k_; ++i) {
    for (std::uint32_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_;
  }
  // modulus is monic: t^k = -sum_{j<k} m_j t^j
  for (std::size_t top = prod.size(); top-- > k_;) {
    std::uint64_t c = prod[top];
    if (c == 0) continue;
    prod[top] = 0;
    for (std::uint32_t j = 0; j < k_; ++j) {
      std::size_t at = top - k_ + j;
      prod[at] = (prod[at] + (p_ - modulus_[j]) % p_ * c) % p_;
    }
  }
  Element out = 0;
  for (std::size_t i = k_; i-- > 0;) out = out * p_ + static_cast<Element>(prod[i]);
  return out;
}

void SmallField::build_tables() {
  const std::uint32_t group = q_ - 1;
  std::vector<std::uint32_t> prime_factors;
  {
    std::uint32_t rest = group;
    for (std::uint32_t f = 2; f * f <= rest; ++f) {
      if (rest % f) continue;
      prime_factors.push_back(f);
      while (rest % f == 0) rest /= f;
    }
    if (rest > 1) prime_factors.push_back(rest);
  }
  auto slow_pow = [this](Element a, std::uint64_t e) {
    Element r = 1;
    while (e) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  };
  Element generator = 0;
  for (Element g = 2; g < q_ && generator == 0; ++g) {
    bool primitive = slow_pow(g, group) == 1;
    for (std::uint32_t f : prime_factors) primitive = primitive && slow_pow(g, group / f) != 1;
    if (primitive) generator = g;
  }
  if (generator == 0) throw std::logic_error("no primitive element found; modulus is not irreducible");
  log_.assign(q_, 0);
  exp_.assign(group, 0);
  Element acc = 1;
  for (std::uint32_t i = 0; i < group; ++i) {
    exp_[i] = acc;
    log_[acc] = i;
    acc = slow_mul(acc, generator);
  }
}

}  // namespace nf
