#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace nf {

// GF(q), q = p^k <= 2^16, realized as F_p[t]/(modulus). An element is its
// canonical integer code sum_j d_j p^j, where d_0 + d_1 t + ... is the reduced
// representative. For k = 1 the code is the residue itself.
//
// Instances are immutable and shared through shared_ptr; polynomials keep a
// reference to their coefficient field.
class SmallField {
 public:
  using Element = std::uint32_t;

  static constexpr std::uint64_t kMaxOrder = 1u << 16;

  static std::shared_ptr<const SmallField> prime(std::uint32_t p);

  // `modulus` holds F_p digits constant-term first and must be monic and
  // irreducible of degree >= 1. Degree 1 yields a copy of the prime field.
  static std::shared_ptr<const SmallField> extension(std::uint32_t p,
                                                     std::vector<std::uint32_t> modulus);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }
  std::uint32_t order() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(Element a) const { return a == 0; }
  bool contains(Element a) const { return a < q_; }

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const {
    if (k_ == 1) return p_ == 2 ? (a & b) : static_cast<Element>((std::uint64_t{a} * b) % p_);
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  // Throws DomainError on zero.
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t e) const;
  // Unique b with b^p = a.
  Element pth_root(Element a) const;

  // Image of an integer under Z -> F_p -> F_q.
  Element from_int(std::int64_t v) const;

  std::vector<std::uint32_t> digits(Element a) const;
  // Throws UsageError unless there are exactly k digits, each below p.
  Element from_digits(std::span<const std::uint32_t> digits) const;

  std::string format(Element a) const;

  bool operator==(const SmallField& other) const {
    return p_ == other.p_ && modulus_ == other.modulus_;
  }

 private:
  SmallField(std::uint32_t p, std::vector<std::uint32_t> modulus);

  Element slow_mul(Element a, Element b) const;
  void build_tables();

  std::uint32_t p_;
  std::uint32_t k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
};

using SmallFieldPtr = std::shared_ptr<const SmallField>;

}  // namespace nf
