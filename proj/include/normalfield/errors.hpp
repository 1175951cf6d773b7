#pragma once

#include <stdexcept>
#include <string>

namespace nf {

// Caller supplied something malformed: mismatched towers or fields, bad text,
// invalid defining polynomials.
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// Input is well formed but outside the mathematical domain of the operation
// (inverting zero, non-prime characteristic, non-normal transport endpoint).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A brute-force enumeration would exceed its configured element budget.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nf
