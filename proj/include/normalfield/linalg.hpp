#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "normalfield/small_field.hpp"

namespace nf {

// Dense row-major matrix of F_q codes.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint32_t> data;

  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  std::uint32_t& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

std::size_t rank(const SmallField& field, Matrix m);

// Solution x of A x = b, or nullopt when A is singular. A must be square.
std::optional<std::vector<std::uint32_t>> solve(const SmallField& field, Matrix a, std::vector<std::uint32_t> b);

// Row-echelon basis that also remembers how each reduced row was built from
// the inserted vectors. Inserting a vector that depends on the previous ones
// yields the dependency instead of growing the basis.
class DependencyTracker {
 public:
  DependencyTracker(const SmallField& field, std::size_t dim, std::size_t max_vectors);

  // If v lies in the span of the vectors inserted so far, returns c with
  // c[j] = 1 for the new vector's slot j and sum_i c[i] v_i = 0. Otherwise
  // records v and returns nullopt.
  std::optional<std::vector<std::uint32_t>> insert(std::span<const std::uint32_t> v);

  std::size_t size() const { return inserted_; }

 private:
  const SmallField& field_;
  std::size_t dim_;
  std::size_t max_vectors_;
  std::size_t inserted_ = 0;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::vector<std::uint32_t>> combos_;
  std::vector<std::size_t> pivots_;
};

}  // namespace nf
