#include "normalfield/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace nf {

std::size_t rank(const SmallField& f, Matrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows && m.at(pivot, c) == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != r) {
      for (std::size_t j = c; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
    }
    const auto inv = f.inv(m.at(r, c));
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      if (m.at(i, c) == 0) continue;
      const auto factor = f.mul(m.at(i, c), inv);
      for (std::size_t j = c; j < m.cols; ++j) m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
    }
    ++r;
  }
  return r;
}

std::optional<std::vector<std::uint32_t>> solve(const SmallField& f, Matrix a, std::vector<std::uint32_t> b) {
  if (a.rows != a.cols || b.size() != a.rows) throw std::invalid_argument("solve expects a square system");
  const std::size_t n = a.rows;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a.at(pivot, c) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(c, j));
      std::swap(b[pivot], b[c]);
    }
    const auto inv = f.inv(a.at(c, c));
    for (std::size_t j = c; j < n; ++j) a.at(c, j) = f.mul(a.at(c, j), inv);
    b[c] = f.mul(b[c], inv);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a.at(i, c) == 0) continue;
      const auto factor = a.at(i, c);
      for (std::size_t j = c; j < n; ++j) a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(c, j)));
      b[i] = f.sub(b[i], f.mul(factor, b[c]));
    }
  }
  return b;
}

DependencyTracker::DependencyTracker(const SmallField& field, std::size_t dim, std::size_t max_vectors)
    : field_(field), dim_(dim), max_vectors_(max_vectors) {}

std::optional<std::vector<std::uint32_t>> DependencyTracker::insert(std::span<const std::uint32_t> v) {
  if (v.size() != dim_) throw std::invalid_argument("vector has the wrong dimension");
  if (inserted_ >= max_vectors_) throw std::logic_error("dependency tracker is full");
  std::vector<std::uint32_t> row(v.begin(), v.end());
  std::vector<std::uint32_t> combo(max_vectors_, 0);
  combo[inserted_] = field_.one();
  for (std::size_t b = 0; b < rows_.size(); ++b) {
    const auto c = row[pivots_[b]];
    if (c == 0) continue;
    // stored rows are normalized to 1 at their pivot
    for (std::size_t j = 0; j < dim_; ++j) row[j] = field_.sub(row[j], field_.mul(c, rows_[b][j]));
    for (std::size_t j = 0; j < max_vectors_; ++j) combo[j] = field_.sub(combo[j], field_.mul(c, combos_[b][j]));
  }
  std::size_t pivot = 0;
  while (pivot < dim_ && row[pivot] == 0) ++pivot;
  if (pivot == dim_) {
    combo.resize(inserted_ + 1);
    return combo;
  }
  const auto inv = field_.inv(row[pivot]);
  for (auto& x : row) x = field_.mul(x, inv);
  for (auto& x : combo) x = field_.mul(x, inv);
  rows_.push_back(std::move(row));
  combos_.push_back(std::move(combo));
  pivots_.push_back(pivot);
  ++inserted_;
  return std::nullopt;
}

}  // namespace nf
