#pragma once

#include <cstdint>
#include <vector>

#include <omp.h>

namespace nf {

// Half-open slice [begin, end) of the canonical index range owned by one
// worker. Slices are contiguous and ordered, so per-slice results concatenate
// back into canonical order.
struct IndexRange {
  std::uint64_t begin;
  std::uint64_t end;
};

inline IndexRange partition(std::uint64_t total, int parts, int which) {
  const auto p = static_cast<std::uint64_t>(parts);
  const auto w = static_cast<std::uint64_t>(which);
  return {total * w / p, total * (w + 1) / p};
}

// Number of indices in [0, total) satisfying pred.
template <class Pred>
std::uint64_t parallel_count(std::uint64_t total, const Pred& pred) {
  std::uint64_t hits = 0;
  const auto n = static_cast<std::int64_t>(total);
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : hits)
  for (std::int64_t i = 0; i < n; ++i) {
    if (pred(static_cast<std::uint64_t>(i))) ++hits;
  }
  return hits;
}

// Indices in [0, total) satisfying pred, ascending.
template <class Pred>
std::vector<std::uint64_t> parallel_select(std::uint64_t total, const Pred& pred) {
  std::vector<std::vector<std::uint64_t>> buckets;
#pragma omp parallel
  {
#pragma omp single
    buckets.resize(static_cast<std::size_t>(omp_get_num_threads()));
    const int me = omp_get_thread_num();
    const IndexRange range = partition(total, omp_get_num_threads(), me);
    std::vector<std::uint64_t> local;
    for (std::uint64_t i = range.begin; i < range.end; ++i) {
      if (pred(i)) local.push_back(i);
    }
    buckets[static_cast<std::size_t>(me)] = std::move(local);
  }
  std::vector<std::uint64_t> out;
  for (auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
  return out;
}

// True iff pred holds for every index; stops scheduling new work once a
// counterexample is seen.
template <class Pred>
bool parallel_all(std::uint64_t total, const Pred& pred) {
  bool ok = true;
  const auto n = static_cast<std::int64_t>(total);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < n; ++i) {
    bool still_ok;
#pragma omp atomic read
    still_ok = ok;
    if (!still_ok) continue;
    if (!pred(static_cast<std::uint64_t>(i))) {
#pragma omp atomic write
      ok = false;
    }
  }
  return ok;
}

}  // namespace nf
