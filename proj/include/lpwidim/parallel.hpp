#pragma once

// Fixed-partition parallel loops with deterministic reductions.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

namespace lpwidim {

/// Splits [0, count) into `workers` contiguous chunks and runs
/// body(worker, begin, end) for each, one thread per nonempty chunk.
/// workers == 0 is treated as 1. Exceptions from any chunk are rethrown.
void parallel_chunks(std::size_t count, unsigned workers,
                     const std::function<void(unsigned, std::size_t, std::size_t)>& body);

/// Running maximum with ties broken toward the smaller index, so the
/// combined result is the same for any chunking.
struct ArgMax {
  double value = -std::numeric_limits<double>::infinity();
  std::uint64_t index = UINT64_MAX;

  bool offer(double v, std::uint64_t i) noexcept {
    if (v > value || (v == value && i < index)) {
      value = v;
      index = i;
      return true;
    }
    return false;
  }
  void merge(const ArgMax& other) noexcept { offer(other.value, other.index); }
  bool empty() const noexcept { return index == UINT64_MAX; }
};

}  // namespace lpwidim
