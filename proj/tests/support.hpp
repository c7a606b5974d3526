#pragma once

// Hand-rolled generators for property tests. They draw from mt19937_64 so
// test inputs never share a generator with the library's Philox streams.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "lpwidim/core.hpp"
#include "lpwidim/signed_perm.hpp"

namespace testgen {

using Rng = std::mt19937_64;

inline std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Mixture of shapes: plain uniform, heavy ties, sparse, wide dynamic range.
inline std::vector<double> mixed_coords(Rng& rng, std::size_t n) {
  std::vector<double> x(n);
  switch (uniform_index(rng, 0, 4)) {
    case 0:
      for (auto& v : x) v = uniform(rng, -1.0, 1.0);
      break;
    case 1: {
      const double levels[] = {0.0, 0.25, -0.25, 0.5, -0.5, 1.0};
      for (auto& v : x) v = levels[uniform_index(rng, 0, 5)];
      break;
    }
    case 2:
      for (auto& v : x) v = uniform_index(rng, 0, 3) == 0 ? uniform(rng, -2.0, 2.0) : 0.0;
      break;
    case 3:
      for (auto& v : x) v = std::ldexp(uniform(rng, -1.0, 1.0), static_cast<int>(uniform_index(rng, 0, 60)) - 30);
      break;
    default: {
      const double c = uniform(rng, -1.0, 1.0);
      for (auto& v : x) v = uniform_index(rng, 0, 1) ? c : -c;
      break;
    }
  }
  return x;
}

inline lpwidim::RealVector mixed_vector(Rng& rng, std::size_t n) { return lpwidim::RealVector(mixed_coords(rng, n)); }

inline lpwidim::RealVector uniform_vector(Rng& rng, std::size_t n, double lo = -1.0, double hi = 1.0) {
  std::vector<double> x(n);
  for (auto& v : x) v = uniform(rng, lo, hi);
  return lpwidim::RealVector(std::move(x));
}

// Sorted non-increasing, nonnegative.
inline lpwidim::RealVector cone_vector(Rng& rng, std::size_t n) {
  std::vector<double> x(n);
  for (auto& v : x) v = uniform_index(rng, 0, 3) == 0 ? 0.5 : uniform(rng, 0.0, 1.0);
  std::sort(x.begin(), x.end(), std::greater<>());
  return lpwidim::RealVector(std::move(x));
}

inline lpwidim::SignedPermutation signed_perm(Rng& rng, std::size_t n) {
  return lpwidim::SignedPermutation::random(n, rng);
}

}  // namespace testgen
