#include "lpwidim/simd/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace lpwidim::simd {
namespace {

// Adding +0.0 maps -0.0 to +0.0 and leaves every other value unchanged.

void abs_values(const double* x, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = std::fabs(x[i]);
}

void abs_diff(const double* a, const double* b, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = std::fabs(a[i] - b[i]);
}

void sq_diff(const double* a, const double* b, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double d = a[i] - b[i];
    out[i] = d * d;
  }
}

double max_abs_diff(const double* a, const double* b, std::size_t n) {
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) best = std::max(best, std::fabs(a[i] - b[i]));
  return best;
}

double max_abs(const double* x, std::size_t n) {
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) best = std::max(best, std::fabs(x[i]));
  return best;
}

void shrink(const double* x, double tau, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double mag = std::max(std::fabs(x[i]) - tau, 0.0);
    out[i] = std::copysign(mag, x[i]) + 0.0;
  }
}

void scale(const double* x, double s, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = s * x[i] + 0.0;
}

constexpr KernelTable kScalar{Isa::scalar, abs_values, abs_diff, sq_diff, max_abs_diff,
                              max_abs,     shrink,     scale};

}  // namespace

const KernelTable& scalar_kernels() noexcept { return kScalar; }

}  // namespace lpwidim::simd
