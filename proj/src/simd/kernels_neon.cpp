#include "lpwidim/simd/kernels.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)

#include <arm_neon.h>

#include <algorithm>
#include <cmath>

namespace lpwidim::simd {
namespace {

constexpr std::size_t kLanes = 2;

void abs_values(const double* x, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) vst1q_f64(out + i, vabsq_f64(vld1q_f64(x + i)));
  for (; i < n; ++i) out[i] = std::fabs(x[i]);
}

void abs_diff(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes)
    vst1q_f64(out + i, vabsq_f64(vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i))));
  for (; i < n; ++i) out[i] = std::fabs(a[i] - b[i]);
}

void sq_diff(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const float64x2_t d = vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i));
    vst1q_f64(out + i, vmulq_f64(d, d));
  }
  for (; i < n; ++i) {
    const double d = a[i] - b[i];
    out[i] = d * d;
  }
}

double max_abs_diff(const double* a, const double* b, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes)
    acc = vmaxq_f64(acc, vabsq_f64(vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i))));
  double best = vmaxvq_f64(acc);
  for (; i < n; ++i) best = std::max(best, std::fabs(a[i] - b[i]));
  return best;
}

double max_abs(const double* x, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) acc = vmaxq_f64(acc, vabsq_f64(vld1q_f64(x + i)));
  double best = vmaxvq_f64(acc);
  for (; i < n; ++i) best = std::max(best, std::fabs(x[i]));
  return best;
}

void shrink(const double* x, double tau, double* out, std::size_t n) {
  const float64x2_t vtau = vdupq_n_f64(tau);
  const float64x2_t zero = vdupq_n_f64(0.0);
  const uint64x2_t sign = vdupq_n_u64(0x8000000000000000ULL);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const float64x2_t v = vld1q_f64(x + i);
    const float64x2_t mag = vmaxq_f64(vsubq_f64(vabsq_f64(v), vtau), zero);
    const uint64x2_t bits =
        vorrq_u64(vreinterpretq_u64_f64(mag), vandq_u64(vreinterpretq_u64_f64(v), sign));
    vst1q_f64(out + i, vaddq_f64(vreinterpretq_f64_u64(bits), zero));
  }
  for (; i < n; ++i) {
    const double mag = std::max(std::fabs(x[i]) - tau, 0.0);
    out[i] = std::copysign(mag, x[i]) + 0.0;
  }
}

void scale(const double* x, double s, double* out, std::size_t n) {
  const float64x2_t vs = vdupq_n_f64(s);
  const float64x2_t zero = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes)
    vst1q_f64(out + i, vaddq_f64(vmulq_f64(vs, vld1q_f64(x + i)), zero));
  for (; i < n; ++i) out[i] = s * x[i] + 0.0;
}

constexpr KernelTable kNeon{Isa::neon, abs_values, abs_diff, sq_diff, max_abs_diff,
                            max_abs,   shrink,     scale};

}  // namespace

const KernelTable* detail::neon_kernels() noexcept { return &kNeon; }

}  // namespace lpwidim::simd

#else

namespace lpwidim::simd {
const KernelTable* detail::neon_kernels() noexcept { return nullptr; }
}  // namespace lpwidim::simd

#endif
