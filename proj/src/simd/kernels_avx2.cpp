#include "lpwidim/simd/kernels.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

#include <algorithm>
#include <cmath>

namespace lpwidim::simd {
namespace {

constexpr std::size_t kLanes = 4;

inline __m256d sign_mask() { return _mm256_set1_pd(-0.0); }
inline __m256d vabs(__m256d v) { return _mm256_andnot_pd(sign_mask(), v); }

double hmax(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d m = _mm_max_pd(lo, hi);
  return std::max(_mm_cvtsd_f64(m), _mm_cvtsd_f64(_mm_unpackhi_pd(m, m)));
}

void abs_values(const double* x, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) _mm256_storeu_pd(out + i, vabs(_mm256_loadu_pd(x + i)));
  for (; i < n; ++i) out[i] = std::fabs(x[i]);
}

void abs_diff(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    _mm256_storeu_pd(out + i, vabs(d));
  }
  for (; i < n; ++i) out[i] = std::fabs(a[i] - b[i]);
}

void sq_diff(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    _mm256_storeu_pd(out + i, _mm256_mul_pd(d, d));
  }
  for (; i < n; ++i) {
    const double d = a[i] - b[i];
    out[i] = d * d;
  }
}

double max_abs_diff(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    acc = _mm256_max_pd(acc, vabs(d));
  }
  double best = hmax(acc);
  for (; i < n; ++i) best = std::max(best, std::fabs(a[i] - b[i]));
  return best;
}

double max_abs(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) acc = _mm256_max_pd(acc, vabs(_mm256_loadu_pd(x + i)));
  double best = hmax(acc);
  for (; i < n; ++i) best = std::max(best, std::fabs(x[i]));
  return best;
}

void shrink(const double* x, double tau, double* out, std::size_t n) {
  const __m256d vtau = _mm256_set1_pd(tau);
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d v = _mm256_loadu_pd(x + i);
    // max_pd returns its second operand when both are zero, keeping +0.
    const __m256d mag = _mm256_max_pd(_mm256_sub_pd(vabs(v), vtau), zero);
    const __m256d signed_mag = _mm256_or_pd(mag, _mm256_and_pd(v, sign_mask()));
    _mm256_storeu_pd(out + i, _mm256_add_pd(signed_mag, zero));
  }
  for (; i < n; ++i) {
    const double mag = std::max(std::fabs(x[i]) - tau, 0.0);
    out[i] = std::copysign(mag, x[i]) + 0.0;
  }
}

void scale(const double* x, double s, double* out, std::size_t n) {
  const __m256d vs = _mm256_set1_pd(s);
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes)
    _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_mul_pd(vs, _mm256_loadu_pd(x + i)), zero));
  for (; i < n; ++i) out[i] = s * x[i] + 0.0;
}

constexpr KernelTable kAvx2{Isa::avx2, abs_values, abs_diff, sq_diff, max_abs_diff,
                            max_abs,   shrink,     scale};

}  // namespace

const KernelTable* detail::avx2_kernels() noexcept { return &kAvx2; }

}  // namespace lpwidim::simd

#else

namespace lpwidim::simd {
const KernelTable* detail::avx2_kernels() noexcept { return nullptr; }
}  // namespace lpwidim::simd

#endif
