#pragma once

// Data-parallel inner loops. Every kernel has a scalar reference and, where
// the target supports it, a vector variant; `active_kernels()` picks one at
// runtime. Elementwise kernels and the max reduction are bit-exact across
// variants. None of them emit negative zero.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace lpwidim::simd {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa) noexcept;

struct KernelTable {
  Isa isa;
  /// out[i] = |x[i]|
  void (*abs_values)(const double* x, double* out, std::size_t n);
  /// out[i] = |a[i] - b[i]|
  void (*abs_diff)(const double* a, const double* b, double* out, std::size_t n);
  /// out[i] = (a[i] - b[i])^2
  void (*sq_diff)(const double* a, const double* b, double* out, std::size_t n);
  /// max_i |a[i] - b[i]|, 0 for n = 0
  double (*max_abs_diff)(const double* a, const double* b, std::size_t n);
  /// max_i |x[i]|, 0 for n = 0
  double (*max_abs)(const double* x, std::size_t n);
  /// out[i] = sign(x[i]) * max(|x[i]| - tau, 0)
  void (*shrink)(const double* x, double tau, double* out, std::size_t n);
  /// out[i] = s * x[i]
  void (*scale)(const double* x, double s, double* out, std::size_t n);
};

const KernelTable& scalar_kernels() noexcept;

/// Tables usable on this CPU, scalar first.
std::vector<const KernelTable*> available_kernels();

/// The table chosen at startup: the widest supported ISA, unless the
/// LPWIDIM_ISA environment variable names another available one.
const KernelTable& active_kernels();

namespace detail {
// Present only when compiled for the matching target; otherwise nullptr.
const KernelTable* avx2_kernels() noexcept;
const KernelTable* neon_kernels() noexcept;
}  // namespace detail

// Span conveniences over the active table.
inline void abs_values(std::span<const double> x, std::span<double> out) {
  active_kernels().abs_values(x.data(), out.data(), x.size());
}
inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  return active_kernels().max_abs_diff(a.data(), b.data(), a.size());
}
inline void shrink(std::span<const double> x, double tau, std::span<double> out) {
  active_kernels().shrink(x.data(), tau, out.data(), x.size());
}
inline void scale(std::span<const double> x, double s, std::span<double> out) {
  active_kernels().scale(x.data(), s, out.data(), x.size());
}

}  // namespace lpwidim::simd
