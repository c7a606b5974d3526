#pragma once

// The continuous G-equivariant sparsification map
//
//   f(x) = g^{-1} f0(g x),   f0(y) = (y_1 - y_{m+1}, ..., y_m - y_{m+1}, 0, ..., 0)
//
// where g moves x into the sorted nonnegative cone. Two independent
// implementations are provided: one through canonicalization and f0, one
// as a closed-form soft threshold at the (m+1)-th largest magnitude. They
// agree bit for bit.

#include <cstddef>
#include <span>
#include <vector>

#include "lpwidim/core.hpp"
#include "lpwidim/signed_perm.hpp"

namespace lpwidim {

/// Number of coordinates the map keeps. m = 0 maps everything to 0 and
/// m >= n is the identity.
struct SparsityLevel {
  std::size_t m;
  explicit constexpr SparsityLevel(std::size_t value) noexcept : m(value) {}
};

/// Above this dimension the closed form selects the order statistic in
/// linear time instead of sorting.
inline constexpr std::size_t kFullSortLimit = 4096;

ConePoint f0(const ConePoint& y, SparsityLevel m);
/// Same, validating the cone inequalities to within `tol`.
ConePoint f0(const RealVector& y, SparsityLevel m, double tol = 1e-12);

RealVector f_equivariant(const RealVector& x, SparsityLevel m);
RealVector f_closed(const RealVector& x, SparsityLevel m);

/// d_q(x, f(x)).
double distortion(const RealVector& x, SparsityLevel m, Exponent q);

/// (m+1)^{-(1/p - 1/q)}: the largest distortion on the unit lp-ball.
double distortion_bound(SparsityLevel m, const Exponents& e);

/// m+1 leading coordinates equal to (m+1)^{-1/p}, zeros after. Lies on the
/// unit lp-sphere and attains distortion_bound. Requires m < n.
RealVector extremal_vector(SparsityLevel m, double p, std::size_t n);

/// Reusable buffers for the allocation-free span forms below.
class ThresholdWorkspace {
 public:
  explicit ThresholdWorkspace(std::size_t n = 0) { reserve(n); }
  void reserve(std::size_t n);

 private:
  std::vector<double> a_, b_, c_;
  std::vector<std::size_t> order_;
  friend struct ThresholdKernels;
};

namespace detail {

void apply_equivariant(std::span<const double> x, std::size_t m, std::span<double> out,
                       ThresholdWorkspace& ws);
void apply_closed(std::span<const double> x, std::size_t m, std::span<double> out,
                  ThresholdWorkspace& ws);
/// (m+1)-th largest |x_i| via selection; 0 when m >= n.
double order_statistic_threshold(std::span<const double> x, std::size_t m, ThresholdWorkspace& ws);
double distortion(std::span<const double> x, std::size_t m, Exponent q, ThresholdWorkspace& ws);

}  // namespace detail

}  // namespace lpwidim
