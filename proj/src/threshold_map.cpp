#include "lpwidim/threshold_map.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "lpwidim/simd/kernels.hpp"

namespace lpwidim {

void ThresholdWorkspace::reserve(std::size_t n) {
  if (a_.size() >= n) return;
  a_.resize(n);
  b_.resize(n);
  c_.resize(n);
  order_.resize(n);
}

struct ThresholdKernels {
  static std::span<double> a(ThresholdWorkspace& ws, std::size_t n) { return {ws.a_.data(), n}; }
  static std::span<double> b(ThresholdWorkspace& ws, std::size_t n) { return {ws.b_.data(), n}; }
  static std::span<double> c(ThresholdWorkspace& ws, std::size_t n) { return {ws.c_.data(), n}; }
  static std::span<std::size_t> order(ThresholdWorkspace& ws, std::size_t n) {
    return {ws.order_.data(), n};
  }
};

namespace {

// f0 on a cone point held in `y`, written to `out`.
void f0_into(std::span<const double> y, std::size_t m, std::span<double> out) {
  const std::size_t n = y.size();
  if (m >= n) {
    std::copy(y.begin(), y.end(), out.begin());
    return;
  }
  const double tau = y[m];
  for (std::size_t i = 0; i < m; ++i) out[i] = y[i] - tau;
  std::fill(out.begin() + static_cast<std::ptrdiff_t>(m), out.end(), 0.0);
}

}  // namespace

namespace detail {

void apply_equivariant(std::span<const double> x, std::size_t m, std::span<double> out,
                       ThresholdWorkspace& ws) {
  const std::size_t n = x.size();
  ws.reserve(n);
  auto order = ThresholdKernels::order(ws, n);
  auto y = ThresholdKernels::a(ws, n);
  auto z = ThresholdKernels::b(ws, n);
  canonical_order(x, order);
  // g x: y_i = |x_{order[i]}|, with sign e_i = sign(x_{order[i]}).
  for (std::size_t i = 0; i < n; ++i) y[i] = std::fabs(x[order[i]]);
  f0_into(y, m, z);
  // g^{-1} z: coordinate order[i] receives e_i * z_i.
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = order[i];
    out[j] = (x[j] < 0.0 ? -z[i] : z[i]) + 0.0;
  }
}

double order_statistic_threshold(std::span<const double> x, std::size_t m, ThresholdWorkspace& ws) {
  const std::size_t n = x.size();
  if (m >= n) return 0.0;
  const auto& k = simd::active_kernels();
  if (m == 0) return k.max_abs(x.data(), n);
  ws.reserve(n);
  auto mags = ThresholdKernels::c(ws, n);
  k.abs_values(x.data(), mags.data(), n);
  if (n <= kFullSortLimit) {
    std::sort(mags.begin(), mags.end(), std::greater<>());
  } else {
    std::nth_element(mags.begin(), mags.begin() + static_cast<std::ptrdiff_t>(m), mags.end(),
                     std::greater<>());
  }
  return mags[m];
}

void apply_closed(std::span<const double> x, std::size_t m, std::span<double> out,
                  ThresholdWorkspace& ws) {
  const double tau = order_statistic_threshold(x, m, ws);
  simd::active_kernels().shrink(x.data(), tau, out.data(), x.size());
}

double distortion(std::span<const double> x, std::size_t m, Exponent q, ThresholdWorkspace& ws) {
  const std::size_t n = x.size();
  ws.reserve(n);
  auto fx = ThresholdKernels::c(ws, n);
  apply_equivariant(x, m, fx, ws);
  return lq_distance(x, fx, q, ThresholdKernels::a(ws, n));
}

}  // namespace detail

ConePoint f0(const ConePoint& y, SparsityLevel m) {
  std::vector<double> out(y.size());
  f0_into(y.coords().coords(), m.m, out);
  return ConePoint(RealVector(std::move(out)));
}

ConePoint f0(const RealVector& y, SparsityLevel m, double tol) { return f0(ConePoint(y, tol), m); }

RealVector f_equivariant(const RealVector& x, SparsityLevel m) {
  ThresholdWorkspace ws(x.size());
  std::vector<double> out(x.size());
  detail::apply_equivariant(x.coords(), m.m, out, ws);
  return RealVector(std::move(out));
}

RealVector f_closed(const RealVector& x, SparsityLevel m) {
  ThresholdWorkspace ws(x.size());
  std::vector<double> out(x.size());
  detail::apply_closed(x.coords(), m.m, out, ws);
  return RealVector(std::move(out));
}

double distortion(const RealVector& x, SparsityLevel m, Exponent q) {
  ThresholdWorkspace ws(x.size());
  return detail::distortion(x.coords(), m.m, q, ws);
}

double distortion_bound(SparsityLevel m, const Exponents& e) {
  return std::pow(static_cast<double>(m.m + 1), -e.gap());
}

RealVector extremal_vector(SparsityLevel m, double p, std::size_t n) {
  if (m.m >= n) throw PreconditionError("extremal_vector requires m < n");
  if (!(p >= 1.0) || !std::isfinite(p)) throw PreconditionError("extremal_vector requires p >= 1");
  std::vector<double> x(n, 0.0);
  const double a = std::pow(static_cast<double>(m.m + 1), -1.0 / p);
  std::fill(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(m.m + 1), a);
  return RealVector(std::move(x));
}

}  // namespace lpwidim
