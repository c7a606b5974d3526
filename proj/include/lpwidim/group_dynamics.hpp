#pragma once

// The unit ball of lp(Z^d) under the shift action, at finite
// truncations. Points are finitely supported; the metric is
//
//   d(x, y)     = sum_g w(g) |x_g - y_g|
//   d_Omega     = max_{h in Omega} d(x.h, y.h),   (x.h)_g = x_{h+g}
//
// and the embedding x -> f(pi(x)), with pi the restriction to a finite
// window Omega' and f the sparsification map at m = ceil((4/eps)^p) - 1,
// has fibers of d_Omega-diameter at most eps for every Omega.

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "lpwidim/core.hpp"

namespace lpwidim {

using LatticePoint = std::vector<std::int64_t>;

LatticePoint lattice_add(const LatticePoint& a, const LatticePoint& b);
LatticePoint lattice_sub(const LatticePoint& a, const LatticePoint& b);
std::int64_t l1_length(const LatticePoint& g) noexcept;
std::int64_t linf_length(const LatticePoint& g) noexcept;

/// Cube center + [-radius, radius]^d.
struct LatticeBox {
  LatticePoint center;
  std::int64_t radius = 0;

  std::size_t dim() const noexcept { return center.size(); }
  std::uint64_t size() const;
  bool contains(const LatticePoint& g) const;
  /// All points in lexicographic order.
  std::vector<LatticePoint> points() const;

  friend bool operator==(const LatticeBox&, const LatticeBox&) = default;
};

/// Positive weight on Z^d with sum <= 1 and a certified bound on the mass
/// outside each origin-centered box.
class WeightedGroupMetric {
 public:
  using WeightFn = std::function<double(const LatticePoint&)>;
  using TailFn = std::function<double(std::int64_t)>;

  /// `tail(K)` must bound the weight outside [-K, K]^d from above and
  /// `total` the full sum.
  WeightedGroupMetric(std::size_t dim, WeightFn weight, TailFn tail, double total, std::string name);

  /// w(g) = c * base^{-|g|_1}, with c chosen so the weights sum to `total`.
  static WeightedGroupMetric geometric(std::size_t dim, double base = 2.0, double total = 0.75);
  /// base 2, total 3/4.
  static WeightedGroupMetric standard(std::size_t dim) { return geometric(dim); }

  std::size_t dim() const noexcept { return dim_; }
  double weight(const LatticePoint& g) const { return weight_(g); }
  double tail_bound(std::int64_t radius) const { return tail_(radius); }
  double total() const noexcept { return total_; }
  const std::string& name() const noexcept { return name_; }

 private:
  std::size_t dim_;
  WeightFn weight_;
  TailFn tail_;
  double total_;
  std::string name_;
};

/// A point of B(lp(Z^d)) with finite support.
class FinitelySupportedPoint {
 public:
  using Values = std::map<LatticePoint, double>;

  /// Exact zeros are dropped from the support.
  FinitelySupportedPoint(std::size_t dim, double p, Values values);

  std::size_t dim() const noexcept { return dim_; }
  double p() const noexcept { return p_; }
  const Values& values() const noexcept { return values_; }
  double at(const LatticePoint& g) const;
  double norm_power() const;

  friend bool operator==(const FinitelySupportedPoint&, const FinitelySupportedPoint&) = default;

 private:
  std::size_t dim_;
  double p_;
  Values values_;
};

/// (x.delta)_g = x_{delta+g}.
FinitelySupportedPoint translate(const FinitelySupportedPoint& x, const LatticePoint& delta);

double weighted_distance(const FinitelySupportedPoint& x, const FinitelySupportedPoint& y,
                         const WeightedGroupMetric& metric);

double omega_distance(const FinitelySupportedPoint& x, const FinitelySupportedPoint& y,
                      const WeightedGroupMetric& metric, std::span<const LatticePoint> omega);

/// Smallest box around delta whose complement carries at most eps/4 of
/// the translated weight, as certified by the metric's tail bound.
LatticeBox tail_set(const WeightedGroupMetric& metric, const LatticePoint& delta, double eps);

/// ceil((4/eps)^p) - 1, a bound on Widim_eps(B(lp(Z^d)), d_Omega) valid for
/// every finite Omega.
std::int64_t widim_constant(double p, double eps);

struct SupportEntry {
  LatticePoint point;
  double value;
};

struct EmbeddingCheckReport {
  std::size_t dim_d = 0;
  double p = 1.0;
  double epsilon = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t omega_size = 0;
  std::uint64_t omega_prime_size = 0;
  std::int64_t tail_radius = 0;
  std::int64_t widim_constant = 0;
  std::uint64_t pairs_sampled = 0;
  std::uint64_t pairs_checked = 0;
  std::uint64_t failures = 0;
  /// min over checked pairs of eps - d_Omega(x, y).
  double worst_margin = 0.0;
  std::vector<SupportEntry> witness_x;
  std::vector<SupportEntry> witness_y;
  /// max over samples of d_inf(pi(x), f(pi(x))) and its bound (c+1)^{-1/p}.
  double map_distortion_max = 0.0;
  double map_distortion_bound = 0.0;

  bool passed() const noexcept { return failures == 0 && map_distortion_max <= map_distortion_bound + 1e-9; }
  friend bool operator==(const EmbeddingCheckReport&, const EmbeddingCheckReport&);
};

bool operator==(const SupportEntry& a, const SupportEntry& b);

struct EmbeddingCheckOptions {
  unsigned workers = 1;
};

/// Samples N pairs of ball points and, whenever their restrictions to
/// Omega' = union of tail_set(delta) for delta in Omega are eps/2-close in
/// sup norm, checks d_Omega(x, y) <= eps.
EmbeddingCheckReport embedding_check(const WeightedGroupMetric& metric,
                                     std::span<const LatticePoint> omega, double p, double eps,
                                     std::uint64_t samples, std::uint64_t seed,
                                     const EmbeddingCheckOptions& opts = {});

/// Union of the tail sets, in lexicographic order.
std::vector<LatticePoint> omega_prime(const WeightedGroupMetric& metric,
                                      std::span<const LatticePoint> omega, double eps);

struct MeanDimensionRow {
  std::int64_t radius;
  std::uint64_t omega_size;
  std::int64_t widim_bound;
  double ratio;

  friend bool operator==(const MeanDimensionRow&, const MeanDimensionRow&) = default;
};

/// Rows (|Omega_i|, c, c/|Omega_i|) for the boxes [-i, i]^d.
std::vector<MeanDimensionRow> mean_dimension_table(const WeightedGroupMetric& metric, double p,
                                                   double eps, std::span<const std::int64_t> radii);

}  // namespace lpwidim
