#include "lpwidim/group_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>

#include "lpwidim/bounds.hpp"
#include "lpwidim/certify.hpp"
#include "lpwidim/parallel.hpp"
#include "lpwidim/random.hpp"
#include "lpwidim/threshold_map.hpp"

namespace lpwidim {

LatticePoint lattice_add(const LatticePoint& a, const LatticePoint& b) {
  if (a.size() != b.size()) throw PreconditionError("lattice points of different dimension");
  LatticePoint out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

LatticePoint lattice_sub(const LatticePoint& a, const LatticePoint& b) {
  if (a.size() != b.size()) throw PreconditionError("lattice points of different dimension");
  LatticePoint out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

std::int64_t l1_length(const LatticePoint& g) noexcept {
  std::int64_t s = 0;
  for (auto v : g) s += v < 0 ? -v : v;
  return s;
}

std::int64_t linf_length(const LatticePoint& g) noexcept {
  std::int64_t s = 0;
  for (auto v : g) s = std::max(s, v < 0 ? -v : v);
  return s;
}

std::uint64_t LatticeBox::size() const {
  std::uint64_t side = static_cast<std::uint64_t>(2 * radius + 1);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < dim(); ++i) total *= side;
  return total;
}

bool LatticeBox::contains(const LatticePoint& g) const {
  if (g.size() != center.size()) return false;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] < center[i] - radius || g[i] > center[i] + radius) return false;
  return true;
}

std::vector<LatticePoint> LatticeBox::points() const {
  std::vector<LatticePoint> out;
  out.reserve(size());
  LatticePoint cur(dim());
  for (std::size_t i = 0; i < dim(); ++i) cur[i] = center[i] - radius;
  while (true) {
    out.push_back(cur);
    std::size_t axis = dim();
    while (axis > 0) {
      --axis;
      if (cur[axis] < center[axis] + radius) {
        ++cur[axis];
        break;
      }
      cur[axis] = center[axis] - radius;
      if (axis == 0) return out;
    }
    if (dim() == 0) return out;
  }
}

// ---------------------------------------------------------------------------

WeightedGroupMetric::WeightedGroupMetric(std::size_t dim, WeightFn weight, TailFn tail, double total,
                                         std::string name)
    : dim_(dim), weight_(std::move(weight)), tail_(std::move(tail)), total_(total), name_(std::move(name)) {
  if (dim_ == 0) throw PreconditionError("WeightedGroupMetric requires d >= 1");
  if (!(total_ > 0.0 && total_ <= 1.0)) throw PreconditionError("weights must sum to a value in (0, 1]");
}

WeightedGroupMetric WeightedGroupMetric::geometric(std::size_t dim, double base, double total) {
  if (!(base > 1.0) || !std::isfinite(base)) throw PreconditionError("geometric weight base must be > 1");
  // sum_k base^{-|k|} = (base+1)/(base-1) per axis.
  const double axis_sum = (base + 1.0) / (base - 1.0);
  const double c = total / std::pow(axis_sum, static_cast<double>(dim));
  auto weight = [c, base](const LatticePoint& g) {
    return c * std::pow(base, -static_cast<double>(l1_length(g)));
  };
  // S^d - S_K^d = (S - S_K) * sum_j S^j S_K^{d-1-j}, S - S_K = 2 base^{-K}/(base-1).
  auto tail = [c, base, axis_sum, dim](std::int64_t radius) {
    const double gap = 2.0 * std::pow(base, -static_cast<double>(radius)) / (base - 1.0);
    const double inner = axis_sum - gap;
    double factor = 0.0;
    for (std::size_t j = 0; j < dim; ++j)
      factor += std::pow(axis_sum, static_cast<double>(j)) * std::pow(inner, static_cast<double>(dim - 1 - j));
    return c * gap * factor;
  };
  char name[96];
  std::snprintf(name, sizeof name, "geometric(base=%.17g,total=%.17g)", base, total);
  return WeightedGroupMetric(dim, weight, tail, total, name);
}

// ---------------------------------------------------------------------------

FinitelySupportedPoint::FinitelySupportedPoint(std::size_t dim, double p, Values values) : dim_(dim), p_(p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw PreconditionError("FinitelySupportedPoint requires finite p >= 1");
  std::vector<double> terms;
  for (auto& [g, v] : values) {
    if (g.size() != dim) throw PreconditionError("support point has wrong dimension");
    if (!std::isfinite(v)) throw PreconditionError("support values must be finite");
    if (v == 0.0) continue;
    terms.push_back(std::pow(std::fabs(v), p));
    values_.emplace(g, v);
  }
  if (detail::ordered_sum(terms) > 1.0 + kBallTolerance)
    throw PreconditionError("FinitelySupportedPoint lies outside the unit lp-ball");
}

double FinitelySupportedPoint::at(const LatticePoint& g) const {
  auto it = values_.find(g);
  return it == values_.end() ? 0.0 : it->second;
}

double FinitelySupportedPoint::norm_power() const {
  std::vector<double> terms;
  for (auto& [g, v] : values_) terms.push_back(std::pow(std::fabs(v), p_));
  return detail::ordered_sum(terms);
}

FinitelySupportedPoint translate(const FinitelySupportedPoint& x, const LatticePoint& delta) {
  if (delta.size() != x.dim()) throw PreconditionError("translate: dimension mismatch");
  FinitelySupportedPoint::Values out;
  for (auto& [g, v] : x.values()) out.emplace_hint(out.end(), lattice_sub(g, delta), v);
  return FinitelySupportedPoint(x.dim(), x.p(), std::move(out));
}

double weighted_distance(const FinitelySupportedPoint& x, const FinitelySupportedPoint& y,
                         const WeightedGroupMetric& metric) {
  if (x.dim() != metric.dim() || y.dim() != metric.dim())
    throw PreconditionError("weighted_distance: dimension mismatch");
  if (x.p() != y.p()) throw PreconditionError("weighted_distance: points use different p");
  // Merge the two ordered supports; terms are added in lexicographic order.
  double sum = 0.0;
  auto ix = x.values().begin(), ex = x.values().end();
  auto iy = y.values().begin(), ey = y.values().end();
  while (ix != ex || iy != ey) {
    if (iy == ey || (ix != ex && ix->first < iy->first)) {
      sum += metric.weight(ix->first) * std::fabs(ix->second);
      ++ix;
    } else if (ix == ex || iy->first < ix->first) {
      sum += metric.weight(iy->first) * std::fabs(iy->second);
      ++iy;
    } else {
      sum += metric.weight(ix->first) * std::fabs(ix->second - iy->second);
      ++ix;
      ++iy;
    }
  }
  return sum;
}

double omega_distance(const FinitelySupportedPoint& x, const FinitelySupportedPoint& y,
                      const WeightedGroupMetric& metric, std::span<const LatticePoint> omega) {
  if (omega.empty()) throw PreconditionError("omega_distance requires a nonempty Omega");
  double best = 0.0;
  for (const auto& delta : omega)
    best = std::max(best, weighted_distance(translate(x, delta), translate(y, delta), metric));
  return best;
}

LatticeBox tail_set(const WeightedGroupMetric& metric, const LatticePoint& delta, double eps) {
  if (!(eps > 0.0)) throw PreconditionError("tail_set requires eps > 0");
  if (delta.size() != metric.dim()) throw PreconditionError("tail_set: dimension mismatch");
  constexpr std::int64_t kMaxRadius = 1 << 20;
  // sum_{g outside delta + B_K} w(g - delta) = sum_{g outside B_K} w(g).
  for (std::int64_t k = 0; k <= kMaxRadius; ++k)
    if (metric.tail_bound(k) <= eps / 4.0) return LatticeBox{delta, k};
  throw PreconditionError("tail_set: tail bound never drops below eps/4");
}

std::int64_t widim_constant(double p, double eps) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw PreconditionError("widim_constant requires p >= 1");
  if (!(eps > 0.0)) throw PreconditionError("widim_constant requires eps > 0");
  const auto c = ceil_minus_one(std::pow(4.0 / eps, p));
  if (!c) throw PreconditionError("widim_constant saturated; eps too small");
  return *c;
}

bool operator==(const SupportEntry& a, const SupportEntry& b) {
  return a.point == b.point && a.value == b.value;
}

bool operator==(const EmbeddingCheckReport& a, const EmbeddingCheckReport& b) {
  return a.dim_d == b.dim_d && a.p == b.p && a.epsilon == b.epsilon && a.seed == b.seed &&
         a.omega_size == b.omega_size && a.omega_prime_size == b.omega_prime_size &&
         a.tail_radius == b.tail_radius && a.widim_constant == b.widim_constant &&
         a.pairs_sampled == b.pairs_sampled && a.pairs_checked == b.pairs_checked &&
         a.failures == b.failures && a.worst_margin == b.worst_margin && a.witness_x == b.witness_x &&
         a.witness_y == b.witness_y && a.map_distortion_max == b.map_distortion_max &&
         a.map_distortion_bound == b.map_distortion_bound;
}

std::vector<LatticePoint> omega_prime(const WeightedGroupMetric& metric, std::span<const LatticePoint> omega,
                                      double eps) {
  std::set<LatticePoint> acc;
  for (const auto& delta : omega)
    for (auto& g : tail_set(metric, delta, eps).points()) acc.insert(std::move(g));
  return {acc.begin(), acc.end()};
}

// ---------------------------------------------------------------------------
// Embedding check

namespace {

// Sampling layout for one embedding_check run. Pairs are generated from
// their index alone so any one of them can be rebuilt as a witness.
class PairSampler {
 public:
  PairSampler(const WeightedGroupMetric& metric, std::span<const LatticePoint> omega,
              std::vector<LatticePoint> inner, double p, double eps, std::uint64_t seed)
      : dim_(metric.dim()), p_(p), eps_(eps), seed_(seed), inner_(std::move(inner)) {
    std::int64_t reach = 0;
    for (const auto& g : inner_) reach = std::max(reach, linf_length(g));
    const LatticeBox window{LatticePoint(dim_, 0), 2 * reach + 1};
    const std::set<LatticePoint> inner_set(inner_.begin(), inner_.end());
    for (auto& g : window.points())
      if (!inner_set.count(g)) outer_.push_back(std::move(g));
    // Spikes go where the translated weights are heaviest.
    std::vector<std::pair<double, std::size_t>> score;
    for (std::size_t i = 0; i < outer_.size(); ++i) {
      double s = 0.0;
      for (const auto& delta : omega) s = std::max(s, metric.weight(lattice_sub(outer_[i], delta)));
      score.emplace_back(-s, i);
    }
    std::sort(score.begin(), score.end());
    for (std::size_t k = 0; k < std::min<std::size_t>(8, score.size()); ++k) spikes_.push_back(score[k].second);
  }

  std::pair<FinitelySupportedPoint, FinitelySupportedPoint> make(std::uint64_t index) const {
    PhiloxStream rng(seed_, stream_id(StreamDomain::group_pairs, index));
    const Exponent p = Exponent::finite(p_);
    const std::size_t ni = inner_.size(), no = outer_.size();
    std::vector<double> xi(ni, 0.0), yi(ni, 0.0), xo(no, 0.0), yo(no, 0.0);
    switch (index % 3) {
      case 0: {  // eps/2-close on Omega', unrelated outside it
        std::vector<double> u(ni), delta(ni), ox(no), oy(no);
        detail::sample_lp_ball(u, p, rng);
        detail::sample_lp_ball(delta, p, rng);
        detail::sample_lp_ball(ox, p, rng);
        detail::sample_lp_ball(oy, p, rng);
        const double rho = std::min(eps_ / 2.0, 1.0 / 3.0) * (1.0 - rng.uniform01());
        const double beta = (1.0 - rho) * rng.uniform01();
        const double alpha = 1.0 - rho - beta;
        for (std::size_t i = 0; i < ni; ++i) {
          xi[i] = alpha * u[i];
          yi[i] = alpha * u[i] + rho * delta[i];
        }
        for (std::size_t i = 0; i < no; ++i) {
          xo[i] = beta * ox[i];
          yo[i] = beta * oy[i];
        }
        break;
      }
      case 1: {  // equal on Omega', opposite spikes just outside it
        std::vector<double> u(ni);
        detail::sample_lp_ball(u, p, rng);
        const double alpha = 0.5 * rng.uniform01();
        const double beta = 1.0 - alpha;
        for (std::size_t i = 0; i < ni; ++i) xi[i] = yi[i] = alpha * u[i];
        if (!spikes_.empty()) {
          const std::size_t a = spikes_[rng() % spikes_.size()];
          const std::size_t b = spikes_[rng() % spikes_.size()];
          const double sign = (rng() & 1u) ? -1.0 : 1.0;
          xo[a] = sign * beta;
          yo[b] = -sign * beta;
        }
        break;
      }
      default: {  // independent
        detail::sample_lp_ball(xi, p, rng);
        detail::sample_lp_ball(yi, p, rng);
        const double share = rng.uniform01();
        std::vector<double> ox(no), oy(no);
        detail::sample_lp_ball(ox, p, rng);
        detail::sample_lp_ball(oy, p, rng);
        const double a = std::pow(1.0 - share, 1.0 / p_), b = std::pow(share, 1.0 / p_);
        for (auto& v : xi) v *= a;
        for (auto& v : yi) v *= a;
        for (std::size_t i = 0; i < no; ++i) {
          xo[i] = b * ox[i];
          yo[i] = b * oy[i];
        }
        break;
      }
    }
    return {assemble(xi, xo), assemble(yi, yo)};
  }

  /// pi(x): the coordinates on Omega', in order.
  std::vector<double> project(const FinitelySupportedPoint& x) const {
    std::vector<double> out(inner_.size());
    for (std::size_t i = 0; i < inner_.size(); ++i) out[i] = x.at(inner_[i]);
    return out;
  }

  std::size_t inner_size() const noexcept { return inner_.size(); }

 private:
  FinitelySupportedPoint assemble(const std::vector<double>& in, const std::vector<double>& out) const {
    FinitelySupportedPoint::Values values;
    for (std::size_t i = 0; i < inner_.size(); ++i) values.emplace(inner_[i], in[i]);
    for (std::size_t i = 0; i < outer_.size(); ++i) values.emplace(outer_[i], out[i]);
    return FinitelySupportedPoint(dim_, p_, std::move(values));
  }

  std::size_t dim_;
  double p_, eps_;
  std::uint64_t seed_;
  std::vector<LatticePoint> inner_, outer_;
  std::vector<std::size_t> spikes_;
};

std::vector<SupportEntry> entries(const FinitelySupportedPoint& x) {
  std::vector<SupportEntry> out;
  for (auto& [g, v] : x.values()) out.push_back({g, v});
  return out;
}

struct PairTally {
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  ArgMax worst;  // largest d_Omega among checked pairs
  double map_max = 0.0;
};

}  // namespace

EmbeddingCheckReport embedding_check(const WeightedGroupMetric& metric, std::span<const LatticePoint> omega,
                                     double p, double eps, std::uint64_t samples, std::uint64_t seed,
                                     const EmbeddingCheckOptions& opts) {
  if (samples == 0) throw PreconditionError("embedding_check requires N >= 1");
  if (omega.empty()) throw PreconditionError("embedding_check requires a nonempty Omega");
  EmbeddingCheckReport rep;
  rep.dim_d = metric.dim();
  rep.p = p;
  rep.epsilon = eps;
  rep.seed = seed;
  rep.omega_size = omega.size();
  rep.tail_radius = tail_set(metric, omega.front(), eps).radius;
  rep.widim_constant = widim_constant(p, eps);
  rep.pairs_sampled = samples;
  rep.map_distortion_bound = std::pow(static_cast<double>(rep.widim_constant + 1), -1.0 / p);

  auto inner = omega_prime(metric, omega, eps);
  rep.omega_prime_size = inner.size();
  const PairSampler sampler(metric, omega, std::move(inner), p, eps, seed);
  const std::size_t m = static_cast<std::size_t>(rep.widim_constant);

  const unsigned workers = std::max(1u, opts.workers);
  std::vector<PairTally> tallies(workers);
  parallel_chunks(samples, workers, [&](unsigned w, std::size_t begin, std::size_t end) {
    ThresholdWorkspace ws(sampler.inner_size());
    PairTally tally;
    for (std::size_t i = begin; i < end; ++i) {
      auto [x, y] = sampler.make(i);
      const auto px = sampler.project(x);
      const auto py = sampler.project(y);
      tally.map_max = std::max(tally.map_max, detail::distortion(px, m, Exponent::infinity(), ws));
      double sup = 0.0;
      for (std::size_t k = 0; k < px.size(); ++k) sup = std::max(sup, std::fabs(px[k] - py[k]));
      if (sup > eps / 2.0) continue;
      ++tally.checked;
      const double d = omega_distance(x, y, metric, omega);
      if (d > eps + kBoundTolerance) ++tally.failures;
      tally.worst.offer(d, i);
    }
    tallies[w] = tally;
  });

  ArgMax worst;
  for (const auto& t : tallies) {
    rep.pairs_checked += t.checked;
    rep.failures += t.failures;
    rep.map_distortion_max = std::max(rep.map_distortion_max, t.map_max);
    worst.merge(t.worst);
  }
  if (worst.empty()) {
    rep.worst_margin = eps;
  } else {
    rep.worst_margin = eps - worst.value;
    auto [x, y] = sampler.make(worst.index);
    rep.witness_x = entries(x);
    rep.witness_y = entries(y);
  }
  return rep;
}

std::vector<MeanDimensionRow> mean_dimension_table(const WeightedGroupMetric& metric, double p, double eps,
                                                   std::span<const std::int64_t> radii) {
  const std::int64_t c = widim_constant(p, eps);
  std::vector<MeanDimensionRow> rows;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (radii[i] < 0) throw PreconditionError("mean_dimension_table: radii must be >= 0");
    if (i > 0 && radii[i] <= radii[i - 1])
      throw PreconditionError("mean_dimension_table: radii must be strictly increasing");
    const LatticeBox box{LatticePoint(metric.dim(), 0), radii[i]};
    const std::uint64_t size = box.size();
    rows.push_back({radii[i], size, c, static_cast<double>(c) / static_cast<double>(size)});
  }
  return rows;
}

}  // namespace lpwidim
