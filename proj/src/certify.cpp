#include "lpwidim/certify.hpp"

#include <algorithm>
#include <boost/random/exponential_distribution.hpp>
#include <boost/random/gamma_distribution.hpp>
#include <chrono>
#include <cmath>

#include "lpwidim/parallel.hpp"
#include "lpwidim/simd/kernels.hpp"

namespace lpwidim {

// ---------------------------------------------------------------------------
// Sampling

namespace detail {

// Generalized-Gaussian construction: with |u_i|^p ~ Gamma(1/p) and an
// independent Exp(1) variate Y, u / (sum |u_j|^p + Y)^{1/p} is uniform on
// the ball.
void sample_lp_ball(std::span<double> out, Exponent p, PhiloxStream& rng) {
  if (p.is_infinite()) {
    for (double& v : out) v = 2.0 * rng.uniform01() - 1.0;
    return;
  }
  const double pv = p.value();
  boost::random::gamma_distribution<double> gamma(1.0 / pv);
  boost::random::exponential_distribution<double> expo(1.0);
  double total = 0.0;
  for (double& v : out) {
    const double g = gamma(rng);
    total += g;
    const double mag = pv == 1.0 ? g : std::pow(g, 1.0 / pv);
    v = (rng() & 1u) ? -mag : mag;
  }
  total += expo(rng);
  const double s = pv == 1.0 ? 1.0 / total : std::pow(total, -1.0 / pv);
  simd::active_kernels().scale(out.data(), s, out.data(), out.size());
}

}  // namespace detail

RealVector sample_lp_ball(std::size_t n, Exponent p, PhiloxStream& rng) {
  if (n == 0) throw PreconditionError("sample_lp_ball requires n >= 1");
  std::vector<double> out(n);
  detail::sample_lp_ball(out, p, rng);
  return RealVector(std::move(out));
}

RealVector sample_lp_sphere(std::size_t n, double p, PhiloxStream& rng) {
  if (n == 0) throw PreconditionError("sample_lp_sphere requires n >= 1");
  std::vector<double> out(n);
  boost::random::gamma_distribution<double> gamma(1.0 / p);
  double total = 0.0;
  for (double& v : out) {
    const double g = gamma(rng);
    total += g;
    const double mag = std::pow(g, 1.0 / p);
    v = (rng() & 1u) ? -mag : mag;
  }
  const double s = std::pow(total, -1.0 / p);
  for (double& v : out) v *= s;
  return RealVector(std::move(out));
}

bool CertificationReport::same_outcome(const CertificationReport& o) const noexcept {
  return n == o.n && m == o.m && exponents.p == o.exponents.p && exponents.q == o.exponents.q &&
         exponents.r == o.exponents.r && sample_count == o.sample_count && seed == o.seed &&
         max_observed_distortion == o.max_observed_distortion && bound == o.bound &&
         margin == o.margin && argmax_vector == o.argmax_vector;
}

// ---------------------------------------------------------------------------
// Monte Carlo

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void check_certify_args(std::size_t n, std::uint64_t count, const char* what) {
  if (n == 0) throw PreconditionError("certification requires n >= 1");
  if (count == 0) throw PreconditionError(std::string(what) + " must be >= 1");
}

void finish(CertificationReport& rep, double best) {
  rep.max_observed_distortion = best;
  rep.margin = rep.bound - best;
}

}  // namespace

CertificationReport monte_carlo_certify(std::size_t n, SparsityLevel m, const Exponents& e,
                                        std::uint64_t samples, std::uint64_t seed,
                                        const CertifyOptions& opts) {
  check_certify_args(n, samples, "sample count");
  const auto start = Clock::now();
  CertificationReport rep;
  rep.n = n;
  rep.m = m.m;
  rep.exponents = e;
  rep.seed = seed;
  rep.bound = distortion_bound(m, e);
  const Exponent p = Exponent::finite(e.p);

  // Candidate 0 is the extremal vector; sample i is candidate i + 1.
  ArgMax best;
  std::vector<double> extremal;
  if (m.m < n) {
    extremal = extremal_vector(m, e.p, n).to_vector();
    ThresholdWorkspace ws(n);
    best.offer(detail::distortion(extremal, m.m, e.q, ws), 0);
  }

  const unsigned workers = std::max(1u, opts.workers);
  std::vector<ArgMax> partial(workers);
  parallel_chunks(samples, workers, [&](unsigned w, std::size_t begin, std::size_t end) {
    ThresholdWorkspace ws(n);
    std::vector<double> x(n);
    ArgMax local;
    for (std::size_t i = begin; i < end; ++i) {
      PhiloxStream rng(seed, stream_id(StreamDomain::ball_sample, i));
      detail::sample_lp_ball(x, p, rng);
      local.offer(detail::distortion(x, m.m, e.q, ws), i + 1);
    }
    partial[w] = local;
  });
  for (const auto& part : partial) best.merge(part);

  rep.sample_count = samples + (extremal.empty() ? 0 : 1);
  if (best.index == 0) {
    rep.argmax_vector = extremal;
  } else {
    std::vector<double> x(n);
    PhiloxStream rng(seed, stream_id(StreamDomain::ball_sample, best.index - 1));
    detail::sample_lp_ball(x, p, rng);
    rep.argmax_vector = std::move(x);
  }
  finish(rep, best.value);
  if (opts.record_elapsed) rep.elapsed = seconds_since(start);
  return rep;
}

// ---------------------------------------------------------------------------
// Adversarial search

namespace {

struct ClimbResult {
  double value;
  std::vector<double> x;
};

class Climber {
 public:
  Climber(std::size_t n, std::size_t m, const Exponents& e, const AdversarialOptions& opts)
      : n_(n), m_(m), e_(e), opts_(opts), ws_(n), cand_(n), scratch_(n) {}

  ClimbResult run(std::vector<double> x) {
    project(x);
    double best = eval(x);
    double step = opts_.initial_step;
    for (int sweep = 0; sweep < opts_.max_sweeps && step >= opts_.min_step; ++sweep) {
      bool improved = false;
      for (std::size_t i = 0; i < n_; ++i) {
        for (double dir : {1.0, -1.0}) {
          std::copy(x.begin(), x.end(), cand_.begin());
          cand_[i] += dir * step;
          project(cand_);
          const double v = eval(cand_);
          if (v > best) {
            best = v;
            std::swap(x, cand_);
            cand_.resize(n_);
            improved = true;
          }
        }
      }
      if (!improved) step *= 0.5;
    }
    return {best, std::move(x)};
  }

 private:
  double eval(std::span<const double> x) { return detail::distortion(x, m_, e_.q, ws_); }

  // Pulls x back onto the unit sphere when it has left the ball.
  void project(std::span<double> x) {
    const double power = detail::lp_norm_power(x, e_.p, scratch_);
    if (power > 1.0) {
      const double s = std::pow(power, -1.0 / e_.p);
      simd::active_kernels().scale(x.data(), s, x.data(), x.size());
    }
  }

  std::size_t n_, m_;
  Exponents e_;
  AdversarialOptions opts_;
  ThresholdWorkspace ws_;
  std::vector<double> cand_, scratch_;
};

}  // namespace

CertificationReport adversarial_certify(std::size_t n, SparsityLevel m, const Exponents& e,
                                        std::uint64_t restarts, std::uint64_t seed,
                                        const AdversarialOptions& opts) {
  check_certify_args(n, restarts, "restart count");
  const auto start = Clock::now();
  CertificationReport rep;
  rep.n = n;
  rep.m = m.m;
  rep.exponents = e;
  rep.seed = seed;
  rep.bound = distortion_bound(m, e);
  const Exponent p = Exponent::finite(e.p);

  // Start 0 is the extremal vector (when m < n); start i >= 1 is random.
  const bool has_extremal = m.m < n;
  const std::size_t starts = restarts + 1;
  std::vector<ClimbResult> results(starts, ClimbResult{-1.0, {}});
  parallel_chunks(starts, opts.workers, [&](unsigned, std::size_t begin, std::size_t end) {
    Climber climber(n, m.m, e, opts);
    for (std::size_t i = begin; i < end; ++i) {
      std::vector<double> x(n);
      if (i == 0) {
        if (!has_extremal) continue;
        x = extremal_vector(m, e.p, n).to_vector();
      } else {
        PhiloxStream rng(seed, stream_id(StreamDomain::adversarial, i - 1));
        detail::sample_lp_ball(x, p, rng);
      }
      results[i] = climber.run(std::move(x));
    }
  });

  ArgMax best;
  for (std::size_t i = 0; i < starts; ++i)
    if (!results[i].x.empty()) best.offer(results[i].value, i);
  rep.sample_count = has_extremal ? starts : restarts;
  rep.argmax_vector = results[best.index].x;
  finish(rep, best.value);
  if (opts.record_elapsed) rep.elapsed = seconds_since(start);
  return rep;
}

// ---------------------------------------------------------------------------
// Elementary inequalities

namespace {

double relative_slack_tolerance(double scale) { return kEqualityTolerance * std::max(1.0, scale); }

void check_s(double s) {
  if (!(s >= 1.0) || !std::isfinite(s)) throw PreconditionError("lemma exponent s must be >= 1");
}

double power_sum(std::span<const double> xs, double s) {
  std::vector<double> terms(xs.begin(), xs.end());
  for (double& t : terms) t = std::pow(t, s);
  return detail::ordered_sum(terms);
}

}  // namespace

bool check_lemma_swap(double s, double x, double y, double z) {
  check_s(s);
  if (x < 0.0 || y < 0.0 || z < 0.0) throw PreconditionError("check_lemma_swap requires x, y, z >= 0");
  if (x < y) throw PreconditionError("check_lemma_swap requires x >= y");
  const double lhs = std::pow(x, s) + std::pow(y + z, s);
  const double rhs = std::pow(x + z, s) + std::pow(y, s);
  return rhs - lhs >= -relative_slack_tolerance(rhs);
}

bool check_key_lemma(double s, double c, double t, std::span<const double> xs) {
  check_s(s);
  if (c < 0.0 || t < 0.0) throw PreconditionError("check_key_lemma requires c, t >= 0");
  if (xs.empty()) throw PreconditionError("check_key_lemma requires n >= 1");
  double sum = 0.0;
  for (double v : xs) {
    if (v < 0.0 || v > t) throw PreconditionError("check_key_lemma requires 0 <= x_i <= t");
    sum += v;
  }
  if (sum > c + relative_slack_tolerance(c)) throw PreconditionError("check_key_lemma requires sum x_i <= c");
  const double bound = c * std::pow(t, s - 1.0);
  return power_sum(xs, s) <= bound + relative_slack_tolerance(bound);
}

KeyLemmaMaximum key_lemma_maximum(double s, double c, double t, std::size_t n, std::uint64_t seed,
                                  std::size_t interior_samples) {
  check_s(s);
  if (c < 0.0 || t < 0.0) throw PreconditionError("key_lemma_maximum requires c, t >= 0");
  if (n == 0) throw PreconditionError("key_lemma_maximum requires n >= 1");
  KeyLemmaMaximum out{0.0, 0.0, c * std::pow(t, s - 1.0)};

  const double ts = std::pow(t, s);
  for (std::size_t k = 0; k <= n; ++k) {
    const double used = static_cast<double>(k) * t;
    if (used > c + relative_slack_tolerance(c)) break;
    double value = static_cast<double>(k) * ts;
    if (k < n) value += std::pow(std::clamp(c - used, 0.0, t), s);
    out.vertex = std::max(out.vertex, value);
  }

  std::vector<double> x(n);
  for (std::size_t i = 0; i < interior_samples; ++i) {
    PhiloxStream rng(seed, stream_id(StreamDomain::lemma_interior, i));
    double sum = 0.0;
    for (double& v : x) {
      v = t * rng.uniform01();
      sum += v;
    }
    if (sum > c) {
      const double shrink = c / sum;
      for (double& v : x) v *= shrink;
    }
    out.sampled = std::max(out.sampled, power_sum(x, s));
  }
  return out;
}

LemmaGridResult lemma_swap_grid() {
  LemmaGridResult res;
  for (double s : {1.0, 1.5, 2.0, 3.0}) {
    for (int ix = 0; ix <= 40; ++ix) {
      for (int iy = 0; iy <= ix; ++iy) {
        for (int iz = 0; iz <= 40; ++iz) {
          ++res.checked;
          if (!check_lemma_swap(s, ix / 20.0, iy / 20.0, iz / 20.0)) ++res.violations;
        }
      }
    }
  }
  return res;
}

LemmaGridResult key_lemma_grid(std::uint64_t seed) {
  LemmaGridResult res;
  for (double s : {1.0, 1.5, 2.0, 4.0}) {
    for (double c : {0.5, 1.0, 2.0}) {
      for (double t : {0.1, 0.25, 0.5}) {
        for (std::size_t n = 1; n <= 8; ++n) {
          const KeyLemmaMaximum mx = key_lemma_maximum(s, c, t, n, seed);
          ++res.checked;
          if (mx.value() > mx.bound + relative_slack_tolerance(mx.bound)) ++res.oracle_exceedances;
          if (mx.sampled > mx.vertex + relative_slack_tolerance(mx.vertex)) ++res.vertex_beaten;
          // Every vertex of the family must satisfy the inequality itself.
          for (std::size_t k = 0; k <= n; ++k) {
            const double used = static_cast<double>(k) * t;
            if (used > c + relative_slack_tolerance(c)) break;
            std::vector<double> xs(n, 0.0);
            std::fill(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(k), t);
            if (k < n) xs[k] = std::clamp(c - used, 0.0, t);
            ++res.checked;
            if (!check_key_lemma(s, c, t, xs)) ++res.violations;
          }
        }
      }
    }
  }
  return res;
}

}  // namespace lpwidim
