#pragma once

// Numerical certification of the distortion bound
//
//   d_q(x, f(x)) <= (m+1)^{-(1/p - 1/q)}   for every x in B_p(R^n),
//
// by uniform Monte Carlo sampling and by adversarial hill climbing, plus
// brute-force checks of the two elementary inequalities the bound rests on.

#include <cstdint>
#include <span>
#include <vector>

#include "lpwidim/core.hpp"
#include "lpwidim/random.hpp"
#include "lpwidim/threshold_map.hpp"

namespace lpwidim {

inline constexpr double kBoundTolerance = 1e-9;
inline constexpr double kEqualityTolerance = 1e-12;
inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

/// Uniform point of B_p(R^n); p may be infinite (independent U[-1, 1]).
RealVector sample_lp_ball(std::size_t n, Exponent p, PhiloxStream& rng);
/// Uniform point (for the cone measure) of the unit lp-sphere, p finite.
RealVector sample_lp_sphere(std::size_t n, double p, PhiloxStream& rng);

namespace detail {
void sample_lp_ball(std::span<double> out, Exponent p, PhiloxStream& rng);
}

struct CertificationReport {
  std::size_t n = 0;
  std::size_t m = 0;
  Exponents exponents{1.0, Exponent::infinity(), 1.0};
  std::uint64_t sample_count = 0;
  std::uint64_t seed = kDefaultSeed;
  double max_observed_distortion = 0.0;
  double bound = 0.0;
  double margin = 0.0;
  std::vector<double> argmax_vector;
  double elapsed = 0.0;  // seconds; 0 unless timing was requested

  bool passed() const noexcept { return margin >= -kBoundTolerance; }
  /// Equality of every field except elapsed.
  bool same_outcome(const CertificationReport& other) const noexcept;
};

struct CertifyOptions {
  unsigned workers = 1;
  bool record_elapsed = false;
};

/// Evaluates the distortion on N uniform ball samples plus, for m < n,
/// the extremal vector; reports the maximum and its witness.
CertificationReport monte_carlo_certify(std::size_t n, SparsityLevel m, const Exponents& e,
                                        std::uint64_t samples, std::uint64_t seed,
                                        const CertifyOptions& opts = {});

struct AdversarialOptions {
  unsigned workers = 1;
  bool record_elapsed = false;
  int max_sweeps = 200;
  double initial_step = 0.25;
  double min_step = 1e-12;
};

/// Coordinate-ascent search for large distortion, started from the
/// extremal vector and from `restarts` random ball points. A step that
/// leaves the ball is pulled back onto the sphere.
CertificationReport adversarial_certify(std::size_t n, SparsityLevel m, const Exponents& e,
                                        std::uint64_t restarts, std::uint64_t seed,
                                        const AdversarialOptions& opts = {});

// Elementary inequalities.

/// x^s + (y+z)^s <= (x+z)^s + y^s for s >= 1 and x >= y >= 0, z >= 0.
bool check_lemma_swap(double s, double x, double y, double z);

/// sum x_i^s <= c t^{s-1} whenever sum x_i <= c and 0 <= x_i <= t.
bool check_key_lemma(double s, double c, double t, std::span<const double> xs);

struct KeyLemmaMaximum {
  double vertex;   // best over the vertex family
  double sampled;  // best over random feasible points
  double bound;    // c t^{s-1}
  double value() const noexcept { return vertex > sampled ? vertex : sampled; }
};

/// Maximum of sum x_i^s over {sum x_i <= c, 0 <= x_i <= t} in R^n, from the
/// vertices (k coordinates at t, one at min(t, c - k t)) cross-checked by
/// `interior_samples` random feasible points.
KeyLemmaMaximum key_lemma_maximum(double s, double c, double t, std::size_t n,
                                  std::uint64_t seed = kDefaultSeed,
                                  std::size_t interior_samples = 4096);
inline double key_lemma_oracle_max(double s, double c, double t, std::size_t n) {
  return key_lemma_maximum(s, c, t, n).value();
}

struct LemmaGridResult {
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  /// Oracle maxima that exceeded c t^{s-1}; only used by the key lemma grid.
  std::uint64_t oracle_exceedances = 0;
  /// Sampled interior points that beat the vertex family.
  std::uint64_t vertex_beaten = 0;
};

/// Exhaustive check on s in {1, 1.5, 2, 3}, x, y, z in {0, 0.05, ..., 2}, x >= y.
LemmaGridResult lemma_swap_grid();
/// Exhaustive check on s in {1, 1.5, 2, 4}, c in {0.5, 1, 2},
/// t in {0.1, 0.25, 0.5}, n in 1..8.
LemmaGridResult key_lemma_grid(std::uint64_t seed = kDefaultSeed);

}  // namespace lpwidim
