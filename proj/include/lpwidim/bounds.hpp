#pragma once

// Closed-form bounds on Widim_eps(B_p(R^n), d_q), the width dimension of
// the unit lp-ball under the lq distance.
//
//   upper:         min(n, ceil((2/eps)^r) - 1)          for p < q
//   lower:         min(n, ceil(eps^{-r}) - 1)           for p < q
//   q = inf:       min(n, ceil((2/eps)^p) - 1), exact
//   q <= p:        n for eps < 1
//
// The simplex Delta^{n-1} sits inside B_1(R^n), so its Widim_eps under the
// Euclidean distance is at most widim_upper(n, eps, make_exponents(1, 2)).

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "lpwidim/core.hpp"

namespace lpwidim {

/// Largest value a bound may take before it is reported as saturated.
inline constexpr double kSaturationLimit = 0x1.0p62;

/// ceil(v) - 1, with v snapped to a nearby integer first so rounding noise
/// at integer points does not shift the result. nullopt when v exceeds
/// kSaturationLimit.
std::optional<std::int64_t> ceil_minus_one(double v);

std::int64_t widim_upper(std::int64_t n, double eps, const Exponents& e);
std::int64_t widim_lower(std::int64_t n, double eps, const Exponents& e);
std::int64_t widim_exact_q_infinity(std::int64_t n, double eps, double p);

/// The n-independent forms (n -> inf); nullopt means saturated.
std::optional<std::int64_t> stable_widim_upper(double eps, const Exponents& e);
std::optional<std::int64_t> stable_widim_lower(double eps, const Exponents& e);

/// n when eps < 1 and q <= p; nullopt for eps >= 1, which the formula
/// does not cover. Throws if q > p.
std::optional<std::int64_t> widim_equal_case(std::int64_t n, double eps, Exponent p, Exponent q);

enum class BoundRegime {
  bracket,               // p < q < inf: lower and upper may differ
  q_infinity_exact,      // q = inf: upper is attained
  equal_case,            // q <= p, eps < 1: the value is n
  equal_case_uncovered,  // q <= p, eps >= 1: only 0 <= Widim <= n is known
};

std::string_view regime_name(BoundRegime regime) noexcept;

struct WidimBoundReport {
  std::int64_t n;
  double epsilon;
  Exponent p;
  Exponent q;
  std::optional<double> r;  // absent when q <= p
  std::int64_t lower;
  std::int64_t upper;
  bool exact;
  BoundRegime regime;

  friend bool operator==(const WidimBoundReport&, const WidimBoundReport&) = default;
};

WidimBoundReport bracket(std::int64_t n, double eps, const Exponents& e);
/// Any exponent pair: dispatches to bracket() for p < q and to the equal
/// case otherwise.
WidimBoundReport bracket_any(std::int64_t n, double eps, Exponent p, Exponent q);

enum class BoundFamily { lower, upper };

/// Least-squares slope of log(stable bound) against |log eps|. The grid
/// needs at least 4 strictly decreasing points in (0, 1).
double asymptotic_exponent_fit(const Exponents& e, std::span<const double> eps_grid,
                               BoundFamily family);

/// m^{-1/r}: the largest rho for which Hoelder's inequality guarantees
/// B_q(R^m, rho) inside B_p(R^m).
double ball_inclusion_max_radius(std::int64_t m, const Exponents& e);
/// rho * m^{1/r} <= 1.
bool ball_inclusion_holds(double rho, std::int64_t m, const Exponents& e);

}  // namespace lpwidim
