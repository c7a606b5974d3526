#include "lpwidim/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace lpwidim {

namespace {

constexpr double kIntegerSnap = 1e-9;

void check_n_eps(std::int64_t n, double eps) {
  if (n < 1) throw PreconditionError("Widim bounds require n >= 1");
  if (!(eps > 0.0) || !std::isfinite(eps)) throw PreconditionError("Widim bounds require eps > 0");
}

std::int64_t clamp_to_n(std::int64_t n, std::optional<std::int64_t> v) {
  return v ? std::min(n, *v) : n;
}

}  // namespace

std::optional<std::int64_t> ceil_minus_one(double v) {
  if (std::isnan(v)) throw PreconditionError("ceil_minus_one: NaN");
  if (!(v <= kSaturationLimit)) return std::nullopt;
  const double nearest = std::round(v);
  const double ulp = std::nextafter(std::fabs(v), INFINITY) - std::fabs(v);
  const double snap = std::max(kIntegerSnap, 4.0 * ulp);
  double c = std::fabs(v - nearest) <= snap ? nearest : std::ceil(v);
  // A positive value never snaps down to 0: its ceiling is at least 1.
  if (v > 0.0 && c < 1.0) c = 1.0;
  return static_cast<std::int64_t>(c) - 1;
}

std::optional<std::int64_t> stable_widim_upper(double eps, const Exponents& e) {
  return ceil_minus_one(std::pow(2.0 / eps, e.r));
}

std::optional<std::int64_t> stable_widim_lower(double eps, const Exponents& e) {
  return ceil_minus_one(std::pow(eps, -e.r));
}

std::int64_t widim_upper(std::int64_t n, double eps, const Exponents& e) {
  check_n_eps(n, eps);
  return clamp_to_n(n, stable_widim_upper(eps, e));
}

std::int64_t widim_lower(std::int64_t n, double eps, const Exponents& e) {
  check_n_eps(n, eps);
  return clamp_to_n(n, stable_widim_lower(eps, e));
}

std::int64_t widim_exact_q_infinity(std::int64_t n, double eps, double p) {
  check_n_eps(n, eps);
  if (!(p >= 1.0) || !std::isfinite(p)) throw PreconditionError("widim_exact_q_infinity requires p >= 1");
  return clamp_to_n(n, ceil_minus_one(std::pow(2.0 / eps, p)));
}

std::optional<std::int64_t> widim_equal_case(std::int64_t n, double eps, Exponent p, Exponent q) {
  check_n_eps(n, eps);
  if (p < q) throw PreconditionError("widim_equal_case requires q <= p; use bracket for p < q");
  if (eps < 1.0) return n;
  return std::nullopt;
}

std::string_view regime_name(BoundRegime regime) noexcept {
  switch (regime) {
    case BoundRegime::bracket: return "bracket";
    case BoundRegime::q_infinity_exact: return "q_infinity_exact";
    case BoundRegime::equal_case: return "equal_case";
    case BoundRegime::equal_case_uncovered: return "equal_case_uncovered";
  }
  return "unknown";
}

WidimBoundReport bracket(std::int64_t n, double eps, const Exponents& e) {
  WidimBoundReport rep{n, eps, Exponent::finite(e.p), e.q, e.r, 0, 0, false, BoundRegime::bracket};
  if (e.q.is_infinite()) {
    rep.lower = rep.upper = widim_exact_q_infinity(n, eps, e.p);
    rep.exact = true;
    rep.regime = BoundRegime::q_infinity_exact;
    return rep;
  }
  rep.lower = widim_lower(n, eps, e);
  rep.upper = widim_upper(n, eps, e);
  rep.exact = rep.lower == rep.upper;
  return rep;
}

WidimBoundReport bracket_any(std::int64_t n, double eps, Exponent p, Exponent q) {
  if (p < q) return bracket(n, eps, make_exponents(p.value(), q));
  const auto value = widim_equal_case(n, eps, p, q);
  if (value) return WidimBoundReport{n, eps, p, q, std::nullopt, *value, *value, true, BoundRegime::equal_case};
  return WidimBoundReport{n, eps, p, q, std::nullopt, 0, n, false, BoundRegime::equal_case_uncovered};
}

double asymptotic_exponent_fit(const Exponents& e, std::span<const double> eps_grid, BoundFamily family) {
  if (eps_grid.size() < 4) throw PreconditionError("asymptotic_exponent_fit needs at least 4 grid points");
  for (std::size_t i = 0; i < eps_grid.size(); ++i) {
    const double eps = eps_grid[i];
    if (!(eps > 0.0 && eps < 1.0)) throw PreconditionError("asymptotic_exponent_fit: eps must lie in (0, 1)");
    if (i > 0 && !(eps < eps_grid[i - 1]))
      throw PreconditionError("asymptotic_exponent_fit: grid must be strictly decreasing");
  }
  std::vector<double> xs, ys;
  for (double eps : eps_grid) {
    const auto b = family == BoundFamily::upper ? stable_widim_upper(eps, e) : stable_widim_lower(eps, e);
    if (!b) throw PreconditionError("asymptotic_exponent_fit: bound saturated on grid");
    if (*b < 1) throw PreconditionError("asymptotic_exponent_fit: bound is zero on grid");
    xs.push_back(std::fabs(std::log(eps)));
    ys.push_back(std::log(static_cast<double>(*b)));
  }
  const double k = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= k;
  my /= k;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxy / sxx;
}

double ball_inclusion_max_radius(std::int64_t m, const Exponents& e) {
  if (m < 1) throw PreconditionError("ball_inclusion_max_radius requires m >= 1");
  return std::pow(static_cast<double>(m), -1.0 / e.r);
}

bool ball_inclusion_holds(double rho, std::int64_t m, const Exponents& e) {
  if (m < 1) throw PreconditionError("ball_inclusion_holds requires m >= 1");
  return rho * std::pow(static_cast<double>(m), 1.0 / e.r) <= 1.0 + 1e-12;
}

}  // namespace lpwidim
