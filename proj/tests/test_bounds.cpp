#include <doctest.h>

#include <cmath>
#include <vector>

#include "lpwidim/bounds.hpp"
#include "support.hpp"

using namespace lpwidim;

namespace {

const Exponent kInf = Exponent::infinity();

// ceil(v) - 1 in long double with the same integer snap.
std::int64_t ref_ceil_minus_one(long double v) {
  if (v > 0x1.0p62L) return INT64_MAX;
  if (v > 0 && v <= 1) return 0;
  const long double near = std::nearbyint(v);
  if (std::fabs(v - near) <= 1e-9L) v = near;
  return static_cast<std::int64_t>(std::ceil(v)) - 1;
}

}  // namespace

TEST_CASE("widim_upper examples") {
  const auto e12 = make_exponents(1, 2);
  CHECK(widim_upper(100, 0.5, e12) == 15);
  CHECK(widim_upper(2, 1e-3, e12) == 2);
  CHECK(widim_upper(10, 4.0, e12) == 0);
}

TEST_CASE("widim_lower examples") {
  const auto e12 = make_exponents(1, 2);
  CHECK(widim_lower(100, 0.5, e12) == 3);
  CHECK(widim_lower(1, 0.1, e12) == 1);
  for (auto e : {e12, make_exponents(2, 4), make_exponents(1, kInf)})
    for (double eps : {1.0, 1.5, 3.0}) CHECK(widim_lower(1000, eps, e) == 0);
}

TEST_CASE("widim_exact_q_infinity examples") {
  CHECK(widim_exact_q_infinity(100, 0.5, 2) == 15);
  CHECK(widim_exact_q_infinity(10, 1.0, 1) == 1);
  CHECK(widim_exact_q_infinity(5, 0.01, 1) == 5);
}

TEST_CASE("widim_equal_case examples") {
  CHECK(widim_equal_case(7, 0.9, Exponent::finite(2), Exponent::finite(2)) == 7);
  CHECK(widim_equal_case(7, 0.9, Exponent::finite(3), Exponent::finite(2)) == 7);
  CHECK(widim_equal_case(7, 0.9, kInf, Exponent::finite(1)) == 7);
  CHECK_FALSE(widim_equal_case(7, 1.5, Exponent::finite(2), Exponent::finite(2)).has_value());
  CHECK_THROWS_AS(widim_equal_case(7, 0.5, Exponent::finite(1), Exponent::finite(2)), PreconditionError);
}

TEST_CASE("bracket examples") {
  {
    const auto r = bracket(100, 0.5, make_exponents(1, 2));
    CHECK(r.lower == 3);
    CHECK(r.upper == 15);
    CHECK_FALSE(r.exact);
    CHECK(r.regime == BoundRegime::bracket);
  }
  {
    const auto r = bracket(100, 0.5, make_exponents(2, kInf));
    CHECK(r.lower == 15);
    CHECK(r.upper == 15);
    CHECK(r.exact);
    CHECK(r.regime == BoundRegime::q_infinity_exact);
  }
  {
    const auto r = bracket(1, 0.5, make_exponents(1, 2));
    CHECK(r.lower == 1);
    CHECK(r.upper == 1);
    CHECK(r.exact);
  }
  {
    const auto r = bracket_any(7, 0.5, Exponent::finite(2), Exponent::finite(1));
    CHECK(r.lower == 7);
    CHECK(r.upper == 7);
    CHECK(r.exact);
    CHECK(r.regime == BoundRegime::equal_case);
    CHECK_FALSE(r.r.has_value());
  }
  {
    const auto r = bracket_any(7, 1.5, Exponent::finite(2), Exponent::finite(1));
    CHECK(r.lower == 0);
    CHECK(r.upper == 7);
    CHECK_FALSE(r.exact);
    CHECK(r.regime == BoundRegime::equal_case_uncovered);
  }
}

TEST_CASE("preconditions") {
  const auto e = make_exponents(1, 2);
  CHECK_THROWS_AS(widim_upper(0, 0.5, e), PreconditionError);
  CHECK_THROWS_AS(widim_lower(3, 0.0, e), PreconditionError);
  CHECK_THROWS_AS(widim_exact_q_infinity(3, -1.0, 1), PreconditionError);
  CHECK_THROWS_AS(ball_inclusion_max_radius(0, e), PreconditionError);
}

TEST_CASE("ceiling guard at exact integer points") {
  // eps = 2^-k with integer r makes (2/eps)^r = 2^{(k+1) r} exactly.
  for (auto e : {make_exponents(1, 2), make_exponents(2, 4), make_exponents(1, kInf), make_exponents(3, kInf)}) {
    for (int k = 0; k <= 12; ++k) {
      const double eps = std::ldexp(1.0, -k);
      const auto exact = static_cast<std::int64_t>(std::llround(std::pow(2.0, (k + 1) * e.r)));
      if (exact > (std::int64_t{1} << 40)) continue;
      CHECK(widim_upper(std::int64_t{1} << 50, eps, e) == exact - 1);
      const auto low = static_cast<std::int64_t>(std::llround(std::pow(2.0, k * e.r)));
      CHECK(widim_lower(std::int64_t{1} << 50, eps, e) == low - 1);
    }
  }
  // Values that only round to an integer: 2/0.1 = 20 is not exact in binary.
  const auto e = make_exponents(1, kInf);
  CHECK(widim_upper(1000, 0.1, e) == 19);
  CHECK(widim_upper(1000, 2.0 / 3.0, e) == 2);
  CHECK(widim_upper(1000, 0.2, make_exponents(1, 2)) == 99);
  CHECK(ceil_minus_one(16.0 + 1e-12) == 15);
  CHECK(ceil_minus_one(16.0 - 1e-12) == 15);
  CHECK(ceil_minus_one(16.1) == 16);
  CHECK(ceil_minus_one(1e-13) == 0);
  CHECK(widim_lower(10, 3.9, make_exponents(3, 3.5)) == 0);
}

TEST_CASE("saturation is reported instead of overflowing") {
  CHECK_FALSE(ceil_minus_one(0x1.0p63).has_value());
  CHECK_FALSE(stable_widim_upper(1e-30, make_exponents(1, 2)).has_value());
  CHECK(widim_upper(1000, 1e-30, make_exponents(1, 2)) == 1000);
  CHECK(stable_widim_upper(0.5, make_exponents(1, 2)) == 15);
}

TEST_CASE("property: grid invariants") {
  testgen::Rng rng(51);
  const double ps[] = {1.0, 1.5, 2.0, 3.0};
  int points = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const std::int64_t n = static_cast<std::int64_t>(testgen::uniform_index(rng, 1, 1000000));
    const double eps = testgen::uniform(rng, 0.01, 4.0);
    const double p = ps[testgen::uniform_index(rng, 0, 3)];
    const bool q_inf = testgen::uniform_index(rng, 0, 3) == 0;
    const auto e = q_inf ? make_exponents(p, kInf) : make_exponents(p, p + testgen::uniform(rng, 0.5, 6.0));
    const auto lo = widim_lower(n, eps, e), hi = widim_upper(n, eps, e);
    CHECK(0 <= lo);
    CHECK(lo <= hi);
    CHECK(hi <= n);
    CHECK(hi == std::min<std::int64_t>(n, ref_ceil_minus_one(std::pow(2.0L / eps, static_cast<long double>(e.r)))));
    CHECK(lo == std::min<std::int64_t>(n, ref_ceil_minus_one(std::pow(1.0L / eps, static_cast<long double>(e.r)))));
    if (q_inf) CHECK(widim_exact_q_infinity(n, eps, p) == hi);
    // Monotone in eps and n.
    CHECK(widim_upper(n, eps * 1.1, e) <= hi);
    CHECK(widim_lower(n, eps * 1.1, e) <= lo);
    CHECK(widim_upper(n + 1, eps, e) >= hi);
    CHECK(widim_lower(n + 1, eps, e) >= lo);
    const auto r = bracket(n, eps, e);
    CHECK(r.lower <= r.upper);
    CHECK(r.upper <= n);
    if (r.exact) CHECK(r.lower == r.upper);
    ++points;
  }
  CHECK(points == 3000);
}

TEST_CASE("stabilization in n") {
  for (auto e : {make_exponents(1, 2), make_exponents(2, 4), make_exponents(1.5, kInf)}) {
    for (double eps : {0.3, 0.5, 1.0, 1.7}) {
      const auto stable = *stable_widim_upper(eps, e);
      for (std::int64_t n = std::max<std::int64_t>(1, stable); n < stable + 50; ++n)
        CHECK(widim_upper(n, eps, e) == stable);
    }
  }
}

TEST_CASE("asymptotic exponent fit") {
  std::vector<double> grid;
  for (int k = 3; k <= 10; ++k) grid.push_back(std::ldexp(1.0, -k));
  for (auto e : {make_exponents(1, 2), make_exponents(1, kInf), make_exponents(2, 4)}) {
    for (auto fam : {BoundFamily::lower, BoundFamily::upper})
      CHECK(std::fabs(asymptotic_exponent_fit(e, grid, fam) - e.r) <= 0.1 * e.r);
  }
  CHECK_THROWS_AS(asymptotic_exponent_fit(make_exponents(1, 2), std::vector<double>{0.5, 0.25, 0.125},
                                          BoundFamily::upper),
                  PreconditionError);
  CHECK_THROWS_AS(asymptotic_exponent_fit(make_exponents(1, 2), std::vector<double>{0.5, 0.25, 0.3, 0.1},
                                          BoundFamily::upper),
                  PreconditionError);
  CHECK_THROWS_AS(asymptotic_exponent_fit(make_exponents(1, 2), std::vector<double>{1.5, 0.25, 0.125, 0.1},
                                          BoundFamily::upper),
                  PreconditionError);
}

TEST_CASE("ball inclusion radius") {
  CHECK(ball_inclusion_max_radius(4, make_exponents(1, 2)) == doctest::Approx(0.5).epsilon(1e-15));
  for (auto e : {make_exponents(1, 2), make_exponents(2, 4), make_exponents(1, kInf)})
    CHECK(ball_inclusion_max_radius(1, e) == 1.0);
  for (auto e : {make_exponents(1, 2), make_exponents(2, 4), make_exponents(1.5, 3)}) {
    for (std::int64_t m : {1, 2, 5, 16}) {
      const double rho = ball_inclusion_max_radius(m, e);
      CHECK(ball_inclusion_holds(rho, m, e));
      CHECK_FALSE(ball_inclusion_holds(rho * 1.01, m, e));
      // Constant corner vector of the radius-rho q-ball has p-norm 1.
      const double corner = rho / std::pow(static_cast<double>(m), 1.0 / e.q.value());
      CHECK(lp_norm_power(RealVector(std::vector<double>(m, corner)), e.p) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("property: ball inclusion soundness") {
  testgen::Rng rng(52);
  for (auto e : {make_exponents(1, 2), make_exponents(2, 4), make_exponents(1.5, 3), make_exponents(1, kInf)}) {
    for (int trial = 0; trial < 2000; ++trial) {
      const std::int64_t m = static_cast<std::int64_t>(testgen::uniform_index(rng, 1, 12));
      const double rho = ball_inclusion_max_radius(m, e);
      auto x = testgen::uniform_vector(rng, static_cast<std::size_t>(m));
      const double qn = lq_distance(x, RealVector::zeros(m), e.q);
      // Push to the q-sphere of radius rho half the time.
      const double target = testgen::uniform_index(rng, 0, 1) ? rho : rho * testgen::uniform(rng, 0, 1);
      std::vector<double> y(m);
      for (std::int64_t i = 0; i < m; ++i) y[i] = x[i] * (target / qn);
      CHECK(lp_norm_power(RealVector(y), e.p) <= 1.0 + 1e-12);
    }
  }
}
