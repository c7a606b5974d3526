#include "lpwidim/core.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <cmath>
#include <limits>

#include "lpwidim/simd/kernels.hpp"

namespace lpwidim {

Exponent Exponent::finite(double value) {
  if (!std::isfinite(value) || value < 1.0)
    throw PreconditionError("exponent must be a finite value >= 1 or inf, got " +
                            std::to_string(value));
  return Exponent(value, false);
}

Exponent Exponent::parse(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "Inf" || text == "INF")
    return infinity();
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) throw PreconditionError("cannot parse exponent '" + text + "'");
  return finite(v);
}

double Exponent::value() const {
  if (infinite_) throw PreconditionError("exponent is infinite");
  return value_;
}

std::string Exponent::to_string() const {
  if (infinite_) return "inf";
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value_, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

RealVector::RealVector(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw PreconditionError("RealVector requires n >= 1");
  for (double v : coords_)
    if (!std::isfinite(v)) throw PreconditionError("RealVector entries must be finite");
}

RealVector RealVector::zeros(std::size_t n) { return RealVector(std::vector<double>(n, 0.0)); }

bool RealVector::bit_equal(const RealVector& other) const noexcept {
  if (size() != other.size()) return false;
  for (std::size_t i = 0; i < size(); ++i)
    if (std::bit_cast<std::uint64_t>(coords_[i]) != std::bit_cast<std::uint64_t>(other.coords_[i]))
      return false;
  return true;
}

Exponents make_exponents(double p, Exponent q) {
  if (!std::isfinite(p) || p < 1.0) throw PreconditionError("p must satisfy 1 <= p < inf");
  if (!(Exponent::finite(p) < q)) throw PreconditionError("exponents require p < q");
  if (q.is_infinite()) return Exponents{p, q, p};
  const double qv = q.value();
  const double r = p * qv / (qv - p);
  const double gap = 1.0 / p - 1.0 / qv;
  if (std::fabs(gap - 1.0 / r) > 1e-12 * gap)
    throw PreconditionError("exponents too close to resolve 1/r = 1/p - 1/q");
  return Exponents{p, q, r};
}

namespace detail {

double ordered_sum(std::span<double> terms) {
  std::sort(terms.begin(), terms.end());
  double sum = 0.0;
  for (double t : terms) sum += t;
  return sum;
}

double lq_distance(std::span<const double> x, std::span<const double> y, Exponent q,
                   std::span<double> scratch) {
  const auto& k = simd::active_kernels();
  const std::size_t n = x.size();
  if (q.is_infinite()) return k.max_abs_diff(x.data(), y.data(), n);
  const double qv = q.value();
  auto terms = scratch.first(n);
  if (qv == 2.0) {
    k.sq_diff(x.data(), y.data(), terms.data(), n);
    return std::sqrt(ordered_sum(terms));
  }
  k.abs_diff(x.data(), y.data(), terms.data(), n);
  if (qv == 1.0) return ordered_sum(terms);
  for (double& t : terms) t = std::pow(t, qv);
  return std::pow(ordered_sum(terms), 1.0 / qv);
}

double lp_norm_power(std::span<const double> x, double p, std::span<double> scratch) {
  const std::size_t n = x.size();
  auto terms = scratch.first(n);
  simd::active_kernels().abs_values(x.data(), terms.data(), n);
  if (p == 2.0) {
    for (double& t : terms) t = t * t;
  } else if (p != 1.0) {
    for (double& t : terms) t = std::pow(t, p);
  }
  return ordered_sum(terms);
}

}  // namespace detail

double lq_distance(const RealVector& x, const RealVector& y, Exponent q) {
  if (x.size() != y.size()) throw PreconditionError("lq_distance: dimension mismatch");
  std::vector<double> scratch(x.size());
  return detail::lq_distance(x.coords(), y.coords(), q, scratch);
}

double lp_norm_power(const RealVector& x, double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw PreconditionError("lp_norm_power requires p >= 1");
  std::vector<double> scratch(x.size());
  return detail::lp_norm_power(x.coords(), p, scratch);
}

bool in_lp_ball(const RealVector& x, double p, double tol) { return lp_norm_power(x, p) <= 1.0 + tol; }

}  // namespace lpwidim
