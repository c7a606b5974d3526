#pragma once

// Real vectors, lq distances, lp-ball membership and the (p, q, r) exponent
// triple shared by every other module.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <cstdint>
#include <string>
#include <vector>

namespace lpwidim {

/// Thrown when an operand violates an operation's precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exponent in [1, inf], with infinity held as a flag rather than a float.
class Exponent {
 public:
  static Exponent finite(double value);
  static Exponent infinity() noexcept { return Exponent(0.0, true); }
  /// Accepts a decimal number or "inf" / "infinity".
  static Exponent parse(const std::string& text);

  bool is_infinite() const noexcept { return infinite_; }
  /// Finite value; throws for infinity.
  double value() const;
  /// 1/q, which is 0 for q = inf.
  double reciprocal() const noexcept { return infinite_ ? 0.0 : 1.0 / value_; }

  std::string to_string() const;

  friend bool operator==(const Exponent& a, const Exponent& b) noexcept {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  /// Total order with infinity above every finite value.
  friend bool operator<(const Exponent& a, const Exponent& b) noexcept {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator<=(const Exponent& a, const Exponent& b) noexcept { return !(b < a); }

 private:
  Exponent(double v, bool inf) noexcept : value_(v), infinite_(inf) {}
  double value_;
  bool infinite_;
};

/// Finite coordinate vector in R^n, n >= 1, every entry finite.
class RealVector {
 public:
  explicit RealVector(std::vector<double> coords);
  RealVector(std::initializer_list<double> coords) : RealVector(std::vector<double>(coords)) {}
  static RealVector zeros(std::size_t n);

  std::size_t size() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const noexcept { return coords_; }
  const std::vector<double>& to_vector() const noexcept { return coords_; }

  /// Exact equality of every coordinate bit pattern.
  bool bit_equal(const RealVector& other) const noexcept;
  friend bool operator==(const RealVector& a, const RealVector& b) noexcept {
    return a.coords_ == b.coords_;
  }

 private:
  std::vector<double> coords_;
};

/// (p, q, r) with 1 <= p < q <= inf and 1/r = 1/p - 1/q.
struct Exponents {
  double p;
  Exponent q;
  double r;

  /// 1/p - 1/q, the exponent of the distortion bound.
  double gap() const noexcept { return 1.0 / r; }
};

Exponents make_exponents(double p, Exponent q);
inline Exponents make_exponents(double p, double q) { return make_exponents(p, Exponent::finite(q)); }

inline constexpr double kBallTolerance = 1e-12;

/// d_q(x, y); q = inf is the coordinatewise maximum.
double lq_distance(const RealVector& x, const RealVector& y, Exponent q);
inline double lq_distance(const RealVector& x, const RealVector& y, double q) {
  return lq_distance(x, y, Exponent::finite(q));
}

/// Sum of |x_k|^p.
double lp_norm_power(const RealVector& x, double p);
bool in_lp_ball(const RealVector& x, double p, double tol = kBallTolerance);

namespace detail {

// Span-level forms used by the hot loops. `scratch` must hold x.size()
// doubles. Sums are accumulated over the terms sorted ascending, so the
// result does not depend on coordinate order.
double lq_distance(std::span<const double> x, std::span<const double> y, Exponent q,
                   std::span<double> scratch);
double lp_norm_power(std::span<const double> x, double p, std::span<double> scratch);
double ordered_sum(std::span<double> terms);

}  // namespace detail

}  // namespace lpwidim
