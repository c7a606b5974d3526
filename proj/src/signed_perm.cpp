#include "lpwidim/signed_perm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace lpwidim {

SignedPermutation SignedPermutation::identity(std::size_t n) {
  if (n == 0) throw PreconditionError("SignedPermutation requires n >= 1");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  return SignedPermutation(std::vector<std::int8_t>(n, 1), std::move(perm), Unchecked{});
}

SignedPermutation::SignedPermutation(std::vector<std::int8_t> signs, std::vector<std::size_t> perm)
    : signs_(std::move(signs)), perm_(std::move(perm)) {
  const std::size_t n = perm_.size();
  if (n == 0) throw PreconditionError("SignedPermutation requires n >= 1");
  if (signs_.size() != n) throw PreconditionError("SignedPermutation: signs/perm length mismatch");
  std::vector<bool> seen(n, false);
  for (std::size_t image : perm_) {
    if (image >= n || seen[image]) throw PreconditionError("SignedPermutation: perm is not a bijection");
    seen[image] = true;
  }
  for (std::int8_t s : signs_)
    if (s != 1 && s != -1) throw PreconditionError("SignedPermutation: signs must be +1 or -1");
}

bool ConePoint::satisfies(std::span<const double> y, double tol) noexcept {
  if (y.empty()) return false;
  for (std::size_t i = 0; i + 1 < y.size(); ++i)
    if (y[i] < y[i + 1] - tol) return false;
  return y.back() >= -tol;
}

ConePoint::ConePoint(RealVector coords, double tol) : coords_(std::move(coords)) {
  if (!satisfies(coords_.coords(), tol))
    throw PreconditionError("ConePoint: coordinates must be non-increasing and nonnegative");
}

namespace detail {

void act(std::span<const std::int8_t> signs, std::span<const std::size_t> perm,
         std::span<const double> x, std::span<double> out) noexcept {
  // (g x)_{sigma(j)} = signs_{sigma(j)} * x_j
  for (std::size_t j = 0; j < x.size(); ++j) {
    const std::size_t i = perm[j];
    out[i] = (signs[i] < 0 ? -x[j] : x[j]) + 0.0;
  }
}

void canonical_order(std::span<const double> x, std::span<std::size_t> order) {
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [x](std::size_t a, std::size_t b) {
    return std::fabs(x[a]) > std::fabs(x[b]);
  });
}

}  // namespace detail

RealVector act(const SignedPermutation& g, const RealVector& x) {
  if (g.degree() != x.size()) throw PreconditionError("act: dimension mismatch");
  std::vector<double> out(x.size());
  detail::act(g.signs(), g.perm(), x.coords(), out);
  return RealVector(std::move(out));
}

SignedPermutation compose(const SignedPermutation& g, const SignedPermutation& h) {
  const std::size_t n = g.degree();
  if (h.degree() != n) throw PreconditionError("compose: dimension mismatch");
  // ((e_i * e'_{sigma^{-1}(i)}), sigma o sigma')
  std::vector<std::int8_t> signs(n);
  std::vector<std::size_t> perm(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t i = g.perm_[j];
    signs[i] = static_cast<std::int8_t>(g.signs_[i] * h.signs_[j]);
    perm[j] = g.perm_[h.perm_[j]];
  }
  return SignedPermutation(std::move(signs), std::move(perm), SignedPermutation::Unchecked{});
}

SignedPermutation inverse(const SignedPermutation& g) {
  const std::size_t n = g.degree();
  std::vector<std::int8_t> signs(n);
  std::vector<std::size_t> perm(n);
  for (std::size_t j = 0; j < n; ++j) {
    perm[g.perm_[j]] = j;
    signs[j] = g.signs_[g.perm_[j]];
  }
  return SignedPermutation(std::move(signs), std::move(perm), SignedPermutation::Unchecked{});
}

struct CanonicalizeAccess {
  static SignedPermutation make(std::vector<std::int8_t> signs, std::vector<std::size_t> perm) {
    return SignedPermutation(std::move(signs), std::move(perm), SignedPermutation::Unchecked{});
  }
};

Canonical canonicalize(const RealVector& x) {
  const std::size_t n = x.size();
  std::vector<std::size_t> order(n);
  detail::canonical_order(x.coords(), order);
  // y_i = e_i x_{sigma^{-1}(i)} with sigma^{-1}(i) = order[i].
  std::vector<std::int8_t> signs(n);
  std::vector<std::size_t> perm(n);
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double v = x[order[i]];
    perm[order[i]] = i;
    signs[i] = v < 0.0 ? -1 : 1;
    y[i] = std::fabs(v);
  }
  return Canonical{CanonicalizeAccess::make(std::move(signs), std::move(perm)),
                   ConePoint(RealVector(std::move(y)))};
}

}  // namespace lpwidim
