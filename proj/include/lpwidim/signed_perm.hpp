#pragma once

// The hyperoctahedral group {+-1}^n x| S_n acting on R^n by signed
// coordinate permutation, and canonicalization into the sorted
// nonnegative cone.

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "lpwidim/core.hpp"

namespace lpwidim {

/// g = (signs, perm) acting by (g x)_i = signs_i * x_{perm^{-1}(i)}.
/// perm is stored as its image list, 0-based: perm[j] = sigma(j).
class SignedPermutation {
 public:
  static SignedPermutation identity(std::size_t n);
  /// Validates that perm is a bijection and every sign is +1 or -1.
  SignedPermutation(std::vector<std::int8_t> signs, std::vector<std::size_t> perm);

  template <class Rng>
  static SignedPermutation random(std::size_t n, Rng& rng) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::int8_t> signs(n);
    std::bernoulli_distribution coin(0.5);
    for (auto& s : signs) s = coin(rng) ? 1 : -1;
    return SignedPermutation(std::move(signs), std::move(perm));
  }

  std::size_t degree() const noexcept { return perm_.size(); }
  std::span<const std::int8_t> signs() const noexcept { return signs_; }
  std::span<const std::size_t> perm() const noexcept { return perm_; }

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  struct Unchecked {};
  SignedPermutation(std::vector<std::int8_t> signs, std::vector<std::size_t> perm, Unchecked)
      : signs_(std::move(signs)), perm_(std::move(perm)) {}

  std::vector<std::int8_t> signs_;
  std::vector<std::size_t> perm_;

  friend SignedPermutation compose(const SignedPermutation&, const SignedPermutation&);
  friend SignedPermutation inverse(const SignedPermutation&);
  friend struct CanonicalizeAccess;
};

/// A point of the cone x_1 >= x_2 >= ... >= x_n >= 0.
class ConePoint {
 public:
  /// Checks the cone inequalities, each allowed to fail by at most `tol`.
  explicit ConePoint(RealVector coords, double tol = 0.0);

  const RealVector& coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }

  static bool satisfies(std::span<const double> y, double tol = 0.0) noexcept;

 private:
  RealVector coords_;
};

RealVector act(const SignedPermutation& g, const RealVector& x);
SignedPermutation compose(const SignedPermutation& g, const SignedPermutation& h);
SignedPermutation inverse(const SignedPermutation& g);

struct Canonical {
  SignedPermutation g;
  ConePoint y;
};

/// Returns g with g x in the cone. Equal magnitudes keep their original
/// index order; zero coordinates get sign +1.
Canonical canonicalize(const RealVector& x);

namespace detail {

// out = g x without allocation. Negative zero is never produced.
void act(std::span<const std::int8_t> signs, std::span<const std::size_t> perm,
         std::span<const double> x, std::span<double> out) noexcept;

// Fills `order` with the stable descending-magnitude ordering of x:
// order[k] is the source index of the k-th cone coordinate.
void canonical_order(std::span<const double> x, std::span<std::size_t> order);

}  // namespace detail

}  // namespace lpwidim
