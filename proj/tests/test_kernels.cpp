#include <doctest.h>

#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "lpwidim/simd/kernels.hpp"
#include "support.hpp"

using namespace lpwidim::simd;

namespace {

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::bit_cast<std::uint64_t>(a[i]) != std::bit_cast<std::uint64_t>(b[i])) return false;
  return true;
}

std::vector<double> input(testgen::Rng& rng, std::size_t n) {
  auto x = testgen::mixed_coords(rng, n);
  for (auto& v : x)
    if (testgen::uniform_index(rng, 0, 9) == 0) v = -0.0;
  return x;
}

}  // namespace

TEST_CASE("scalar table is always available and listed first") {
  const auto tables = available_kernels();
  REQUIRE_FALSE(tables.empty());
  CHECK(tables.front() == &scalar_kernels());
  CHECK(isa_name(scalar_kernels().isa) == "scalar");
  MESSAGE("active kernels: " << isa_name(active_kernels().isa));
}

TEST_CASE("every available kernel table agrees bit-exactly with scalar") {
  const auto& ref = scalar_kernels();
  testgen::Rng rng(21);
  for (const KernelTable* t : available_kernels()) {
    CAPTURE(isa_name(t->isa));
    for (int trial = 0; trial < 3000; ++trial) {
      const std::size_t n = testgen::uniform_index(rng, 1, 37);
      const auto a = input(rng, n);
      const auto b = input(rng, n);
      const double tau = testgen::uniform_index(rng, 0, 3) == 0 ? 0.0 : std::fabs(testgen::uniform(rng, -1, 1));
      const double s = testgen::uniform(rng, -2, 2);
      std::vector<double> r(n), o(n);

      ref.abs_values(a.data(), r.data(), n);
      t->abs_values(a.data(), o.data(), n);
      CHECK(same_bits(r, o));
      ref.abs_diff(a.data(), b.data(), r.data(), n);
      t->abs_diff(a.data(), b.data(), o.data(), n);
      CHECK(same_bits(r, o));
      ref.sq_diff(a.data(), b.data(), r.data(), n);
      t->sq_diff(a.data(), b.data(), o.data(), n);
      CHECK(same_bits(r, o));
      ref.shrink(a.data(), tau, r.data(), n);
      t->shrink(a.data(), tau, o.data(), n);
      CHECK(same_bits(r, o));
      ref.scale(a.data(), s, r.data(), n);
      t->scale(a.data(), s, o.data(), n);
      CHECK(same_bits(r, o));
      CHECK(std::bit_cast<std::uint64_t>(ref.max_abs(a.data(), n)) ==
            std::bit_cast<std::uint64_t>(t->max_abs(a.data(), n)));
      CHECK(std::bit_cast<std::uint64_t>(ref.max_abs_diff(a.data(), b.data(), n)) ==
            std::bit_cast<std::uint64_t>(t->max_abs_diff(a.data(), b.data(), n)));
    }
  }
}

TEST_CASE("scalar kernels against direct formulas") {
  const double x[] = {-3.0, -0.0, 0.5, 2.0, -1.0};
  double out[5];
  scalar_kernels().shrink(x, 1.0, out, 5);
  const double want[] = {-2.0, 0.0, 0.0, 1.0, 0.0};
  for (int i = 0; i < 5; ++i) {
    CHECK(out[i] == want[i]);
    CHECK_FALSE(std::signbit(out[i]) != std::signbit(want[i]));
  }
  CHECK(scalar_kernels().max_abs(x, 5) == 3.0);
  scalar_kernels().scale(x, 0.0, out, 5);
  for (double v : out) CHECK_FALSE(std::signbit(v));
}
