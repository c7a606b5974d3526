#include <doctest.h>

#include <cmath>
#include <set>

#include "lpwidim/random.hpp"

using namespace lpwidim;

TEST_CASE("philox4x32-10 known-answer vectors") {
  CHECK(philox4x32_10({0, 0, 0, 0}, {0, 0}) == PhiloxBlock{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(philox4x32_10({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
        PhiloxBlock{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(philox4x32_10({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
        PhiloxBlock{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("streams are reproducible and distinct") {
  PhiloxStream a(7, 1), b(7, 1), c(7, 2), d(8, 1);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 100; ++i) {
    const auto va = a();
    CHECK(va == b());
    seen.insert(va);
    seen.insert(c());
    seen.insert(d());
  }
  CHECK(seen.size() == 300);
}

TEST_CASE("uniform01 stays in [0, 1) and has mean near 1/2") {
  PhiloxStream s(0x5EED, 0);
  double sum = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double u = s.uniform01();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  // sd of the mean is 1/sqrt(12 n).
  CHECK(std::abs(sum / n - 0.5) < 4.0 / std::sqrt(12.0 * n));
}

TEST_CASE("stream ids separate domains") {
  CHECK(stream_id(StreamDomain::ball_sample, 5) != stream_id(StreamDomain::adversarial, 5));
  CHECK(stream_id(StreamDomain::ball_sample, 5) == 5);
}
