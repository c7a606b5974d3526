#pragma once

// Counter-based random numbers. Each (seed, stream) pair names an
// independent Philox4x32-10 sequence, so sample i can be regenerated
// without touching samples 0..i-1 and results do not depend on how work
// is split across threads.

#include <array>
#include <cstdint>
#include <limits>

namespace lpwidim {

using PhiloxBlock = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

/// Ten-round Philox4x32 bijection of `counter` under `key`.
PhiloxBlock philox4x32_10(PhiloxBlock counter, PhiloxKey key) noexcept;

/// UniformRandomBitGenerator over the Philox stream for (seed, stream).
class PhiloxStream {
 public:
  using result_type = std::uint64_t;

  PhiloxStream(std::uint64_t seed, std::uint64_t stream) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept;

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  void refill() noexcept;

  PhiloxKey key_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  PhiloxBlock buffer_{};
  int used_ = 4;
};

/// Stream ids for distinct purposes under one user seed.
enum class StreamDomain : std::uint64_t {
  ball_sample = 0,
  adversarial = 1,
  lemma_interior = 2,
  group_pairs = 3,
};

/// Combines a domain with a per-domain index into a stream id.
constexpr std::uint64_t stream_id(StreamDomain domain, std::uint64_t index) noexcept {
  return (static_cast<std::uint64_t>(domain) << 56) ^ index;
}

}  // namespace lpwidim
