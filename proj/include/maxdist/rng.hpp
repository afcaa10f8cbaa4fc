#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace maxdist {

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ull;

// SplitMix64 output function (Vigna / Steele-Lea-Flood). Bijective on 64-bit
// words; used both as the stream generator and as the seed-derivation mixer.
inline std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline std::uint64_t splitmix64_next(std::uint64_t state) {
  return splitmix64_mix(state + kGoldenGamma);
}

// Deterministic derivation of a nested stream seed. Substreams with distinct
// tags never collide in practice (mixer is a bijection of well-separated
// inputs); used for per-quadrant and per-purpose streams.
inline std::uint64_t derive_substream(std::uint64_t seed, std::uint64_t tag) {
  return splitmix64_mix(seed ^ (kGoldenGamma * (tag + 1)));
}

// Counter-based SplitMix64 stream. Small state, passes BigCrush, and the
// whole toolkit is keyed on it so replications are reproducible and
// order-independent.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += kGoldenGamma;
    return splitmix64_mix(state_);
  }

  // Uniform in [0,1), 53-bit resolution.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Unit exponential via inverse CDF -ln(1-U); U < 1 so the log is finite.
  double next_exponential() { return -std::log(1.0 - next_double()); }

  std::uint64_t next_poisson(double mean);

 private:
  std::uint64_t state_;
};

}  // namespace maxdist
