#pragma once

#include <cstdint>

namespace gfix {

/// splitmix64 generator. Small, seedable, and good enough for sampling
/// checks; streams for tuple i are derived with `stream_seed(seed, i)` so
/// results never depend on evaluation order.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double low, double high) noexcept { return low + (high - low) * uniform(); }

 private:
  std::uint64_t state_;
};

inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  SplitMix64 mix(index ^ 0xD1B54A32D192ED03ULL);
  return SplitMix64(seed ^ mix.next()).next();
}

}  // namespace gfix
