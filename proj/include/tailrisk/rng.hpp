#pragma once

#include <cstdint>

namespace tailrisk {

/// Finalizer of the SplitMix64 generator (Steele, Lea & Flood 2014).
inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

/// SplitMix64, used as a counter-based stream: output i of the stream
/// seeded with s is mix64(s + (i+1)*kGolden). Every random quantity in
/// this library flows from one of these streams, so identical seeds give
/// bit-identical results on any platform. Test vectors are frozen in
/// tests/test_rng.cpp and documented in README.md; do not change the
/// constants without revving the documented generator version.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += kGolden;
    return mix64(state_);
  }

  /// Uniform double in [0, 1), 53 random bits.
  double next_u01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Deterministic sub-stream seed: the index-th output of the SplitMix64
/// stream seeded with master. Used to give every bootstrap replicate,
/// sweep row, and jitter pass its own independent stream regardless of
/// execution order or thread count.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(master + (index + 1) * kGolden);
}

}  // namespace tailrisk
