#pragma once

#include <cstdint>
#include <initializer_list>

namespace gnpwalk {

// All randomness in the library flows through this splittable counter-based
// generator (splitmix64 core). Streams are derived from (seed, path of
// indices), never from global state, so every result is reproducible for a
// given seed regardless of thread count.

namespace detail {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

/// splitmix64 finalizer; full-avalanche 64-bit mix.
inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace detail

/// splitmix64: counter state advanced by a fixed odd gamma, output mixed.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next_u64() {
    state_ += detail::kGolden;
    return detail::mix64(state_);
  }

  /// Uniform double in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool next_bernoulli(double p) { return next_double() < p; }

  /// Unbiased uniform integer in [0, bound); bound >= 1.
  std::uint64_t next_below(std::uint64_t bound) {
    // Lemire's multiply-and-reject method.
    std::uint64_t x = next_u64();
    __uint128_t m = static_cast<__uint128_t>(x) * bound;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < bound) {
      const std::uint64_t threshold = -bound % bound;
      while (lo < threshold) {
        x = next_u64();
        m = static_cast<__uint128_t>(x) * bound;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

 private:
  std::uint64_t state_;
};

/// Key in the stream-derivation tree. child(i) yields an independent subkey;
/// generator() instantiates the stream for that key.
class StreamKey {
 public:
  explicit constexpr StreamKey(std::uint64_t seed) : key_(seed) {}

  constexpr StreamKey child(std::uint64_t index) const {
    return StreamKey(detail::mix64(key_ + detail::kGolden * (index + 1)));
  }

  constexpr StreamKey descend(std::initializer_list<std::uint64_t> path) const {
    StreamKey k = *this;
    for (std::uint64_t index : path) k = k.child(index);
    return k;
  }

  constexpr std::uint64_t value() const { return key_; }

  constexpr SplitMix64 generator() const {
    return SplitMix64(detail::mix64(key_ ^ 0x5851F42D4C957F2DULL));
  }

 private:
  std::uint64_t key_;
};

}  // namespace gnpwalk
