#pragma once

#include <cmath>
#include <cstdint>

namespace loewner {

namespace detail {
inline uint64_t splitmix_fmix(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}
} // namespace detail

/// SplitMix64 in counter mode. Draw j of stream (seed, stream) is a pure
/// function of (seed, stream, j), so trials can run in parallel and replay
/// deterministically from their indices.
class SplitMix64 {
public:
  explicit SplitMix64(uint64_t seed, uint64_t stream = 0)
      : state_(detail::splitmix_fmix(seed + 0x9E3779B97F4A7C15ull) ^
               detail::splitmix_fmix(stream * 0xD1342543DE82EF95ull + 0x2545F4914F6CDD1Dull)) {}

  uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    return detail::splitmix_fmix(state_);
  }

  /// Uniform in [0, 1).
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in (0, 1].
  double next_unit_open_low() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

  /// Standard normal via Box-Muller (no rejection, fixed draw count).
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = next_unit_open_low();
    const double u2 = next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

private:
  uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

/// Derives an independent 64-bit sub-seed for trial `index` of a run seeded
/// with `seed`; used where a nested generator needs its own seed.
inline uint64_t sub_seed(uint64_t seed, uint64_t index) {
  return detail::splitmix_fmix(seed ^ detail::splitmix_fmix(index + 0x632BE59BD9B4E019ull));
}

} // namespace loewner
