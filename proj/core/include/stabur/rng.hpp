#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

namespace stabur {

/// SplitMix64: the single pseudo-random source of the library.
///
/// State transition and output, bit-exact:
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
///
/// Derived draws:
///   uniform()  = (next() >> 11) * 2^-53, in [0, 1)
///   below(n)   = Lemire multiply-shift with rejection, unbiased in [0, n)
///   gaussian() = Box-Muller cosine branch with u1 = 1 - uniform(),
///                u2 = uniform(), drawn in that order
///
/// Satisfies UniformRandomBitGenerator, but library code only uses the
/// derived draws above so sequences do not depend on the standard library's
/// distribution implementations.
__extension__ using Uint128 = unsigned __int128;

class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed = 42) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() { return next(); }

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  std::uint64_t below(std::uint64_t n) {
    if (n == 0) return 0;
    Uint128 m = static_cast<Uint128>(next()) * n;
    auto low = static_cast<std::uint64_t>(m);
    if (low < n) {
      const std::uint64_t threshold = (0 - n) % n;
      while (low < threshold) {
        m = static_cast<Uint128>(next()) * n;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  bool coin() { return (next() >> 63) != 0; }

  double gaussian() {
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  /// Independent stream for sub-task `index` (e.g. one restart).
  SplitMix64 fork(std::uint64_t index) const {
    SplitMix64 child(state_ ^ (0xD1B54A32D192ED03ULL * (index + 1)));
    child.next();
    return child;
  }

 private:
  std::uint64_t state_;
};

}  // namespace stabur
