#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <string>

namespace stabur {

/// Exact dyadic rational num / 2^log2_den, kept in lowest terms
/// (num odd, or num == 0 with log2_den == 0). Overlaps and graph amplitudes
/// are all of this form.
class Dyadic {
 public:
  constexpr Dyadic() = default;
  constexpr Dyadic(std::int64_t num, int log2_den = 0) : num_(num), log2_den_(log2_den) {
    normalize();
  }

  static constexpr Dyadic pow2(int exponent) {
    return exponent >= 0 ? Dyadic(std::int64_t{1} << exponent, 0) : Dyadic(1, -exponent);
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr int log2_den() const { return log2_den_; }
  constexpr bool is_zero() const { return num_ == 0; }
  constexpr int sign() const { return (num_ > 0) - (num_ < 0); }

  double to_double() const { return std::ldexp(static_cast<double>(num_), -log2_den_); }

  constexpr Dyadic abs() const { return Dyadic(num_ < 0 ? -num_ : num_, log2_den_); }
  constexpr Dyadic half() const { return Dyadic(num_, log2_den_ + 1); }
  constexpr Dyadic operator-() const { return Dyadic(-num_, log2_den_); }

  friend constexpr Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    const int d = a.log2_den_ > b.log2_den_ ? a.log2_den_ : b.log2_den_;
    return Dyadic((a.num_ << (d - a.log2_den_)) + (b.num_ << (d - b.log2_den_)), d);
  }
  friend constexpr Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
  friend constexpr Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    return Dyadic(a.num_ * b.num_, a.log2_den_ + b.log2_den_);
  }

  friend constexpr bool operator==(const Dyadic&, const Dyadic&) = default;
  friend constexpr std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    const int d = a.log2_den_ > b.log2_den_ ? a.log2_den_ : b.log2_den_;
    return (a.num_ << (d - a.log2_den_)) <=> (b.num_ << (d - b.log2_den_));
  }

  /// "num/2^k", or just "num" for integers.
  std::string str() const {
    if (log2_den_ == 0) return std::to_string(num_);
    return std::to_string(num_) + "/2^" + std::to_string(log2_den_);
  }

 private:
  constexpr void normalize() {
    if (num_ == 0) {
      log2_den_ = 0;
      return;
    }
    while (log2_den_ > 0 && (num_ & 1) == 0) {
      num_ /= 2;
      --log2_den_;
    }
    while (log2_den_ < 0) {
      num_ *= 2;
      ++log2_den_;
    }
  }

  std::int64_t num_ = 0;
  int log2_den_ = 0;
};

}  // namespace stabur
