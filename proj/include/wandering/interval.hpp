#pragma once

#include <iosfwd>
#include <string>

#include "wandering/rational.hpp"

namespace wandering {

/// Closed interval [lo, hi] of doubles. Every operation rounds to nearest
/// and then steps one ulp outward, which encloses the exact result because
/// round-to-nearest errs by at most half an ulp.
class Interval {
 public:
  Interval() = default;
  Interval(double point);  // NOLINT(google-explicit-constructor)
  Interval(double lo, double hi);

  /// Tightest double enclosure of an exact rational.
  static Interval enclose(const Rational& value);

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  double mid() const noexcept { return 0.5 * lo_ + 0.5 * hi_; }
  double width() const noexcept { return hi_ - lo_; }
  /// Largest |x| over the interval.
  double mag() const noexcept;

  bool contains(double x) const noexcept { return lo_ <= x && x <= hi_; }
  bool contains(const Rational& x) const;
  bool contains_zero() const noexcept { return lo_ <= 0.0 && 0.0 <= hi_; }
  bool certainly_positive() const noexcept { return lo_ > 0.0; }
  bool certainly_negative() const noexcept { return hi_ < 0.0; }

  Interval operator-() const { return Interval(-hi_, -lo_); }
  Interval& operator+=(const Interval& o) { return *this = *this + o; }
  Interval& operator-=(const Interval& o) { return *this = *this - o; }
  Interval& operator*=(const Interval& o) { return *this = *this * o; }
  Interval& operator/=(const Interval& o) { return *this = *this / o; }

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  /// Throws std::domain_error when the divisor contains zero.
  friend Interval operator/(const Interval& a, const Interval& b);

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

Interval sqr(const Interval& x);
Interval sqrt(const Interval& x);
Interval abs(const Interval& x);
/// Hull of two intervals.
Interval hull(const Interval& a, const Interval& b);

/// Rigorous enclosure of base^exponent for base > 0 and a rational exponent.
Interval pow(const Rational& base, const Rational& exponent);

std::string to_string(const Interval& x);
std::ostream& operator<<(std::ostream& os, const Interval& x);

}  // namespace wandering
