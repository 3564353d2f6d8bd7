#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace wandering {

/// Arbitrary precision rational, always canonical (lowest terms, positive
/// denominator) after every gmpxx operation.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Accepts "p", "p/q", decimals ("-4.999") and scientific notation ("2e13",
/// "1.5E-3"). Decimal input is converted exactly.
Rational parse_rational(std::string_view text);

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Exact integer power; negative exponents invert (base must be nonzero).
Rational pow(const Rational& base, long exponent);

double to_double(const Rational& value);

bool is_integer(const Rational& value);

/// Exact square root when both numerator and denominator are perfect
/// squares.
std::optional<Rational> exact_sqrt(const Rational& value);

/// Decimal rational with `digits` significant digits, nearest to `value`.
Rational round_significant(double value, int digits);
Rational round_significant(const Rational& value, int digits);

/// Decimal rational with `digits` significant digits, nearest to sqrt(value).
Rational approx_sqrt(const Rational& value, int digits);

/// Real number of the form coef * sqrt(radicand) with rational coef and
/// positive rational radicand. Generator coefficients recovered in exact
/// mode are a_i = sqrt(d_i) times a rational, so every product of two
/// coefficients sharing a degree is rational again.
class Surd {
 public:
  Surd() = default;
  Surd(Rational coef);  // NOLINT(google-explicit-constructor)
  Surd(Rational coef, Rational radicand);

  static Surd sqrt_of(const Rational& radicand) { return Surd(Rational(1), radicand); }

  const Rational& coef() const noexcept { return coef_; }
  const Rational& radicand() const noexcept { return radicand_; }

  bool is_zero() const { return coef_ == 0; }
  bool is_rational() const { return radicand_ == 1; }

  /// Throws ModeUnsupported unless the value is rational.
  Rational as_rational() const;

  /// coef^2 * radicand.
  Rational square() const;

  double to_double() const;

  Surd operator-() const { return Surd(-coef_, radicand_); }
  friend Surd operator+(const Surd& a, const Surd& b);
  friend Surd operator-(const Surd& a, const Surd& b) { return a + (-b); }
  friend Surd operator*(const Surd& a, const Surd& b);
  friend Surd operator*(const Surd& a, const Rational& r) { return Surd(a.coef_ * r, a.radicand_); }
  friend Surd operator*(const Rational& r, const Surd& a) { return a * r; }
  Surd& operator+=(const Surd& other) { return *this = *this + other; }

  /// Value equality: 2 sqrt(8) == 4 sqrt(2).
  friend bool operator==(const Surd& a, const Surd& b) {
    return sgn(a.coef_) == sgn(b.coef_) && a.square() == b.square();
  }

 private:
  void normalize();

  Rational coef_{0};
  Rational radicand_{1};
};

/// "p/q" for rational values, "p/q*sqrt(r/s)" otherwise.
std::string to_string(const Surd& value);
Surd parse_surd(std::string_view text);

}  // namespace wandering
