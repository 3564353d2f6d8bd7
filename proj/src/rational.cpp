#include "wandering/rational.hpp"

#include <mpfr.h>

#include <cctype>
#include <cmath>
#include <cstdio>

#include "wandering/errors.hpp"

namespace wandering {

namespace {

BigInt parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw ParseError("empty number in '" + std::string(whole) + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("invalid digit in '" + std::string(whole) + "'");
    }
  }
  return BigInt(std::string(digits), 10);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Rational pow10(long exponent) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? Rational(BigInt(1), p) : Rational(p);
}

// Decimal string with `digits` significant digits via mpfr, then exact parse.
Rational from_mpfr(mpfr_srcptr x, int digits) {
  if (mpfr_zero_p(x)) return Rational(0);
  mpfr_exp_t exp10 = 0;
  char* mant = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), x, MPFR_RNDN);
  std::string m(mant);
  mpfr_free_str(mant);
  bool negative = !m.empty() && m.front() == '-';
  if (negative) m.erase(0, 1);
  Rational r(BigInt(m, 10));
  r *= pow10(static_cast<long>(exp10) - static_cast<long>(m.size()));
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty rational");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Rational num = parse_rational(s.substr(0, slash));
    Rational den = parse_rational(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
    Rational r = num / den;
    return r;
  }

  bool negative = false;
  std::string_view body = s;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  long exponent = 0;
  if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = body.substr(e + 1);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    BigInt ev = parse_digits(exp_part, s);
    if (!ev.fits_slong_p() || abs(ev) > 100000) throw ParseError("exponent out of range in '" + std::string(s) + "'");
    exponent = ev.get_si() * (exp_negative ? -1 : 1);
    body = body.substr(0, e);
  }

  std::string digits;
  if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = body.substr(0, dot);
    std::string_view frac_part = body.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) throw ParseError("invalid number '" + std::string(s) + "'");
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    digits = std::string(body);
  }

  Rational r(parse_digits(digits, s));
  r *= pow10(exponent);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

Rational pow(const Rational& base, long exponent) {
  unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  if (exponent < 0) {
    if (num == 0) throw std::domain_error("zero to a negative power");
    std::swap(num, den);
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

double to_double(const Rational& value) {
  // mpq_get_d truncates; go through mpfr for correct rounding.
  mpfr_t x;
  mpfr_init2(x, 53);
  mpfr_set_q(x, value.get_mpq_t(), MPFR_RNDN);
  double d = mpfr_get_d(x, MPFR_RNDN);
  mpfr_clear(x);
  return d;
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

std::optional<Rational> exact_sqrt(const Rational& value) {
  if (value < 0) return std::nullopt;
  if (!mpz_perfect_square_p(value.get_num_mpz_t()) || !mpz_perfect_square_p(value.get_den_mpz_t())) {
    return std::nullopt;
  }
  BigInt num, den;
  mpz_sqrt(num.get_mpz_t(), value.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), value.get_den_mpz_t());
  return Rational(num, den);
}

Rational round_significant(double value, int digits) {
  if (!std::isfinite(value)) throw std::domain_error("cannot round a non-finite value");
  mpfr_t x;
  mpfr_init2(x, 53);
  mpfr_set_d(x, value, MPFR_RNDN);
  Rational r = from_mpfr(x, digits);
  mpfr_clear(x);
  return r;
}

Rational round_significant(const Rational& value, int digits) {
  mpfr_t x;
  mpfr_init2(x, 256);
  mpfr_set_q(x, value.get_mpq_t(), MPFR_RNDN);
  Rational r = from_mpfr(x, digits);
  mpfr_clear(x);
  return r;
}

Rational approx_sqrt(const Rational& value, int digits) {
  if (value < 0) throw std::domain_error("square root of a negative rational");
  if (auto exact = exact_sqrt(value)) return *exact;
  mpfr_t x;
  mpfr_init2(x, 256);
  mpfr_set_q(x, value.get_mpq_t(), MPFR_RNDN);
  mpfr_sqrt(x, x, MPFR_RNDN);
  Rational r = from_mpfr(x, digits);
  mpfr_clear(x);
  return r;
}

// ---------------------------------------------------------------------------
// Surd

Surd::Surd(Rational coef) : coef_(std::move(coef)) {}

Surd::Surd(Rational coef, Rational radicand) : coef_(std::move(coef)), radicand_(std::move(radicand)) {
  if (radicand_ <= 0) throw std::domain_error("surd radicand must be positive");
  normalize();
}

void Surd::normalize() {
  if (coef_ == 0) {
    radicand_ = 1;
    return;
  }
  if (radicand_ == 1) return;
  if (auto root = exact_sqrt(radicand_)) {
    coef_ *= *root;
    radicand_ = 1;
  }
}

Rational Surd::as_rational() const {
  if (!is_rational()) throw ModeUnsupported("value " + to_string(*this) + " is irrational");
  return coef_;
}

Rational Surd::square() const { return coef_ * coef_ * radicand_; }

double Surd::to_double() const {
  mpfr_t c, r;
  mpfr_init2(c, 128);
  mpfr_init2(r, 128);
  mpfr_set_q(c, coef_.get_mpq_t(), MPFR_RNDN);
  mpfr_set_q(r, radicand_.get_mpq_t(), MPFR_RNDN);
  mpfr_sqrt(r, r, MPFR_RNDN);
  mpfr_mul(c, c, r, MPFR_RNDN);
  double d = mpfr_get_d(c, MPFR_RNDN);
  mpfr_clear(c);
  mpfr_clear(r);
  return d;
}

Surd operator+(const Surd& a, const Surd& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.radicand_ == b.radicand_) return Surd(a.coef_ + b.coef_, a.radicand_);
  // sqrt(rb) = q * sqrt(ra) whenever rb / ra is a rational square.
  if (auto q = exact_sqrt(b.radicand_ / a.radicand_)) {
    return Surd(a.coef_ + b.coef_ * *q, a.radicand_);
  }
  throw ModeUnsupported("cannot add surds with radicands " + to_string(a.radicand_) + " and " +
                        to_string(b.radicand_));
}

Surd operator*(const Surd& a, const Surd& b) {
  if (a.radicand_ == b.radicand_) return Surd(a.coef_ * b.coef_ * a.radicand_);
  return Surd(a.coef_ * b.coef_, a.radicand_ * b.radicand_);
}

std::string to_string(const Surd& value) {
  if (value.is_rational()) return to_string(value.coef());
  return to_string(value.coef()) + "*sqrt(" + to_string(value.radicand()) + ")";
}

Surd parse_surd(std::string_view text) {
  std::string_view s = trim(text);
  auto pos = s.find("sqrt(");
  if (pos == std::string_view::npos) return Surd(parse_rational(s));
  if (s.back() != ')') throw ParseError("malformed surd '" + std::string(s) + "'");
  Rational radicand = parse_rational(s.substr(pos + 5, s.size() - pos - 6));
  std::string_view head = trim(s.substr(0, pos));
  Rational coef(1);
  if (!head.empty()) {
    if (head.back() != '*') throw ParseError("malformed surd '" + std::string(s) + "'");
    head.remove_suffix(1);
    coef = parse_rational(head);
  }
  if (radicand <= 0) throw ParseError("nonpositive radicand in '" + std::string(s) + "'");
  return Surd(coef, radicand);
}

}  // namespace wandering
