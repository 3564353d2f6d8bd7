#include "wandering/interval.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace wandering {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double down(double x) { return std::nextafter(x, -kInf); }
double up(double x) { return std::nextafter(x, kInf); }

// Exact results need no widening; detecting them keeps point arithmetic on
// small integers (identity matrices, zero rows) exact.
Interval widen(double lo, double hi, bool exact) {
  if (exact) return Interval(lo, hi);
  return Interval(down(lo), up(hi));
}

bool sum_exact(double a, double b, double s) {
  // Knuth two-sum: the rounding error of a + b is exactly representable.
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return err == 0.0 && std::isfinite(s);
}

bool product_exact(double a, double b, double p) {
  if (a == 0.0 || b == 0.0) return true;
  // Near the subnormal range the fma residual can itself underflow to zero.
  if (!std::isfinite(p) || std::fabs(p) < 1e-280) return false;
  return std::fma(a, b, -p) == 0.0;
}

struct MpfrValue {
  mpfr_t v;
  explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(v, prec); }
  ~MpfrValue() { mpfr_clear(v); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;
};

}  // namespace

Interval::Interval(double point) : lo_(point), hi_(point) {}

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!(lo <= hi)) throw std::invalid_argument("interval with lo > hi");
}

Interval Interval::enclose(const Rational& value) {
  MpfrValue x(53);
  mpfr_set_q(x.v, value.get_mpq_t(), MPFR_RNDD);
  double lo = mpfr_get_d(x.v, MPFR_RNDD);
  mpfr_set_q(x.v, value.get_mpq_t(), MPFR_RNDU);
  double hi = mpfr_get_d(x.v, MPFR_RNDU);
  return Interval(lo, hi);
}

double Interval::mag() const noexcept { return std::max(std::fabs(lo_), std::fabs(hi_)); }

bool Interval::contains(const Rational& x) const {
  // Compare in exact arithmetic; lo_/hi_ are exact rationals.
  return Rational(lo_) <= x && x <= Rational(hi_);
}

Interval operator+(const Interval& a, const Interval& b) {
  double lo = a.lo_ + b.lo_;
  double hi = a.hi_ + b.hi_;
  return widen(lo, hi, sum_exact(a.lo_, b.lo_, lo) && sum_exact(a.hi_, b.hi_, hi));
}

Interval operator-(const Interval& a, const Interval& b) { return a + (-b); }

Interval operator*(const Interval& a, const Interval& b) {
  const double p[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
  const double f[4][2] = {{a.lo_, b.lo_}, {a.lo_, b.hi_}, {a.hi_, b.lo_}, {a.hi_, b.hi_}};
  bool exact = true;
  for (int i = 0; i < 4; ++i) exact = exact && product_exact(f[i][0], f[i][1], p[i]);
  double lo = *std::min_element(p, p + 4);
  double hi = *std::max_element(p, p + 4);
  return widen(lo, hi, exact);
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw std::domain_error("interval division by an interval containing zero");
  const double q[4] = {a.lo_ / b.lo_, a.lo_ / b.hi_, a.hi_ / b.lo_, a.hi_ / b.hi_};
  const double f[4][2] = {{a.lo_, b.lo_}, {a.lo_, b.hi_}, {a.hi_, b.lo_}, {a.hi_, b.hi_}};
  bool exact = true;
  for (int i = 0; i < 4; ++i) {
    exact = exact && std::isfinite(q[i]) && (f[i][0] == 0.0 || std::fabs(q[i]) > 1e-280) &&
            std::fma(q[i], f[i][1], -f[i][0]) == 0.0;
  }
  double lo = *std::min_element(q, q + 4);
  double hi = *std::max_element(q, q + 4);
  return widen(lo, hi, exact);
}

Interval sqr(const Interval& x) {
  Interval a = abs(x);
  double lo = a.lo() * a.lo();
  double hi = a.hi() * a.hi();
  bool exact = product_exact(a.lo(), a.lo(), lo) && product_exact(a.hi(), a.hi(), hi);
  Interval r = widen(lo, hi, exact);
  return Interval(std::max(0.0, r.lo()), r.hi());
}

Interval sqrt(const Interval& x) {
  if (x.hi() < 0.0) throw std::domain_error("square root of a negative interval");
  double lo = std::sqrt(std::max(0.0, x.lo()));
  double hi = std::sqrt(x.hi());
  // IEEE sqrt is correctly rounded, so one ulp outward is always enough.
  return Interval(lo > 0.0 ? down(lo) : 0.0, up(hi));
}

Interval abs(const Interval& x) {
  if (x.lo() >= 0.0) return x;
  if (x.hi() <= 0.0) return -x;
  return Interval(0.0, std::max(-x.lo(), x.hi()));
}

Interval hull(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

Interval pow(const Rational& base, const Rational& exponent) {
  if (base <= 0) throw std::domain_error("interval pow needs a positive base");
  MpfrValue b(256), e_lo(256), e_hi(256), r(256);
  mpfr_set_q(b.v, base.get_mpq_t(), MPFR_RNDN);  // bases are small integers: exact
  if (Rational(mpfr_get_d(b.v, MPFR_RNDN)) != base) {
    // Non-integer bases do not occur for weights; keep the result rigorous anyway.
    throw std::domain_error("interval pow expects an exactly representable base");
  }
  mpfr_set_q(e_lo.v, exponent.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(e_hi.v, exponent.get_mpq_t(), MPFR_RNDU);
  // b^e is monotone in e: increasing for b >= 1, decreasing for b < 1.
  bool increasing = base >= 1;
  mpfr_pow(r.v, b.v, increasing ? e_lo.v : e_hi.v, MPFR_RNDD);
  double lo = mpfr_get_d(r.v, MPFR_RNDD);
  mpfr_pow(r.v, b.v, increasing ? e_hi.v : e_lo.v, MPFR_RNDU);
  double hi = mpfr_get_d(r.v, MPFR_RNDU);
  return Interval(lo, hi);
}

std::string to_string(const Interval& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Interval& x) {
  auto flags = os.flags();
  auto prec = os.precision();
  os << std::setprecision(17) << '[' << x.lo() << ',' << x.hi() << ']';
  os.flags(flags);
  os.precision(prec);
  return os;
}

}  // namespace wandering
