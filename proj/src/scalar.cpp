#include "wandering/scalar.hpp"

#include <iomanip>
#include <sstream>

namespace wandering {

std::string_view regime_name(Regime regime) {
  switch (regime) {
    case Regime::rational:
      return "rational";
    case Regime::interval:
      return "interval";
    case Regime::floating:
      return "float";
  }
  return "unknown";
}

Regime parse_regime(std::string_view name) {
  if (name == "rational") return Regime::rational;
  if (name == "interval") return Regime::interval;
  if (name == "float") return Regime::floating;
  throw ParseError("unknown arithmetic regime '" + std::string(name) + "'");
}

std::string format_scalar(const Rational& x) { return to_string(x); }

std::string format_scalar(const Interval& x) { return to_string(x); }

std::string format_scalar(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

std::string format_scalar(const std::complex<double>& x) {
  if (x.imag() == 0.0) return format_scalar(x.real());
  std::ostringstream os;
  os << std::setprecision(17) << x.real() << (x.imag() < 0 ? "-" : "+") << std::fabs(x.imag()) << "i";
  return os.str();
}

std::string format_scalar(const Surd& x) { return to_string(x); }

std::string format_approx(double x) {
  std::ostringstream os;
  os << std::setprecision(10) << x;
  return os.str();
}

std::string format_approx(const Rational& x) { return format_approx(to_double(x)); }

std::string format_approx(const Interval& x) { return "[" + format_approx(x.lo()) + ", " + format_approx(x.hi()) + "]"; }

std::string format_approx(const std::complex<double>& x) {
  if (x.imag() == 0.0) return format_approx(x.real());
  std::ostringstream os;
  os << std::setprecision(10) << x.real() << (x.imag() < 0 ? "-" : "+") << std::fabs(x.imag()) << "i";
  return os.str();
}

std::string format_approx(const Surd& x) { return format_approx(x.to_double()); }

}  // namespace wandering
