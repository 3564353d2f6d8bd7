#pragma once

// The three arithmetic regimes and the small dense linear algebra built on
// them. Every algorithm above this layer is a template over the scalar type
// T in {Rational, Interval, double}.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <type_traits>

#include "wandering/errors.hpp"
#include "wandering/interval.hpp"
#include "wandering/rational.hpp"

namespace wandering {

enum class Regime { rational, interval, floating };

std::string_view regime_name(Regime regime);
Regime parse_regime(std::string_view name);

template <class T>
struct regime_traits;

/// Exact arithmetic. The exact path is real: Z_3 and A_15 are real
/// rationals and generator coefficients are surds.
template <>
struct regime_traits<Rational> {
  static constexpr Regime id = Regime::rational;
  using complex_type = Rational;
  using coeff_type = Surd;
};

/// Outward-rounded enclosures, real only.
template <>
struct regime_traits<Interval> {
  static constexpr Regime id = Regime::interval;
  using complex_type = Interval;
  using coeff_type = Interval;
};

/// Plain doubles with genuinely complex parameters and coefficients.
template <>
struct regime_traits<double> {
  static constexpr Regime id = Regime::floating;
  using complex_type = std::complex<double>;
  using coeff_type = std::complex<double>;
};

template <class T>
using complex_t = typename regime_traits<T>::complex_type;
template <class T>
using coeff_t = typename regime_traits<T>::coeff_type;

// --- per-regime primitives -------------------------------------------------

template <class T>
T from_rational(const Rational& r);
template <>
inline Rational from_rational<Rational>(const Rational& r) { return r; }
template <>
inline Interval from_rational<Interval>(const Rational& r) { return Interval::enclose(r); }
template <>
inline double from_rational<double>(const Rational& r) { return to_double(r); }

inline bool possibly_zero(const Rational& x) { return x == 0; }
inline bool possibly_zero(const Interval& x) { return x.contains_zero(); }
inline bool possibly_zero(double x) { return x == 0.0; }
inline bool possibly_zero(const std::complex<double>& x) { return x == 0.0; }

inline double as_double(const Rational& x) { return to_double(x); }
inline double as_double(const Interval& x) { return x.mid(); }
inline double as_double(double x) { return x; }

inline Rational abs_value(const Rational& x) { return abs(x); }
inline Interval abs_value(const Interval& x) { return abs(x); }
inline double abs_value(double x) { return std::fabs(x); }

inline const Rational& real_part(const Rational& x) { return x; }
inline const Interval& real_part(const Interval& x) { return x; }
inline double real_part(const std::complex<double>& x) { return x.real(); }

inline const Rational& conj_of(const Rational& x) { return x; }
inline const Interval& conj_of(const Interval& x) { return x; }
inline std::complex<double> conj_of(const std::complex<double>& x) { return std::conj(x); }

/// |x|^2
inline Rational norm_sq(const Rational& x) { return x * x; }
inline Interval norm_sq(const Interval& x) { return sqr(x); }
inline double norm_sq(const std::complex<double>& x) { return std::norm(x); }
inline double norm_sq(double x) { return x * x; }

/// |x|; exact for the real regimes.
inline Rational modulus(const Rational& x) { return abs(x); }
inline Interval modulus(const Interval& x) { return abs(x); }
inline double modulus(const std::complex<double>& x) { return std::abs(x); }
inline double modulus(double x) { return std::fabs(x); }

/// sqrt in the regime; the rational regime returns a 20-digit decimal
/// approximation (sqrt is used only to pick free parameters, never to
/// decide a condition).
inline Rational sqrt_value(const Rational& x) { return approx_sqrt(x, 20); }
inline Interval sqrt_value(const Interval& x) { return sqrt(x); }
inline double sqrt_value(double x) { return std::sqrt(x); }

/// True only when x > 0 is certain.
inline bool certainly_positive(const Rational& x) { return x > 0; }
inline bool certainly_positive(const Interval& x) { return x.certainly_positive(); }
inline bool certainly_positive(double x) { return x > 0.0; }

std::string format_scalar(const Rational& x);
std::string format_scalar(const Interval& x);
std::string format_scalar(double x);
std::string format_scalar(const std::complex<double>& x);
std::string format_scalar(const Surd& x);

/// Ten significant digits; for messages and human-readable reports.
std::string format_approx(const Rational& x);
std::string format_approx(const Interval& x);
std::string format_approx(double x);
std::string format_approx(const std::complex<double>& x);
std::string format_approx(const Surd& x);

// --- small dense matrices --------------------------------------------------

template <class T, std::size_t R, std::size_t C>
using SmallMatrix = std::array<std::array<T, C>, R>;

template <class T>
using Vec3 = std::array<T, 3>;

template <class T>
T det2(const T& a, const T& b, const T& c, const T& d) {
  return a * d - b * c;
}

/// Cofactor expansion along the first row.
template <class T>
T det3(const SmallMatrix<T, 3, 3>& m) {
  return m[0][0] * det2(m[1][1], m[1][2], m[2][1], m[2][2]) -
         m[0][1] * det2(m[1][0], m[1][2], m[2][0], m[2][2]) +
         m[0][2] * det2(m[1][0], m[1][1], m[2][0], m[2][1]);
}

template <class T>
SmallMatrix<T, 3, 3> minor_of(const SmallMatrix<T, 4, 4>& m, std::size_t row, std::size_t col) {
  SmallMatrix<T, 3, 3> out{};
  for (std::size_t i = 0, oi = 0; i < 4; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, oj = 0; j < 4; ++j) {
      if (j == col) continue;
      out[oi][oj++] = m[i][j];
    }
    ++oi;
  }
  return out;
}

template <class T>
T det4(const SmallMatrix<T, 4, 4>& m) {
  T sum = T(0);
  for (std::size_t j = 0; j < 4; ++j) {
    T term = m[0][j] * det3(minor_of(m, 0, j));
    if (j % 2 == 0) {
      sum = sum + term;
    } else {
      sum = sum - term;
    }
  }
  return sum;
}

/// Hadamard's bound prod_i ||row_i||; used to judge near-singularity of
/// floating point determinants.
inline double hadamard_bound(const SmallMatrix<double, 3, 3>& m) {
  double bound = 1.0;
  for (const auto& row : m) bound *= std::sqrt(row[0] * row[0] + row[1] * row[1] + row[2] * row[2]);
  return bound;
}

/// Floating point determinants whose magnitude is below this fraction of the
/// Hadamard bound are treated as singular.
inline constexpr double kFloatSingularRatio = 1e-12;

template <class T>
bool singular_determinant(const T& det, const SmallMatrix<T, 3, 3>& m) {
  if constexpr (std::is_same_v<T, double>) {
    return std::fabs(det) <= kFloatSingularRatio * hadamard_bound(m);
  } else {
    (void)m;
    return possibly_zero(det);
  }
}

template <class T>
struct CramerSolution {
  Vec3<T> x;
  T det;
};

/// Solves m x = rhs, each x_j = det(m with column j replaced by rhs) / det(m).
template <class T>
CramerSolution<T> cramer_solve3(const SmallMatrix<T, 3, 3>& m, const Vec3<T>& rhs) {
  T det = det3(m);
  if (singular_determinant(det, m)) {
    throw SingularSystem("singular 3x3 system (determinant " + format_approx(det) + ")");
  }
  CramerSolution<T> out{{}, det};
  for (std::size_t j = 0; j < 3; ++j) {
    SmallMatrix<T, 3, 3> replaced = m;
    for (std::size_t i = 0; i < 3; ++i) replaced[i][j] = rhs[i];
    out.x[j] = det3(replaced) / det;
  }
  return out;
}

}  // namespace wandering
