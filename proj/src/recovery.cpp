#include "wandering/recovery.hpp"

#include <cmath>

#include "wandering/errors.hpp"

namespace wandering {

namespace {

// sqrt(d) * factor in the coefficient type of the regime.
Surd scaled_root(const Rational& d, const Rational& factor) { return Surd(factor, d); }
Interval scaled_root(const Interval& d, const Interval& factor) { return sqrt(d) * factor; }
std::complex<double> scaled_root(double d, const std::complex<double>& factor) { return std::sqrt(d) * factor; }

// Smallest 1-significant-digit number >= x > 0, as an exact rational.
Rational round_up_one_digit(double x) {
  int exponent = static_cast<int>(std::floor(std::log10(x)));
  double scale = std::pow(10.0, exponent);
  double digit = std::ceil(x / scale * (1.0 - 1e-12));
  if (digit >= 10.0) {
    digit = 1.0;
    ++exponent;
  }
  Rational out(static_cast<long>(digit));
  return exponent >= 0 ? Rational(out * pow(Rational(10), exponent)) : Rational(out / pow(Rational(10), -exponent));
}

template <class T>
void require_point(const SearchPoint<T>& p) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (!certainly_positive(p.d[i])) {
      throw DegenerateParameters("d_" + std::to_string(i) + " = " + format_approx(p.d[i]) + " is not positive");
    }
  }
  if (!certainly_positive(p.z1)) throw DegenerateParameters("Z_1 = " + format_approx(p.z1) + " is not positive");
  if (possibly_zero(p.a15)) throw DegenerateParameters("A_15 must be nonzero");
}

}  // namespace

double register_bound(double a13, double a14, double a12_sq, double rhs, double w4, double w5) {
  double a = w4 * w5;
  double b = a13 * w5 + a14 * w4;
  double c = a13 * a14 - a12_sq - rhs;
  if (c >= 0.0) return 0.0;
  double u = -2.0 * c / (b + std::sqrt(b * b - 4.0 * a * c));
  return std::sqrt(u);
}

template <class T>
RecoveredParameters<T> recover(const SearchPoint<T>& point, const ReducedSystem<T>& rs) {
  require_point(point);
  if (!rs.e_nonzero) throw DegenerateReduction("some E_i vanishes for " + rs.pattern.describe());
  const T one = T(1);
  const complex_t<T> a15_over_z1 = complex_t<T>(conj_of(point.a15) / complex_t<T>(point.z1));
  const complex_t<T> z3_bar = conj_of(point.z3);

  RecoveredParameters<T> out{point, {}, std::nullopt};
  for (std::size_t i = 0; i < 4; ++i) {
    const T& d = point.d[i];
    const T& e = i == 0 ? one : rs.e[i - 1];
    out.pair.a_low[i] = scaled_root(d, complex_t<T>(one));
    out.pair.a_high[i] = scaled_root(d, complex_t<T>(e * point.z1 / d));
    out.pair.b_low[i] = scaled_root(d, complex_t<T>(a15_over_z1 * (z3_bar - complex_t<T>(rs.dcoef[i]))));
  }
  out.pair.a_reg = coeff_t<T>(T(0));
  out.pair.b_reg = coeff_t<T>(T(0));
  return out;
}

template <class T>
complex_t<T> choose_A15(const ReducedSystem<T>& rs, const std::array<T, 4>& d, const complex_t<T>& z3, const T& z1) {
  if (!certainly_positive(z1)) throw DegenerateParameters("Z_1 = " + format_approx(z1) + " is not positive");
  ESplit<T> e = split_e(rs, d, z3);
  return complex_t<T>(sqrt_value(T(z1 / e.denominator)));
}

template <class T>
complex_t<T> default_Z3(const ReducedSystem<T>& rs, const std::array<T, 4>& d) {
  CConstants<T> c = compute_C(rs, d);
  const double c1 = as_double(c.c1);
  const double c3 = as_double(c.c3);
  const double c5 = as_double(c.c5);
  const double b1 = 4.0 * as_double(c.c2) * c5 / c1;
  const double rho = b1 < 1.0 ? (1.0 - b1) / 2.0 : 0.01;
  const double radius = (std::sqrt(std::max(c5, 0.0) / rho) + std::fabs(c3) / 2.0) / c1;
  Rational z3 = round_up_one_digit(radius);
  if (c3 >= 0.0) z3 = -z3;
  return complex_t<T>(from_rational<T>(z3));
}

template <class T>
SearchPoint<T> complete_point(const ReducedSystem<T>& rs, const std::array<T, 4>& d,
                              std::optional<complex_t<T>> z3) {
  SearchPoint<T> p{d, z3 ? *z3 : default_Z3(rs, d), T(0), complex_t<T>(T(0))};
  ESplit<T> e = split_e<T>(compute_C(rs, d), p.z3);
  if constexpr (std::is_same_v<T, Rational>) {
    Rational z1 = optimal_z1(e);
    Rational a15 = approx_sqrt(Rational(z1 / e.denominator), 12);
    p.a15 = a15;
    p.z1 = a15 * a15 * e.denominator;
  } else if constexpr (std::is_same_v<T, Interval>) {
    p.z1 = Interval(optimal_z1(e).mid());
    p.a15 = Interval(std::sqrt((p.z1 / e.denominator).mid()));
  } else {
    p.z1 = optimal_z1(e);
    p.a15 = std::sqrt(p.z1 / e.denominator);
  }
  return p;
}

template <class T>
RecoveredParameters<T> attach_register(RecoveredParameters<T> params, const T& a4, const T& b5,
                                       const WeightSequence& seq, const DegreePattern& pattern) {
  if (possibly_zero(a4) || possibly_zero(b5)) throw DegenerateParameters("register coefficients must be nonzero");
  params.pair.a_reg = coeff_t<T>(a4);
  params.pair.b_reg = coeff_t<T>(b5);
  AQuantities<T> a = compute_A<T>(params.pair, pattern, seq, 1);
  T margin = T(modulus(complex_t<T>(a.a5 * a.a2)) - (a.a3 * a.a4 - norm_sq(a.a2)));
  if (!certainly_positive(margin)) {
    GeneratorPair<coeff_t<T>> core = params.pair;
    core.a_reg = coeff_t<T>(T(0));
    core.b_reg = coeff_t<T>(T(0));
    AQuantities<T> c = compute_A<T>(core, pattern, seq, 1);
    double r = register_bound(as_double(c.a3), as_double(c.a4), as_double(T(norm_sq(c.a2))),
                              as_double(T(modulus(complex_t<T>(c.a5 * c.a2)))),
                              seq.float_at(pattern.k() + pattern.gamma(4)), seq.float_at(pattern.k() + pattern.gamma(5)));
    throw RegisterTooLarge("register a_4 = " + format_approx(a4) + ", b_5 = " + format_approx(b5) +
                               " breaks the strict inequality (margin " + format_approx(margin) + ")",
                           r);
  }
  params.register_margin = margin;
  return params;
}

#define WANDERING_INSTANTIATE_RECOVERY(T)                                                                        \
  template RecoveredParameters<T> recover<T>(const SearchPoint<T>&, const ReducedSystem<T>&);                  \
  template complex_t<T> choose_A15<T>(const ReducedSystem<T>&, const std::array<T, 4>&, const complex_t<T>&,   \
                                      const T&);                                                               \
  template complex_t<T> default_Z3<T>(const ReducedSystem<T>&, const std::array<T, 4>&);                       \
  template SearchPoint<T> complete_point<T>(const ReducedSystem<T>&, const std::array<T, 4>&,                  \
                                            std::optional<complex_t<T>>);                                      \
  template RecoveredParameters<T> attach_register<T>(RecoveredParameters<T>, const T&, const T&,               \
                                                     const WeightSequence&, const DegreePattern&);

WANDERING_INSTANTIATE_RECOVERY(Rational)
WANDERING_INSTANTIATE_RECOVERY(Interval)
WANDERING_INSTANTIATE_RECOVERY(double)

#undef WANDERING_INSTANTIATE_RECOVERY

}  // namespace wandering
