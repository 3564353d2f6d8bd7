#include "wandering/model.hpp"

#include <cmath>

#include "wandering/errors.hpp"

namespace wandering {

template <>
bool vanishes<Rational>(const Rational& x, double) {
  return x == 0;
}

template <>
bool vanishes<Interval>(const Interval& x, double scale) {
  return x.contains_zero() && x.width() <= kIntervalZeroTolerance * scale;
}

template <>
bool vanishes<double>(const std::complex<double>& x, double scale) {
  return std::abs(x) <= kFloatZeroTolerance * scale;
}

namespace {

Rational product_conj(const Surd& f, const Surd& g) { return (f * g).as_rational(); }
Interval product_conj(const Interval& f, const Interval& g) { return f * g; }
std::complex<double> product_conj(const std::complex<double>& f, const std::complex<double>& g) {
  return f * std::conj(g);
}

double magnitude(const Surd& c) { return std::fabs(c.to_double()); }
double magnitude(const Interval& c) { return c.mag(); }
double magnitude(const std::complex<double>& c) { return std::abs(c); }

template <class C>
void accumulate(CoeffMap<C>& into, std::int64_t degree, const C& value) {
  auto [it, inserted] = into.emplace(degree, value);
  if (!inserted) it->second = it->second + value;
}

template <class C, class S>
CoeffMap<C> scaled(const CoeffMap<C>& f, const S& factor) {
  CoeffMap<C> out;
  for (const auto& [t, c] : f) out.emplace(t, c * factor);
  return out;
}

template <class C>
CoeffMap<C> plus(CoeffMap<C> a, const CoeffMap<C>& b) {
  for (const auto& [t, c] : b) accumulate(a, t, c);
  return a;
}

// The quantities whose vanishing is engineered by the construction.
template <class T>
void require_orthogonality(const GeneratorPair<coeff_t<T>>& pair, const DegreePattern& pattern,
                           const WeightSequence& seq) {
  AQuantities<T> s1 = compute_A<T>(pair, pattern, seq, 1);
  AQuantities<T> s2 = compute_A<T>(pair, pattern, seq, 2);
  AQuantities<T> s3 = compute_A<T>(pair, pattern, seq, 3);
  struct Check {
    const char* name;
    const complex_t<T>& value;
    double scale;
  };
  const Check checks[] = {{"A_11", s1.a1, s1.scale1}, {"A_21", s2.a1, s2.scale1}, {"A_31", s3.a1, s3.scale1},
                          {"A_25", s2.a5, s2.scale5}, {"A_35", s3.a5, s3.scale5}};
  for (const auto& c : checks) {
    if (!vanishes<T>(c.value, c.scale)) {
      throw NotOrthogonal(std::string(c.name) + " = " + format_approx(c.value) + " does not vanish");
    }
  }
}

}  // namespace

template <class C>
CoeffMap<C> f1_coefficients(const GeneratorPair<C>& pair, const DegreePattern& pattern) {
  CoeffMap<C> f;
  for (std::size_t i = 0; i < 4; ++i) {
    accumulate(f, pattern.gamma(i), pair.a_low[i]);
    accumulate(f, pattern.k() + pattern.gamma(i), pair.a_high[i]);
  }
  accumulate(f, pattern.gamma(4), pair.a_reg);
  return f;
}

template <class C>
CoeffMap<C> f2_coefficients(const GeneratorPair<C>& pair, const DegreePattern& pattern) {
  CoeffMap<C> f;
  for (std::size_t i = 0; i < 4; ++i) accumulate(f, pattern.gamma(i), pair.b_low[i]);
  accumulate(f, pattern.gamma(5), pair.b_reg);
  return f;
}

template <class T>
complex_t<T> inner_product(const CoeffMap<coeff_t<T>>& f, const CoeffMap<coeff_t<T>>& g, const WeightSequence& seq) {
  complex_t<T> sum{};
  if constexpr (std::is_same_v<T, Rational>) sum = Rational(0);
  if constexpr (std::is_same_v<T, Interval>) sum = Interval(0.0);
  for (const auto& [t, fc] : f) {
    auto it = g.find(t);
    if (it == g.end()) continue;
    sum = sum + complex_t<T>(product_conj(fc, it->second) * weight<T>(seq, t));
  }
  return sum;
}

template <class T>
double inner_product_scale(const CoeffMap<coeff_t<T>>& f, const CoeffMap<coeff_t<T>>& g, const WeightSequence& seq) {
  double sum = 0.0;
  for (const auto& [t, fc] : f) {
    auto it = g.find(t);
    if (it == g.end()) continue;
    sum += magnitude(fc) * magnitude(it->second) * seq.float_at(t);
  }
  return sum;
}

template <class T>
AQuantities<T> compute_A(const GeneratorPair<coeff_t<T>>& pair, const DegreePattern& pattern,
                         const WeightSequence& seq, int s) {
  if (s < 1) throw std::invalid_argument("shift index s must be at least 1");
  const std::int64_t k = pattern.k();
  const CoeffMap<coeff_t<T>> f1 = f1_coefficients(pair, pattern);
  const CoeffMap<coeff_t<T>> f2 = f2_coefficients(pair, pattern);
  const auto f1_prev = shift(f1, k * (s - 1));
  const auto f1_s = shift(f1, k * s);
  const auto f2_s = shift(f2, k * s);

  AQuantities<T> out;
  out.a1 = inner_product<T>(f1_prev, f1_s, seq);
  out.a2 = inner_product<T>(f1_s, f2_s, seq);
  out.a3 = real_part(inner_product<T>(f1_s, f1_s, seq));
  out.a4 = real_part(inner_product<T>(f2_s, f2_s, seq));
  out.a5 = inner_product<T>(f1_prev, f2_s, seq);
  out.scale1 = inner_product_scale<T>(f1_prev, f1_s, seq);
  out.scale2 = inner_product_scale<T>(f1_s, f2_s, seq);
  out.scale5 = inner_product_scale<T>(f1_prev, f2_s, seq);
  return out;
}

template <class T>
CoeffMap<coeff_t<T>> construct_F3(const GeneratorPair<coeff_t<T>>& pair, const DegreePattern& pattern,
                                  const WeightSequence& seq) {
  require_orthogonality<T>(pair, pattern, seq);
  AQuantities<T> a = compute_A<T>(pair, pattern, seq, 1);
  T denominator = T(norm_sq(a.a2) - a.a3 * a.a4);
  if (!certainly_positive(T(-denominator))) {
    throw DegeneratePair("|A_12|^2 - A_13 A_14 = " + format_approx(denominator) + " is not strictly negative");
  }
  const complex_t<T> lambda = complex_t<T>(a.a5 / complex_t<T>(denominator));
  const auto f1 = f1_coefficients(pair, pattern);
  const auto f2 = f2_coefficients(pair, pattern);
  const auto tail = plus(scaled(f2, complex_t<T>(lambda * a.a3)), scaled(f1, complex_t<T>(-lambda * conj_of(a.a2))));
  return plus(f1, shift(tail, pattern.k()));
}

template <class T>
CoeffMap<coeff_t<T>> construct_F4(const GeneratorPair<coeff_t<T>>& pair, const DegreePattern& pattern,
                                  const WeightSequence& seq) {
  require_orthogonality<T>(pair, pattern, seq);
  AQuantities<T> a = compute_A<T>(pair, pattern, seq, 1);
  T denominator = T(norm_sq(a.a2) - a.a3 * a.a4);
  if (!certainly_positive(T(-denominator))) {
    throw DegeneratePair("|A_12|^2 - A_13 A_14 = " + format_approx(denominator) + " is not strictly negative");
  }
  const complex_t<T> mu = complex_t<T>(-a.a5 * conj_of(a.a2) / complex_t<T>(denominator));
  const auto f1 = f1_coefficients(pair, pattern);
  return plus(f1, shift(scaled(f1, mu), pattern.k()));
}

#define WANDERING_INSTANTIATE_MODEL(T)                                                                           \
  template CoeffMap<coeff_t<T>> f1_coefficients(const GeneratorPair<coeff_t<T>>&, const DegreePattern&);        \
  template CoeffMap<coeff_t<T>> f2_coefficients(const GeneratorPair<coeff_t<T>>&, const DegreePattern&);        \
  template complex_t<T> inner_product<T>(const CoeffMap<coeff_t<T>>&, const CoeffMap<coeff_t<T>>&,             \
                                         const WeightSequence&);                                                \
  template double inner_product_scale<T>(const CoeffMap<coeff_t<T>>&, const CoeffMap<coeff_t<T>>&,             \
                                         const WeightSequence&);                                                \
  template AQuantities<T> compute_A<T>(const GeneratorPair<coeff_t<T>>&, const DegreePattern&,                  \
                                       const WeightSequence&, int);                                             \
  template CoeffMap<coeff_t<T>> construct_F3<T>(const GeneratorPair<coeff_t<T>>&, const DegreePattern&,         \
                                                const WeightSequence&);                                         \
  template CoeffMap<coeff_t<T>> construct_F4<T>(const GeneratorPair<coeff_t<T>>&, const DegreePattern&,         \
                                                const WeightSequence&);

WANDERING_INSTANTIATE_MODEL(Rational)
WANDERING_INSTANTIATE_MODEL(Interval)
WANDERING_INSTANTIATE_MODEL(double)

#undef WANDERING_INSTANTIATE_MODEL

}  // namespace wandering
