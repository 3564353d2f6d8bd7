#include "wandering/reduction.hpp"

#include "wandering/errors.hpp"

namespace wandering {

template <class T>
SmallMatrix<T, 3, 4> build_N(const WeightSequence& seq, const DegreePattern& pattern) {
  SmallMatrix<T, 3, 4> n{};
  for (std::int64_t s = 1; s <= 3; ++s) {
    for (std::size_t i = 0; i < 4; ++i) {
      n[static_cast<std::size_t>(s - 1)][i] = weight<T>(seq, s * pattern.k() + pattern.gamma(i));
    }
  }
  return n;
}

template <class T>
SmallMatrix<T, 3, 3> build_N1(const SmallMatrix<T, 3, 4>& n) {
  SmallMatrix<T, 3, 3> out{};
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) out[r][c] = n[r][c + 1];
  }
  return out;
}

template <class T>
SmallMatrix<T, 4, 4> build_N0(const SmallMatrix<T, 3, 4>& n) {
  SmallMatrix<T, 4, 4> out{};
  out[0] = {T(1), T(0), T(0), T(0)};
  for (std::size_t r = 0; r < 3; ++r) out[r + 1] = n[r];
  return out;
}

template <class T>
ReducedSystem<T> reduce(const WeightSequence& seq, const DegreePattern& pattern) {
  SmallMatrix<T, 3, 4> n = build_N<T>(seq, pattern);
  SmallMatrix<T, 3, 3> n1 = build_N1(n);
  Vec3<T> first_column{T(-n[0][0]), T(-n[1][0]), T(-n[2][0])};
  CramerSolution<T> e = cramer_solve3(n1, first_column);
  CramerSolution<T> g = cramer_solve3(n1, Vec3<T>{T(1), T(0), T(0)});

  ReducedSystem<T> rs{pattern, n, e.det, e.x, g.x, {}, {}, true};
  rs.h[0] = T(1);
  rs.dcoef[0] = T(0);
  for (std::size_t i = 0; i < 3; ++i) {
    rs.h[i + 1] = T(rs.e[i] * rs.e[i]);
    if (possibly_zero(rs.e[i])) {
      rs.e_nonzero = false;
      rs.dcoef[i + 1] = T(0);
    } else {
      rs.dcoef[i + 1] = T(-rs.g[i] / rs.e[i]);
    }
  }
  return rs;
}

template <class T>
CConstants<T> compute_C(const ReducedSystem<T>& rs, const std::array<T, 4>& d) {
  if (!rs.e_nonzero) {
    throw DegenerateReduction("some E_i vanishes for " + rs.pattern.describe());
  }
  for (std::size_t i = 0; i < 4; ++i) {
    if (!certainly_positive(d[i])) {
      throw DegenerateParameters("d_" + std::to_string(i) + " = " + format_approx(d[i]) + " is not positive");
    }
  }
  CConstants<T> c{T(0), T(0), T(0), T(0), T(0)};
  for (std::size_t i = 0; i < 4; ++i) {
    T w1 = rs.omega1(i);
    T dw = T(d[i] * w1);
    c.c1 = T(c.c1 + dw);
    c.c2 = T(c.c2 + rs.h[i] * rs.omega2(i) / d[i]);
    if (i == 0) continue;
    T dd = T(rs.dcoef[i] * dw);
    c.c3 = T(c.c3 + dd);
    c.c4 = T(c.c4 + rs.dcoef[i] * dd);
  }
  c.c3 = T(T(2) * c.c3);
  c.c5 = T(c.c1 * c.c4 - c.c3 * c.c3 / T(4));
  return c;
}

template <class T>
T objective_b2(const ReducedSystem<T>& rs, const std::array<T, 4>& d) {
  CConstants<T> c = compute_C(rs, d);
  return T(T(4) * c.c2 * c.c4);
}

template <class T>
T objective_b1(const ReducedSystem<T>& rs, const std::array<T, 4>& d) {
  CConstants<T> c = compute_C(rs, d);
  return T(T(4) * c.c2 * c.c5 / c.c1);
}

template <class T>
ESplit<T> split_e(const CConstants<T>& c, const complex_t<T>& z3) {
  const complex_t<T> shifted = complex_t<T>(c.c1 * z3 - complex_t<T>(c.c3 / T(2)));
  T denominator = T(modulus(shifted));
  if (possibly_zero(denominator)) {
    throw DegenerateZ3("C_1 Z_3 - C_3/2 vanishes at Z_3 = " + format_approx(z3));
  }
  T quadratic = T(c.c1 * norm_sq(z3) - c.c3 * real_part(z3) + c.c4);
  return ESplit<T>{T(c.c5 / denominator), T(c.c2 * quadratic / denominator), denominator};
}

template <class T>
T objective_b0(const CConstants<T>& c, const complex_t<T>& z3, const T& z1) {
  if (!certainly_positive(z1)) throw DegenerateParameters("Z_1 = " + format_approx(z1) + " is not positive");
  ESplit<T> e = split_e<T>(c, z3);
  return T(e.e0 / z1 + e.e1 * z1);
}

template <class T>
T optimal_z1(const ESplit<T>& split) {
  if (!certainly_positive(split.e1)) throw DegenerateParameters("e_1 is not positive");
  return sqrt_value(T(split.e0 / split.e1));
}

#define WANDERING_INSTANTIATE_REDUCTION(T)                                                            \
  template SmallMatrix<T, 3, 4> build_N<T>(const WeightSequence&, const DegreePattern&);            \
  template SmallMatrix<T, 3, 3> build_N1<T>(const SmallMatrix<T, 3, 4>&);                           \
  template SmallMatrix<T, 4, 4> build_N0<T>(const SmallMatrix<T, 3, 4>&);                           \
  template ReducedSystem<T> reduce<T>(const WeightSequence&, const DegreePattern&);                 \
  template CConstants<T> compute_C<T>(const ReducedSystem<T>&, const std::array<T, 4>&);            \
  template T objective_b2<T>(const ReducedSystem<T>&, const std::array<T, 4>&);                     \
  template T objective_b1<T>(const ReducedSystem<T>&, const std::array<T, 4>&);                     \
  template ESplit<T> split_e<T>(const CConstants<T>&, const complex_t<T>&);                         \
  template T objective_b0<T>(const CConstants<T>&, const complex_t<T>&, const T&);                  \
  template T optimal_z1<T>(const ESplit<T>&);

WANDERING_INSTANTIATE_REDUCTION(Rational)
WANDERING_INSTANTIATE_REDUCTION(Interval)
WANDERING_INSTANTIATE_REDUCTION(double)

#undef WANDERING_INSTANTIATE_REDUCTION

}  // namespace wandering
