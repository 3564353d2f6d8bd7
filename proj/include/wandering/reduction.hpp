#pragma once

// Linear-algebra reduction of the orthogonality conditions: the weight
// matrix N, its solved constants E_i and G_i, the weight sums C_1..C_5 and
// the objective functions built from them.

#include <array>

#include "wandering/pattern.hpp"
#include "wandering/scalar.hpp"
#include "wandering/weights.hpp"

namespace wandering {

/// N[s-1][i] = omega_{s k + gamma_i}, s = 1..3, i = 0..3.
template <class T>
SmallMatrix<T, 3, 4> build_N(const WeightSequence& seq, const DegreePattern& pattern);

/// N with its first column removed.
template <class T>
SmallMatrix<T, 3, 3> build_N1(const SmallMatrix<T, 3, 4>& n);

/// N bordered by a first row (1, 0, 0, 0); det N_0 = det N_1.
template <class T>
SmallMatrix<T, 4, 4> build_N0(const SmallMatrix<T, 3, 4>& n);

template <class T>
struct ReducedSystem {
  DegreePattern pattern;
  SmallMatrix<T, 3, 4> n;
  T det_n1;
  /// E = -N_1^{-1} (first column of N), G = N_1^{-1} (1, 0, 0).
  Vec3<T> e;
  Vec3<T> g;
  /// h[0] = 1, h[i] = E_i^2.
  std::array<T, 4> h;
  /// dcoef[0] = 0, dcoef[i] = -G_i / E_i; meaningless unless e_nonzero.
  std::array<T, 4> dcoef;
  bool e_nonzero = false;

  /// omega_{k + gamma_i} and omega_{2k + gamma_i}.
  const T& omega1(std::size_t i) const { return n[0][i]; }
  const T& omega2(std::size_t i) const { return n[1][i]; }
};

/// Throws SingularSystem when det N_1 is (or may be) zero, which is the case
/// for the classical Hardy and Dirichlet norms.
template <class T>
ReducedSystem<T> reduce(const WeightSequence& seq, const DegreePattern& pattern);

template <class T>
struct CConstants {
  T c1, c2, c3, c4, c5;
};

/// C_1 = sum d_i w1_i            C_2 = sum H_i w2_i / d_i
/// C_3 = 2 sum D_i d_i w1_i      C_4 = sum D_i^2 d_i w1_i
/// C_5 = C_1 C_4 - C_3^2 / 4
/// Throws DegenerateReduction if some E_i = 0 and DegenerateParameters if
/// some d_i is not positive.
template <class T>
CConstants<T> compute_C(const ReducedSystem<T>& rs, const std::array<T, 4>& d);

/// 4 C_2 C_4.
template <class T>
T objective_b2(const ReducedSystem<T>& rs, const std::array<T, 4>& d);

/// 4 C_2 C_5 / C_1; 0-homogeneous in d.
template <class T>
T objective_b1(const ReducedSystem<T>& rs, const std::array<T, 4>& d);

template <class T>
struct ESplit {
  T e0, e1;
  /// |C_1 Z_3 - C_3/2|
  T denominator;
};

/// B_0(Z_1) = e_0 / Z_1 + e_1 Z_1 with
///   e_0 = C_5 / |C_1 Z_3 - C_3/2|,
///   e_1 = C_2 (C_1 |Z_3|^2 - C_3 Re Z_3 + C_4) / |C_1 Z_3 - C_3/2|.
/// Throws DegenerateZ3 when the denominator vanishes.
template <class T>
ESplit<T> split_e(const CConstants<T>& c, const complex_t<T>& z3);

template <class T>
ESplit<T> split_e(const ReducedSystem<T>& rs, const std::array<T, 4>& d, const complex_t<T>& z3) {
  return split_e<T>(compute_C(rs, d), z3);
}

/// (Z_1^2 C_2 (C_1 |Z_3|^2 - C_3 x + C_4) + C_5) / (Z_1 |C_1 Z_3 - C_3/2|).
template <class T>
T objective_b0(const CConstants<T>& c, const complex_t<T>& z3, const T& z1);

template <class T>
T objective_b0(const ReducedSystem<T>& rs, const std::array<T, 4>& d, const complex_t<T>& z3, const T& z1) {
  return objective_b0<T>(compute_C(rs, d), z3, z1);
}

/// argmin of B_0 over Z_1 > 0, i.e. sqrt(e_0 / e_1). Approximate in the
/// rational regime.
template <class T>
T optimal_z1(const ESplit<T>& split);

}  // namespace wandering
