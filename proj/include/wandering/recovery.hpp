#pragma once

// From a search point (d, Z_3, Z_1, A_15) back to explicit generator
// coefficients, and the a_4 / b_5 register that makes the pair admissible.

#include <array>
#include <optional>

#include "wandering/model.hpp"
#include "wandering/reduction.hpp"

namespace wandering {

template <class T>
struct SearchPoint {
  /// d_i = |a_i|^2
  std::array<T, 4> d;
  complex_t<T> z3;
  T z1;
  complex_t<T> a15;
};

template <class T>
struct RecoveredParameters {
  SearchPoint<T> point;
  GeneratorPair<coeff_t<T>> pair;
  /// |A_15 A_12| - (A_13 A_14 - |A_12|^2) after attach_register.
  std::optional<T> register_margin;
};

/// a_i = sqrt(d_i), a_{k+i} = E_i Z_1 / conj(a_i) (E_0 = 1),
/// b_i = a_i conj(A_15) / Z_1 (conj(Z_3) - D_i) (D_0 = 0).
/// Registers are left at zero.
template <class T>
RecoveredParameters<T> recover(const SearchPoint<T>& point, const ReducedSystem<T>& rs);

/// Positive real A_15 with |A_15|^2 = Z_1 / |C_1 Z_3 - C_3/2|, so that
/// |A_15 A_12| = 1 after recovery. Approximate in the rational regime.
template <class T>
complex_t<T> choose_A15(const ReducedSystem<T>& rs, const std::array<T, 4>& d, const complex_t<T>& z3, const T& z1);

/// Real Z_3 of sign opposite to C_3, one significant digit, large enough that
/// C_5 / |C_1 Z_3 - C_3/2|^2 stays below (1 - B_1)/2 (0.01 when B_1 >= 1).
template <class T>
complex_t<T> default_Z3(const ReducedSystem<T>& rs, const std::array<T, 4>& d);

/// Fills Z_1 (near its optimum) and A_15 for the given d and Z_3. In the
/// rational regime A_15 is rounded first and Z_1 adjusted so that
/// |A_15|^2 |C_1 Z_3 - C_3/2| = Z_1 holds exactly.
template <class T>
SearchPoint<T> complete_point(const ReducedSystem<T>& rs, const std::array<T, 4>& d,
                              std::optional<complex_t<T>> z3 = std::nullopt);

/// Sets a_4 = a4 and b_5 = b5 (real, nonzero) and records the margin of the
/// strict inequality. Throws RegisterTooLarge, carrying the largest
/// admissible common modulus, when the margin is not positive.
template <class T>
RecoveredParameters<T> attach_register(RecoveredParameters<T> params, const T& a4, const T& b5,
                                       const WeightSequence& seq, const DegreePattern& pattern);

/// Largest r with a_4 = b_5 = r keeping the inequality, from
///   w4 w5 u^2 + (A13 w5 + A14 w4) u + (A13 A14 - |A12|^2 - |A15 A12|) < 0,
/// u = r^2, with A-values of the unregistered pair. 0 if the core already fails.
double register_bound(double a13, double a14, double a12_sq, double rhs, double w4, double w5);

}  // namespace wandering
