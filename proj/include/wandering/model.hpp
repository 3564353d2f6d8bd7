#pragma once

// Generator polynomials F_1, F_2 and the inner-product quantities A_{s,r}
// computed straight from their coefficients. This is the ground truth the
// reduction is checked against, so nothing here uses the matrix N.

#include <array>
#include <cstdint>
#include <map>

#include "wandering/pattern.hpp"
#include "wandering/scalar.hpp"
#include "wandering/weights.hpp"

namespace wandering {

/// Sparse polynomial: degree -> coefficient.
template <class C>
using CoeffMap = std::map<std::int64_t, C>;

/// Coefficients of
///   F_1 = sum_{i<=4} a_i z^{gamma_i} + sum_{i<=3} a_{k+i} z^{k+gamma_i}
///   F_2 = sum_{i<=3} b_i z^{gamma_i} + b_5 z^{gamma_5}.
/// a_reg = a_4 and b_reg = b_5 are the register coefficients; both zero is
/// the "core" state.
template <class C>
struct GeneratorPair {
  std::array<C, 4> a_low{};
  C a_reg{};
  std::array<C, 4> a_high{};
  std::array<C, 4> b_low{};
  C b_reg{};

  bool registered() const { return !is_zero_coeff(a_reg) && !is_zero_coeff(b_reg); }

 private:
  static bool is_zero_coeff(const C& c) {
    if constexpr (std::is_same_v<C, Surd>) {
      return c.is_zero();
    } else if constexpr (std::is_same_v<C, Interval>) {
      return c.lo() == 0.0 && c.hi() == 0.0;
    } else {
      return c == C{};
    }
  }
};

template <class C>
CoeffMap<C> f1_coefficients(const GeneratorPair<C>& pair, const DegreePattern& pattern);
template <class C>
CoeffMap<C> f2_coefficients(const GeneratorPair<C>& pair, const DegreePattern& pattern);

/// z^m f.
template <class C>
CoeffMap<C> shift(const CoeffMap<C>& f, std::int64_t m) {
  CoeffMap<C> out;
  for (const auto& [t, c] : f) out.emplace(t + m, c);
  return out;
}

/// <f, g> = sum_t f_t conj(g_t) omega_t over the common support.
template <class T>
complex_t<T> inner_product(const CoeffMap<coeff_t<T>>& f, const CoeffMap<coeff_t<T>>& g, const WeightSequence& seq);

/// sum_t |f_t| |g_t| omega_t in floating point: the magnitude against which
/// cancellation in inner_product is judged.
template <class T>
double inner_product_scale(const CoeffMap<coeff_t<T>>& f, const CoeffMap<coeff_t<T>>& g, const WeightSequence& seq);

/// The five quantities for one shift index s >= 1:
///   A_s1 = <z^{k(s-1)} F_1, z^{ks} F_1>    A_s2 = <z^{ks} F_1, z^{ks} F_2>
///   A_s3 = ||z^{ks} F_1||^2                A_s4 = ||z^{ks} F_2||^2
///   A_s5 = <z^{k(s-1)} F_1, z^{ks} F_2>
template <class T>
struct AQuantities {
  complex_t<T> a1{};
  complex_t<T> a2{};
  T a3{};
  T a4{};
  complex_t<T> a5{};
  /// Floating point magnitudes of the sums behind a1, a2 and a5.
  double scale1 = 0.0;
  double scale2 = 0.0;
  double scale5 = 0.0;
};

template <class T>
AQuantities<T> compute_A(const GeneratorPair<coeff_t<T>>& pair, const DegreePattern& pattern,
                         const WeightSequence& seq, int s);

/// Relative tolerance used when deciding that a floating point sum vanishes.
inline constexpr double kFloatZeroTolerance = 1e-9;
/// Interval enclosures of engineered zeros must contain 0 and be thinner
/// than this fraction of the magnitude of the summed terms.
inline constexpr double kIntervalZeroTolerance = 1e-9;

/// Decides "x == 0": exactly in the rational regime; by containment plus a
/// width bound (tolerance * scale) for intervals; by |x| <= tolerance * scale
/// for floats.
template <class T>
bool vanishes(const complex_t<T>& x, double scale);

/// F_3 = F_1 + z^k A_15 / (|A_12|^2 - A_13 A_14) (A_13 F_2 - conj(A_12) F_1).
/// Together with F_2 it spans M minus z^k M once A_11 = A_21 = A_31 = A_25 =
/// A_35 = 0. Throws NotOrthogonal if those fail and DegeneratePair on
/// equality in Cauchy-Schwarz.
template <class T>
CoeffMap<coeff_t<T>> construct_F3(const GeneratorPair<coeff_t<T>>& pair, const DegreePattern& pattern,
                                  const WeightSequence& seq);

/// F_4 = F_1 (1 - z^k A_15 conj(A_12) / (|A_12|^2 - A_13 A_14)); the
/// alternative generator paired with F_2.
template <class T>
CoeffMap<coeff_t<T>> construct_F4(const GeneratorPair<coeff_t<T>>& pair, const DegreePattern& pattern,
                                  const WeightSequence& seq);

}  // namespace wandering
