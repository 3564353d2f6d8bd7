#pragma once

// Reduction-independent verdict on a generator pair: every A_{s,r} is
// recomputed from raw coefficients and the four sufficient conditions are
// decided in the pair's own arithmetic regime.

#include <optional>
#include <string>
#include <vector>

#include "wandering/model.hpp"
#include "wandering/recovery.hpp"
#include "wandering/serialize.hpp"

namespace wandering {

enum class Verdict { pass, fail, unverified };

std::string_view verdict_name(Verdict v);

struct Certificate {
  static constexpr int kVersion = 1;

  Regime regime = Regime::rational;
  int k = 0;
  std::array<std::int64_t, 6> gamma{};
  int s_max = 0;
  Json weights;
  Json coefficients;
  /// A[s-1] = {"A1": ..., ..., "A5": ...}
  std::vector<Json> a_values;

  /// A_21 = A_31 = A_25 = A_35 = 0
  bool eq310 = false;
  /// A_11 = 0
  bool eq312 = false;
  /// A_15 A_12 != 0
  bool eq315 = false;
  /// A_13 A_14 - |A_12|^2 < |A_15 A_12|
  bool eq316 = false;
  /// F_3 orthogonal to z^{ks} F_1, z^{ks} F_2 for s = 1..s_max; checked when
  /// the equalities hold.
  std::optional<bool> f3_orthogonal;

  Json lhs, rhs, c;
  double lhs_approx = 0.0;
  double rhs_approx = 0.0;
  double c_approx = 0.0;

  Verdict verdict = Verdict::fail;
  /// a_4 = 0 or b_5 = 0: F_1, F_2 are not known to give unique coordinates.
  bool core_only = false;
  std::vector<std::string> warnings;
  /// omega_t at every index the verification touched.
  Json weights_used;

  bool all_conditions() const { return eq310 && eq312 && eq315 && eq316; }
  Json to_json() const;
};

/// ceil((3k + gamma_5) / k) + 2
int default_s_max(const DegreePattern& pattern);

/// s_max <= 0 selects default_s_max. The float regime never passes: when all
/// conditions hold there the verdict is "unverified".
template <class T>
Certificate verify(const GeneratorPair<coeff_t<T>>& pair, const WeightSequence& seq, const DegreePattern& pattern,
                   int s_max = 0);

/// Re-verifies a certificate from its JSON alone. Rational certificates use
/// their embedded weights (which must agree with the weight spec); other
/// regimes re-evaluate the spec.
Certificate recheck(const Json& certificate);

struct Discrepancy {
  std::string name;
  double reduction_value;
  double oracle_value;
};

struct CrossCheckReport {
  std::vector<Discrepancy> discrepancies;
  bool consistent() const { return discrepancies.empty(); }
};

/// Compares reduction-path values at the point with the oracle values of the
/// recovered pair (registers stripped): A_11 = A_21 = A_31 = A_25 = A_35 = 0,
/// A_15 as requested, A_13 = C_1 + Z_1^2 C_2,
/// A_14 = |A_15|^2/Z_1^2 (C_1 |Z_3|^2 - C_3 x + C_4),
/// |A_12|^2 = |A_15|^2/Z_1^2 |C_1 Z_3 - C_3/2|^2 and B_0 = c.
/// Exact in the rational regime; enclosure overlap for intervals; 1e-9
/// relative for floats.
template <class T>
CrossCheckReport cross_check(const SearchPoint<T>& point, const ReducedSystem<T>& rs,
                             const RecoveredParameters<T>& params, const WeightSequence& seq);

}  // namespace wandering
