#pragma once

// Heuristic minimization of B_1 (or B_2) over d = (1, d_1, d_2, d_3) and the
// degree exponents phi_2, phi_3. Runs in floating point; anything below the
// threshold is re-evaluated in exact or interval arithmetic before it is
// reported.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wandering/pattern.hpp"
#include "wandering/rational.hpp"
#include "wandering/scalar.hpp"
#include "wandering/weights.hpp"

namespace wandering {

enum class Strategy { grid, coordinate_descent, simplex };
enum class Objective { b1, b2 };

std::string_view strategy_name(Strategy s);
Strategy parse_strategy(std::string_view name);

/// n log-spaced values from lo to hi inclusive.
std::vector<double> log_grid(double lo, double hi, std::size_t n);

struct SearchConfig {
  std::vector<WeightSequence> spaces;
  std::vector<int> ks{6};
  std::vector<int> phi2{0};
  std::vector<int> phi3{0};
  std::array<std::vector<double>, 3> d_grid{log_grid(1e-2, 1e6, 17), log_grid(1e-2, 1e6, 17),
                                            log_grid(1e-2, 1e6, 17)};
  Strategy strategy = Strategy::coordinate_descent;
  Objective target = Objective::b1;
  double threshold = 1.0;
  /// Number of best grid points per system handed to the local method.
  std::size_t refine_top = 3;
  /// 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;
  bool trace = false;

  /// Dirichlet spaces for the given exponents ("-16", "-33/2", "-4.2").
  static SearchConfig for_alphas(const std::vector<std::string>& alphas);
  void validate() const;
};

struct TraceEntry {
  std::size_t system;
  std::array<double, 3> d;
  double value;
};

struct SearchCandidate {
  std::size_t space_index = 0;
  int k = 0;
  int phi2 = 0;
  int phi3 = 0;
  /// d_1, d_2, d_3 (d_0 = 1).
  std::array<double, 3> d{};
  double value = 0.0;
};

struct SearchResult {
  bool found = false;
  SearchCandidate best;
  std::size_t evaluations = 0;
  std::size_t systems = 0;
  std::size_t singular_systems = 0;
  /// The candidate's d rounded to 6 significant digits and re-evaluated
  /// rigorously; present when the float value was below the threshold.
  std::optional<std::array<Rational, 3>> d_rounded;
  std::optional<Regime> refined_regime;
  /// Exact value (rational) or upper end of the enclosure (interval).
  std::optional<double> refined_value;
  bool below_threshold = false;
  std::vector<TraceEntry> trace;
};

/// Deterministic for a fixed configuration: ties are broken by system
/// order and grid index, independent of the thread count. Throws
/// NoAdmissibleSystem when every visited system is singular or degenerate.
SearchResult minimize(const SearchConfig& config);

/// B_1 or B_2 at d = (1, d_1, d_2, d_3) in floating point; nullopt when the
/// system is singular or degenerate.
std::optional<double> evaluate_float(const WeightSequence& seq, const DegreePattern& pattern, Objective target,
                                     const std::array<double, 3>& d);

struct RigorousValue {
  Regime regime;
  /// Exact value as a rational (rational regime) or the enclosure.
  std::optional<Rational> exact;
  Interval enclosure;
  /// value < threshold decided rigorously.
  bool below(double threshold) const;
  double approx() const;
};

/// Rational regime when the weights are exact, interval otherwise.
RigorousValue evaluate_rigorous(const WeightSequence& seq, const DegreePattern& pattern, Objective target,
                                const std::array<Rational, 3>& d);

}  // namespace wandering
