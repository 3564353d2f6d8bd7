#pragma once

// Closed-form estimates for D_{-beta} with large beta: the sigma condition,
// the decay factor a(k) and the resulting bound on 4 C_2 C_4.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wandering/rational.hpp"

namespace wandering {

/// 6 (k+1)/k (k+2) log(2/sigma); beta at or above it makes the dominant
/// cofactor of E_1 beat the next two by the factor sigma.
double sigma_threshold(int k, double sigma);

/// beta >= sigma_threshold(k, sigma), with 1e-12 relative slack.
bool sigma_condition(int k, double beta, double sigma);

/// (1/2 + 3/(2(2k+1))) (1 + 1/(k+1))^2 (1 + 1/(2(k+1)))^4 (1 + 1/(3(k+1)))^2 (1 + 2/(3k+2))^2
double a_factor(int k);

/// 432 beta^2 / ((1 - sigma)^4 k^2) a(k)^beta
double objective_bound(int k, double beta, double sigma);

/// 5k + 700/(k-9)^2
double beta_cap(int k);

/// Values within 1e-6 relative of each other.
bool marginal(double a, double b);

struct BetaChoice {
  int beta;
  double sigma;
  double threshold;
  double bound;
};

std::vector<double> default_sigma_grid();

/// Smallest integer beta in [1, beta_max] for which some sigma in the grid
/// satisfies both the sigma condition and objective_bound < 1.
std::optional<BetaChoice> minimal_beta(int k, const std::vector<double>& sigma_grid = default_sigma_grid(),
                                       int beta_max = 5000);

// Diagnostic polynomials.
std::int64_t p11(int k);       // (k+1)(2k+3)(3k+4)
std::int64_t p1_star(int k);   // (k+2)(2k+3)(3k+4)
Rational q1(int k);            // (k+1)^4 (k+2/3)
Rational q2(int k);            // (k+2)(k+3/2)^2(k+4/3)^2

/// Smallest product (k+c_a+1)(2k+c_b+1)(3k+c_c+1) over the permutations
/// (a, b, c) of the three columns: the cofactor that dominates a 3x3 minor
/// of N for large beta. Columns {1,2,3} give p_{1,*}; {0,2,3} give p_{1,1}.
std::int64_t dominant_product(int k, const std::array<int, 3>& columns);

/// p_{1,i}: dominant_product with column i of N replaced by column 0.
std::int64_t p1_for(int k, int i);

struct EBracket {
  int k;
  double beta;
  double sigma;
  /// log10 |E_i| from the exact reduction.
  std::array<double, 3> log10_e;
  double log10_lower;
  /// 3/(1-sigma) (p_{1,i}/p_{1,*})^alpha, in log10, per i.
  std::array<double, 3> log10_upper_own;
  /// The same with p_{1,3} for every i.
  double log10_upper_p13;
  bool holds() const;
};

/// Integer beta only (the exact reduction needs rational weights).
EBracket e_bracket(int k, int beta, double sigma);

struct Table5Row {
  int k;
  int beta;
  double sigma;
  double published_objective;
  double published_beta_gt;
};

const std::vector<Table5Row>& table5_rows();

struct Table5Report {
  Table5Row row;
  double threshold;
  bool sigma_holds;
  bool threshold_matches;  // within +-2 of the published column
  double bound;
  bool bound_below_one;
  double cap;
  bool within_cap;
  bool marginal;
};

std::vector<Table5Report> reproduce_table5();

}  // namespace wandering
