#include "wandering/asymptotic.hpp"

#include <algorithm>
#include <cmath>

#include "wandering/reduction.hpp"

namespace wandering {

namespace {

constexpr double kSlack = 1e-12;

double log10_abs(const Rational& x) {
  // |x| = num/den; lengths keep this finite far outside the double range.
  mpz_class num = abs(x.get_num());
  const mpz_class& den = x.get_den();
  long en = 0, ed = 0;
  double mn = mpz_get_d_2exp(&en, num.get_mpz_t());
  double md = mpz_get_d_2exp(&ed, den.get_mpz_t());
  return std::log10(mn / md) + static_cast<double>(en - ed) * std::log10(2.0);
}

}  // namespace

double sigma_threshold(int k, double sigma) {
  const double kk = k;
  return 6.0 * (kk + 1.0) / kk * (kk + 2.0) * std::log(2.0 / sigma);
}

bool sigma_condition(int k, double beta, double sigma) {
  return beta >= sigma_threshold(k, sigma) * (1.0 - kSlack);
}

double a_factor(int k) {
  const double kk = k;
  return (0.5 + 3.0 / (2.0 * (2.0 * kk + 1.0))) * std::pow(1.0 + 1.0 / (kk + 1.0), 2) *
         std::pow(1.0 + 1.0 / (2.0 * (kk + 1.0)), 4) * std::pow(1.0 + 1.0 / (3.0 * (kk + 1.0)), 2) *
         std::pow(1.0 + 2.0 / (3.0 * kk + 2.0), 2);
}

double objective_bound(int k, double beta, double sigma) {
  const double kk = k;
  const double log_bound = std::log(432.0 * beta * beta) - 4.0 * std::log1p(-sigma) - 2.0 * std::log(kk) +
                           beta * std::log(a_factor(k));
  return std::exp(log_bound);
}

double beta_cap(int k) {
  const double gap = k - 9.0;
  return 5.0 * k + 700.0 / (gap * gap);
}

bool marginal(double a, double b) { return std::fabs(a - b) <= 1e-6 * std::max(std::fabs(a), std::fabs(b)); }

std::vector<double> default_sigma_grid() {
  std::vector<double> grid{0.01};
  for (int i = 1; i <= 19; ++i) grid.push_back(0.05 * i);
  grid.push_back(0.985);
  grid.push_back(0.99);
  return grid;
}

std::optional<BetaChoice> minimal_beta(int k, const std::vector<double>& sigma_grid, int beta_max) {
  for (int beta = 1; beta <= beta_max; ++beta) {
    for (double sigma : sigma_grid) {
      if (!sigma_condition(k, beta, sigma)) continue;
      double bound = objective_bound(k, beta, sigma);
      if (bound < 1.0 - kSlack) return BetaChoice{beta, sigma, sigma_threshold(k, sigma), bound};
    }
  }
  return std::nullopt;
}

std::int64_t p11(int k) {
  const std::int64_t kk = k;
  return (kk + 1) * (2 * kk + 3) * (3 * kk + 4);
}

std::int64_t p1_star(int k) {
  const std::int64_t kk = k;
  return (kk + 2) * (2 * kk + 3) * (3 * kk + 4);
}

Rational q1(int k) {
  Rational kk(k);
  Rational a = kk + 1;
  return Rational(a * a * a * a * (kk + Rational(2, 3)));
}

Rational q2(int k) {
  Rational kk(k);
  Rational b = kk + Rational(3, 2);
  Rational c = kk + Rational(4, 3);
  return Rational((kk + 2) * b * b * c * c);
}

std::int64_t dominant_product(int k, const std::array<int, 3>& columns) {
  std::array<int, 3> perm{0, 1, 2};
  std::int64_t best = -1;
  const std::int64_t kk = k;
  do {
    std::int64_t p = 1;
    for (std::int64_t s = 1; s <= 3; ++s) p *= s * kk + columns[static_cast<std::size_t>(perm[s - 1])] + 1;
    if (best < 0 || p < best) best = p;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::int64_t p1_for(int k, int i) {
  std::array<int, 3> columns{1, 2, 3};
  columns[static_cast<std::size_t>(i - 1)] = 0;
  return dominant_product(k, columns);
}

bool EBracket::holds() const {
  for (std::size_t i = 0; i < 3; ++i) {
    if (log10_e[i] < log10_lower || log10_e[i] > log10_upper_own[i] || log10_e[i] > log10_upper_p13) return false;
  }
  return true;
}

EBracket e_bracket(int k, int beta, double sigma) {
  const WeightSequence seq = WeightSequence::dirichlet(Rational(-beta));
  const ReducedSystem<Rational> rs = reduce<Rational>(seq, DegreePattern::standard(k));
  EBracket out{k, static_cast<double>(beta), sigma, {}, std::log10((1.0 - sigma) / 3.0), {}, 0.0};
  const double head = std::log10(3.0 / (1.0 - sigma));
  const double star = std::log10(static_cast<double>(p1_star(k)));
  for (int i = 1; i <= 3; ++i) {
    const auto idx = static_cast<std::size_t>(i - 1);
    out.log10_e[idx] = log10_abs(rs.e[idx]);
    out.log10_upper_own[idx] = head + beta * (star - std::log10(static_cast<double>(p1_for(k, i))));
  }
  out.log10_upper_p13 = head + beta * (star - std::log10(static_cast<double>(p1_for(k, 3))));
  return out;
}

const std::vector<Table5Row>& table5_rows() {
  static const std::vector<Table5Row> rows{
      {10, 530, 0.05, 0.994, 293}, {11, 165, 0.3, 0.612, 162},  {12, 120, 0.6, 0.387, 110},
      {13, 104, 0.8, 0.490, 89},   {14, 98, 0.9, 0.556, 83},    {15, 90, 0.93, 0.562, 84},
      {16, 87, 0.94, 0.864, 87},   {17, 88, 0.97, 0.502, 88},
  };
  return rows;
}

std::vector<Table5Report> reproduce_table5() {
  std::vector<Table5Report> out;
  for (const auto& row : table5_rows()) {
    Table5Report r{row, 0, false, false, 0, false, 0, false, false};
    r.threshold = sigma_threshold(row.k, row.sigma);
    r.sigma_holds = sigma_condition(row.k, row.beta, row.sigma);
    r.threshold_matches = std::fabs(r.threshold - row.published_beta_gt) <= 2.0;
    r.bound = objective_bound(row.k, row.beta, row.sigma);
    r.bound_below_one = r.bound < 1.0;
    r.cap = beta_cap(row.k);
    r.within_cap = row.beta <= r.cap;
    r.marginal = marginal(row.beta, r.threshold) || marginal(r.bound, 1.0);
    out.push_back(r);
  }
  return out;
}

}  // namespace wandering
