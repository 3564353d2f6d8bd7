#include <doctest.h>

#include "wandering/errors.hpp"
#include "wandering/search.hpp"

using namespace wandering;

TEST_CASE("log_grid endpoints and spacing") {
  const auto g = log_grid(1e-2, 1e6, 9);
  REQUIRE(g.size() == 9);
  CHECK(g.front() == doctest::Approx(1e-2));
  CHECK(g.back() == doctest::Approx(1e6));
  CHECK(g[1] / g[0] == doctest::Approx(10.0));
}

TEST_CASE("strategy names") {
  for (Strategy s : {Strategy::grid, Strategy::coordinate_descent, Strategy::simplex})
    CHECK(parse_strategy(strategy_name(s)) == s);
  CHECK(parse_strategy("cd") == Strategy::coordinate_descent);
  CHECK_THROWS_AS(parse_strategy("annealing"), ParseError);
}

TEST_CASE("evaluate_float reproduces the published point") {
  const auto seq = WeightSequence::dirichlet(Rational(-5));
  const auto v = evaluate_float(seq, DegreePattern::from_phi(6, 2, 34), Objective::b1, {4, 11, 100000});
  REQUIRE(v.has_value());
  CHECK(*v == doctest::Approx(0.99826).epsilon(1e-4));
  CHECK_FALSE(evaluate_float(WeightSequence::dirichlet(Rational(0)), DegreePattern::standard(6), Objective::b1,
                             {1, 1, 1})
                  .has_value());
}

TEST_CASE("search at alpha = -16 beats the published d") {
  auto cfg = SearchConfig::for_alphas({"-16"});
  cfg.threads = 2;
  const auto r = minimize(cfg);
  CHECK(r.found);
  CHECK(r.below_threshold);
  CHECK(r.best.value <= 0.02324);
  REQUIRE(r.refined_value.has_value());
  CHECK(*r.refined_value < 1);
  CHECK(r.refined_regime == Regime::rational);
  // the best value is the objective at the best point
  const auto v = evaluate_float(cfg.spaces[0], DegreePattern::standard(6), Objective::b1, r.best.d);
  CHECK(*v == doctest::Approx(r.best.value).epsilon(1e-12));
}

TEST_CASE("search results do not depend on the thread count") {
  for (Strategy s : {Strategy::grid, Strategy::coordinate_descent, Strategy::simplex}) {
    auto cfg = SearchConfig::for_alphas({"-16", "-12"});
    cfg.phi2 = {0, 1};
    cfg.phi3 = {0, 4};
    cfg.strategy = s;
    cfg.threads = 1;
    const auto a = minimize(cfg);
    cfg.threads = 4;
    const auto b = minimize(cfg);
    CHECK(a.best.value == b.best.value);
    CHECK(a.best.d == b.best.d);
    CHECK(a.best.space_index == b.best.space_index);
    CHECK(a.evaluations == b.evaluations);
  }
}

TEST_CASE("grid refinement never increases the minimum") {
  auto coarse = SearchConfig::for_alphas({"-8"});
  coarse.phi2 = {1};
  coarse.phi3 = {8};
  coarse.strategy = Strategy::grid;
  coarse.d_grid = {log_grid(1e-2, 1e6, 5), log_grid(1e-2, 1e6, 5), log_grid(1e-2, 1e6, 5)};
  auto fine = coarse;
  fine.d_grid = {log_grid(1e-2, 1e6, 9), log_grid(1e-2, 1e6, 9), log_grid(1e-2, 1e6, 9)};
  CHECK(minimize(fine).best.value <= minimize(coarse).best.value);
}

TEST_CASE("all-singular configurations raise") {
  auto cfg = SearchConfig::for_alphas({"0", "1"});
  CHECK_THROWS_AS(minimize(cfg), NoAdmissibleSystem);
}

TEST_CASE("config validation") {
  auto cfg = SearchConfig::for_alphas({"-16"});
  cfg.threshold = 0;
  CHECK_THROWS(cfg.validate());
  cfg = SearchConfig::for_alphas({"-16"});
  cfg.d_grid[0].clear();
  CHECK_THROWS(cfg.validate());
  cfg = SearchConfig::for_alphas({"-16"});
  cfg.d_grid[1] = {-1.0};
  CHECK_THROWS(cfg.validate());
}

TEST_CASE("rigorous re-evaluation") {
  const auto v = evaluate_rigorous(WeightSequence::dirichlet(parse_rational("-4.999")),
                                   DegreePattern::from_phi(6, 2, 34), Objective::b1,
                                   {Rational(4), Rational(11), Rational(100000)});
  CHECK(v.regime == Regime::interval);
  CHECK_FALSE(v.exact.has_value());
  CHECK(v.below(1.0));
  CHECK(v.enclosure.width() < 1e-8);
}
