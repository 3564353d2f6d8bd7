#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "wandering/errors.hpp"
#include "wandering/pattern.hpp"
#include "wandering/serialize.hpp"
#include "wandering/weights.hpp"

using namespace wandering;

TEST_CASE("dirichlet weights are exact for integer alpha") {
  const auto seq = WeightSequence::dirichlet(Rational(-16));
  CHECK(seq.exact());
  CHECK(seq.default_regime() == Regime::rational);
  CHECK(seq.exact_at(6) == oracle::dirichlet_weight(-16, 6));
  CHECK(seq.exact_at(6) * pow(Rational(7), 16) == Rational(1));
  CHECK(seq.exact_at(7) * pow(Rational(7), 16) == pow(Rational(7, 8), 16));
  CHECK(seq.exact_at(0) == Rational(1));
  CHECK(WeightSequence::dirichlet(Rational(2)).exact_at(3) == Rational(16));
}

TEST_CASE("non-integer alpha routes to enclosures") {
  const auto seq = WeightSequence::dirichlet(parse_rational("-4.2"));
  CHECK_FALSE(seq.exact());
  CHECK(seq.default_regime() == Regime::interval);
  CHECK_THROWS_AS(seq.exact_at(5), ModeUnsupported);
  const Interval w = seq.enclosure_at(14);
  CHECK(std::fabs(w.mid() - static_cast<double>(std::pow(15.0L, -21.0L / 5.0L))) <= 4e-16 * w.mag());
  CHECK(w.width() < 1e-15 * w.mag());
  CHECK(seq.float_at(14) == doctest::Approx(std::pow(15.0, -4.2)).epsilon(1e-14));
}

TEST_CASE("perturbed and custom sequences") {
  const auto base = WeightSequence::dirichlet(Rational(-1));
  const auto p = WeightSequence::perturbed(base, {{3, Rational(7)}});
  CHECK(p.exact_at(3) == Rational(7));
  CHECK(p.exact_at(4) == Rational(1, 5));
  const auto c = WeightSequence::custom({Rational(1), Rational(1, 2)}, Rational(3), Rational(-2));
  CHECK(c.exact_at(1) == Rational(1, 2));
  CHECK(c.exact_at(2) == Rational(1, 3));
}

TEST_CASE("override_block replaces exactly the twelve matrix weights") {
  const auto pattern = DegreePattern::standard(6);
  const auto bergman = WeightSequence::dirichlet(Rational(-1));
  const auto donor = WeightSequence::dirichlet(Rational(-16));
  const auto seq = override_block(bergman, donor, pattern);
  std::set<std::int64_t> idx;
  for (auto t : pattern.matrix_indices()) {
    idx.insert(t);
    CHECK(seq.exact_at(t) == donor.exact_at(t));
  }
  CHECK(idx.size() == 12);
  for (std::int64_t t = 0; t < 40; ++t) {
    if (!idx.count(t)) CHECK(seq.exact_at(t) == bergman.exact_at(t));
  }
}

TEST_CASE("lint flags non-Hardy-type sequences without failing") {
  CHECK(WeightSequence::dirichlet(Rational(-16)).lint().empty());
  const auto odd = WeightSequence::custom({Rational(2)}, Rational(1), Rational(0));
  CHECK_FALSE(odd.lint().empty());
}

TEST_CASE("weight specs round trip through JSON") {
  const auto pattern = DegreePattern::standard(10);
  for (const auto& seq : {WeightSequence::dirichlet(Rational(-16)), WeightSequence::dirichlet(parse_rational("-33/2")),
                          override_block(WeightSequence::dirichlet(Rational(-1)),
                                         WeightSequence::dirichlet(Rational(-16)), pattern),
                          WeightSequence::custom({Rational(1), Rational(1, 3)}, Rational(2), Rational(-3))}) {
    const Json j = weights_to_json(seq);
    const auto back = weights_from_json(Json::parse(j.dump()));
    CHECK(weights_to_json(back) == j);
    for (std::int64_t t = 0; t < 45; ++t) CHECK(back.float_at(t) == seq.float_at(t));
  }
  CHECK_THROWS_AS(weights_from_json(Json::parse(R"({"kind":"nope"})")), ParseError);
}

TEST_CASE("degree patterns") {
  const auto p = DegreePattern::standard(6);
  CHECK(p.gamma() == std::array<std::int64_t, 6>{0, 1, 2, 3, 4, 5});
  CHECK(p.matrix_indices()[0] == 6);
  CHECK(p.matrix_indices()[11] == 21);
  const auto q = DegreePattern::from_phi(6, 2, 34);
  CHECK(q.gamma(2) == 14);
  CHECK(q.gamma(3) == 207);
  REQUIRE(q.phi().has_value());
  CHECK((*q.phi())[3] == 34);
  CHECK_THROWS_AS(DegreePattern(6, {0, 1, 2, 3, 4, 6}), InvalidPattern);
  CHECK_THROWS_AS(DegreePattern::standard(5), InvalidPattern);
  CHECK_THROWS_AS(DegreePattern(6, {0, 1, 2, 3, 4, -1}), InvalidPattern);
  CHECK(DegreePattern(7, {0, 1, 9, 3, 4, 5}).phi().has_value());
  CHECK_FALSE(DegreePattern(7, {1, 0, 2, 3, 4, 5}).phi().has_value());
}

TEST_CASE("pattern residues are pairwise distinct for every from_phi pattern") {
  for (int k = 6; k <= 30; ++k) {
    for (int phi2 = 0; phi2 < 4; ++phi2) {
      const auto p = DegreePattern::from_phi(k, phi2, 2 * phi2 + 1);
      std::set<std::int64_t> residues;
      for (auto g : p.gamma()) residues.insert(g % k);
      CHECK(residues.size() == 6);
    }
  }
}

TEST_CASE("lint accepts polynomial decay of any order") {
  for (long alpha : {-1L, -2L, -16L, -530L}) CHECK(WeightSequence::dirichlet(Rational(alpha)).lint().empty());
  CHECK(WeightSequence::perturbed(WeightSequence::dirichlet(Rational(-2)), {{5, Rational(3)}}).lint().empty());
}
