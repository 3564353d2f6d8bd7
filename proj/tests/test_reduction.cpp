#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "wandering/errors.hpp"
#include "wandering/reduction.hpp"

using namespace wandering;

namespace {

const WeightSequence& w16() {
  static const WeightSequence seq = WeightSequence::dirichlet(Rational(-16));
  return seq;
}

}  // namespace

TEST_CASE("N, det N1, E and G agree with an elimination oracle") {
  for (int k : {6, 7, 10}) {
    const auto p = DegreePattern::standard(k);
    const auto rs = reduce<Rational>(w16(), p);
    const auto o = oracle::reduce(-16, k, {0, 1, 2, 3});
    for (std::size_t s = 0; s < 3; ++s)
      for (std::size_t i = 0; i < 4; ++i) CHECK(rs.n[s][i] == o.n[s][i]);
    CHECK(rs.det_n1 == o.det_n1);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(rs.e[i] == o.e[i]);
      CHECK(rs.g[i] == o.g[i]);
      CHECK(rs.h[i + 1] == o.e[i] * o.e[i]);
      CHECK(rs.dcoef[i + 1] == -o.g[i] / o.e[i]);
    }
    CHECK(rs.h[0] == 1);
    CHECK(rs.dcoef[0] == 0);
  }
}

TEST_CASE("generalized patterns match the oracle") {
  const auto p = DegreePattern::from_phi(6, 2, 34);
  const auto w5 = WeightSequence::dirichlet(Rational(-5));
  const auto rs = reduce<Rational>(w5, p);
  const auto o = oracle::reduce(-5, 6, {0, 1, 14, 207});
  CHECK(rs.det_n1 == o.det_n1);
  for (std::size_t i = 0; i < 3; ++i) CHECK(rs.e[i] == o.e[i]);
}

TEST_CASE("N0 bordering keeps the determinant") {
  const auto rs = reduce<Rational>(w16(), DegreePattern::standard(6));
  const auto n0 = build_N0(rs.n);
  CHECK(det4(n0) == rs.det_n1);
  CHECK(n0[0][0] == 1);
  CHECK(n0[0][1] == 0);
}

TEST_CASE("C constants and objectives agree with the oracle") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(1, 5000), den(1, 97);
  const auto rs = reduce<Rational>(w16(), DegreePattern::standard(6));
  const auto o = oracle::reduce(-16, 6, {0, 1, 2, 3});
  for (int trial = 0; trial < 25; ++trial) {
    std::array<Rational, 4> d;
    for (auto& x : d) x = Rational(num(rng), den(rng));
    const auto c = compute_C(rs, d);
    const auto oc = oracle::constants(o, {d[0], d[1], d[2], d[3]});
    CHECK(c.c1 == oc.c1);
    CHECK(c.c2 == oc.c2);
    CHECK(c.c3 == oc.c3);
    CHECK(c.c4 == oc.c4);
    CHECK(c.c5 == oc.c5);
    CHECK(objective_b1(rs, d) == oracle::b1(oc));
    CHECK(objective_b2(rs, d) == oracle::b2(oc));
  }
}

TEST_CASE("the three regimes agree") {
  const auto p = DegreePattern::standard(6);
  const auto rr = reduce<Rational>(w16(), p);
  const auto ri = reduce<Interval>(w16(), p);
  const auto rd = reduce<double>(w16(), p);
  const std::array<Rational, 4> d{1, 1, 4, 6};
  const Rational b1 = objective_b1(rr, d);
  const Interval bi = objective_b1(ri, std::array<Interval, 4>{1.0, 1.0, 4.0, 6.0});
  CHECK(bi.contains(b1));
  CHECK(bi.width() < 1e-9 * bi.mag());
  CHECK(objective_b1(rd, std::array<double, 4>{1, 1, 4, 6}) == doctest::Approx(to_double(b1)).epsilon(1e-8));
  for (std::size_t i = 0; i < 3; ++i) CHECK(ri.e[i].contains(rr.e[i]));
}

TEST_CASE("B0 splits as e0/Z1 + e1 Z1 with minimizer sqrt(e0/e1)") {
  const auto rs = reduce<Rational>(w16(), DegreePattern::standard(6));
  const std::array<Rational, 4> d{1, 1, 4, 6};
  const auto c = compute_C(rs, d);
  const Rational z3 = parse_rational("-2e13");
  const auto e = split_e<Rational>(c, z3);
  for (const Rational z1 : {Rational(1), Rational(6), Rational(61, 10), Rational(20)}) {
    CHECK(objective_b0<Rational>(c, z3, z1) == e.e0 / z1 + e.e1 * z1);
  }
  const double zs = to_double(optimal_z1(e));
  CHECK(zs == doctest::Approx(std::sqrt(to_double(e.e0) / to_double(e.e1))).epsilon(1e-10));
  // AM-GM: the minimum of B0 over Z1 is 2 sqrt(e0 e1) >= sqrt(B1) lower bound
  CHECK(to_double(objective_b0<Rational>(c, z3, optimal_z1(e))) ==
        doctest::Approx(2 * std::sqrt(to_double(e.e0 * e.e1))).epsilon(1e-10));
}

TEST_CASE("B1 is the infimum of 4 e0 e1 over Z3") {
  // 4 e0 e1 = 4 C2 C5 (C1|Z3|^2 - C3 x + C4) / |C1 Z3 - C3/2|^2 decreases to B1 as |Z3| grows
  const auto rs = reduce<Rational>(w16(), DegreePattern::standard(6));
  const std::array<Rational, 4> d{1, 1, 4, 6};
  const auto c = compute_C(rs, d);
  const Rational b1 = objective_b1(rs, d);
  Rational prev = -1;
  for (const char* z : {"-1e13", "-1e14", "-1e16", "-1e20"}) {
    const auto e = split_e<Rational>(c, parse_rational(z));
    const Rational v = 4 * e.e0 * e.e1;
    CHECK(v > b1);
    if (prev >= 0) CHECK(v < prev);
    prev = v;
  }
  CHECK(to_double(prev) == doctest::Approx(to_double(b1)).epsilon(1e-6));
}

TEST_CASE("classical norms are singular") {
  for (int alpha : {0, 1}) {
    const auto seq = WeightSequence::dirichlet(Rational(alpha));
    CHECK_THROWS_AS(reduce<Rational>(seq, DegreePattern::standard(6)), SingularSystem);
    CHECK_THROWS_AS(reduce<Interval>(seq, DegreePattern::standard(6)), SingularSystem);
    CHECK_THROWS_AS(reduce<double>(seq, DegreePattern::standard(6)), SingularSystem);
  }
}

TEST_CASE("degenerate inputs") {
  const auto rs = reduce<Rational>(w16(), DegreePattern::standard(6));
  CHECK_THROWS_AS(compute_C(rs, std::array<Rational, 4>{1, 0, 4, 6}), DegenerateParameters);
  CHECK_THROWS_AS(compute_C(rs, std::array<Rational, 4>{1, -1, 4, 6}), DegenerateParameters);
  // C1 Z3 = C3/2 makes the denominator vanish
  const auto c = compute_C(rs, std::array<Rational, 4>{1, 1, 4, 6});
  CHECK_THROWS_AS(split_e<Rational>(c, c.c3 / (2 * c.c1)), DegenerateZ3);
}
