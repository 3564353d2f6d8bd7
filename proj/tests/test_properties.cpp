#include <doctest.h>

#include <random>

#include "wandering/certify.hpp"
#include "wandering/search.hpp"

using namespace wandering;

namespace {

Rational random_log_rational(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log10(lo), std::log10(hi));
  return round_significant(std::pow(10.0, u(rng)), 4);
}

}  // namespace

TEST_CASE("B1 is 0-homogeneous in d") {
  std::mt19937_64 rng(101);
  const auto seq = WeightSequence::dirichlet(Rational(-12));
  const auto rs = reduce<Rational>(seq, DegreePattern::from_phi(6, 1, 4));
  for (int trial = 0; trial < 20; ++trial) {
    std::array<Rational, 4> d;
    for (auto& x : d) x = random_log_rational(rng, 1e-2, 1e4);
    const Rational b = objective_b1(rs, d);
    for (const Rational lambda : {Rational(2), Rational(3), Rational(1, 5), Rational(7)}) {
      std::array<Rational, 4> scaled;
      for (std::size_t i = 0; i < 4; ++i) scaled[i] = Rational(lambda * d[i]);
      CHECK(objective_b1(rs, scaled) == b);
    }
  }
}

TEST_CASE("interval objectives enclose the exact value") {
  std::mt19937_64 rng(5);
  const auto seq = WeightSequence::dirichlet(Rational(-7));
  const auto p = DegreePattern::from_phi(6, 2, 12);
  const auto rr = reduce<Rational>(seq, p);
  const auto ri = reduce<Interval>(seq, p);
  for (int trial = 0; trial < 20; ++trial) {
    std::array<Rational, 4> d;
    std::array<Interval, 4> di;
    for (std::size_t i = 0; i < 4; ++i) {
      d[i] = random_log_rational(rng, 1e-2, 1e5);
      di[i] = Interval::enclose(d[i]);
    }
    CHECK(objective_b1(ri, di).contains(objective_b1(rr, d)));
    CHECK(objective_b2(ri, di).contains(objective_b2(rr, d)));
  }
}

TEST_CASE("reduction identities hold exactly at random points") {
  std::mt19937_64 rng(2024);
  const auto seq = WeightSequence::dirichlet(Rational(-16));
  const auto p = DegreePattern::standard(6);
  const auto rs = reduce<Rational>(seq, p);
  std::uniform_real_distribution<double> mag(13.0, 16.0);
  for (int trial = 0; trial < 15; ++trial) {
    std::array<Rational, 4> d{1, random_log_rational(rng, 1e-2, 1e4), random_log_rational(rng, 1e-2, 1e4),
                              random_log_rational(rng, 1e-2, 1e4)};
    const Rational z3 = -round_significant(std::pow(10.0, mag(rng)), 2);
    const auto pt = complete_point<Rational>(rs, d, z3);
    const auto rec = recover<Rational>(pt, rs);
    const auto a = compute_A<Rational>(rec.pair, p, seq, 1);
    const auto c = compute_C(rs, d);
    const auto e = split_e<Rational>(c, z3);
    CHECK(a.a3 == c.c1 + pt.z1 * pt.z1 * c.c2);
    CHECK(norm_sq(a.a2) == pt.a15 * pt.a15 / (pt.z1 * pt.z1) * e.denominator * e.denominator);
    const Rational lhs = a.a3 * a.a4 - norm_sq(a.a2);
    // |A15 A12| = 1 by construction
    CHECK(objective_b0<Rational>(c, z3, pt.z1) == lhs);
  }
}

TEST_CASE("every float pass at random points is confirmed exactly") {
  std::mt19937_64 rng(77);
  const auto seq = WeightSequence::dirichlet(Rational(-16));
  const auto p = DegreePattern::standard(6);
  const auto rr = reduce<Rational>(seq, p);
  const auto rd = reduce<double>(seq, p);
  for (int trial = 0; trial < 10; ++trial) {
    std::array<Rational, 4> d{1, random_log_rational(rng, 1e-1, 1e3), random_log_rational(rng, 1e-1, 1e3),
                              random_log_rational(rng, 1e-1, 1e3)};
    std::array<double, 4> dd;
    for (std::size_t i = 0; i < 4; ++i) dd[i] = to_double(d[i]);
    const auto fd = verify<double>(recover<double>(complete_point<double>(rd, dd), rd).pair, seq, p);
    const auto fr = verify<Rational>(recover<Rational>(complete_point<Rational>(rr, d), rr).pair, seq, p);
    if (fd.all_conditions()) CHECK(fr.verdict == Verdict::pass);
    CHECK(fd.c_approx == doctest::Approx(fr.c_approx).epsilon(1e-6));
  }
}

TEST_CASE("B0 = c for complex Z3 in floating point") {
  const auto seq = WeightSequence::dirichlet(Rational(-16));
  const auto p = DegreePattern::standard(6);
  const auto rd = reduce<double>(seq, p);
  const std::array<double, 4> d{1, 1, 4, 6};
  for (const std::complex<double> z3 : {std::complex<double>(-3e13, 1e13), std::complex<double>(-1e14, -4e13)}) {
    const auto pt = complete_point<double>(rd, d, z3);
    const auto rec = recover<double>(pt, rd);
    CHECK(cross_check<double>(pt, rd, rec, seq).consistent());
  }
}
