#include <doctest.h>

#include "wandering/certify.hpp"
#include "wandering/errors.hpp"

using namespace wandering;

namespace {

const WeightSequence& w16() {
  static const WeightSequence seq = WeightSequence::dirichlet(Rational(-16));
  return seq;
}

RecoveredParameters<Rational> main_point(const Rational& reg) {
  const auto p = DegreePattern::standard(6);
  const auto rs = reduce<Rational>(w16(), p);
  const auto pt = complete_point<Rational>(rs, std::array<Rational, 4>{1, 1, 4, 6});
  auto rec = recover<Rational>(pt, rs);
  if (reg != 0) rec = attach_register<Rational>(rec, reg, reg, w16(), p);
  return rec;
}

}  // namespace

TEST_CASE("the main counterexample certifies in exact arithmetic") {
  const auto p = DegreePattern::standard(6);
  const auto cert = verify<Rational>(main_point(Rational(1)).pair, w16(), p);
  CHECK(cert.eq310);
  CHECK(cert.eq312);
  CHECK(cert.eq315);
  CHECK(cert.eq316);
  CHECK(cert.verdict == Verdict::pass);
  CHECK_FALSE(cert.core_only);
  REQUIRE(cert.f3_orthogonal.has_value());
  CHECK(*cert.f3_orthogonal);
  CHECK(cert.c_approx < 1);
  CHECK(cert.s_max == default_s_max(p));
  CHECK(default_s_max(p) == 6);
  const Json j = cert.to_json();
  for (const char* key : {"version", "regime", "weights", "k", "gamma", "coefficients", "A", "conditions", "c",
                          "verdict", "weights_used"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["version"] == 1);
  CHECK(j["verdict"] == "pass");
  CHECK(j["A"]["1"]["A1"] == "0");
  CHECK(j["conditions"]["eq310"] == true);
}

TEST_CASE("core-only pairs pass with a warning") {
  const auto cert = verify<Rational>(main_point(Rational(0)).pair, w16(), DegreePattern::standard(6));
  CHECK(cert.core_only);
  CHECK(cert.verdict == Verdict::pass);
  bool warned = false;
  for (const auto& w : cert.warnings) warned = warned || w.find("core-only") != std::string::npos;
  CHECK(warned);
}

TEST_CASE("recheck reproduces the certificate byte for byte") {
  const auto cert = verify<Rational>(main_point(Rational(1)).pair, w16(), DegreePattern::standard(6));
  const std::string text = cert.to_json().dump(2);
  const auto again = recheck(Json::parse(text));
  CHECK(again.to_json().dump(2) == text);
}

TEST_CASE("tampered certificates are caught") {
  const auto cert = verify<Rational>(main_point(Rational(1)).pair, w16(), DegreePattern::standard(6));
  Json j = cert.to_json();
  SUBCASE("coefficient changed") {
    j["coefficients"]["b"]["0"] = "1";
    CHECK(recheck(j).verdict == Verdict::fail);
  }
  SUBCASE("embedded weight changed") {
    j["weights_used"]["6"] = "1/2";
    CHECK_THROWS_AS(recheck(j), ParseError);
  }
  SUBCASE("unknown version") {
    j["version"] = 99;
    CHECK_THROWS_AS(recheck(j), ParseError);
  }
  SUBCASE("degree outside the pattern") {
    j["coefficients"]["a"]["99"] = "1";
    CHECK_THROWS_AS(recheck(j), ParseError);
  }
}

TEST_CASE("float never passes, interval can") {
  const auto p = DegreePattern::standard(6);
  const auto rd = reduce<double>(w16(), p);
  const auto pd = complete_point<double>(rd, std::array<double, 4>{1, 1, 4, 6});
  const auto gd = attach_register<double>(recover<double>(pd, rd), 1.0, 1.0, w16(), p);
  const auto cd = verify<double>(gd.pair, w16(), p);
  CHECK(cd.all_conditions());
  CHECK(cd.verdict == Verdict::unverified);

  const auto ri = reduce<Interval>(w16(), p);
  const auto pi = complete_point<Interval>(ri, std::array<Interval, 4>{1.0, 1.0, 4.0, 6.0});
  const auto gi = attach_register<Interval>(recover<Interval>(pi, ri), Interval(1.0), Interval(1.0), w16(), p);
  const auto ci = verify<Interval>(gi.pair, w16(), p);
  CHECK(ci.verdict == Verdict::pass);
  CHECK(recheck(ci.to_json()).verdict == Verdict::pass);
}

TEST_CASE("non-engineered pairs fail") {
  const auto p = DegreePattern::standard(6);
  GeneratorPair<Surd> g;
  for (std::size_t i = 0; i < 4; ++i) {
    g.a_low[i] = Surd(Rational(1));
    g.a_high[i] = Surd(Rational(1));
    g.b_low[i] = Surd(Rational(static_cast<long>(i) + 1));
  }
  g.a_reg = Surd(Rational(1));
  g.b_reg = Surd(Rational(1));
  const auto cert = verify<Rational>(g, w16(), p);
  CHECK(cert.verdict == Verdict::fail);
  CHECK_FALSE(cert.f3_orthogonal.has_value());
}

TEST_CASE("cross_check finds no discrepancy between reduction and oracle") {
  const auto p = DegreePattern::standard(6);
  const auto rs = reduce<Rational>(w16(), p);
  const auto pt = complete_point<Rational>(rs, std::array<Rational, 4>{2, 3, 5, 7}, Rational(-1000000000));
  const auto rec = recover<Rational>(pt, rs);
  CHECK(cross_check<Rational>(pt, rs, rec, w16()).consistent());
}
