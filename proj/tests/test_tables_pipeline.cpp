#include <doctest.h>

#include "wandering/errors.hpp"
#include "wandering/pipeline.hpp"
#include "wandering/tables.hpp"

using namespace wandering;

TEST_CASE("format helpers") {
  CHECK(format_significant(Rational(1, 65536), 12) == "1.52587890625e-5");
  CHECK(format_significant(Rational(-2, 3), 3) == "-6.67e-1");
  CHECK(format_significant(Rational(2, 3), 3, true) == "6.66e-1");
  CHECK(format_significant(Rational(9999, 1000), 3) == "1.00e1");
  CHECK(format_significant(Rational(5), 1) == "5");
  CHECK(significant_digits("1.793446761e-2") == 10);
  CHECK(significant_digits("0.00120") == 3);
  CHECK(format_number(0.1) == "0.1");
}

TEST_CASE("csv quoting") {
  CsvTable t;
  t.header = {"a", "b"};
  t.rows = {{"x,y", "he said \"hi\""}};
  CHECK(t.to_csv() == "a,b\n\"x,y\",\"he said \"\"hi\"\"\"\n");
}

TEST_CASE("Table 3 digits") {
  const auto rows = reproduce_table3();
  REQUIRE(rows.size() == 12);
  for (const auto& r : rows) CHECK_MESSAGE(r.matches, r.label);
  CHECK(rows[6].computed_text == "5.05951042777e-6");
}

TEST_CASE("Tables 1 and 2 evaluate below one") {
  for (int table : {1, 2}) {
    for (const auto& r : reproduce_rows(table)) {
      CHECK(r.error.empty());
      CHECK(r.side == "below");
      CHECK(r.within_factor_two);
    }
  }
  const std::vector<PublishedRow> none;
  CHECK(reproduce_rows(1, RowMode::evaluate, &none).empty());
  CHECK_THROWS_AS(published_rows(3), ParseError);
}

TEST_CASE("singular rows are flagged, not thrown") {
  const std::vector<PublishedRow> rows{{1, "0", 0, 0, "1", "1", "1", 6, 0.5}};
  const auto r = reproduce_rows(1, RowMode::evaluate, &rows);
  REQUIRE(r.size() == 1);
  CHECK_FALSE(r[0].error.empty());
}

TEST_CASE("Table 4 diagnostics") {
  const auto rep = reproduce_table4();
  CHECK(rep.certificate_verdict == "pass");
  CHECK(rep.certificate_c < 1);
  for (const auto& r : rep.rows) {
    if (r.name == "b_2") {
      CHECK_FALSE(r.ok);  // printed value off by the factor a_2
      CHECK(r.computed * 2 == doctest::Approx(r.published).epsilon(0.05));
    } else {
      CHECK_MESSAGE(r.ok, r.name);
    }
  }
}

TEST_CASE("pipeline defaults give the main counterexample") {
  PipelineOptions opt;
  opt.search.threads = 1;
  const auto r = run_pipeline(opt);
  CHECK(r.found);
  REQUIRE(r.certificate.has_value());
  CHECK(r.certificate->verdict == Verdict::pass);
  CHECK(r.register_value == 1);
  CHECK(r.cross.consistent());
  CHECK(r.exit_code() == 0);
}

TEST_CASE("pipeline shrinks registers for the Bergman override") {
  for (int k : {6, 10}) {
    PipelineOptions opt;
    opt.pattern = DegreePattern::standard(k);
    opt.seq = override_block(WeightSequence::dirichlet(Rational(-1)), WeightSequence::dirichlet(Rational(-16)),
                             opt.pattern);
    const auto r = run_pipeline(opt);
    REQUIRE(r.certificate.has_value());
    CHECK(r.certificate->verdict == Verdict::pass);
    CHECK(r.register_value > 0);
    CHECK(r.register_value < 1);
  }
}

TEST_CASE("pipeline reports nothing found for alpha = -1/2") {
  PipelineOptions opt;
  opt.seq = WeightSequence::dirichlet(Rational(-1, 2));
  const auto r = run_pipeline(opt);
  CHECK_FALSE(r.found);
  CHECK_FALSE(r.certificate.has_value());
  CHECK(r.exit_code() == 2);
}

TEST_CASE("pipeline with an explicit point and regime") {
  PipelineOptions opt;
  opt.d = std::array<Rational, 4>{1, 1, 4, 6};
  opt.z3 = parse_rational("-2e13");
  opt.regime = Regime::floating;
  const auto r = run_pipeline(opt);
  CHECK(r.certificate->verdict == Verdict::unverified);
  opt.regime = Regime::rational;
  opt.seq = WeightSequence::dirichlet(parse_rational("-4.5"));
  CHECK_THROWS_AS(run_pipeline(opt), ModeUnsupported);
}

TEST_CASE("shrink_register") {
  CHECK(shrink_register(70.73) == Rational(1));
  CHECK(shrink_register(5.0) == Rational(1, 10));
  CHECK(shrink_register(0.002) == Rational(1, 10000));
}
