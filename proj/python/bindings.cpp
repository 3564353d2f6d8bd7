#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "wandering/asymptotic.hpp"
#include "wandering/errors.hpp"
#include "wandering/pipeline.hpp"
#include "wandering/reduction.hpp"
#include "wandering/tables.hpp"

namespace py = pybind11;
using namespace wandering;

namespace {

WeightSequence space(const std::string& alpha, const std::optional<std::string>& override_base,
                     const DegreePattern& pattern) {
  WeightSequence seq = WeightSequence::dirichlet(parse_rational(alpha));
  if (override_base) seq = override_block(WeightSequence::dirichlet(parse_rational(*override_base)), seq, pattern);
  return seq;
}

std::array<Rational, 4> parse_d(const std::vector<std::string>& d) {
  if (d.size() != 4) throw ParseError("d needs four entries");
  return {parse_rational(d[0]), parse_rational(d[1]), parse_rational(d[2]), parse_rational(d[3])};
}

py::dict reduce_py(const std::string& alpha, int k, int phi2, int phi3) {
  const auto p = DegreePattern::from_phi(k, phi2, phi3);
  const auto seq = WeightSequence::dirichlet(parse_rational(alpha));
  py::dict out;
  auto fill = [&](const auto& rs) {
    out["det_n1"] = as_double(rs.det_n1);
    std::vector<double> e, g;
    for (std::size_t i = 0; i < 3; ++i) {
      e.push_back(as_double(rs.e[i]));
      g.push_back(as_double(rs.g[i]));
    }
    out["E"] = e;
    out["G"] = g;
  };
  if (seq.exact()) {
    const auto rs = reduce<Rational>(seq, p);
    fill(rs);
    out["det_n1_exact"] = to_string(rs.det_n1);
  } else {
    fill(reduce<Interval>(seq, p));
  }
  return out;
}

py::dict objectives_py(const std::vector<std::string>& d, const std::string& alpha, int k, int phi2, int phi3) {
  const auto p = DegreePattern::from_phi(k, phi2, phi3);
  const auto seq = WeightSequence::dirichlet(parse_rational(alpha));
  const auto dd = parse_d(d);
  py::dict out;
  if (seq.exact()) {
    const auto rs = reduce<Rational>(seq, p);
    const auto c = compute_C(rs, dd);
    out["C"] = std::vector<double>{to_double(c.c1), to_double(c.c2), to_double(c.c3), to_double(c.c4), to_double(c.c5)};
    out["B1"] = to_double(objective_b1(rs, dd));
    out["B2"] = to_double(objective_b2(rs, dd));
    out["B1_exact"] = to_string(objective_b1(rs, dd));
  } else {
    const auto rs = reduce<Interval>(seq, p);
    std::array<Interval, 4> di;
    for (std::size_t i = 0; i < 4; ++i) di[i] = from_rational<Interval>(dd[i]);
    const auto c = compute_C(rs, di);
    out["C"] = std::vector<double>{as_double(c.c1), as_double(c.c2), as_double(c.c3), as_double(c.c4), as_double(c.c5)};
    out["B1"] = as_double(objective_b1(rs, di));
    out["B2"] = as_double(objective_b2(rs, di));
  }
  return out;
}

py::dict pipeline_py(const std::string& alpha, int k, int phi2, int phi3, std::optional<std::string> override_base,
                     std::optional<std::vector<std::string>> d, std::optional<std::string> z3,
                     std::optional<std::string> regime, const std::string& register_value, int s_max) {
  PipelineOptions opt;
  opt.pattern = DegreePattern::from_phi(k, phi2, phi3);
  opt.seq = space(alpha, override_base, opt.pattern);
  if (d) opt.d = parse_d(*d);
  if (z3) opt.z3 = parse_rational(*z3);
  if (regime) opt.regime = parse_regime(*regime);
  opt.register_value = parse_rational(register_value);
  opt.s_max = s_max;
  PipelineResult r;
  {
    py::gil_scoped_release release;
    r = run_pipeline(opt);
  }
  py::dict out;
  out["found"] = r.found;
  out["exit_code"] = r.exit_code();
  out["regime"] = std::string(regime_name(r.regime));
  out["register"] = to_string(r.register_value);
  out["notes"] = r.notes;
  if (r.found) {
    std::vector<std::string> ds;
    for (const auto& x : r.d) ds.push_back(to_string(x));
    out["d"] = ds;
  }
  if (r.certificate) {
    out["verdict"] = std::string(verdict_name(r.certificate->verdict));
    out["c"] = r.certificate->c_approx;
    out["certificate"] = r.certificate->to_json().dump();
  } else {
    out["verdict"] = py::none();
    out["c"] = py::none();
    out["certificate"] = py::none();
  }
  return out;
}

std::string recheck_py(const std::string& text) {
  return std::string(verdict_name(recheck(Json::parse(text)).verdict));
}

std::string reproduce_py(int table, const std::string& mode) {
  switch (table) {
    case 1:
    case 2: {
      const RowMode m = mode == "research" ? RowMode::research : RowMode::evaluate;
      return rows_csv(reproduce_rows(table, m), m).to_csv();
    }
    case 3: return table3_csv(reproduce_table3()).to_csv();
    case 4: return table4_csv(reproduce_table4()).to_csv();
    case 5: return table5_csv(reproduce_table5()).to_csv();
    default: throw ParseError("table must be 1..5");
  }
}

py::object minimal_beta_py(int k) {
  const auto b = minimal_beta(k);
  if (!b) return py::none();
  py::dict out;
  out["beta"] = b->beta;
  out["sigma"] = b->sigma;
  out["threshold"] = b->threshold;
  out["bound"] = b->bound;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bindings for the wandering C++ library";
  py::register_exception<Error>(m, "WanderingError", PyExc_ValueError);

  m.def("reduce", &reduce_py, py::arg("alpha") = "-16", py::arg("k") = 6, py::arg("phi2") = 0, py::arg("phi3") = 0,
        "det N_1, E and G for D_alpha");
  m.def("objectives", &objectives_py, py::arg("d"), py::arg("alpha") = "-16", py::arg("k") = 6, py::arg("phi2") = 0,
        py::arg("phi3") = 0, "C_1..C_5, B_1 and B_2 at d (decimal or fraction strings)");
  m.def("pipeline", &pipeline_py, py::kw_only(), py::arg("alpha") = "-16", py::arg("k") = 6, py::arg("phi2") = 0,
        py::arg("phi3") = 0, py::arg("override_base") = py::none(), py::arg("d") = py::none(),
        py::arg("z3") = py::none(), py::arg("regime") = py::none(), py::arg("register") = "1", py::arg("s_max") = 0);
  m.def("recheck", &recheck_py, py::arg("certificate_json"));
  m.def("reproduce", &reproduce_py, py::arg("table"), py::arg("mode") = "evaluate", "Published table as CSV text");
  m.def("sigma_threshold", &sigma_threshold, py::arg("k"), py::arg("sigma"));
  m.def("a_factor", &a_factor, py::arg("k"));
  m.def("objective_bound", &objective_bound, py::arg("k"), py::arg("beta"), py::arg("sigma"));
  m.def("minimal_beta", &minimal_beta_py, py::arg("k"));
}
