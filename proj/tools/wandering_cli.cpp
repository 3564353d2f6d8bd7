// Command-line front end. Exit codes: 0 pass, 2 fail or nothing found, 1 error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "wandering/asymptotic.hpp"
#include "wandering/certify.hpp"
#include "wandering/errors.hpp"
#include "wandering/pipeline.hpp"
#include "wandering/reduction.hpp"
#include "wandering/search.hpp"
#include "wandering/serialize.hpp"
#include "wandering/tables.hpp"

using namespace wandering;

namespace {

constexpr int kPass = 0;
constexpr int kError = 1;
constexpr int kFail = 2;

std::vector<std::string> split(const std::string& text, char sep = ',') {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

/// "6", "6,7,9" or "6..10".
std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& part : split(text)) {
    const auto dots = part.find("..");
    try {
      if (dots == std::string::npos) {
        out.push_back(std::stoi(part));
      } else {
        const int lo = std::stoi(part.substr(0, dots));
        const int hi = std::stoi(part.substr(dots + 2));
        for (int v = lo; v <= hi; ++v) out.push_back(v);
      }
    } catch (const std::logic_error&) {
      throw ParseError("not an integer list: " + text);
    }
  }
  if (out.empty()) throw ParseError("empty integer list");
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

/// Flags shared by the commands that need a space and a pattern.
struct SpaceFlags {
  std::string alpha = "-16";
  int k = 6;
  int phi2 = 0;
  int phi3 = 0;
  std::string gamma;
  std::string override_base;
  std::string weights_file;

  void add(CLI::App* app) {
    app->add_option("--alpha", alpha, "Dirichlet exponent as a rational string (\"-16\", \"-33/2\", \"-4.2\")");
    app->add_option("--k", k, "Shift power");
    app->add_option("--phi2", phi2, "gamma_2 = phi2 k + 2");
    app->add_option("--phi3", phi3, "gamma_3 = phi3 k + 3");
    app->add_option("--gamma", gamma, "Six comma-separated degrees; overrides --phi2/--phi3");
    app->add_option("--override-base", override_base,
                    "Base exponent whose 12 matrix weights are replaced by those of --alpha (\"-1\" for Bergman)");
    app->add_option("--weights", weights_file, "Weight sequence JSON; overrides --alpha");
  }

  DegreePattern pattern() const {
    if (gamma.empty()) return DegreePattern::from_phi(k, phi2, phi3);
    const auto parts = split(gamma);
    if (parts.size() != 6) throw ParseError("--gamma needs six degrees");
    std::array<std::int64_t, 6> g{};
    for (std::size_t i = 0; i < 6; ++i) g[i] = std::stoll(parts[i]);
    return DegreePattern(k, g);
  }

  WeightSequence sequence(const DegreePattern& p) const {
    if (!weights_file.empty()) return weights_from_json(Json::parse(slurp(weights_file)));
    WeightSequence seq = WeightSequence::dirichlet(parse_rational(alpha));
    if (!override_base.empty()) seq = override_block(WeightSequence::dirichlet(parse_rational(override_base)), seq, p);
    return seq;
  }
};

std::array<Rational, 4> parse_d(const std::string& text) {
  const auto parts = split(text);
  if (parts.size() == 3) return {Rational(1), parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2])};
  if (parts.size() == 4) {
    return {parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2]), parse_rational(parts[3])};
  }
  throw ParseError("--d needs d0,d1,d2,d3 (or d1,d2,d3 with d0 = 1)");
}

Json matrix_weights_json(const WeightSequence& seq, const DegreePattern& p) {
  Json out = Json::object();
  for (std::int64_t t : p.matrix_indices()) {
    const std::string key = std::to_string(t);
    if (seq.exact()) {
      out[key] = to_string(seq.exact_at(t));
    } else {
      out[key] = scalar_to_json(seq.enclosure_at(t));
    }
  }
  return out;
}

template <class T>
void print_eval(std::ostream& os, const WeightSequence& seq, const DegreePattern& p, const std::array<Rational, 4>& dr,
                const std::optional<Rational>& z3, const std::optional<Rational>& z1) {
  const ReducedSystem<T> rs = reduce<T>(seq, p);
  std::array<T, 4> d;
  for (std::size_t i = 0; i < 4; ++i) d[i] = from_rational<T>(dr[i]);
  const CConstants<T> c = compute_C(rs, d);
  os << "det_N1 = " << format_approx(rs.det_n1) << '\n';
  for (std::size_t i = 0; i < 3; ++i) os << "E" << i + 1 << " = " << format_approx(rs.e[i]) << '\n';
  for (std::size_t i = 0; i < 3; ++i) os << "G" << i + 1 << " = " << format_approx(rs.g[i]) << '\n';
  os << "C1 = " << format_approx(c.c1) << "\nC2 = " << format_approx(c.c2) << "\nC3 = " << format_approx(c.c3)
     << "\nC4 = " << format_approx(c.c4) << "\nC5 = " << format_approx(c.c5) << '\n';
  os << "B2 = " << format_approx(objective_b2(rs, d)) << "\nB1 = " << format_approx(objective_b1(rs, d)) << '\n';
  if (z3) {
    const complex_t<T> zz(from_rational<T>(*z3));
    const ESplit<T> e = split_e<T>(c, zz);
    const T best = optimal_z1(e);
    os << "e0 = " << format_approx(e.e0) << "\ne1 = " << format_approx(e.e1) << "\nZ1_opt = " << format_approx(best)
       << '\n';
    const T used = z1 ? from_rational<T>(*z1) : best;
    os << "B0 = " << format_approx(objective_b0<T>(c, zz, used)) << '\n';
  }
}

int cmd_eval(const SpaceFlags& sf, const std::string& d_text, const std::string& z3_text, const std::string& z1_text,
             const std::string& regime_text, const std::string& emit_weights) {
  const DegreePattern p = sf.pattern();
  const WeightSequence seq = sf.sequence(p);
  const Regime regime = regime_text.empty() ? seq.default_regime() : parse_regime(regime_text);
  const auto d = parse_d(d_text);
  std::optional<Rational> z3, z1;
  if (!z3_text.empty()) z3 = parse_rational(z3_text);
  if (!z1_text.empty()) z1 = parse_rational(z1_text);
  std::ostringstream os;
  os << "regime = " << regime_name(regime) << '\n';
  switch (regime) {
    case Regime::rational:
      if (!seq.exact()) throw ModeUnsupported("rational regime needs exactly representable weights");
      print_eval<Rational>(os, seq, p, d, z3, z1);
      break;
    case Regime::interval: print_eval<Interval>(os, seq, p, d, z3, z1); break;
    case Regime::floating: print_eval<double>(os, seq, p, d, z3, z1); break;
  }
  std::cout << os.str();
  if (!emit_weights.empty()) emit(matrix_weights_json(seq, p).dump(2) + "\n", emit_weights);
  return kPass;
}

int cmd_search(const std::string& alphas, const std::string& ks, const std::string& phi2, const std::string& phi3,
               const std::string& strategy, const std::string& target, double threshold, unsigned threads,
               const std::string& out) {
  SearchConfig cfg = SearchConfig::for_alphas(split(alphas));
  cfg.ks = parse_int_list(ks);
  cfg.phi2 = parse_int_list(phi2);
  cfg.phi3 = parse_int_list(phi3);
  cfg.strategy = parse_strategy(strategy);
  if (target == "b1") {
    cfg.target = Objective::b1;
  } else if (target == "b2") {
    cfg.target = Objective::b2;
  } else {
    throw ParseError("--target must be b1 or b2");
  }
  cfg.threshold = threshold;
  cfg.threads = threads;
  const SearchResult r = minimize(cfg);
  CsvTable t;
  t.header = {"alpha", "k", "phi2", "phi3", "d0", "d1", "d2", "d3", "value", "refined_value", "refined_regime",
              "below_threshold", "evaluations", "systems", "singular_systems"};
  const auto& b = r.best;
  std::vector<std::string> row{split(alphas)[b.space_index], std::to_string(b.k), std::to_string(b.phi2),
                               std::to_string(b.phi3), "1"};
  for (std::size_t i = 0; i < 3; ++i) row.push_back(r.d_rounded ? to_string((*r.d_rounded)[i]) : format_number(b.d[i]));
  row.insert(row.end(), {format_number(b.value), r.refined_value ? format_number(*r.refined_value) : "",
                         r.refined_regime ? std::string(regime_name(*r.refined_regime)) : "",
                         r.below_threshold ? "yes" : "no", std::to_string(r.evaluations), std::to_string(r.systems),
                         std::to_string(r.singular_systems)});
  t.rows.push_back(std::move(row));
  emit(t.to_csv(), out);
  return r.below_threshold ? kPass : kFail;
}

int cmd_pipeline(const SpaceFlags& sf, const std::string& d_text, const std::string& z3_text,
                 const std::string& regime_text, int s_max, const std::string& reg, unsigned threads,
                 const std::string& out) {
  PipelineOptions opt;
  opt.pattern = sf.pattern();
  opt.seq = sf.sequence(opt.pattern);
  if (!d_text.empty()) opt.d = parse_d(d_text);
  if (!z3_text.empty()) opt.z3 = parse_rational(z3_text);
  if (!regime_text.empty()) opt.regime = parse_regime(regime_text);
  opt.s_max = s_max;
  opt.register_value = parse_rational(reg);
  opt.search.threads = threads;
  const PipelineResult r = run_pipeline(opt);
  for (const auto& n : r.notes) std::cerr << "note: " << n << '\n';
  if (!r.found) {
    std::cerr << "no point with objective below 1 found";
    if (r.search) std::cerr << " (best " << format_number(r.search->best.value) << ")";
    std::cerr << '\n';
    return kFail;
  }
  if (!r.cross.consistent()) {
    for (const auto& d : r.cross.discrepancies)
      std::cerr << "cross-check: " << d.name << " reduction " << d.reduction_value << " oracle " << d.oracle_value
                << '\n';
  }
  emit(r.certificate->to_json().dump(2) + "\n", out);
  std::cerr << "verdict " << verdict_name(r.certificate->verdict) << ", c = " << format_number(r.certificate->c_approx)
            << ", register " << to_string(r.register_value) << '\n';
  return r.exit_code();
}

int cmd_certify(const std::string& check, const std::string& pair_file, const SpaceFlags& sf,
                const std::string& regime_text, int s_max, const std::string& out) {
  Certificate cert;
  if (!check.empty()) {
    const Json original = Json::parse(slurp(check));
    cert = recheck(original);
    const std::string before = original.value("verdict", "");
    if (before != verdict_name(cert.verdict)) {
      std::cerr << "verdict changed: file says " << before << ", recheck gives " << verdict_name(cert.verdict) << '\n';
    }
  } else if (!pair_file.empty()) {
    const DegreePattern p = sf.pattern();
    const WeightSequence seq = sf.sequence(p);
    const Json pj = Json::parse(slurp(pair_file));
    const Regime regime = regime_text.empty() ? seq.default_regime() : parse_regime(regime_text);
    switch (regime) {
      case Regime::rational: cert = verify<Rational>(pair_from_json<Surd>(pj, p), seq, p, s_max); break;
      case Regime::interval: cert = verify<Interval>(pair_from_json<Interval>(pj, p), seq, p, s_max); break;
      case Regime::floating:
        cert = verify<double>(pair_from_json<std::complex<double>>(pj, p), seq, p, s_max);
        break;
    }
  } else {
    throw ParseError("certify needs --check FILE or --pair FILE");
  }
  emit(cert.to_json().dump(2) + "\n", out);
  std::cerr << "verdict " << verdict_name(cert.verdict) << ", c = " << format_number(cert.c_approx) << '\n';
  return cert.verdict == Verdict::pass ? kPass : kFail;
}

int cmd_asymptotic(int k, double beta, double sigma) {
  std::cout << "k = " << k << "\na(k) = " << format_number(a_factor(k)) << "\ncap = " << format_number(beta_cap(k))
            << '\n';
  if (beta > 0 && sigma > 0) {
    const bool cond = sigma_condition(k, beta, sigma);
    const double bound = objective_bound(k, beta, sigma);
    std::cout << "threshold = " << format_number(sigma_threshold(k, sigma)) << "\nsigma_condition = "
              << (cond ? "yes" : "no") << "\nbound = " << format_number(bound)
              << "\nbeta_le_cap = " << (beta <= beta_cap(k) ? "yes" : "no") << '\n';
    return cond && bound < 1 ? kPass : kFail;
  }
  const auto m = minimal_beta(k);
  if (!m) {
    std::cout << "minimal_beta = none\n";
    return kFail;
  }
  std::cout << "minimal_beta = " << m->beta << "\nsigma = " << format_number(m->sigma)
            << "\nthreshold = " << format_number(m->threshold) << "\nbound = " << format_number(m->bound) << '\n';
  return kPass;
}

int cmd_reproduce(int table, const std::string& mode, const std::string& out) {
  bool ok = true;
  std::string csv;
  switch (table) {
    case 1:
    case 2: {
      const RowMode m = mode == "research" ? RowMode::research : RowMode::evaluate;
      if (mode != "evaluate" && mode != "research") throw ParseError("--mode must be evaluate or research");
      const auto rows = reproduce_rows(table, m);
      for (const auto& r : rows) ok = ok && r.error.empty() && r.side == "below" && r.within_factor_two;
      csv = rows_csv(rows, m).to_csv();
      break;
    }
    case 3: {
      const auto rows = reproduce_table3();
      for (const auto& r : rows) ok = ok && r.matches;
      csv = table3_csv(rows).to_csv();
      break;
    }
    case 4: {
      const auto rep = reproduce_table4();
      for (const auto& r : rep.rows) ok = ok && r.ok;
      ok = ok && rep.certificate_c < 1;
      csv = table4_csv(rep).to_csv();
      break;
    }
    case 5: {
      const auto rows = reproduce_table5();
      for (const auto& r : rows)
        ok = ok && r.sigma_holds && r.threshold_matches && r.bound_below_one && r.within_cap;
      csv = table5_csv(rows).to_csv();
      break;
    }
    default: throw ParseError("--table must be 1..5");
  }
  emit(csv, out);
  return ok ? kPass : kFail;
}

int cmd_weights(const SpaceFlags& sf, const std::string& out) {
  const DegreePattern p = sf.pattern();
  const WeightSequence seq = sf.sequence(p);
  Json j;
  j["weights"] = weights_to_json(seq);
  j["k"] = p.k();
  j["gamma"] = p.gamma();
  j["matrix_weights"] = matrix_weights_json(seq, p);
  j["lint"] = seq.lint();
  emit(j.dump(2) + "\n", out);
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified counterexamples to the wandering property in weighted Dirichlet-type spaces"};
  app.require_subcommand(1);

  SpaceFlags sf;
  std::string d_text, z3_text, z1_text, regime_text, out, emit_weights, check, pair_file, mode = "evaluate";
  std::string alphas = "-16", ks = "6", phi2 = "0", phi3 = "0", strategy = "coordinate-descent", target = "b1";
  std::string reg = "1";
  double threshold = 1.0, beta = 0.0, sigma = 0.0;
  int s_max = 0, table = 0, k_asym = 10;
  unsigned threads = 0;

  auto* eval = app.add_subcommand("eval", "Print E, G, C_1..C_5 and the objectives at a point");
  sf.add(eval);
  eval->add_option("--d", d_text, "d0,d1,d2,d3")->required();
  eval->add_option("--z3", z3_text, "Real Z_3; adds e_0, e_1, optimal Z_1 and B_0");
  eval->add_option("--z1", z1_text, "Z_1 for B_0 (default: optimal)");
  eval->add_option("--regime", regime_text, "rational, interval or float");
  eval->add_option("--emit-weights", emit_weights, "Write the 12 matrix weights to this file");

  auto* search = app.add_subcommand("search", "Minimize B_1 (or B_2) over d and the degree pattern");
  search->add_option("--alpha", alphas, "Comma-separated exponents");
  search->add_option("--k", ks, "k values: \"6\", \"6,7\" or \"6..10\"");
  search->add_option("--phi2", phi2, "phi2 values");
  search->add_option("--phi3", phi3, "phi3 values");
  search->add_option("--strategy", strategy, "grid, coordinate-descent or simplex");
  search->add_option("--target", target, "b1 or b2");
  search->add_option("--threshold", threshold, "Report success below this value");
  search->add_option("--threads", threads, "Worker threads (0 = hardware)");
  search->add_option("--out", out, "CSV output file");

  auto* pipeline = app.add_subcommand("pipeline", "search, recover, attach registers, certify");
  sf.add(pipeline);
  pipeline->add_option("--d", d_text, "Skip the search and use d0,d1,d2,d3");
  pipeline->add_option("--z3", z3_text, "Real Z_3 (default: chosen from the constants)");
  pipeline->add_option("--regime", regime_text, "rational, interval or float");
  pipeline->add_option("--smax", s_max, "Largest shift s checked (0 = default)");
  pipeline->add_option("--register", reg, "a_4 = b_5 to attach");
  pipeline->add_option("--threads", threads, "Search threads (0 = hardware)");
  pipeline->add_option("--out", out, "Certificate JSON file");

  auto* certify = app.add_subcommand("certify", "Verify a generator pair or re-check a certificate");
  sf.add(certify);
  certify->add_option("--check", check, "Certificate JSON to re-verify");
  certify->add_option("--pair", pair_file, "Generator pair JSON {\"a\": {...}, \"b\": {...}}");
  certify->add_option("--regime", regime_text, "rational, interval or float");
  certify->add_option("--smax", s_max, "Largest shift s checked (0 = default)");
  certify->add_option("--out", out, "Certificate JSON file");

  auto* asym = app.add_subcommand("asymptotic", "sigma condition and objective bound for D_{-beta}");
  asym->add_option("--k", k_asym, "Shift power");
  asym->add_option("--beta", beta, "beta = -alpha (omit for the minimal beta)");
  asym->add_option("--sigma", sigma, "sigma in (0, 1)");

  auto* reproduce = app.add_subcommand("reproduce", "Regenerate a published table as CSV");
  reproduce->add_option("--table", table, "1..5")->required();
  reproduce->add_option("--mode", mode, "Tables 1-2: evaluate or research");
  reproduce->add_option("--out", out, "CSV output file");

  auto* weights = app.add_subcommand("weights", "Dump the weight spec and the 12 matrix weights");
  sf.add(weights);
  weights->add_option("--out", out, "JSON output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kError;
  }

  try {
    if (*eval) return cmd_eval(sf, d_text, z3_text, z1_text, regime_text, emit_weights);
    if (*search) return cmd_search(alphas, ks, phi2, phi3, strategy, target, threshold, threads, out);
    if (*pipeline) return cmd_pipeline(sf, d_text, z3_text, regime_text, s_max, reg, threads, out);
    if (*certify) return cmd_certify(check, pair_file, sf, regime_text, s_max, out);
    if (*asym) return cmd_asymptotic(k_asym, beta, sigma);
    if (*reproduce) return cmd_reproduce(table, mode, out);
    if (*weights) return cmd_weights(sf, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
