#include "wandering/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "wandering/errors.hpp"
#include "wandering/reduction.hpp"

namespace wandering {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct System {
  std::size_t space_index;
  int k, phi2, phi3;
};

struct SystemOutcome {
  bool admissible = false;
  SearchCandidate best;
  std::size_t evaluations = 0;
  std::vector<TraceEntry> trace;
};

template <class T>
T objective_at(const ReducedSystem<T>& rs, Objective target, const std::array<T, 4>& d) {
  return target == Objective::b1 ? objective_b1(rs, d) : objective_b2(rs, d);
}

class LocalProblem {
 public:
  LocalProblem(const ReducedSystem<double>& rs, Objective target, std::size_t system, bool trace)
      : rs_(rs), target_(target), system_(system), keep_trace_(trace) {}

  double operator()(const std::array<double, 3>& d) {
    ++evaluations_;
    for (double v : d) {
      if (!(v > 0.0) || !std::isfinite(v)) return kInf;
    }
    try {
      double v = objective_at(rs_, target_, {1.0, d[0], d[1], d[2]});
      return std::isfinite(v) ? v : kInf;
    } catch (const Error&) {
      return kInf;
    }
  }

  void record(const std::array<double, 3>& d, double value) {
    if (keep_trace_) trace_.push_back({system_, d, value});
  }

  std::size_t evaluations() const { return evaluations_; }
  std::vector<TraceEntry>& trace() { return trace_; }

 private:
  const ReducedSystem<double>& rs_;
  Objective target_;
  std::size_t system_;
  bool keep_trace_;
  std::size_t evaluations_ = 0;
  std::vector<TraceEntry> trace_;
};

void coordinate_descent(LocalProblem& f, std::array<double, 3>& d, double& value) {
  for (double factor : {2.0, 1.1, 1.01}) {
    bool improved = true;
    for (int sweep = 0; improved && sweep < 2000; ++sweep) {
      improved = false;
      for (std::size_t i = 0; i < 3; ++i) {
        for (double m : {factor, 1.0 / factor}) {
          std::array<double, 3> trial = d;
          trial[i] *= m;
          double v = f(trial);
          if (v < value) {
            d = trial;
            value = v;
            improved = true;
            f.record(d, value);
          }
        }
      }
    }
  }
}

// Nelder-Mead on log d.
void simplex(LocalProblem& f, std::array<double, 3>& d, double& value) {
  using Point = std::array<double, 3>;
  auto eval = [&](const Point& x) { return f({std::exp(x[0]), std::exp(x[1]), std::exp(x[2])}); };
  std::array<Point, 4> x{};
  std::array<double, 4> fx{};
  for (std::size_t i = 0; i < 3; ++i) x[0][i] = std::log(d[i]);
  fx[0] = value;
  for (std::size_t j = 1; j < 4; ++j) {
    x[j] = x[0];
    x[j][j - 1] += std::log(2.0);
    fx[j] = eval(x[j]);
  }
  for (int iter = 0; iter < 4000; ++iter) {
    std::array<std::size_t, 4> order{0, 1, 2, 3};
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fx[a] < fx[b]; });
    const std::size_t best = order[0], worst = order[3], second = order[2];
    if (std::fabs(fx[worst] - fx[best]) <= 1e-14 * std::fabs(fx[best])) break;
    Point centroid{};
    for (std::size_t j : {order[0], order[1], order[2]}) {
      for (std::size_t i = 0; i < 3; ++i) centroid[i] += x[j][i] / 3.0;
    }
    auto along = [&](double t) {
      Point p{};
      for (std::size_t i = 0; i < 3; ++i) p[i] = centroid[i] + t * (x[worst][i] - centroid[i]);
      return p;
    };
    Point reflected = along(-1.0);
    double fr = eval(reflected);
    if (fr < fx[best]) {
      Point expanded = along(-2.0);
      double fe = eval(expanded);
      if (fe < fr) {
        x[worst] = expanded, fx[worst] = fe;
      } else {
        x[worst] = reflected, fx[worst] = fr;
      }
    } else if (fr < fx[second]) {
      x[worst] = reflected, fx[worst] = fr;
    } else {
      Point contracted = along(fr < fx[worst] ? -0.5 : 0.5);
      double fc = eval(contracted);
      if (fc < std::min(fr, fx[worst])) {
        x[worst] = contracted, fx[worst] = fc;
      } else {
        for (std::size_t j : {order[1], order[2], order[3]}) {
          for (std::size_t i = 0; i < 3; ++i) x[j][i] = x[best][i] + 0.5 * (x[j][i] - x[best][i]);
          fx[j] = eval(x[j]);
        }
      }
    }
    const std::size_t now = static_cast<std::size_t>(std::min_element(fx.begin(), fx.end()) - fx.begin());
    if (fx[now] < value) {
      value = fx[now];
      d = {std::exp(x[now][0]), std::exp(x[now][1]), std::exp(x[now][2])};
      f.record(d, value);
    }
  }
}

SystemOutcome run_system(const SearchConfig& config, const System& sys, std::size_t index) {
  SystemOutcome out;
  std::optional<ReducedSystem<double>> rs;
  try {
    rs = reduce<double>(config.spaces[sys.space_index], DegreePattern::from_phi(sys.k, sys.phi2, sys.phi3));
  } catch (const Error&) {
    return out;
  }
  if (!rs->e_nonzero) return out;

  LocalProblem f(*rs, config.target, index, config.trace);
  const auto& g = config.d_grid;
  // (value, flat grid index) of the best grid points, kept sorted.
  std::vector<std::pair<double, std::size_t>> top;
  const std::size_t keep = std::max<std::size_t>(config.refine_top, 1);
  std::size_t flat = 0;
  for (double d1 : g[0]) {
    for (double d2 : g[1]) {
      for (double d3 : g[2]) {
        double v = f({d1, d2, d3});
        if (v < kInf) {
          std::pair<double, std::size_t> entry{v, flat};
          auto at = std::lower_bound(top.begin(), top.end(), entry);
          if (static_cast<std::size_t>(at - top.begin()) < keep) {
            top.insert(at, entry);
            if (top.size() > keep) top.pop_back();
          }
        }
        ++flat;
      }
    }
  }
  if (top.empty()) {
    out.evaluations = f.evaluations();
    return out;
  }

  auto grid_point = [&](std::size_t idx) {
    const std::size_t n2 = g[1].size(), n3 = g[2].size();
    return std::array<double, 3>{g[0][idx / (n2 * n3)], g[1][(idx / n3) % n2], g[2][idx % n3]};
  };

  out.admissible = true;
  out.best = {sys.space_index, sys.k, sys.phi2, sys.phi3, grid_point(top[0].second), top[0].first};
  f.record(out.best.d, out.best.value);
  if (config.strategy != Strategy::grid) {
    for (const auto& [value0, idx] : top) {
      std::array<double, 3> d = grid_point(idx);
      double value = value0;
      if (config.strategy == Strategy::coordinate_descent) {
        coordinate_descent(f, d, value);
      } else {
        simplex(f, d, value);
      }
      if (value < out.best.value) {
        out.best.d = d;
        out.best.value = value;
      }
    }
  }
  out.evaluations = f.evaluations();
  out.trace = std::move(f.trace());
  return out;
}

}  // namespace

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::grid:
      return "grid";
    case Strategy::coordinate_descent:
      return "coordinate-descent";
    case Strategy::simplex:
      return "simplex";
  }
  return "grid";
}

Strategy parse_strategy(std::string_view name) {
  if (name == "grid") return Strategy::grid;
  if (name == "coordinate-descent" || name == "cd") return Strategy::coordinate_descent;
  if (name == "simplex") return Strategy::simplex;
  throw ParseError("unknown strategy \"" + std::string(name) + "\"");
}

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0) || !(hi >= lo) || n == 0) throw std::invalid_argument("log_grid needs 0 < lo <= hi and n > 0");
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  const double a = std::log10(lo), b = std::log10(hi);
  for (std::size_t i = 0; i < n; ++i) out[i] = std::pow(10.0, a + (b - a) * static_cast<double>(i) / (n - 1));
  out.front() = lo;
  out.back() = hi;
  return out;
}

SearchConfig SearchConfig::for_alphas(const std::vector<std::string>& alphas) {
  SearchConfig c;
  for (const auto& a : alphas) c.spaces.push_back(WeightSequence::dirichlet(parse_rational(a)));
  return c;
}

void SearchConfig::validate() const {
  if (spaces.empty()) throw Error("search needs at least one weight sequence");
  if (ks.empty() || phi2.empty() || phi3.empty()) throw Error("k, phi_2 and phi_3 ranges must be nonempty");
  for (const auto& axis : d_grid) {
    if (axis.empty()) throw Error("d grids must be nonempty");
    for (double v : axis) {
      if (!(v > 0.0)) throw Error("d grid values must be positive");
    }
  }
  if (!(threshold > 0.0)) throw Error("threshold must be positive");
}

std::optional<double> evaluate_float(const WeightSequence& seq, const DegreePattern& pattern, Objective target,
                                     const std::array<double, 3>& d) {
  try {
    ReducedSystem<double> rs = reduce<double>(seq, pattern);
    return objective_at(rs, target, {1.0, d[0], d[1], d[2]});
  } catch (const Error&) {
    return std::nullopt;
  }
}

bool RigorousValue::below(double threshold) const {
  if (exact) return *exact < Rational(threshold);
  return enclosure.hi() < threshold;
}

double RigorousValue::approx() const { return exact ? to_double(*exact) : enclosure.mid(); }

RigorousValue evaluate_rigorous(const WeightSequence& seq, const DegreePattern& pattern, Objective target,
                                const std::array<Rational, 3>& d) {
  if (seq.exact()) {
    ReducedSystem<Rational> rs = reduce<Rational>(seq, pattern);
    Rational v = objective_at(rs, target, {Rational(1), d[0], d[1], d[2]});
    return {Regime::rational, v, Interval::enclose(v)};
  }
  ReducedSystem<Interval> rs = reduce<Interval>(seq, pattern);
  Interval v = objective_at(rs, target, {Interval(1.0), Interval::enclose(d[0]), Interval::enclose(d[1]),
                                         Interval::enclose(d[2])});
  return {Regime::interval, std::nullopt, v};
}

SearchResult minimize(const SearchConfig& config) {
  config.validate();
  std::vector<System> systems;
  for (std::size_t s = 0; s < config.spaces.size(); ++s) {
    for (int k : config.ks) {
      for (int p2 : config.phi2) {
        for (int p3 : config.phi3) systems.push_back({s, k, p2, p3});
      }
    }
  }

  std::vector<SystemOutcome> outcomes(systems.size());
  unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, systems.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < systems.size(); i = next++) outcomes[i] = run_system(config, systems[i], i);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  SearchResult result;
  result.systems = systems.size();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const SystemOutcome& o = outcomes[i];
    result.evaluations += o.evaluations;
    if (!o.admissible) {
      ++result.singular_systems;
      continue;
    }
    if (!result.found || o.best.value < result.best.value) {
      result.found = true;
      result.best = o.best;
    }
    if (config.trace) result.trace.insert(result.trace.end(), o.trace.begin(), o.trace.end());
  }
  if (!result.found) throw NoAdmissibleSystem("every visited system is singular or degenerate");

  if (result.best.value < config.threshold) {
    const SearchCandidate& b = result.best;
    std::array<Rational, 3> rounded{round_significant(b.d[0], 6), round_significant(b.d[1], 6),
                                    round_significant(b.d[2], 6)};
    result.d_rounded = rounded;
    try {
      RigorousValue v = evaluate_rigorous(config.spaces[b.space_index], DegreePattern::from_phi(b.k, b.phi2, b.phi3),
                                          config.target, rounded);
      result.refined_regime = v.regime;
      result.refined_value = v.exact ? to_double(*v.exact) : v.enclosure.hi();
      result.below_threshold = v.below(config.threshold);
    } catch (const Error&) {
      result.below_threshold = false;
    }
  }
  return result;
}

}  // namespace wandering
