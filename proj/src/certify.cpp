#include "wandering/certify.hpp"

#include <cmath>
#include <set>

#include "wandering/errors.hpp"

namespace wandering {

namespace {

template <class T>
bool certainly_nonzero(const complex_t<T>& x, double scale) {
  if constexpr (std::is_same_v<T, double>) {
    return std::abs(x) > kFloatZeroTolerance * scale;
  } else {
    (void)scale;
    return !possibly_zero(x);
  }
}

bool strictly_less(const Rational& a, const Rational& b) { return a < b; }
bool strictly_less(const Interval& a, const Interval& b) { return a.hi() < b.lo(); }
bool strictly_less(double a, double b) { return a < b; }

bool agree(const Rational& a, const Rational& b) { return a == b; }
bool agree(const Interval& a, const Interval& b) { return a.lo() <= b.hi() && b.lo() <= a.hi(); }
bool agree(double a, double b) { return std::fabs(a - b) <= 1e-9 * std::max(std::fabs(a), std::fabs(b)); }
bool agree(const std::complex<double>& a, const std::complex<double>& b) {
  return std::abs(a - b) <= 1e-9 * std::max(std::abs(a), std::abs(b));
}

double approx(const Rational& x) { return to_double(x); }
double approx(const Interval& x) { return x.mid(); }
double approx(double x) { return x; }
double approx(const std::complex<double>& x) { return std::abs(x); }

template <class T>
Json a_json(const AQuantities<T>& a) {
  return Json{{"A1", scalar_to_json(a.a1)},
              {"A2", scalar_to_json(a.a2)},
              {"A3", scalar_to_json(a.a3)},
              {"A4", scalar_to_json(a.a4)},
              {"A5", scalar_to_json(a.a5)}};
}

template <class C>
std::set<std::int64_t> touched_indices(const GeneratorPair<C>& pair, const DegreePattern& pattern, int s_max) {
  std::set<std::int64_t> out;
  for (const auto& f : {f1_coefficients(pair, pattern), f2_coefficients(pair, pattern)}) {
    for (const auto& entry : f) {
      for (int s = 0; s <= std::max(s_max, 3); ++s) out.insert(entry.first + static_cast<std::int64_t>(s) * pattern.k());
    }
  }
  return out;
}

template <class T>
bool f3_is_orthogonal(const GeneratorPair<coeff_t<T>>& pair, const WeightSequence& seq, const DegreePattern& pattern,
                      int s_max) {
  CoeffMap<coeff_t<T>> f3;
  try {
    f3 = construct_F3<T>(pair, pattern, seq);
  } catch (const DegeneratePair&) {
    return false;
  }
  const auto f1 = f1_coefficients(pair, pattern);
  const auto f2 = f2_coefficients(pair, pattern);
  for (int s = 1; s <= s_max; ++s) {
    for (const auto* f : {&f1, &f2}) {
      const auto shifted = shift(*f, static_cast<std::int64_t>(s) * pattern.k());
      if (!vanishes<T>(inner_product<T>(f3, shifted, seq), inner_product_scale<T>(f3, shifted, seq))) return false;
    }
  }
  return true;
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::unverified:
      return "unverified";
  }
  return "fail";
}

int default_s_max(const DegreePattern& pattern) {
  const std::int64_t k = pattern.k();
  return static_cast<int>((3 * k + pattern.gamma(5) + k - 1) / k) + 2;
}

Json Certificate::to_json() const {
  Json a = Json::object();
  for (std::size_t s = 0; s < a_values.size(); ++s) a[std::to_string(s + 1)] = a_values[s];
  Json j{{"version", kVersion},
         {"regime", regime_name(regime)},
         {"weights", weights},
         {"k", k},
         {"gamma", gamma},
         {"s_max", s_max},
         {"coefficients", coefficients},
         {"A", a},
         {"conditions", {{"eq310", eq310}, {"eq312", eq312}, {"eq315", eq315}, {"eq316", eq316}}},
         {"lhs", lhs},
         {"rhs", rhs},
         {"c", c},
         {"c_approx", c_approx},
         {"verdict", verdict_name(verdict)},
         {"core_only", core_only},
         {"warnings", warnings},
         {"tolerances", {{"float_zero", kFloatZeroTolerance}, {"interval_zero", kIntervalZeroTolerance}}},
         {"weights_used", weights_used}};
  j["f3_orthogonal"] = f3_orthogonal ? Json(*f3_orthogonal) : Json(nullptr);
  return j;
}

template <class T>
Certificate verify(const GeneratorPair<coeff_t<T>>& pair, const WeightSequence& seq, const DegreePattern& pattern,
                   int s_max) {
  if (s_max <= 0) s_max = default_s_max(pattern);
  Certificate cert;
  cert.regime = regime_traits<T>::id;
  cert.k = pattern.k();
  cert.gamma = pattern.gamma();
  cert.s_max = s_max;
  cert.weights = weights_to_json(seq);
  cert.coefficients = pair_to_json(pair, pattern);
  cert.core_only = !pair.registered();

  std::vector<AQuantities<T>> a;
  for (int s = 1; s <= std::max(s_max, 3); ++s) a.push_back(compute_A<T>(pair, pattern, seq, s));
  for (int s = 1; s <= s_max; ++s) cert.a_values.push_back(a_json(a[static_cast<std::size_t>(s - 1)]));

  cert.eq310 = vanishes<T>(a[1].a1, a[1].scale1) && vanishes<T>(a[2].a1, a[2].scale1) &&
               vanishes<T>(a[1].a5, a[1].scale5) && vanishes<T>(a[2].a5, a[2].scale5);
  cert.eq312 = vanishes<T>(a[0].a1, a[0].scale1);
  cert.eq315 = certainly_nonzero<T>(a[0].a5, a[0].scale5) && certainly_nonzero<T>(a[0].a2, a[0].scale2);

  const AQuantities<T>& a1 = a[0];
  T lhs = T(a1.a3 * a1.a4 - norm_sq(a1.a2));
  T rhs = T(modulus(complex_t<T>(a1.a5 * a1.a2)));
  cert.eq316 = strictly_less(lhs, rhs);
  cert.lhs = scalar_to_json(lhs);
  cert.rhs = scalar_to_json(rhs);
  cert.lhs_approx = approx(lhs);
  cert.rhs_approx = approx(rhs);
  if (possibly_zero(rhs)) {
    cert.c = nullptr;
    cert.c_approx = std::numeric_limits<double>::infinity();
  } else {
    T c = T(lhs / rhs);
    cert.c = scalar_to_json(c);
    cert.c_approx = approx(c);
  }

  if (!certainly_positive(lhs)) {
    cert.warnings.push_back("A_13 A_14 - |A_12|^2 = " + format_approx(lhs) + " is not certainly positive");
  }
  if (cert.core_only) cert.warnings.push_back("registers a_4, b_5 not attached (core-only certificate)");
  for (int s = 4; s <= s_max; ++s) {
    const auto& q = a[static_cast<std::size_t>(s - 1)];
    const std::string tag = std::to_string(s);
    if (!vanishes<T>(q.a1, q.scale1)) {
      cert.warnings.push_back("A_" + tag + ",1 = " + format_approx(q.a1) + " is nonzero (not among the conditions)");
    }
    if (!vanishes<T>(q.a5, q.scale5)) {
      cert.warnings.push_back("A_" + tag + ",5 = " + format_approx(q.a5) + " is nonzero (not among the conditions)");
    }
  }

  if (cert.eq310 && cert.eq312) cert.f3_orthogonal = f3_is_orthogonal<T>(pair, seq, pattern, s_max);

  if (!cert.all_conditions()) {
    cert.verdict = Verdict::fail;
  } else if (cert.regime == Regime::floating) {
    cert.verdict = Verdict::unverified;
    cert.warnings.push_back("float arithmetic cannot certify; rerun in rational or interval regime");
  } else if (cert.f3_orthogonal && !*cert.f3_orthogonal) {
    cert.verdict = Verdict::unverified;
    cert.warnings.push_back("conditions hold but F_3 failed the orthogonality sweep");
  } else {
    cert.verdict = Verdict::pass;
  }

  cert.weights_used = Json::object();
  for (std::int64_t t : touched_indices(pair, pattern, s_max)) {
    cert.weights_used[std::to_string(t)] =
        seq.exact() ? Json(to_string(seq.exact_at(t))) : scalar_to_json(seq.enclosure_at(t));
  }
  return cert;
}

Certificate recheck(const Json& j) {
  if (!j.is_object()) throw ParseError("certificate must be a JSON object");
  if (j.value("version", 0) != Certificate::kVersion) throw ParseError("unsupported certificate version");
  const Regime regime = parse_regime(j.at("regime").get<std::string>());
  const auto gamma = j.at("gamma").get<std::array<std::int64_t, 6>>();
  const DegreePattern pattern(j.at("k").get<int>(), gamma);
  const int s_max = j.at("s_max").get<int>();
  const Json& spec = j.at("weights");
  const WeightSequence seq = weights_from_json(spec);
  const Json& coefficients = j.at("coefficients");

  switch (regime) {
    case Regime::rational: {
      std::map<std::int64_t, Rational> embedded;
      for (const auto& [key, value] : j.at("weights_used").items()) {
        const std::int64_t t = std::stoll(key);
        Rational w = rational_from_json(value);
        if (seq.exact() && seq.exact_at(t) != w) {
          throw ParseError("embedded weight at index " + key + " disagrees with the weight spec");
        }
        embedded.emplace(t, std::move(w));
      }
      WeightSequence self_contained = WeightSequence::perturbed(WeightSequence::custom({}), std::move(embedded));
      Certificate cert = verify<Rational>(pair_from_json<Surd>(coefficients, pattern), self_contained, pattern, s_max);
      cert.weights = spec;
      return cert;
    }
    case Regime::interval:
      return verify<Interval>(pair_from_json<Interval>(coefficients, pattern), seq, pattern, s_max);
    case Regime::floating:
      return verify<double>(pair_from_json<std::complex<double>>(coefficients, pattern), seq, pattern, s_max);
  }
  throw ParseError("unknown regime");
}

template <class T>
CrossCheckReport cross_check(const SearchPoint<T>& point, const ReducedSystem<T>& rs,
                             const RecoveredParameters<T>& params, const WeightSequence& seq) {
  const DegreePattern& pattern = rs.pattern;
  GeneratorPair<coeff_t<T>> core = params.pair;
  core.a_reg = coeff_t<T>(T(0));
  core.b_reg = coeff_t<T>(T(0));
  const AQuantities<T> s1 = compute_A<T>(core, pattern, seq, 1);
  const AQuantities<T> s2 = compute_A<T>(core, pattern, seq, 2);
  const AQuantities<T> s3 = compute_A<T>(core, pattern, seq, 3);

  CrossCheckReport report;
  auto zero = [&](const char* name, const complex_t<T>& x, double scale) {
    if (!vanishes<T>(x, scale)) report.discrepancies.push_back({name, 0.0, approx(x)});
  };
  zero("A_11", s1.a1, s1.scale1);
  zero("A_21", s2.a1, s2.scale1);
  zero("A_31", s3.a1, s3.scale1);
  zero("A_25", s2.a5, s2.scale5);
  zero("A_35", s3.a5, s3.scale5);

  auto same = [&](const char* name, const auto& expected, const auto& oracle) {
    if (!agree(expected, oracle)) report.discrepancies.push_back({name, approx(expected), approx(oracle)});
  };
  same("A_15", point.a15, s1.a5);

  const CConstants<T> c = compute_C(rs, point.d);
  const ESplit<T> e = split_e<T>(c, point.z3);
  const T z1_sq = T(point.z1 * point.z1);
  const T ratio = T(norm_sq(point.a15) / z1_sq);
  const T quadratic = T(c.c1 * norm_sq(point.z3) - c.c3 * real_part(point.z3) + c.c4);
  same("A_13", T(c.c1 + z1_sq * c.c2), s1.a3);
  same("A_14", T(ratio * quadratic), s1.a4);
  same("|A_12|^2", T(ratio * e.denominator * e.denominator), T(norm_sq(s1.a2)));

  const T lhs = T(s1.a3 * s1.a4 - norm_sq(s1.a2));
  const T rhs = T(modulus(complex_t<T>(s1.a5 * s1.a2)));
  if (!possibly_zero(rhs)) same("B_0 = c", objective_b0<T>(c, point.z3, point.z1), T(lhs / rhs));
  return report;
}

#define WANDERING_INSTANTIATE_CERTIFY(T)                                                                         \
  template Certificate verify<T>(const GeneratorPair<coeff_t<T>>&, const WeightSequence&, const DegreePattern&, \
                                 int);                                                                          \
  template CrossCheckReport cross_check<T>(const SearchPoint<T>&, const ReducedSystem<T>&,                      \
                                           const RecoveredParameters<T>&, const WeightSequence&);

WANDERING_INSTANTIATE_CERTIFY(Rational)
WANDERING_INSTANTIATE_CERTIFY(Interval)
WANDERING_INSTANTIATE_CERTIFY(double)

#undef WANDERING_INSTANTIATE_CERTIFY

}  // namespace wandering
