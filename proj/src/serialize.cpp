#include "wandering/serialize.hpp"

#include "wandering/errors.hpp"

namespace wandering {

namespace {

Json rational_field(const Rational& r) {
  if (is_integer(r) && r.get_num().fits_slong_p()) return r.get_num().get_si();
  return to_string(r);
}

const Json& field(const Json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + name + "\"");
  return *it;
}

std::int64_t degree_key(const std::string& key) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(key, &used);
    if (used != key.size() || v < 0) throw ParseError("bad degree \"" + key + "\"");
    return v;
  } catch (const std::logic_error&) {
    throw ParseError("bad degree \"" + key + "\"");
  }
}

}  // namespace

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_number_float()) return parse_rational(j.dump());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected a rational, got " + j.dump());
}

Json weights_to_json(const WeightSequence& seq) {
  const auto& kind = seq.kind();
  if (const auto* d = std::get_if<WeightSequence::Dirichlet>(&kind)) {
    return Json{{"kind", "dirichlet"}, {"alpha", rational_field(d->alpha)}};
  }
  if (const auto* p = std::get_if<WeightSequence::Perturbed>(&kind)) {
    Json overrides = Json::object();
    for (const auto& [t, v] : p->overrides) overrides[std::to_string(t)] = to_string(v);
    return Json{{"kind", "perturbed"}, {"base", weights_to_json(*p->base)}, {"overrides", overrides}};
  }
  const auto& c = std::get<WeightSequence::Custom>(kind);
  Json prefix = Json::array();
  for (const auto& v : c.prefix) prefix.push_back(to_string(v));
  return Json{{"kind", "custom"},
              {"prefix", prefix},
              {"tail_scale", rational_field(c.tail_scale)},
              {"tail_alpha", rational_field(c.tail_alpha)}};
}

WeightSequence weights_from_json(const Json& spec) {
  if (!spec.is_object()) throw ParseError("weight spec must be an object");
  const std::string kind = field(spec, "kind").get<std::string>();
  if (kind == "dirichlet") return WeightSequence::dirichlet(rational_from_json(field(spec, "alpha")));
  if (kind == "perturbed") {
    std::map<std::int64_t, Rational> overrides;
    for (const auto& [key, value] : field(spec, "overrides").items()) {
      overrides.emplace(degree_key(key), rational_from_json(value));
    }
    return WeightSequence::perturbed(weights_from_json(field(spec, "base")), std::move(overrides));
  }
  if (kind == "custom") {
    std::vector<Rational> prefix;
    for (const auto& v : field(spec, "prefix")) prefix.push_back(rational_from_json(v));
    Rational scale = spec.contains("tail_scale") ? rational_from_json(spec["tail_scale"]) : Rational(1);
    Rational alpha = spec.contains("tail_alpha") ? rational_from_json(spec["tail_alpha"]) : Rational(0);
    return WeightSequence::custom(std::move(prefix), scale, alpha);
  }
  throw ParseError("unknown weight kind \"" + kind + "\"");
}

Json scalar_to_json(const Rational& x) { return to_string(x); }
Json scalar_to_json(const Surd& x) { return to_string(x); }
Json scalar_to_json(const Interval& x) { return Json::array({x.lo(), x.hi()}); }
Json scalar_to_json(double x) { return x; }
Json scalar_to_json(const std::complex<double>& x) { return Json::array({x.real(), x.imag()}); }

template <>
Surd coeff_from_json<Surd>(const Json& j) {
  if (!j.is_string()) throw ParseError("expected a surd string, got " + j.dump());
  return parse_surd(j.get<std::string>());
}

template <>
Interval coeff_from_json<Interval>(const Json& j) {
  if (j.is_number()) return Interval(j.get<double>());
  if (!j.is_array() || j.size() != 2) throw ParseError("expected [lo, hi], got " + j.dump());
  return Interval(j[0].get<double>(), j[1].get<double>());
}

template <>
std::complex<double> coeff_from_json<std::complex<double>>(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) throw ParseError("expected [re, im], got " + j.dump());
  return {j[0].get<double>(), j[1].get<double>()};
}

template <class C>
Json pair_to_json(const GeneratorPair<C>& pair, const DegreePattern& pattern) {
  Json a = Json::object();
  Json b = Json::object();
  for (const auto& [t, c] : f1_coefficients(pair, pattern)) a[std::to_string(t)] = scalar_to_json(c);
  for (const auto& [t, c] : f2_coefficients(pair, pattern)) b[std::to_string(t)] = scalar_to_json(c);
  return Json{{"a", a}, {"b", b}};
}

template <class C>
GeneratorPair<C> pair_from_json(const Json& j, const DegreePattern& pattern) {
  GeneratorPair<C> pair;
  pair.a_reg = C{};
  pair.b_reg = C{};
  for (std::size_t i = 0; i < 4; ++i) pair.a_low[i] = pair.a_high[i] = pair.b_low[i] = C{};
  const std::int64_t k = pattern.k();
  for (const auto& [key, value] : field(j, "a").items()) {
    const std::int64_t t = degree_key(key);
    C c = coeff_from_json<C>(value);
    bool placed = false;
    for (std::size_t i = 0; i < 4 && !placed; ++i) {
      if (t == pattern.gamma(i)) pair.a_low[i] = c, placed = true;
      else if (t == k + pattern.gamma(i)) pair.a_high[i] = c, placed = true;
    }
    if (!placed && t == pattern.gamma(4)) pair.a_reg = c, placed = true;
    if (!placed) throw ParseError("F_1 degree " + key + " is outside " + pattern.describe());
  }
  for (const auto& [key, value] : field(j, "b").items()) {
    const std::int64_t t = degree_key(key);
    C c = coeff_from_json<C>(value);
    bool placed = false;
    for (std::size_t i = 0; i < 4 && !placed; ++i) {
      if (t == pattern.gamma(i)) pair.b_low[i] = c, placed = true;
    }
    if (!placed && t == pattern.gamma(5)) pair.b_reg = c, placed = true;
    if (!placed) throw ParseError("F_2 degree " + key + " is outside " + pattern.describe());
  }
  return pair;
}

template Json pair_to_json(const GeneratorPair<Surd>&, const DegreePattern&);
template Json pair_to_json(const GeneratorPair<Interval>&, const DegreePattern&);
template Json pair_to_json(const GeneratorPair<std::complex<double>>&, const DegreePattern&);
template GeneratorPair<Surd> pair_from_json(const Json&, const DegreePattern&);
template GeneratorPair<Interval> pair_from_json(const Json&, const DegreePattern&);
template GeneratorPair<std::complex<double>> pair_from_json(const Json&, const DegreePattern&);

}  // namespace wandering
