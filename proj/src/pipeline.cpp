#include "wandering/pipeline.hpp"

#include <cmath>

#include "wandering/errors.hpp"

namespace wandering {

namespace {

template <class T>
void finish(const PipelineOptions& opt, PipelineResult& out) {
  const ReducedSystem<T> rs = reduce<T>(opt.seq, opt.pattern);
  std::array<T, 4> d;
  for (std::size_t i = 0; i < 4; ++i) d[i] = from_rational<T>(out.d[i]);
  std::optional<complex_t<T>> z3;
  if (opt.z3) z3 = complex_t<T>(from_rational<T>(*opt.z3));
  const SearchPoint<T> point = complete_point<T>(rs, d, z3);
  const RecoveredParameters<T> core = recover<T>(point, rs);

  Rational reg = opt.register_value;
  std::optional<RecoveredParameters<T>> registered;
  for (int attempt = 0; attempt < 2 && !registered; ++attempt) {
    try {
      registered = attach_register<T>(core, from_rational<T>(reg), from_rational<T>(reg), opt.seq, opt.pattern);
    } catch (const RegisterTooLarge& e) {
      if (!(e.max_modulus() > 0.0) || attempt == 1) {
        out.notes.push_back(std::string("no register fits: ") + e.what());
        break;
      }
      Rational smaller = shrink_register(e.max_modulus());
      out.notes.push_back("register " + to_string(reg) + " too large, using " + to_string(smaller));
      reg = smaller;
    }
  }
  const RecoveredParameters<T>& used = registered ? *registered : core;
  out.register_value = registered ? reg : Rational(0);
  out.cross = cross_check<T>(point, rs, core, opt.seq);
  out.certificate = verify<T>(used.pair, opt.seq, opt.pattern, opt.s_max);
}

}  // namespace

int PipelineResult::exit_code() const { return certificate && certificate->verdict == Verdict::pass ? 0 : 2; }

Rational shrink_register(double max_modulus) {
  const long e = static_cast<long>(std::floor(std::log10(max_modulus / 10.0)));
  return pow(Rational(10), e);
}

PipelineResult run_pipeline(const PipelineOptions& opt) {
  PipelineResult out;
  out.regime = opt.regime.value_or(opt.seq.default_regime());
  if (out.regime == Regime::rational && !opt.seq.exact())
    throw ModeUnsupported("rational regime needs exactly representable weights");

  if (opt.d) {
    out.d = *opt.d;
  } else {
    const auto phi = opt.pattern.phi();
    if (!phi || (*phi)[0] != 0 || (*phi)[1] != 0 || (*phi)[4] != 0 || (*phi)[5] != 0)
      throw InvalidPattern("search needs gamma = (0, 1, phi2 k + 2, phi3 k + 3, 4, 5); pass --d instead");
    SearchConfig cfg = opt.search;
    cfg.spaces = {opt.seq};
    cfg.ks = {opt.pattern.k()};
    cfg.phi2 = {(*phi)[2]};
    cfg.phi3 = {(*phi)[3]};
    out.search = minimize(cfg);
    if (!out.search->below_threshold || !out.search->d_rounded) return out;
    out.d = {Rational(1), (*out.search->d_rounded)[0], (*out.search->d_rounded)[1], (*out.search->d_rounded)[2]};
  }
  out.found = true;

  switch (out.regime) {
    case Regime::rational: finish<Rational>(opt, out); break;
    case Regime::interval: finish<Interval>(opt, out); break;
    case Regime::floating: finish<double>(opt, out); break;
  }
  return out;
}

}  // namespace wandering
