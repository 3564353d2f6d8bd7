#include "wandering/weights.hpp"

#include <cmath>
#include <sstream>

#include "wandering/errors.hpp"

namespace wandering {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_index(std::int64_t t) {
  if (t < 0) throw std::out_of_range("weight index must be nonnegative, got " + std::to_string(t));
}

Rational exact_power(std::int64_t t, const Rational& alpha) {
  if (!is_integer(alpha)) {
    throw ModeUnsupported("omega_t = (t+1)^" + to_string(alpha) + " is not rational; use interval or float regime");
  }
  return pow(Rational(t + 1), alpha.get_num().get_si());
}

}  // namespace

WeightSequence WeightSequence::dirichlet(Rational alpha) { return WeightSequence(Dirichlet{std::move(alpha)}); }

WeightSequence WeightSequence::perturbed(WeightSequence base, std::map<std::int64_t, Rational> overrides) {
  for (const auto& [t, v] : overrides) {
    require_index(t);
    if (v <= 0) throw Error("override at index " + std::to_string(t) + " must be positive");
  }
  return WeightSequence(Perturbed{std::make_shared<const WeightSequence>(std::move(base)), std::move(overrides)});
}

WeightSequence WeightSequence::custom(std::vector<Rational> prefix, Rational tail_scale, Rational tail_alpha) {
  for (std::size_t t = 0; t < prefix.size(); ++t) {
    if (prefix[t] <= 0) throw Error("custom weight at index " + std::to_string(t) + " must be positive");
  }
  if (tail_scale <= 0) throw Error("custom tail scale must be positive");
  return WeightSequence(Custom{std::move(prefix), std::move(tail_scale), std::move(tail_alpha)});
}

bool WeightSequence::exact() const {
  return std::visit(overloaded{
                        [](const Dirichlet& d) { return is_integer(d.alpha); },
                        [](const Perturbed& p) { return p.base->exact(); },
                        [](const Custom& c) { return is_integer(c.tail_alpha); },
                    },
                    kind_);
}

Rational WeightSequence::exact_at(std::int64_t t) const {
  require_index(t);
  return std::visit(overloaded{
                        [t](const Dirichlet& d) { return exact_power(t, d.alpha); },
                        [t](const Perturbed& p) {
                          auto it = p.overrides.find(t);
                          return it != p.overrides.end() ? it->second : p.base->exact_at(t);
                        },
                        [t](const Custom& c) {
                          if (static_cast<std::size_t>(t) < c.prefix.size()) return c.prefix[static_cast<std::size_t>(t)];
                          return Rational(c.tail_scale * exact_power(t, c.tail_alpha));
                        },
                    },
                    kind_);
}

Interval WeightSequence::enclosure_at(std::int64_t t) const {
  require_index(t);
  return std::visit(overloaded{
                        [t](const Dirichlet& d) { return pow(Rational(t + 1), d.alpha); },
                        [t](const Perturbed& p) {
                          auto it = p.overrides.find(t);
                          return it != p.overrides.end() ? Interval::enclose(it->second) : p.base->enclosure_at(t);
                        },
                        [t](const Custom& c) {
                          if (static_cast<std::size_t>(t) < c.prefix.size()) {
                            return Interval::enclose(c.prefix[static_cast<std::size_t>(t)]);
                          }
                          return Interval::enclose(c.tail_scale) * pow(Rational(t + 1), c.tail_alpha);
                        },
                    },
                    kind_);
}

double WeightSequence::float_at(std::int64_t t) const {
  require_index(t);
  return std::visit(overloaded{
                        [t](const Dirichlet& d) { return std::pow(static_cast<double>(t + 1), to_double(d.alpha)); },
                        [t](const Perturbed& p) {
                          auto it = p.overrides.find(t);
                          return it != p.overrides.end() ? to_double(it->second) : p.base->float_at(t);
                        },
                        [t](const Custom& c) {
                          if (static_cast<std::size_t>(t) < c.prefix.size()) {
                            return to_double(c.prefix[static_cast<std::size_t>(t)]);
                          }
                          return to_double(c.tail_scale) *
                                 std::pow(static_cast<double>(t + 1), to_double(c.tail_alpha));
                        },
                    },
                    kind_);
}

std::vector<std::string> WeightSequence::lint(std::int64_t horizon) const {
  std::vector<std::string> warnings;
  Interval w0 = enclosure_at(0);
  if (!w0.contains(1.0)) warnings.push_back("omega_0 = " + to_string(w0) + " differs from 1");
  // omega_t / omega_{t+1} -> 1 cannot be decided from finitely many terms;
  // flag ratios that are far from 1 and not shrinking between horizon/10 and horizon.
  auto deviation = [this](std::int64_t t) {
    const double a = float_at(t), b = float_at(t + 1);
    return a > 0 && b > 0 ? std::fabs(std::log(a / b)) : 0.0;
  };
  const double near = deviation(std::max<std::int64_t>(1, horizon / 10));
  const double far = deviation(horizon);
  if (far > 1e-3 && far >= 0.5 * near) {
    std::ostringstream os;
    os << "omega_t / omega_{t+1} = " << std::exp(far) << " at t = " << horizon << " does not approach 1";
    warnings.push_back(os.str());
  }
  return warnings;
}

std::string WeightSequence::describe() const {
  return std::visit(overloaded{
                        [](const Dirichlet& d) { return "dirichlet(alpha=" + to_string(d.alpha) + ")"; },
                        [](const Perturbed& p) {
                          return "perturbed(" + p.base->describe() + ", " + std::to_string(p.overrides.size()) +
                                 " overrides)";
                        },
                        [](const Custom& c) {
                          return "custom(prefix=" + std::to_string(c.prefix.size()) +
                                 ", tail=" + to_string(c.tail_scale) + "*(t+1)^" + to_string(c.tail_alpha) + ")";
                        },
                    },
                    kind_);
}

WeightSequence override_block(const WeightSequence& base, const WeightSequence& donor, const DegreePattern& pattern) {
  std::map<std::int64_t, Rational> overrides;
  for (std::int64_t t : pattern.matrix_indices()) {
    if (!overrides.emplace(t, donor.exact_at(t)).second) {
      throw InvalidPattern("matrix index " + std::to_string(t) + " repeats in " + pattern.describe());
    }
  }
  return WeightSequence::perturbed(base, std::move(overrides));
}

}  // namespace wandering
