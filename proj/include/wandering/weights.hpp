#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "wandering/interval.hpp"
#include "wandering/pattern.hpp"
#include "wandering/rational.hpp"
#include "wandering/scalar.hpp"

namespace wandering {

/// Norm weights omega_t of a weighted Hardy space: ||f||^2 = sum |f_t|^2 omega_t.
///
/// Immutable after construction and cheap to copy (perturbed sequences share
/// their base). Values are evaluated on demand; nothing is materialized.
class WeightSequence {
 public:
  /// omega_t = (t+1)^alpha. alpha = -1 is the Bergman space, 0 Hardy, 1 Dirichlet.
  struct Dirichlet {
    Rational alpha;
  };
  /// base with finitely many values replaced.
  struct Perturbed {
    std::shared_ptr<const WeightSequence> base;
    std::map<std::int64_t, Rational> overrides;
  };
  /// Explicit prefix, then omega_t = tail_scale * (t+1)^tail_alpha.
  struct Custom {
    std::vector<Rational> prefix;
    Rational tail_scale;
    Rational tail_alpha;
  };
  using Kind = std::variant<Dirichlet, Perturbed, Custom>;

  static WeightSequence dirichlet(Rational alpha);
  static WeightSequence perturbed(WeightSequence base, std::map<std::int64_t, Rational> overrides);
  static WeightSequence custom(std::vector<Rational> prefix, Rational tail_scale = Rational(1),
                               Rational tail_alpha = Rational(0));

  const Kind& kind() const noexcept { return kind_; }

  /// True when every omega_t is rational (all exponents involved are integers).
  bool exact() const;

  /// rational when exact(), interval otherwise.
  Regime default_regime() const { return exact() ? Regime::rational : Regime::interval; }

  /// Throws ModeUnsupported when omega_t is not rational.
  Rational exact_at(std::int64_t t) const;
  /// Rigorous enclosure of omega_t.
  Interval enclosure_at(std::int64_t t) const;
  double float_at(std::int64_t t) const;

  /// Admissibility warnings for Hardy-type spaces (omega_0 = 1,
  /// omega_t / omega_{t+1} -> 1); never fatal.
  std::vector<std::string> lint(std::int64_t horizon = 1000) const;

  std::string describe() const;

 private:
  explicit WeightSequence(Kind kind) : kind_(std::move(kind)) {}

  Kind kind_;
};

template <class T>
T weight(const WeightSequence& seq, std::int64_t t);
template <>
inline Rational weight<Rational>(const WeightSequence& seq, std::int64_t t) {
  return seq.exact_at(t);
}
template <>
inline Interval weight<Interval>(const WeightSequence& seq, std::int64_t t) {
  return seq.enclosure_at(t);
}
template <>
inline double weight<double>(const WeightSequence& seq, std::int64_t t) {
  return seq.float_at(t);
}

/// Copy of `base` whose twelve matrix entries omega_{s k + gamma_i}
/// (s = 1..3, i = 0..3) are taken from `donor`. The donor must be exact.
WeightSequence override_block(const WeightSequence& base, const WeightSequence& donor, const DegreePattern& pattern);

}  // namespace wandering
