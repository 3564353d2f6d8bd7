#pragma once

// JSON forms of weights and scalars. Rationals travel as "p/q" strings,
// surds as "p/q*sqrt(r/s)", intervals as [lo, hi] and complex floats as
// [re, im].

#include <complex>
#include <cstdint>
#include <map>

#include <json.hpp>

#include "wandering/interval.hpp"
#include "wandering/model.hpp"
#include "wandering/rational.hpp"
#include "wandering/weights.hpp"

namespace wandering {

using Json = nlohmann::json;

Json weights_to_json(const WeightSequence& seq);
/// Accepts numbers or "p/q" strings for every rational field.
WeightSequence weights_from_json(const Json& spec);

Json scalar_to_json(const Rational& x);
Json scalar_to_json(const Surd& x);
Json scalar_to_json(const Interval& x);
Json scalar_to_json(double x);
Json scalar_to_json(const std::complex<double>& x);

Rational rational_from_json(const Json& j);

template <class C>
C coeff_from_json(const Json& j);
template <>
Surd coeff_from_json<Surd>(const Json& j);
template <>
Interval coeff_from_json<Interval>(const Json& j);
template <>
std::complex<double> coeff_from_json<std::complex<double>>(const Json& j);

/// {"a": {degree: value}, "b": {degree: value}} for F_1 and F_2.
template <class C>
Json pair_to_json(const GeneratorPair<C>& pair, const DegreePattern& pattern);

/// Inverse of pair_to_json; throws ParseError on degrees outside the pattern.
template <class C>
GeneratorPair<C> pair_from_json(const Json& j, const DegreePattern& pattern);

}  // namespace wandering
