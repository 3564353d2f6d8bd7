#pragma once

// search -> complete_point -> recover -> attach_register -> verify.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "wandering/certify.hpp"
#include "wandering/search.hpp"

namespace wandering {

struct PipelineOptions {
  WeightSequence seq = WeightSequence::dirichlet(Rational(-16));
  DegreePattern pattern = DegreePattern::standard(6);
  /// (d_0, ..., d_3); skips the search when present.
  std::optional<std::array<Rational, 4>> d;
  /// Real Z_3; default_Z3 when absent.
  std::optional<Rational> z3;
  /// seq.default_regime() when absent.
  std::optional<Regime> regime;
  int s_max = 0;
  /// Requested a_4 = b_5. Shrunk to a power of ten when too large.
  Rational register_value{1};
  /// Grid and strategy; spaces, ks and phi are taken from seq and pattern.
  SearchConfig search;
};

struct PipelineResult {
  std::optional<SearchResult> search;
  /// False when the search found nothing below 1; no certificate then.
  bool found = false;
  std::array<Rational, 4> d{};
  Regime regime = Regime::rational;
  std::optional<Certificate> certificate;
  /// a_4 = b_5 actually attached (0 when no register fits).
  Rational register_value{0};
  CrossCheckReport cross;
  std::vector<std::string> notes;

  /// 0 pass, 2 otherwise.
  int exit_code() const;
};

PipelineResult run_pipeline(const PipelineOptions& options);

/// Largest power of ten at most max_modulus / 10.
Rational shrink_register(double max_modulus);

}  // namespace wandering
