#pragma once

// Regeneration of the published tables with published-vs-computed deltas.

#include <optional>
#include <string>
#include <vector>

#include "wandering/asymptotic.hpp"
#include "wandering/search.hpp"

namespace wandering {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::string to_csv() const;
};

/// printf("%.10g"); locale independent.
std::string format_number(double x, int digits = 10);

/// Scientific notation with exactly `digits` significant digits, rounded to
/// nearest (or truncated toward zero): "1.1806708702e-1".
std::string format_significant(const Rational& x, int digits, bool truncate = false);

/// Number of significant digits in a decimal literal ("1.793446761e-2" -> 10).
int significant_digits(std::string_view literal);

// Tables 1 and 2

struct PublishedRow {
  int table;
  std::string alpha;
  int phi2;
  int phi3;
  std::string d1, d2, d3;  // d_0 = 1
  int k;
  double b1;
};

const std::vector<PublishedRow>& published_rows(int table);

enum class RowMode { evaluate, research };

struct RowReport {
  PublishedRow row;
  std::optional<Regime> regime;
  /// Exact value or the enclosure midpoint.
  double computed = 0.0;
  /// Exact value or the enclosure's upper end.
  double upper = 0.0;
  double ratio = 0.0;
  bool within_factor_two = false;
  /// "below", "above" or "undecided" relative to 1.
  std::string side;
  /// Set when the row's system is singular or degenerate.
  std::string error;
  /// research mode: best float value and whether it went below 1.
  std::optional<double> research_value;
  bool research_found = false;
};

std::vector<RowReport> reproduce_rows(int table, RowMode mode = RowMode::evaluate,
                                      const std::vector<PublishedRow>* rows = nullptr);
CsvTable rows_csv(const std::vector<RowReport>& reports, RowMode mode);

// Table 3

struct WeightRow {
  std::string label;  // "k+1"
  std::int64_t t;
  std::string published;  // printed omega_t 7^16
  Rational computed;
  std::string computed_text;  // same number of digits as printed
  /// "rounded" or "truncated": how the printed digits follow from the exact
  /// value; empty when neither reproduces them.
  std::string rounding;
  bool matches;
};

std::vector<WeightRow> reproduce_table3();
CsvTable table3_csv(const std::vector<WeightRow>& rows);

// Table 4

struct ParameterRow {
  std::string name;
  /// Printed approximate value or upper bound.
  double published;
  bool is_bound;
  double computed;
  double rel_delta;
  /// |delta| <= 15% for values, computed < published for bounds.
  bool ok;
  std::string note;
};

struct Table4Report {
  std::vector<ParameterRow> rows;
  /// c of the registered (a_4 = b_5 = 1) rational certificate at this point.
  double certificate_c = 0.0;
  std::string certificate_verdict;
};

Table4Report reproduce_table4();
CsvTable table4_csv(const Table4Report& report);

// Table 5

CsvTable table5_csv(const std::vector<Table5Report>& rows);

}  // namespace wandering
