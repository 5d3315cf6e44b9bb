#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pmsat/cnf.hpp"
#include "pmsat/subset_sum.hpp"

namespace pmsat {

enum class ReportMode { kNominal, kMeasured };

const char* to_string(ReportMode mode);

struct ExpansionRow {
  std::string stage;
  /// Auxiliary coordinates M.
  std::size_t aux = 0;
  /// Total dimension d = N + M.
  std::size_t dimension = 0;

  double ratio(std::size_t n) const { return static_cast<double>(aux) / static_cast<double>(n); }
};

struct ExpansionReport {
  std::size_t n = 0;
  ReportMode mode = ReportMode::kNominal;
  /// Clause count actually produced (measured reports only).
  std::optional<std::size_t> clauses;
  std::vector<ExpansionRow> rows;
};

inline constexpr const char* kStageDirect = "Direct Matrix";
inline constexpr const char* kStageSat = "3-SAT (Tseytin-style)";
inline constexpr const char* kStageSubsetSum = "Subset Sum (via 3-SAT encoding)";

/// Closed-form rows: direct (0, N), 3-SAT (2N, 3N), Subset Sum under the
/// sparse assumption m = N: (7N, 8N).
ExpansionReport expansion_nominal(std::size_t n);

/// Rows counted from constructed artifacts: SAT M = var_count - N, Subset Sum
/// M = item_count - N.
ExpansionReport expansion_measured(const CnfFormula& formula, const SubsetSumInstance& ss, std::size_t n);

/// stage,M,ratio,d,mode
std::string render_csv(const ExpansionReport& report);
/// Columns in the order Reduction Shape | M | M/N | d.
std::string render_markdown(const ExpansionReport& report);
std::string render_json(const ExpansionReport& report);

/// One row of the trial-complexity comparison. Values are closed-form
/// evaluations of published exponents, not measurements.
struct ComplexityRow {
  std::string shape;
  std::string mechanism;
  std::size_t dimension = 0;
  /// Time exponent per coordinate: trials ~ 2^(exponent * d).
  double time_exponent = 0;
  std::optional<double> space_exponent;

  double log2_trials() const { return time_exponent * static_cast<double>(dimension); }
  double trials() const;
  std::optional<double> space() const;
};

struct ComplexityTable {
  std::size_t n = 0;
  std::vector<ComplexityRow> rows;

  /// trials / 2^N.
  double ratio(const ComplexityRow& row) const;
};

/// Direct 2^N at d=N; PPSZ 2^(0.386d) at d=3N; HGJ 2^(0.311d), space
/// 2^(0.256d), and BBSS 2^(0.24d), space 2^(0.222d), both at d=8N.
ComplexityTable trial_ratio_table(std::size_t n);

/// 3 significant figures in %g style ("64", "123", "3.12e+04").
std::string format_sig3(double value);
/// One decimal place.
std::string format_ratio(double value);

std::string render_csv(const ComplexityTable& table);
std::string render_markdown(const ComplexityTable& table);
std::string render_json(const ComplexityTable& table);

}  // namespace pmsat
