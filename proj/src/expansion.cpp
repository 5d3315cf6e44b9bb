#include "pmsat/expansion.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "pmsat/errors.hpp"

namespace pmsat {

namespace {

void require_dimension(std::size_t n) {
  if (n == 0) throw InvalidParameter("dimension N must be at least 1");
}

std::string format_fixed1(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1f", value);
  return buf;
}

}  // namespace

const char* to_string(ReportMode mode) { return mode == ReportMode::kNominal ? "nominal" : "measured"; }

ExpansionReport expansion_nominal(std::size_t n) {
  require_dimension(n);
  ExpansionReport report;
  report.n = n;
  report.mode = ReportMode::kNominal;
  report.rows = {
      {kStageDirect, 0, n},
      {kStageSat, 2 * n, 3 * n},
      // 2n' + 2m' with n' = 3N variables and m' = N clauses.
      {kStageSubsetSum, 7 * n, 8 * n},
  };
  return report;
}

ExpansionReport expansion_measured(const CnfFormula& formula, const SubsetSumInstance& ss, std::size_t n) {
  require_dimension(n);
  if (formula.var_count() < n || ss.item_count() < n) {
    throw DimensionMismatch("artifacts are smaller than the witness dimension");
  }
  ExpansionReport report;
  report.n = n;
  report.mode = ReportMode::kMeasured;
  report.clauses = formula.clause_count();
  report.rows = {
      {kStageDirect, 0, n},
      {kStageSat, formula.var_count() - n, formula.var_count()},
      {kStageSubsetSum, ss.item_count() - n, ss.item_count()},
  };
  return report;
}

std::string render_csv(const ExpansionReport& report) {
  std::ostringstream out;
  out << "stage,M,ratio,d,mode\n";
  for (const auto& row : report.rows) {
    out << '"' << row.stage << "\"," << row.aux << ',' << format_fixed1(row.ratio(report.n)) << ','
        << row.dimension << ',' << to_string(report.mode) << '\n';
  }
  return out.str();
}

std::string render_markdown(const ExpansionReport& report) {
  std::ostringstream out;
  out << "| Reduction Shape | Auxiliary Coordinates (M) | Ratio (M/N) | Total Dimension (d) |\n";
  out << "|---|---:|---:|---:|\n";
  for (const auto& row : report.rows) {
    out << "| " << row.stage << " | " << row.aux << " | " << format_fixed1(row.ratio(report.n)) << " | "
        << row.dimension << " |\n";
  }
  return out.str();
}

std::string render_json(const ExpansionReport& report) {
  nlohmann::ordered_json doc;
  doc["n"] = report.n;
  doc["mode"] = to_string(report.mode);
  if (report.clauses) doc["clauses"] = *report.clauses;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json rec;
    rec["stage"] = row.stage;
    rec["M"] = row.aux;
    rec["ratio"] = format_fixed1(row.ratio(report.n));
    rec["d"] = row.dimension;
    doc["rows"].push_back(std::move(rec));
  }
  return doc.dump(2) + "\n";
}

double ComplexityRow::trials() const { return std::exp2(log2_trials()); }

std::optional<double> ComplexityRow::space() const {
  if (!space_exponent) return std::nullopt;
  return std::exp2(*space_exponent * static_cast<double>(dimension));
}

double ComplexityTable::ratio(const ComplexityRow& row) const {
  return std::exp2(row.log2_trials() - static_cast<double>(n));
}

ComplexityTable trial_ratio_table(std::size_t n) {
  require_dimension(n);
  ComplexityTable table;
  table.n = n;
  table.rows = {
      {"Direct Matrix", "direct witness search", n, 1.0, std::nullopt},
      {"3-SAT (PPSZ-style)", "clause propagation", 3 * n, 0.386, std::nullopt},
      {"Subset Sum (HGJ-style)", "representation merging", 8 * n, 0.311, 0.256},
      {"Subset Sum (BBSS-style)", "hierarchical filtering", 8 * n, 0.24, 0.222},
  };
  return table;
}

std::string format_sig3(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", value);
  return buf;
}

std::string format_ratio(double value) { return format_fixed1(value); }

std::string render_csv(const ComplexityTable& table) {
  std::ostringstream out;
  out << "shape,d,log2_trials,trials,ratio,space,mechanism\n";
  for (const auto& row : table.rows) {
    auto space = row.space();
    out << '"' << row.shape << "\"," << row.dimension << ',' << format_sig3(row.log2_trials()) << ','
        << format_sig3(row.trials()) << ',' << format_ratio(table.ratio(row)) << ','
        << (space ? format_sig3(*space) : std::string("poly")) << ",\"" << row.mechanism << "\"\n";
  }
  return out.str();
}

std::string render_markdown(const ComplexityTable& table) {
  std::ostringstream out;
  out << "| Reduction Shape | Dimension (d) | Typical Time Complexity | Ratio to 2^N (N=" << table.n
      << ") | Space |\n";
  out << "|---|---:|---|---:|---|\n";
  for (const auto& row : table.rows) {
    auto space = row.space();
    char exponent[48];
    if (row.time_exponent == 1.0) {
      std::snprintf(exponent, sizeof exponent, "O(2^%zu)", row.dimension);
    } else {
      std::snprintf(exponent, sizeof exponent, "O(2^(%gd))", row.time_exponent);
    }
    out << "| " << row.shape << " | " << row.dimension << " | " << exponent << " ~ O("
        << format_sig3(row.trials()) << ") | " << format_ratio(table.ratio(row)) << " | "
        << (space ? "O(" + format_sig3(*space) + ")" : std::string("poly(d)")) << " |\n";
  }
  return out.str();
}

std::string render_json(const ComplexityTable& table) {
  nlohmann::ordered_json doc;
  doc["n"] = table.n;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json rec;
    rec["shape"] = row.shape;
    rec["d"] = row.dimension;
    rec["time_exponent"] = row.time_exponent;
    rec["log2_trials"] = format_sig3(row.log2_trials());
    rec["trials"] = format_sig3(row.trials());
    rec["ratio"] = format_ratio(table.ratio(row));
    if (row.space_exponent) {
      rec["space_exponent"] = *row.space_exponent;
      rec["space"] = format_sig3(*row.space());
    } else {
      rec["space"] = nullptr;
    }
    rec["mechanism"] = row.mechanism;
    doc["rows"].push_back(std::move(rec));
  }
  return doc.dump(2) + "\n";
}

}  // namespace pmsat
