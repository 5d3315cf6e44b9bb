#include "cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pmsat/accessibility.hpp"
#include "pmsat/cnf.hpp"
#include "pmsat/errors.hpp"
#include "pmsat/expansion.hpp"
#include "pmsat/instance.hpp"
#include "pmsat/instance_io.hpp"
#include "pmsat/sat_encoding.hpp"
#include "pmsat/solvers.hpp"
#include "pmsat/subset_sum.hpp"

namespace pmsat::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

constexpr const char* kVarMapSuffix = ".varmap.json";
constexpr const char* kDecodeSuffix = ".decode.json";
constexpr const char* kTrialLogSuffix = ".trials.jsonl";

/// Options shared by every subcommand; each subcommand registers the ones it uses.
struct RunConfig {
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::string mode = "nominal";
  std::uint64_t max_trials = 100000;
  std::string format = "md";
  unsigned jobs = 1;
  std::size_t limit = kDefaultExhaustiveLimit;
  std::string output;
  std::vector<std::string> inputs;
  std::string order = "random";
  std::string varmap;
  std::string decode;
  std::string log;
  bool timing = false;
  bool skip_verify = false;
  std::size_t queries = 0;
  std::size_t instances = 1;
};

/// Failure already explained on the error stream.
struct CommandFailed {
  int code = 1;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
  if (!out) throw Error("failed writing '" + path + "'");
}

std::optional<std::string> existing(const std::string& explicit_path, const std::string& fallback) {
  if (!explicit_path.empty()) return explicit_path;
  if (fs::exists(fallback)) return fallback;
  return std::nullopt;
}

class Emitter {
 public:
  Emitter(const RunConfig& config, std::ostream& out) : config_(config), out_(out) {}

  /// Primary output: to -o when given, else stdout.
  void primary(const std::string& content) const {
    if (config_.output.empty()) {
      out_ << content;
    } else {
      write_file(config_.output, content);
    }
  }

  bool to_file() const { return !config_.output.empty(); }

 private:
  const RunConfig& config_;
  std::ostream& out_;
};

std::string assignment_string(const Assignment& a) {
  std::string s(a.size(), '0');
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] ? '1' : '0';
  return s;
}

// ---------------------------------------------------------------------------
// generate

void cmd_generate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::size_t k = config.k == 0 ? std::max<std::size_t>(1, config.n / 2) : config.k;
  PMatrixInstance instance = generate_unique_violation(config.n, k, config.seed);
  if (!config.skip_verify) {
    SubsetMask found = verify_unique_violation(instance, {config.limit, config.jobs});
    if (found != *instance.witness()) {
      err << "error: generated witness " << instance.witness()->to_string()
          << " differs from the enumerated violation " << found.to_string() << "\n";
      throw CommandFailed{};
    }
  }
  Emitter(config, out).primary(instance_to_json(instance));
}

// ---------------------------------------------------------------------------
// reduce

void cmd_reduce_sat(const RunConfig& config, std::ostream& out) {
  PMatrixInstance instance = instance_from_json(read_file(config.inputs.at(0)));
  auto [formula, map] = encode_sat(instance);
  Emitter emit(config, out);
  emit.primary(emit_dimacs(formula));
  if (emit.to_file()) write_file(config.output + kVarMapSuffix, emit_varmap(map));
}

void cmd_reduce_subset_sum(const RunConfig& config, std::ostream& out) {
  CnfFormula formula = parse_dimacs(read_file(config.inputs.at(0)));
  auto [ss, map] = encode_subset_sum(formula);
  Emitter emit(config, out);
  emit.primary(emit_subset_sum(ss));
  if (emit.to_file()) write_file(config.output + kDecodeSuffix, emit_decode_map(map));
}

// ---------------------------------------------------------------------------
// solve

class SolveRun {
 public:
  SolveRun(const RunConfig& config, std::ostream& out, std::ostream& err)
      : config_(config), out_(out), err_(err), start_(std::chrono::steady_clock::now()) {}

  void finish(json doc, TrialLog log, bool success) {
    if (config_.timing) {
      log.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }
    std::string line = to_json_line(log);
    doc["log"] = json::parse(line);
    Emitter emit(config_, out_);
    emit.primary(doc.dump(2) + "\n");

    std::string log_path = config_.log;
    if (log_path.empty() && emit.to_file()) log_path = config_.output + kTrialLogSuffix;
    if (!log_path.empty()) write_file(log_path, line + "\n");

    if (emit.to_file() && doc.contains("witness") && !doc["witness"].is_null()) {
      out_ << "decoded witness: " << doc["witness"].dump() << "\n";
    }
    if (!success) {
      err_ << "error: " << config_.inputs.at(0) << ": solver finished without a solution ("
           << to_string(log.outcome) << ", " << log.trials << " trials)\n";
      throw CommandFailed{};
    }
  }

  /// Log a refusal (size limit) and fail.
  void refuse(const LimitExceeded& e, TrialLog log) {
    log.outcome = Outcome::kRefused;
    json doc;
    doc["solver"] = log.representation;
    doc["refused"] = e.what();
    err_ << "error: " << e.what() << "\n";
    Emitter emit(config_, out_);
    emit.primary(doc.dump(2) + "\n");
    std::string log_path = config_.log;
    if (log_path.empty() && emit.to_file()) log_path = config_.output + kTrialLogSuffix;
    if (!log_path.empty()) write_file(log_path, to_json_line(log) + "\n");
    throw CommandFailed{};
  }

  std::optional<VarMap> varmap() const {
    auto path = existing(config_.varmap, config_.inputs.at(0) + kVarMapSuffix);
    if (!path) return std::nullopt;
    return parse_varmap(read_file(*path));
  }

  std::optional<DecodeMap> decode_map() const {
    auto path = existing(config_.decode, config_.inputs.at(0) + kDecodeSuffix);
    if (!path) return std::nullopt;
    return parse_decode_map(read_file(*path));
  }

  /// Varmap for a Subset Sum input: only when given explicitly.
  std::optional<VarMap> explicit_varmap() const {
    if (config_.varmap.empty()) return std::nullopt;
    return parse_varmap(read_file(config_.varmap));
  }

 private:
  const RunConfig& config_;
  std::ostream& out_;
  std::ostream& err_;
  std::chrono::steady_clock::time_point start_;
};

json witness_json(const SubsetMask& mask) { return mask.indices(); }

void cmd_solve_direct(const RunConfig& config, std::ostream& out, std::ostream& err) {
  SolveRun run(config, out, err);
  PMatrixInstance instance = instance_from_json(read_file(config.inputs.at(0))).redacted();
  SearchOrder order = config.order == "lex" ? SearchOrder::kLexicographic : SearchOrder::kRandomPermutation;
  TrialLog log;
  log.representation = "Direct Matrix";
  log.n = instance.n();
  log.d = instance.n();
  log.seed = config.seed;
  json doc;
  doc["solver"] = "direct";
  doc["order"] = config.order;
  try {
    DirectSearchResult result = direct_search(instance, order, config.seed, config.limit);
    log.trials = result.trials;
    log.outcome = Outcome::kFound;
    doc["witness"] = witness_json(result.witness);
    run.finish(std::move(doc), log, true);
  } catch (const LimitExceeded& e) {
    run.refuse(e, log);
  }
}

void cmd_solve_ppsz(const RunConfig& config, std::ostream& out, std::ostream& err) {
  SolveRun run(config, out, err);
  CnfFormula formula = parse_dimacs(read_file(config.inputs.at(0)));
  auto map = run.varmap();
  PpszResult result = ppsz_solve(formula, config.seed, config.max_trials);
  if (map) result.log.n = map->n();
  json doc;
  doc["solver"] = "ppsz";
  if (result.assignment) {
    doc["assignment"] = assignment_string(*result.assignment);
    if (map) doc["witness"] = witness_json(decode_sat_solution(*result.assignment, *map));
  } else {
    doc["assignment"] = nullptr;
  }
  run.finish(std::move(doc), result.log, result.assignment.has_value());
}

void cmd_solve_enumerate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  SolveRun run(config, out, err);
  CnfFormula formula = parse_dimacs(read_file(config.inputs.at(0)));
  auto map = run.varmap();
  TrialLog log;
  log.representation = "3-SAT (enumeration)";
  log.d = formula.var_count();
  log.seed = config.seed;
  if (map) log.n = map->n();
  try {
    std::vector<Assignment> models = sat_enumerate(formula);
    log.trials = std::uint64_t{1} << formula.var_count();
    log.outcome = models.empty() ? Outcome::kExhausted : Outcome::kFound;
    json doc;
    doc["solver"] = "enumerate";
    doc["count"] = models.size();
    doc["assignments"] = json::array();
    for (const auto& m : models) doc["assignments"].push_back(assignment_string(m));
    if (map) {
      doc["witnesses"] = json::array();
      for (const auto& m : models) doc["witnesses"].push_back(witness_json(decode_sat_solution(m, *map)));
      if (models.size() == 1) doc["witness"] = doc["witnesses"][0];
    }
    run.finish(std::move(doc), log, !models.empty());
  } catch (const LimitExceeded& e) {
    run.refuse(e, log);
  }
}

void describe_subset_solution(json& doc, const ItemSelection& chosen, const std::optional<DecodeMap>& decode,
                              const std::optional<VarMap>& map) {
  doc["items"] = chosen;
  if (!decode) return;
  Assignment assignment = decode_subset_sum_solution(chosen, *decode);
  doc["assignment"] = assignment_string(assignment);
  if (map) doc["witness"] = witness_json(decode_sat_solution(assignment, *map));
}

void cmd_solve_mitm(const RunConfig& config, std::ostream& out, std::ostream& err) {
  SolveRun run(config, out, err);
  SubsetSumInstance ss = parse_subset_sum(read_file(config.inputs.at(0)));
  TrialLog log;
  log.representation = "Subset Sum (meet-in-the-middle)";
  log.d = ss.item_count();
  log.seed = config.seed;
  try {
    MitmResult result = mitm_subset_sum(ss);
    result.log.seed = config.seed;
    auto map = run.explicit_varmap();
    if (map) result.log.n = map->n();
    json doc;
    doc["solver"] = "mitm";
    if (result.solution) {
      describe_subset_solution(doc, *result.solution, run.decode_map(), map);
    } else {
      doc["items"] = nullptr;
    }
    run.finish(std::move(doc), result.log, result.solution.has_value());
  } catch (const LimitExceeded& e) {
    run.refuse(e, log);
  }
}

void cmd_solve_brute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  SolveRun run(config, out, err);
  SubsetSumInstance ss = parse_subset_sum(read_file(config.inputs.at(0)));
  TrialLog log;
  log.representation = "Subset Sum (brute force)";
  log.d = ss.item_count();
  log.seed = config.seed;
  try {
    std::vector<ItemSelection> solutions = brute_force_subset_sum(ss);
    log.trials = std::uint64_t{1} << ss.item_count();
    log.outcome = solutions.empty() ? Outcome::kExhausted : Outcome::kFound;
    auto decode = run.decode_map();
    auto map = run.explicit_varmap();
    if (map) log.n = map->n();
    json doc;
    doc["solver"] = "brute";
    doc["count"] = solutions.size();
    doc["solutions"] = json::array();
    for (const auto& s : solutions) {
      json rec;
      describe_subset_solution(rec, s, decode, map);
      doc["solutions"].push_back(std::move(rec));
    }
    if (solutions.size() == 1 && doc["solutions"][0].contains("witness")) {
      doc["witness"] = doc["solutions"][0]["witness"];
    }
    run.finish(std::move(doc), log, !solutions.empty());
  } catch (const LimitExceeded& e) {
    run.refuse(e, log);
  }
}

// ---------------------------------------------------------------------------
// report

ExpansionReport measured_report(const RunConfig& config) {
  std::size_t k = config.k == 0 ? std::max<std::size_t>(1, config.n / 2) : config.k;
  PMatrixInstance instance = generate_unique_violation(config.n, k, config.seed);
  auto [formula, map] = encode_sat(instance);
  auto [ss, decode] = encode_subset_sum(formula);
  return expansion_measured(formula, ss, config.n);
}

void cmd_report_expansion(const RunConfig& config, std::ostream& out) {
  ExpansionReport report = config.mode == "measured" ? measured_report(config) : expansion_nominal(config.n);
  std::string text = config.format == "csv"    ? render_csv(report)
                     : config.format == "json" ? render_json(report)
                                               : render_markdown(report);
  Emitter(config, out).primary(text);
}

void cmd_report_ratios(const RunConfig& config, std::ostream& out) {
  ComplexityTable table = trial_ratio_table(config.n);
  std::string text = config.format == "csv"    ? render_csv(table)
                     : config.format == "json" ? render_json(table)
                                               : render_markdown(table);
  Emitter(config, out).primary(text);
}

void cmd_report_accessibility(const RunConfig& config, std::ostream& out) {
  WitnessPrior prior = config.k == 0 ? WitnessPrior::all_subsets() : WitnessPrior::size_k(config.k);
  std::size_t witness_size = config.k == 0 ? std::max<std::size_t>(1, config.n / 2) : config.k;
  AccessibilityProfile profile =
      config.queries == 0
          ? analytic_profile(config.n, prior)
          : empirical_query_experiment(config.n, witness_size, prior, config.instances, config.queries, config.seed);
  std::string text = config.format == "csv"    ? render_accessibility_csv(profile)
                     : config.format == "json" ? to_json(profile)
                                               : render_accessibility_markdown(profile);
  Emitter(config, out).primary(text);
}

// ---------------------------------------------------------------------------
// verify

class Checklist {
 public:
  explicit Checklist(std::ostream& out) : out_(out) {}

  void record(const std::string& name, bool ok, const std::string& detail = {}) {
    out_ << (ok ? "[PASS] " : "[FAIL] ") << name;
    if (!detail.empty()) out_ << ": " << detail;
    out_ << "\n";
    if (!ok) failed_.push_back(name);
  }

  void skip(const std::string& name, const std::string& why) { out_ << "[SKIP] " << name << ": " << why << "\n"; }

  /// Runs check; exceptions count as failures.
  void run(const std::string& name, const std::function<std::pair<bool, std::string>()>& check) {
    try {
      auto [ok, detail] = check();
      record(name, ok, detail);
    } catch (const std::exception& e) {
      record(name, false, e.what());
    }
  }

  const std::vector<std::string>& failed() const { return failed_; }

 private:
  std::ostream& out_;
  std::vector<std::string> failed_;
};

void cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ostringstream report;
  Checklist checks(report);

  const std::string& instance_path = config.inputs.at(0);
  PMatrixInstance instance = instance_from_json(read_file(instance_path));
  checks.record("instance parses", true, std::to_string(instance.n()) + "x" + std::to_string(instance.n()));

  checks.run("unique violating minor at stored witness", [&]() -> std::pair<bool, std::string> {
    SubsetMask found = verify_unique_violation(instance, {config.limit, config.jobs});
    if (!instance.witness()) return {true, "unique violation " + found.to_string() + " (witness redacted)"};
    bool ok = found == *instance.witness();
    return {ok, "enumerated " + found.to_string() + ", stored " + instance.witness()->to_string()};
  });

  auto finish = [&] {
    out << report.str();
    if (checks.failed().empty()) return;
    err << "verify: " << checks.failed().size() << " check(s) failed:";
    for (const auto& name : checks.failed()) err << " [" << name << "]";
    err << "\n";
    throw CommandFailed{};
  };

  if (config.inputs.size() < 2) return finish();

  const std::string& cnf_path = config.inputs[1];
  CnfFormula formula = parse_dimacs(read_file(cnf_path));
  std::optional<Assignment> model;

  checks.run("CNF matches the witness-aware encoding", [&]() -> std::pair<bool, std::string> {
    auto [expected, map] = encode_sat(instance);
    return {expected == formula, "p cnf " + std::to_string(formula.var_count()) + " " +
                                     std::to_string(formula.clause_count())};
  });
  if (auto path = existing(config.varmap, cnf_path + kVarMapSuffix)) {
    checks.run("var map has 3N variables and 2N auxiliaries", [&]() -> std::pair<bool, std::string> {
      VarMap map = parse_varmap(read_file(*path));
      bool ok = map.n() == instance.n() && map.var_count() == formula.var_count() && map.aux_count() == 2 * map.n();
      return {ok, "N=" + std::to_string(map.n()) + ", aux=" + std::to_string(map.aux_count())};
    });
  } else {
    checks.skip("var map has 3N variables and 2N auxiliaries", "no var map sidecar");
  }

  VarMap map(instance.n());
  if (formula.var_count() <= kSatEnumerateLimit) {
    checks.run("SAT uniqueness by enumeration", [&]() -> std::pair<bool, std::string> {
      std::vector<Assignment> models = sat_enumerate(formula);
      if (models.size() == 1) model = models.front();
      return {models.size() == 1, std::to_string(models.size()) + " satisfying assignment(s)"};
    });
  } else {
    checks.skip("SAT uniqueness by enumeration", "variable count above enumeration limit");
    PropagationResult fixpoint = unit_propagate(formula, PartialAssignment(formula.var_count()));
    if (fixpoint.status == PropagationStatus::kStable && fixpoint.partial.complete() &&
        formula.satisfied_by(fixpoint.partial.to_assignment())) {
      model = fixpoint.partial.to_assignment();
    }
  }
  checks.run("SAT decode round trip", [&]() -> std::pair<bool, std::string> {
    if (!model) return {false, "no model to decode"};
    SubsetMask decoded = decode_sat_solution(*model, map);
    bool ok = instance.witness() ? decoded == *instance.witness() : oracle_query_sign(instance, decoded);
    return {ok, "decoded " + decoded.to_string()};
  });

  if (config.inputs.size() < 3) return finish();

  const std::string& ss_path = config.inputs[2];
  SubsetSumInstance ss = parse_subset_sum(read_file(ss_path));
  checks.run("Subset Sum item count is 2n+2m", [&]() -> std::pair<bool, std::string> {
    std::size_t expected = 2 * formula.var_count() + 2 * formula.clause_count();
    return {ss.item_count() == expected,
            std::to_string(ss.item_count()) + " items, expected " + std::to_string(expected)};
  });
  checks.run("carry-freeness", [&]() -> std::pair<bool, std::string> {
    CarryAudit audit = audit_carry_freeness(ss);
    return {audit.carry_free, "max column sum " + std::to_string(audit.max_column_sum)};
  });
  checks.run("Subset Sum matches the digit encoding", [&]() -> std::pair<bool, std::string> {
    auto [expected, decode] = encode_subset_sum(formula);
    return {expected == ss, ""};
  });
  std::optional<DecodeMap> decode;
  if (auto path = existing(config.decode, ss_path + kDecodeSuffix)) {
    decode = parse_decode_map(read_file(*path));
  } else {
    decode = DecodeMap::from_instance(ss);
  }
  std::optional<ItemSelection> forward;
  checks.run("forward sum of the SAT solution hits the target", [&]() -> std::pair<bool, std::string> {
    if (!model) return {false, "no SAT model available"};
    forward = encode_assignment(*model, formula, *decode);
    return {sums_to_target(ss, *forward), std::to_string(forward->size()) + " items chosen"};
  });
  checks.run("Subset Sum decode round trip", [&]() -> std::pair<bool, std::string> {
    if (!forward || !model) return {false, "no forward solution"};
    return {decode_subset_sum_solution(*forward, *decode) == *model, ""};
  });

  finish();
}

// ---------------------------------------------------------------------------

void add_output(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("-o,--output", config.output, "Output file (default: standard output)");
}

void add_format(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "md"}))
      ->capture_default_str();
}

CLI::Option* add_n(CLI::App* cmd, RunConfig& config) {
  return cmd->add_option("--n", config.n, "Witness dimension N")->required()->check(CLI::Range(1, 62));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"P-matrix violation -> 3-SAT -> Subset Sum reduction pipeline", "pmsat"};
  app.require_subcommand(1);
  std::function<void()> action;

  auto* generate = app.add_subcommand("generate", "Generate a verified unique-violation instance");
  add_n(generate, config);
  generate->add_option("--k", config.k, "Witness size (default max(1, N/2))")->check(CLI::Range(1, 62));
  generate->add_option("--seed", config.seed, "Random seed")->capture_default_str();
  generate->add_option("--jobs", config.jobs, "Verification threads")->check(CLI::Range(1, 256));
  generate->add_option("--limit", config.limit, "Exhaustive verification limit")->capture_default_str();
  generate->add_flag("--skip-verify", config.skip_verify, "Do not enumerate minors (large N)");
  add_output(generate, config);
  generate->callback([&] {
    if (config.k > config.n) throw CLI::ValidationError("--k", "must not exceed --n");
    action = [&] { cmd_generate(config, out, err); };
  });

  auto* reduce = app.add_subcommand("reduce", "Run one reduction stage");
  reduce->require_subcommand(1);
  auto* reduce_sat = reduce->add_subcommand("sat", "Instance JSON -> DIMACS CNF (+ var map sidecar)");
  reduce_sat->add_option("input", config.inputs, "Instance file")->required()->expected(1);
  add_output(reduce_sat, config);
  reduce_sat->callback([&] { action = [&] { cmd_reduce_sat(config, out); }; });
  auto* reduce_ss = reduce->add_subcommand("subset-sum", "DIMACS CNF -> Subset Sum JSON (+ decode map sidecar)");
  reduce_ss->add_option("input", config.inputs, "DIMACS file")->required()->expected(1);
  add_output(reduce_ss, config);
  reduce_ss->callback([&] { action = [&] { cmd_reduce_subset_sum(config, out); }; });

  auto* solve = app.add_subcommand("solve", "Run a solver and write solution plus trial log");
  solve->require_subcommand(1);
  auto add_solver = [&](const char* name, const char* help, void (*fn)(const RunConfig&, std::ostream&, std::ostream&)) {
    auto* cmd = solve->add_subcommand(name, help);
    cmd->add_option("input", config.inputs, "Input file")->required()->expected(1);
    cmd->add_option("--seed", config.seed, "Random seed")->capture_default_str();
    cmd->add_option("--log", config.log, "Trial log path (JSON lines)");
    cmd->add_flag("--timing", config.timing, "Record wall time in the trial log");
    add_output(cmd, config);
    cmd->callback([&, fn] { action = [&, fn] { fn(config, out, err); }; });
    return cmd;
  };
  auto* direct = add_solver("direct", "Query subsets of an instance by minor sign", cmd_solve_direct);
  direct->add_option("--order", config.order, "Enumeration order")
      ->check(CLI::IsMember({"lex", "random"}))
      ->capture_default_str();
  direct->add_option("--limit", config.limit, "Exhaustive search limit")->capture_default_str();
  auto* ppsz = add_solver("ppsz", "PPSZ-style randomized search on a CNF", cmd_solve_ppsz);
  ppsz->add_option("--max-trials", config.max_trials, "Trial budget")->check(CLI::PositiveNumber)->capture_default_str();
  ppsz->add_option("--varmap", config.varmap, "Var map sidecar (default <input>.varmap.json)");
  auto* enumerate = add_solver("enumerate", "All models of a CNF by enumeration", cmd_solve_enumerate);
  enumerate->add_option("--varmap", config.varmap, "Var map sidecar (default <input>.varmap.json)");
  for (auto [name, help, fn] :
       {std::tuple{"mitm", "Meet-in-the-middle Subset Sum", &cmd_solve_mitm},
        std::tuple{"brute", "All Subset Sum solutions by enumeration", &cmd_solve_brute}}) {
    auto* cmd = add_solver(name, help, fn);
    cmd->add_option("--decode", config.decode, "Decode map sidecar (default <input>.decode.json)");
    cmd->add_option("--varmap", config.varmap, "Var map of the CNF the instance came from");
  }

  auto* report = app.add_subcommand("report", "Emit a report table");
  report->require_subcommand(1);
  auto* expansion = report->add_subcommand("expansion", "Dimensional expansion per stage");
  add_n(expansion, config);
  expansion->add_option("--mode", config.mode, "nominal or measured")
      ->check(CLI::IsMember({"nominal", "measured"}))
      ->capture_default_str();
  expansion->add_option("--k", config.k, "Witness size for measured mode")->check(CLI::Range(1, 62));
  expansion->add_option("--seed", config.seed, "Seed for measured mode")->capture_default_str();
  add_format(expansion, config);
  add_output(expansion, config);
  expansion->callback([&] { action = [&] { cmd_report_expansion(config, out); }; });

  auto* ratios = report->add_subcommand("ratios", "Trial complexity and ratio to 2^N");
  add_n(ratios, config);
  add_format(ratios, config);
  add_output(ratios, config);
  ratios->callback([&] { action = [&] { cmd_report_ratios(config, out); }; });

  auto* access = report->add_subcommand("accessibility", "Witness entropy and per-query information");
  add_n(access, config);
  access->add_option("--k", config.k, "Use the uniform size-k prior")->check(CLI::Range(1, 62));
  access->add_option("--queries", config.queries, "Empirical queries per instance (0: analytic only)");
  access->add_option("--instances", config.instances, "Instances for the empirical run")->check(CLI::PositiveNumber);
  access->add_option("--seed", config.seed, "Seed for the empirical run")->capture_default_str();
  add_format(access, config);
  add_output(access, config);
  access->callback([&] { action = [&] { cmd_report_accessibility(config, out); }; });

  auto* verify = app.add_subcommand("verify", "Audit pipeline artifacts: instance [cnf [subset-sum]]");
  verify->add_option("inputs", config.inputs, "instance.json [formula.cnf [subset_sum.json]]")
      ->required()
      ->expected(1, 3);
  verify->add_option("--limit", config.limit, "Exhaustive verification limit")->capture_default_str();
  verify->add_option("--jobs", config.jobs, "Verification threads")->check(CLI::Range(1, 256));
  verify->add_option("--varmap", config.varmap, "Var map sidecar (default <cnf>.varmap.json)");
  verify->add_option("--decode", config.decode, "Decode map sidecar (default <subset-sum>.decode.json)");
  verify->callback([&] { action = [&] { cmd_verify(config, out, err); }; });

  std::vector<const char*> argv{"pmsat"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (action) action();
    return 0;
  } catch (const CommandFailed& failed) {
    return failed.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace pmsat::cli
