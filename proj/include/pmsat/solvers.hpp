#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pmsat/cnf.hpp"
#include "pmsat/subset_sum.hpp"

namespace pmsat {

inline constexpr std::size_t kSatEnumerateLimit = 22;
inline constexpr std::size_t kBruteForceItemLimit = 24;
inline constexpr std::size_t kMitmItemLimit = 40;

/// kRefused: input above the solver's size limit, nothing was searched.
enum class Outcome { kFound, kExhausted, kRefused };

const char* to_string(Outcome outcome);

/// One solver run. A PPSZ trial is one permutation pass, a direct-search
/// trial is one oracle query and a meet-in-the-middle run is one trial.
struct TrialLog {
  std::string representation;
  /// Witness dimension when the caller knows it.
  std::optional<std::size_t> n;
  /// Dimension of the representation being searched.
  std::size_t d = 0;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  Outcome outcome = Outcome::kExhausted;
  /// Peak auxiliary table entries; 0 for polynomial-space solvers.
  std::uint64_t table_entries = 0;
  /// Wall time, only recorded when requested so logs stay reproducible.
  std::optional<double> millis;

  friend bool operator==(const TrialLog&, const TrialLog&) = default;
};

/// {"representation", "n", "d", "seed", "trials", "outcome", "table_entries", "millis"}
/// on a single line.
std::string to_json_line(const TrialLog& log);

/// All satisfying assignments in lexicographic order (x1 most significant,
/// false before true). Refuses above kSatEnumerateLimit variables.
std::vector<Assignment> sat_enumerate(const CnfFormula& formula);

enum class PropagationStatus { kStable, kConflict };

struct PropagationResult {
  PartialAssignment partial;
  PropagationStatus status = PropagationStatus::kStable;
};

/// Occurrence-indexed unit propagation over a fixed formula. Clause slots
/// are read set-wise, so padded repeats never count twice.
class UnitPropagator {
 public:
  explicit UnitPropagator(const CnfFormula& formula);

  /// Propagates to fixpoint from the clauses touching `changed` (or from
  /// every clause when `changed` is empty). Returns false on conflict.
  bool propagate(PartialAssignment& partial, const std::vector<int>& changed) const;

  const CnfFormula& formula() const { return *formula_; }

 private:
  enum class ClauseState { kSatisfied, kUnit, kOpen, kFalsified };
  ClauseState inspect(std::size_t clause, const PartialAssignment& partial, Literal& unit) const;

  const CnfFormula* formula_;
  std::vector<std::vector<Literal>> distinct_;
  std::vector<std::vector<std::size_t>> occurrences_;
};

PropagationResult unit_propagate(const CnfFormula& formula, const PartialAssignment& partial);

struct PpszResult {
  std::optional<Assignment> assignment;
  TrialLog log;
};

/// Extra acceptance test on complete assignments; a trial succeeds only if
/// the formula is satisfied and this returns true.
using AssignmentCheck = std::function<bool(const Assignment&)>;

/// Randomized PPSZ-style search with unit-propagation inference: each trial
/// visits variables in a fresh uniform order, keeps forced values and
/// guesses the rest uniformly.
PpszResult ppsz_solve(const CnfFormula& formula, std::uint64_t seed, std::uint64_t max_trials,
                      const AssignmentCheck& accept = {});

/// Every item subset whose digit-wise sum equals the target, as ascending
/// index lists in increasing bitmask order. Refuses above kBruteForceItemLimit.
std::vector<ItemSelection> brute_force_subset_sum(const SubsetSumInstance& ss);

struct MitmResult {
  std::optional<ItemSelection> solution;
  TrialLog log;
};

/// Horowitz-Sahni half split: tabulates the larger half's subset sums,
/// streams the other half against the sorted table. Refuses above
/// kMitmItemLimit items.
MitmResult mitm_subset_sum(const SubsetSumInstance& ss);

}  // namespace pmsat
