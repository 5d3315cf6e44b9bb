#include "pmsat/solvers.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include <json.hpp>

#include "pmsat/errors.hpp"
#include "pmsat/seeding.hpp"

namespace pmsat {

const char* to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::kFound:
      return "found";
    case Outcome::kExhausted:
      return "exhausted";
    case Outcome::kRefused:
      return "refused";
  }
  return "exhausted";
}

std::string to_json_line(const TrialLog& log) {
  nlohmann::ordered_json doc;
  doc["representation"] = log.representation;
  doc["n"] = log.n ? nlohmann::ordered_json(*log.n) : nlohmann::ordered_json(nullptr);
  doc["d"] = log.d;
  doc["seed"] = log.seed;
  doc["trials"] = log.trials;
  doc["outcome"] = to_string(log.outcome);
  doc["table_entries"] = log.table_entries;
  doc["millis"] = log.millis ? nlohmann::ordered_json(*log.millis) : nlohmann::ordered_json(nullptr);
  return doc.dump();
}

// ---------------------------------------------------------------------------
// Exhaustive SAT enumeration

std::vector<Assignment> sat_enumerate(const CnfFormula& formula) {
  const std::size_t n = formula.var_count();
  if (n > kSatEnumerateLimit) throw LimitExceeded("SAT enumeration", n, kSatEnumerateLimit);

  // Variable v occupies bit n - v, so counting upward is lexicographic in (x1, ..., xn).
  struct Masks {
    std::uint32_t pos = 0;
    std::uint32_t neg = 0;
  };
  std::vector<Masks> clauses;
  clauses.reserve(formula.clause_count());
  for (const Clause& c : formula.clauses()) {
    Masks m;
    for (Literal lit : c.lits) {
      std::uint32_t bit = std::uint32_t{1} << (n - static_cast<std::size_t>(var_of(lit)));
      (lit > 0 ? m.pos : m.neg) |= bit;
    }
    clauses.push_back(m);
  }

  std::vector<Assignment> models;
  const std::uint32_t total = std::uint32_t{1} << n;
  for (std::uint32_t a = 0; a < total; ++a) {
    bool ok = std::all_of(clauses.begin(), clauses.end(),
                          [a](const Masks& m) { return ((a & m.pos) | (~a & m.neg)) != 0; });
    if (!ok) continue;
    Assignment model(n);
    for (std::size_t v = 1; v <= n; ++v) model[v - 1] = ((a >> (n - v)) & 1U) != 0;
    models.push_back(std::move(model));
  }
  return models;
}

// ---------------------------------------------------------------------------
// Unit propagation

UnitPropagator::UnitPropagator(const CnfFormula& formula)
    : formula_(&formula), occurrences_(formula.var_count() + 1) {
  distinct_.reserve(formula.clause_count());
  for (std::size_t c = 0; c < formula.clause_count(); ++c) {
    distinct_.push_back(formula.clauses()[c].distinct());
    for (Literal lit : distinct_.back()) {
      auto& occ = occurrences_[static_cast<std::size_t>(var_of(lit))];
      if (occ.empty() || occ.back() != c) occ.push_back(c);
    }
  }
}

UnitPropagator::ClauseState UnitPropagator::inspect(std::size_t clause, const PartialAssignment& partial,
                                                    Literal& unit) const {
  std::size_t open = 0;
  for (Literal lit : distinct_[clause]) {
    Truth t = partial.literal_value(lit);
    if (t == Truth::kTrue) return ClauseState::kSatisfied;
    if (t == Truth::kUnset) {
      ++open;
      unit = lit;
    }
  }
  if (open == 0) return ClauseState::kFalsified;
  return open == 1 ? ClauseState::kUnit : ClauseState::kOpen;
}

bool UnitPropagator::propagate(PartialAssignment& partial, const std::vector<int>& changed) const {
  if (partial.width() != formula_->var_count()) {
    throw DimensionMismatch("partial assignment width does not match the formula");
  }
  std::vector<int> queue = changed;
  auto visit = [&](std::size_t clause) {
    Literal unit = 0;
    switch (inspect(clause, partial, unit)) {
      case ClauseState::kFalsified:
        return false;
      case ClauseState::kUnit:
        partial.set(var_of(unit), unit > 0);
        queue.push_back(var_of(unit));
        return true;
      default:
        return true;
    }
  };

  if (changed.empty()) {
    for (std::size_t c = 0; c < distinct_.size(); ++c) {
      if (!visit(c)) return false;
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::size_t c : occurrences_[static_cast<std::size_t>(queue[head])]) {
      if (!visit(c)) return false;
    }
  }
  return true;
}

PropagationResult unit_propagate(const CnfFormula& formula, const PartialAssignment& partial) {
  UnitPropagator propagator(formula);
  PropagationResult result{partial, PropagationStatus::kStable};
  if (!propagator.propagate(result.partial, {})) result.status = PropagationStatus::kConflict;
  return result;
}

// ---------------------------------------------------------------------------
// PPSZ-style randomized search

PpszResult ppsz_solve(const CnfFormula& formula, std::uint64_t seed, std::uint64_t max_trials,
                      const AssignmentCheck& accept) {
  if (max_trials == 0) throw InvalidParameter("max_trials must be at least 1");
  const std::size_t n = formula.var_count();
  UnitPropagator propagator(formula);
  Rng rng = make_rng(seed, SeedStream::kPpsz);

  PpszResult result;
  result.log.representation = "3-SAT (PPSZ-style)";
  result.log.d = n;
  result.log.seed = seed;

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  for (std::uint64_t trial = 1; trial <= max_trials; ++trial) {
    result.log.trials = trial;
    std::shuffle(order.begin(), order.end(), rng);
    PartialAssignment partial(n);
    bool consistent = propagator.propagate(partial, {});
    for (int var : order) {
      if (!consistent) break;
      if (partial.is_set(var)) continue;
      partial.set(var, (rng() >> 63) != 0);
      consistent = propagator.propagate(partial, {var});
    }
    if (!consistent) continue;
    Assignment candidate = partial.to_assignment();
    if (!formula.satisfied_by(candidate)) continue;
    if (accept && !accept(candidate)) continue;
    result.assignment = std::move(candidate);
    result.log.outcome = Outcome::kFound;
    return result;
  }
  result.log.outcome = Outcome::kExhausted;
  return result;
}

// ---------------------------------------------------------------------------
// Subset Sum

namespace {

// Linear hash of a column vector: H(v) = sum_p v_p * r_p mod 2^64, so
// H(a + b) = H(a) + H(b) and half sums combine without materializing digits.
class ColumnHash {
 public:
  explicit ColumnHash(std::size_t length) : weights_(length) {
    for (std::size_t p = 0; p < length; ++p) weights_[p] = splitmix64(0x5eedULL + p) | 1U;
  }

  std::uint64_t operator()(const DigitVector& digits) const {
    std::uint64_t h = 0;
    for (std::size_t p = 0; p < digits.size(); ++p) h += weights_[p] * digits[p];
    return h;
  }

 private:
  std::vector<std::uint64_t> weights_;
};

ItemSelection selection_from_bits(std::uint64_t bits, std::size_t offset = 0) {
  ItemSelection out;
  for (std::size_t i = 0; bits != 0; ++i, bits >>= 1) {
    if (bits & 1U) out.push_back(offset + i);
  }
  return out;
}

bool columns_match_target(const SubsetSumInstance& ss, const ItemSelection& chosen) {
  std::vector<std::size_t> sums = column_sums(ss, chosen);
  for (std::size_t p = 0; p < sums.size(); ++p) {
    if (sums[p] != ss.target[p]) return false;
  }
  return true;
}

void check_instance_shape(const SubsetSumInstance& ss) {
  if (ss.target.size() != ss.digit_count) throw DimensionMismatch("target length differs from digit count");
  for (const auto& item : ss.items) {
    if (item.digits.size() != ss.digit_count) {
      throw DimensionMismatch("item " + item.label.to_string() + " has the wrong digit length");
    }
  }
}

}  // namespace

std::vector<ItemSelection> brute_force_subset_sum(const SubsetSumInstance& ss) {
  const std::size_t count = ss.item_count();
  if (count > kBruteForceItemLimit) throw LimitExceeded("brute-force Subset Sum", count, kBruteForceItemLimit);
  check_instance_shape(ss);

  ColumnHash hash(ss.digit_count);
  std::vector<std::uint64_t> item_hash(count);
  for (std::size_t i = 0; i < count; ++i) item_hash[i] = hash(ss.items[i].digits);
  const std::uint64_t target_hash = hash(ss.target);

  // Gray-code walk: one item flips per step.
  std::vector<std::uint64_t> hits;
  std::uint64_t running = 0;
  std::uint64_t mask = 0;
  const std::uint64_t total = std::uint64_t{1} << count;
  for (std::uint64_t step = 0; step < total; ++step) {
    if (step > 0) {
      auto flip = static_cast<std::size_t>(std::countr_zero(step));
      mask ^= std::uint64_t{1} << flip;
      running += ((mask >> flip) & 1U) ? item_hash[flip] : -item_hash[flip];
    }
    if (running == target_hash && columns_match_target(ss, selection_from_bits(mask))) hits.push_back(mask);
  }
  std::sort(hits.begin(), hits.end());

  std::vector<ItemSelection> solutions;
  solutions.reserve(hits.size());
  for (std::uint64_t bits : hits) solutions.push_back(selection_from_bits(bits));
  return solutions;
}

MitmResult mitm_subset_sum(const SubsetSumInstance& ss) {
  const std::size_t count = ss.item_count();
  if (count > kMitmItemLimit) {
    throw LimitExceeded(
        "meet-in-the-middle Subset Sum (use brute force for <= 24 items or solve the SAT form instead)",
        count, kMitmItemLimit);
  }
  check_instance_shape(ss);

  const std::size_t left_count = (count + 1) / 2;
  const std::size_t right_count = count - left_count;
  ColumnHash hash(ss.digit_count);
  std::vector<std::uint64_t> item_hash(count);
  for (std::size_t i = 0; i < count; ++i) item_hash[i] = hash(ss.items[i].digits);

  auto half_sums = [&](std::size_t offset, std::size_t width) {
    std::vector<std::uint64_t> sums(std::size_t{1} << width, 0);
    for (std::size_t bits = 1; bits < sums.size(); ++bits) {
      auto low = static_cast<std::size_t>(std::countr_zero(bits));
      sums[bits] = sums[bits & (bits - 1)] + item_hash[offset + low];
    }
    return sums;
  };

  struct Entry {
    std::uint64_t hash;
    std::uint64_t mask;
  };
  std::vector<Entry> table;
  {
    std::vector<std::uint64_t> left = half_sums(0, left_count);
    table.reserve(left.size());
    for (std::uint64_t bits = 0; bits < left.size(); ++bits) table.push_back({left[bits], bits});
  }
  std::sort(table.begin(), table.end(),
            [](const Entry& a, const Entry& b) { return a.hash != b.hash ? a.hash < b.hash : a.mask < b.mask; });

  MitmResult result;
  result.log.representation = "Subset Sum (meet-in-the-middle)";
  result.log.d = count;
  result.log.trials = 1;
  result.log.table_entries = table.size();
  result.log.outcome = Outcome::kExhausted;

  const std::uint64_t target_hash = hash(ss.target);
  std::vector<std::uint64_t> right = half_sums(left_count, right_count);
  for (std::uint64_t bits = 0; bits < right.size(); ++bits) {
    std::uint64_t need = target_hash - right[bits];
    auto it = std::lower_bound(table.begin(), table.end(), need,
                               [](const Entry& e, std::uint64_t h) { return e.hash < h; });
    for (; it != table.end() && it->hash == need; ++it) {
      ItemSelection chosen = selection_from_bits(it->mask);
      ItemSelection upper = selection_from_bits(bits, left_count);
      chosen.insert(chosen.end(), upper.begin(), upper.end());
      if (columns_match_target(ss, chosen)) {
        result.solution = std::move(chosen);
        result.log.outcome = Outcome::kFound;
        return result;
      }
    }
  }
  return result;
}

}  // namespace pmsat
