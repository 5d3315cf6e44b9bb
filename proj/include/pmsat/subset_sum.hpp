#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pmsat/cnf.hpp"

namespace pmsat {

inline constexpr unsigned kDigitBase = 10;

/// Base-10 digits, most significant first. Arbitrary length; never folded
/// into a machine integer.
using DigitVector = std::vector<std::uint8_t>;

enum class ItemKind {
  kVariableTrue,
  kVariableFalse,
  kSlack1,
  kSlack2,
  /// Unstructured item of a synthetic instance (no variable/clause owner).
  kPlain,
};

/// Which literal or clause slack an item stands for. index is the 1-based
/// variable (T/F items), 1-based clause (slack items) or 0-based position
/// (plain items).
struct ItemLabel {
  ItemKind kind = ItemKind::kPlain;
  std::size_t index = 0;

  /// "T:3", "F:3", "S1:7", "S2:7", "I:0".
  std::string to_string() const;
  static ItemLabel parse(std::string_view text);

  friend bool operator==(const ItemLabel&, const ItemLabel&) = default;
};

struct SubsetSumItem {
  ItemLabel label;
  DigitVector digits;

  friend bool operator==(const SubsetSumItem&, const SubsetSumItem&) = default;
};

/// Items and target share one digit length. For instances built from a
/// formula, the first `variables` positions belong to variables and the
/// next `clauses` positions to clauses.
struct SubsetSumInstance {
  std::size_t digit_count = 0;
  std::size_t variables = 0;
  std::size_t clauses = 0;
  std::vector<SubsetSumItem> items;
  DigitVector target;

  std::size_t item_count() const { return items.size(); }

  friend bool operator==(const SubsetSumInstance&, const SubsetSumInstance&) = default;
};

/// Item index -> label, with lookups by variable/clause.
class DecodeMap {
 public:
  DecodeMap() = default;
  /// Validates that every variable has exactly one T and one F item and
  /// every clause exactly one slack-1 and one slack-2 item.
  DecodeMap(std::vector<ItemLabel> labels, std::size_t variables, std::size_t clauses);

  static DecodeMap from_instance(const SubsetSumInstance& instance);

  std::size_t variables() const { return variables_; }
  std::size_t clauses() const { return clauses_; }
  const std::vector<ItemLabel>& labels() const { return labels_; }

  /// Item indices of T_v and F_v (v 1-based).
  std::size_t true_item(std::size_t var) const { return true_item_.at(var - 1); }
  std::size_t false_item(std::size_t var) const { return false_item_.at(var - 1); }

  friend bool operator==(const DecodeMap& a, const DecodeMap& b) {
    return a.labels_ == b.labels_ && a.variables_ == b.variables_ && a.clauses_ == b.clauses_;
  }

 private:
  std::vector<ItemLabel> labels_;
  std::size_t variables_ = 0;
  std::size_t clauses_ = 0;
  std::vector<std::size_t> true_item_;
  std::vector<std::size_t> false_item_;
};

/// Chosen item indices, ascending.
using ItemSelection = std::vector<std::size_t>;

/// Standard 3-SAT -> Subset Sum digit construction with two slack items per
/// clause (values 1 and 2, clause target 4). Literal occurrences are counted
/// once per clause. Throws InvalidParameter on tautological clauses.
std::pair<SubsetSumInstance, DecodeMap> encode_subset_sum(const CnfFormula& formula);

/// x_v = true iff T_v is chosen. Throws DecodeError unless exactly one of
/// T_v, F_v is chosen for every variable.
Assignment decode_subset_sum_solution(const ItemSelection& chosen, const DecodeMap& map);

/// Items picked by an assignment plus the slack items that complete each
/// clause digit to 4. Throws DecodeError if some clause is unsatisfied.
ItemSelection encode_assignment(const Assignment& assignment, const CnfFormula& formula,
                                const DecodeMap& map);

/// Per-position column sums of the selected items (no carrying).
std::vector<std::size_t> column_sums(const SubsetSumInstance& instance, const ItemSelection& chosen);

/// Exact base-10 sum of the selected items with carry propagation, as a
/// digit vector of length digit_count + extra overflow digits if needed.
DigitVector numeric_sum(const SubsetSumInstance& instance, const ItemSelection& chosen);

/// numeric_sum equals the target exactly (leading zeros ignored).
bool sums_to_target(const SubsetSumInstance& instance, const ItemSelection& chosen);

struct CarryAudit {
  bool carry_free = true;
  /// Largest column sum over all items.
  std::size_t max_column_sum = 0;
  /// Positions whose column sum reaches the base.
  std::vector<std::size_t> offending_columns;
};

CarryAudit audit_carry_freeness(const SubsetSumInstance& instance);

/// Digits as a string of '0'..'9'.
std::string digits_to_string(const DigitVector& digits);
DigitVector digits_from_string(std::string_view text);

/// JSON document {version, digits, base, variables, clauses, items:[{label, digits}], target}.
std::string emit_subset_sum(const SubsetSumInstance& instance);
SubsetSumInstance parse_subset_sum(std::string_view text);

/// Sidecar JSON listing each item's (variable, polarity) or (clause, slack).
std::string emit_decode_map(const DecodeMap& map);
DecodeMap parse_decode_map(std::string_view text);

struct PlantedInstance {
  SubsetSumInstance instance;
  ItemSelection planted;
};

/// Random digit vectors with a planted solution. Column totals are capped at
/// base-1 so every subset sum is carry-free.
PlantedInstance generate_planted_subset_sum(std::size_t item_count, std::size_t digit_count,
                                            std::uint64_t seed);

}  // namespace pmsat
