#include "pmsat/subset_sum.hpp"

#include <algorithm>
#include <random>

#include <json.hpp>

#include "pmsat/errors.hpp"
#include "pmsat/seeding.hpp"

namespace pmsat {

namespace {

constexpr std::uint8_t kClauseTargetDigit = 4;

std::size_t parse_index(std::string_view text, std::string_view whole) {
  if (text.empty()) throw ParseError("item label '" + std::string(whole) + "' has no index");
  std::size_t value = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') throw ParseError("item label '" + std::string(whole) + "' has a bad index");
    value = value * 10 + static_cast<std::size_t>(ch - '0');
  }
  return value;
}

const char* kind_name(ItemKind kind) {
  switch (kind) {
    case ItemKind::kVariableTrue:
      return "variable-true";
    case ItemKind::kVariableFalse:
      return "variable-false";
    case ItemKind::kSlack1:
      return "slack-1";
    case ItemKind::kSlack2:
      return "slack-2";
    case ItemKind::kPlain:
      return "plain";
  }
  return "plain";
}

ItemKind kind_from_name(const std::string& name) {
  for (ItemKind k : {ItemKind::kVariableTrue, ItemKind::kVariableFalse, ItemKind::kSlack1,
                     ItemKind::kSlack2, ItemKind::kPlain}) {
    if (name == kind_name(k)) return k;
  }
  throw ParseError("unknown item kind '" + name + "'");
}

void check_selection(const SubsetSumInstance& instance, const ItemSelection& chosen) {
  for (std::size_t idx : chosen) {
    if (idx >= instance.items.size()) {
      throw DimensionMismatch("item index " + std::to_string(idx) + " out of range");
    }
  }
}

DigitVector strip_leading_zeros(DigitVector digits) {
  auto first = std::find_if(digits.begin(), digits.end(), [](std::uint8_t d) { return d != 0; });
  digits.erase(digits.begin(), first);
  return digits;
}

}  // namespace

std::string ItemLabel::to_string() const {
  switch (kind) {
    case ItemKind::kVariableTrue:
      return "T:" + std::to_string(index);
    case ItemKind::kVariableFalse:
      return "F:" + std::to_string(index);
    case ItemKind::kSlack1:
      return "S1:" + std::to_string(index);
    case ItemKind::kSlack2:
      return "S2:" + std::to_string(index);
    case ItemKind::kPlain:
      return "I:" + std::to_string(index);
  }
  return "I:" + std::to_string(index);
}

ItemLabel ItemLabel::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("item label '" + std::string(text) + "' lacks ':'");
  std::string_view tag = text.substr(0, colon);
  std::size_t index = parse_index(text.substr(colon + 1), text);
  if (tag == "T") return {ItemKind::kVariableTrue, index};
  if (tag == "F") return {ItemKind::kVariableFalse, index};
  if (tag == "S1") return {ItemKind::kSlack1, index};
  if (tag == "S2") return {ItemKind::kSlack2, index};
  if (tag == "I") return {ItemKind::kPlain, index};
  throw ParseError("item label '" + std::string(text) + "' has unknown tag");
}

DecodeMap::DecodeMap(std::vector<ItemLabel> labels, std::size_t variables, std::size_t clauses)
    : labels_(std::move(labels)), variables_(variables), clauses_(clauses) {
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  true_item_.assign(variables_, kNone);
  false_item_.assign(variables_, kNone);
  std::vector<std::size_t> slack1(clauses_, kNone);
  std::vector<std::size_t> slack2(clauses_, kNone);

  auto claim = [](std::vector<std::size_t>& slots, std::size_t owner, std::size_t item,
                  const ItemLabel& label) {
    if (owner == 0 || owner > slots.size()) {
      throw DecodeError("item label " + label.to_string() + " refers to an unknown owner");
    }
    if (slots[owner - 1] != kNone) throw DecodeError("duplicate item label " + label.to_string());
    slots[owner - 1] = item;
  };

  for (std::size_t i = 0; i < labels_.size(); ++i) {
    const ItemLabel& label = labels_[i];
    switch (label.kind) {
      case ItemKind::kVariableTrue:
        claim(true_item_, label.index, i, label);
        break;
      case ItemKind::kVariableFalse:
        claim(false_item_, label.index, i, label);
        break;
      case ItemKind::kSlack1:
        claim(slack1, label.index, i, label);
        break;
      case ItemKind::kSlack2:
        claim(slack2, label.index, i, label);
        break;
      case ItemKind::kPlain:
        throw DecodeError("plain items carry no variable or clause meaning");
    }
  }
  auto complete = [](const std::vector<std::size_t>& slots) {
    return std::find(slots.begin(), slots.end(), kNone) == slots.end();
  };
  if (!complete(true_item_) || !complete(false_item_)) {
    throw DecodeError("every variable needs exactly one true and one false item");
  }
  if (!complete(slack1) || !complete(slack2)) {
    throw DecodeError("every clause needs exactly one slack-1 and one slack-2 item");
  }
}

DecodeMap DecodeMap::from_instance(const SubsetSumInstance& instance) {
  std::vector<ItemLabel> labels;
  labels.reserve(instance.items.size());
  for (const auto& item : instance.items) labels.push_back(item.label);
  return DecodeMap(std::move(labels), instance.variables, instance.clauses);
}

std::pair<SubsetSumInstance, DecodeMap> encode_subset_sum(const CnfFormula& formula) {
  const std::size_t n = formula.var_count();
  const std::size_t m = formula.clause_count();
  SubsetSumInstance ss;
  ss.digit_count = n + m;
  ss.variables = n;
  ss.clauses = m;

  std::vector<DigitVector> positive(n, DigitVector(n + m, 0));
  std::vector<DigitVector> negative(n, DigitVector(n + m, 0));
  for (std::size_t v = 0; v < n; ++v) {
    positive[v][v] = 1;
    negative[v][v] = 1;
  }
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Literal> lits = formula.clauses()[j].distinct();
    for (Literal lit : lits) {
      if (std::find(lits.begin(), lits.end(), -lit) != lits.end()) {
        throw InvalidParameter("clause " + std::to_string(j + 1) +
                               " is tautological; the digit construction is unsound for it");
      }
      std::size_t v = static_cast<std::size_t>(var_of(lit) - 1);
      (lit > 0 ? positive : negative)[v][n + j] = 1;
    }
  }

  for (std::size_t v = 0; v < n; ++v) {
    ss.items.push_back({{ItemKind::kVariableTrue, v + 1}, std::move(positive[v])});
    ss.items.push_back({{ItemKind::kVariableFalse, v + 1}, std::move(negative[v])});
  }
  for (std::size_t j = 0; j < m; ++j) {
    DigitVector one(n + m, 0);
    one[n + j] = 1;
    DigitVector two(n + m, 0);
    two[n + j] = 2;
    ss.items.push_back({{ItemKind::kSlack1, j + 1}, std::move(one)});
    ss.items.push_back({{ItemKind::kSlack2, j + 1}, std::move(two)});
  }

  ss.target.assign(n + m, 0);
  std::fill(ss.target.begin(), ss.target.begin() + static_cast<std::ptrdiff_t>(n), 1);
  std::fill(ss.target.begin() + static_cast<std::ptrdiff_t>(n), ss.target.end(), kClauseTargetDigit);

  DecodeMap map = DecodeMap::from_instance(ss);
  return {std::move(ss), std::move(map)};
}

Assignment decode_subset_sum_solution(const ItemSelection& chosen, const DecodeMap& map) {
  std::vector<bool> picked(map.labels().size(), false);
  for (std::size_t idx : chosen) {
    if (idx >= picked.size()) throw DecodeError("item index " + std::to_string(idx) + " out of range");
    picked[idx] = true;
  }
  Assignment assignment(map.variables());
  for (std::size_t v = 1; v <= map.variables(); ++v) {
    bool t = picked[map.true_item(v)];
    bool f = picked[map.false_item(v)];
    if (t == f) {
      throw DecodeError(std::string(t ? "both" : "neither") + " polarity items chosen for variable " +
                        std::to_string(v));
    }
    assignment[v - 1] = t;
  }
  return assignment;
}

ItemSelection encode_assignment(const Assignment& assignment, const CnfFormula& formula,
                                const DecodeMap& map) {
  if (assignment.size() != formula.var_count() || map.variables() != formula.var_count() ||
      map.clauses() != formula.clause_count()) {
    throw DimensionMismatch("assignment, formula and decode map disagree on size");
  }
  ItemSelection chosen;
  for (std::size_t v = 1; v <= assignment.size(); ++v) {
    chosen.push_back(assignment[v - 1] ? map.true_item(v) : map.false_item(v));
  }
  std::vector<std::size_t> slack1(map.clauses());
  std::vector<std::size_t> slack2(map.clauses());
  for (std::size_t i = 0; i < map.labels().size(); ++i) {
    const ItemLabel& label = map.labels()[i];
    if (label.kind == ItemKind::kSlack1) slack1[label.index - 1] = i;
    if (label.kind == ItemKind::kSlack2) slack2[label.index - 1] = i;
  }
  for (std::size_t j = 0; j < formula.clause_count(); ++j) {
    std::size_t satisfied = 0;
    for (Literal lit : formula.clauses()[j].distinct()) {
      if (assignment[static_cast<std::size_t>(var_of(lit) - 1)] == (lit > 0)) ++satisfied;
    }
    switch (kClauseTargetDigit - satisfied) {
      case 3:
        chosen.push_back(slack1[j]);
        chosen.push_back(slack2[j]);
        break;
      case 2:
        chosen.push_back(slack2[j]);
        break;
      case 1:
        chosen.push_back(slack1[j]);
        break;
      default:
        throw DecodeError("assignment falsifies clause " + std::to_string(j + 1));
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

std::vector<std::size_t> column_sums(const SubsetSumInstance& instance, const ItemSelection& chosen) {
  check_selection(instance, chosen);
  std::vector<std::size_t> sums(instance.digit_count, 0);
  for (std::size_t idx : chosen) {
    const DigitVector& digits = instance.items[idx].digits;
    for (std::size_t p = 0; p < instance.digit_count; ++p) sums[p] += digits[p];
  }
  return sums;
}

DigitVector numeric_sum(const SubsetSumInstance& instance, const ItemSelection& chosen) {
  std::vector<std::size_t> columns = column_sums(instance, chosen);
  // Least significant digit is last; carry toward the front.
  DigitVector out(columns.size(), 0);
  std::size_t carry = 0;
  for (std::size_t p = columns.size(); p-- > 0;) {
    std::size_t value = columns[p] + carry;
    out[p] = static_cast<std::uint8_t>(value % kDigitBase);
    carry = value / kDigitBase;
  }
  while (carry > 0) {
    out.insert(out.begin(), static_cast<std::uint8_t>(carry % kDigitBase));
    carry /= kDigitBase;
  }
  return out;
}

bool sums_to_target(const SubsetSumInstance& instance, const ItemSelection& chosen) {
  return strip_leading_zeros(numeric_sum(instance, chosen)) == strip_leading_zeros(instance.target);
}

CarryAudit audit_carry_freeness(const SubsetSumInstance& instance) {
  ItemSelection all(instance.items.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  CarryAudit audit;
  std::vector<std::size_t> sums = column_sums(instance, all);
  for (std::size_t p = 0; p < sums.size(); ++p) {
    audit.max_column_sum = std::max(audit.max_column_sum, sums[p]);
    if (sums[p] >= kDigitBase) audit.offending_columns.push_back(p);
  }
  audit.carry_free = audit.offending_columns.empty();
  return audit;
}

std::string digits_to_string(const DigitVector& digits) {
  std::string out(digits.size(), '0');
  for (std::size_t i = 0; i < digits.size(); ++i) out[i] = static_cast<char>('0' + digits[i]);
  return out;
}

DigitVector digits_from_string(std::string_view text) {
  DigitVector out(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw ParseError("digit string contains '" + std::string(1, text[i]) + "'");
    out[i] = static_cast<std::uint8_t>(text[i] - '0');
  }
  return out;
}

std::string emit_subset_sum(const SubsetSumInstance& instance) {
  nlohmann::ordered_json doc;
  doc["version"] = 1;
  doc["digits"] = instance.digit_count;
  doc["base"] = kDigitBase;
  doc["variables"] = instance.variables;
  doc["clauses"] = instance.clauses;
  doc["items"] = nlohmann::ordered_json::array();
  for (const auto& item : instance.items) {
    nlohmann::ordered_json rec;
    rec["label"] = item.label.to_string();
    rec["digits"] = digits_to_string(item.digits);
    doc["items"].push_back(std::move(rec));
  }
  doc["target"] = digits_to_string(instance.target.empty() ? DigitVector(instance.digit_count, 0)
                                                           : instance.target);
  return doc.dump(2) + "\n";
}

SubsetSumInstance parse_subset_sum(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("subset sum: ") + e.what());
  }
  try {
    if (doc.at("version").get<int>() != 1) throw ParseError("subset sum: unsupported version");
    if (doc.at("base").get<unsigned>() != kDigitBase) throw ParseError("subset sum: only base 10 is supported");
    SubsetSumInstance ss;
    ss.digit_count = doc.at("digits").get<std::size_t>();
    ss.variables = doc.value("variables", std::size_t{0});
    ss.clauses = doc.value("clauses", std::size_t{0});
    for (const auto& rec : doc.at("items")) {
      SubsetSumItem item;
      item.label = ItemLabel::parse(rec.at("label").get<std::string>());
      item.digits = digits_from_string(rec.at("digits").get<std::string>());
      if (item.digits.size() != ss.digit_count) {
        throw ParseError("subset sum: item " + item.label.to_string() + " has wrong digit length");
      }
      ss.items.push_back(std::move(item));
    }
    ss.target = digits_from_string(doc.at("target").get<std::string>());
    if (ss.target.size() != ss.digit_count) throw ParseError("subset sum: target has wrong digit length");
    return ss;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("subset sum: ") + e.what());
  }
}

std::string emit_decode_map(const DecodeMap& map) {
  nlohmann::ordered_json doc;
  doc["version"] = 1;
  doc["variables"] = map.variables();
  doc["clauses"] = map.clauses();
  doc["items"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < map.labels().size(); ++i) {
    const ItemLabel& label = map.labels()[i];
    nlohmann::ordered_json rec;
    rec["item"] = i;
    rec["kind"] = kind_name(label.kind);
    if (label.kind == ItemKind::kVariableTrue || label.kind == ItemKind::kVariableFalse) {
      rec["variable"] = label.index;
      rec["polarity"] = label.kind == ItemKind::kVariableTrue;
    } else {
      rec["clause"] = label.index;
      rec["slack"] = label.kind == ItemKind::kSlack1 ? 1 : 2;
    }
    doc["items"].push_back(std::move(rec));
  }
  return doc.dump(2) + "\n";
}

DecodeMap parse_decode_map(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("decode map: ") + e.what());
  }
  try {
    if (doc.at("version").get<int>() != 1) throw ParseError("decode map: unsupported version");
    std::vector<ItemLabel> labels;
    for (const auto& rec : doc.at("items")) {
      if (rec.at("item").get<std::size_t>() != labels.size()) {
        throw ParseError("decode map: items must be listed in order");
      }
      ItemKind kind = kind_from_name(rec.at("kind").get<std::string>());
      std::size_t owner = (kind == ItemKind::kVariableTrue || kind == ItemKind::kVariableFalse)
                              ? rec.at("variable").get<std::size_t>()
                              : rec.at("clause").get<std::size_t>();
      labels.push_back({kind, owner});
    }
    return DecodeMap(std::move(labels), doc.at("variables").get<std::size_t>(),
                     doc.at("clauses").get<std::size_t>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("decode map: ") + e.what());
  }
}

PlantedInstance generate_planted_subset_sum(std::size_t item_count, std::size_t digit_count,
                                            std::uint64_t seed) {
  if (item_count == 0 || digit_count == 0) throw InvalidParameter("planted instance needs items and digits");
  Rng rng = make_rng(seed, SeedStream::kPlanted);
  PlantedInstance out;
  SubsetSumInstance& ss = out.instance;
  ss.digit_count = digit_count;
  for (std::size_t i = 0; i < item_count; ++i) {
    ss.items.push_back({{ItemKind::kPlain, i}, DigitVector(digit_count, 0)});
  }
  std::uniform_int_distribution<std::size_t> column_total(0, kDigitBase - 1);
  std::uniform_int_distribution<std::size_t> pick_item(0, item_count - 1);
  for (std::size_t p = 0; p < digit_count; ++p) {
    std::size_t total = column_total(rng);
    for (std::size_t unit = 0; unit < total; ++unit) ++ss.items[pick_item(rng)].digits[p];
  }
  for (std::size_t i = 0; i < item_count; ++i) {
    if (rng() >> 63) out.planted.push_back(i);
  }
  std::vector<std::size_t> sums = column_sums(ss, out.planted);
  ss.target.resize(digit_count);
  for (std::size_t p = 0; p < digit_count; ++p) ss.target[p] = static_cast<std::uint8_t>(sums[p]);
  return out;
}

}  // namespace pmsat
