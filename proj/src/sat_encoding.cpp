#include "pmsat/sat_encoding.hpp"

#include <json.hpp>

#include "pmsat/errors.hpp"

namespace pmsat {

namespace {

std::vector<int> block(std::size_t first, std::size_t n) {
  std::vector<int> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<int>(first + i);
  return out;
}

}  // namespace

std::vector<int> VarMap::witness_vars() const { return block(1, n_); }
std::vector<int> VarMap::aux_match() const { return block(n_ + 1, n_); }
std::vector<int> VarMap::aux_chain() const { return block(2 * n_ + 1, n_); }

std::pair<CnfFormula, VarMap> encode_sat(const PMatrixInstance& instance) {
  if (!instance.witness()) {
    throw MissingWitness(
        "the SAT encoding is solution-aware and needs the instance witness, which is redacted");
  }
  const SubsetMask& witness = *instance.witness();
  const std::size_t n = instance.n();
  VarMap map(n);
  CnfFormula formula(map.var_count());

  for (std::size_t i = 0; i < n; ++i) {
    Literal x = map.witness_var(i);
    Literal match = witness.contains(i) ? x : -x;
    Literal a = map.match_var(i);
    formula.add(Clause::padded({-a, match}));
    formula.add(Clause::padded({a, -match}));
  }

  Literal b_first = map.chain_var(0);
  Literal a_first = map.match_var(0);
  formula.add(Clause::padded({-b_first, a_first}));
  formula.add(Clause::padded({b_first, -a_first}));

  for (std::size_t i = 1; i < n; ++i) {
    Literal b = map.chain_var(i);
    Literal b_prev = map.chain_var(i - 1);
    Literal a = map.match_var(i);
    formula.add(Clause::padded({-b, b_prev}));
    formula.add(Clause::padded({-b, a}));
    formula.add(Clause::padded({b, -b_prev, -a}));
  }

  formula.add(Clause::padded({map.chain_var(n - 1)}));
  return {std::move(formula), map};
}

SubsetMask decode_sat_solution(const Assignment& assignment, const VarMap& map) {
  if (assignment.size() < map.n()) {
    throw DimensionMismatch("assignment covers " + std::to_string(assignment.size()) +
                            " variables, need at least " + std::to_string(map.n()));
  }
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < map.n(); ++i) {
    if (assignment[static_cast<std::size_t>(map.witness_var(i) - 1)]) bits |= std::uint64_t{1} << i;
  }
  return SubsetMask(map.n(), bits);
}

std::string emit_varmap(const VarMap& map) {
  nlohmann::ordered_json doc;
  doc["version"] = 1;
  doc["n"] = map.n();
  doc["witness_vars"] = map.witness_vars();
  doc["aux_match"] = map.aux_match();
  doc["aux_chain"] = map.aux_chain();
  return doc.dump(2) + "\n";
}

VarMap parse_varmap(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("var map: ") + e.what());
  }
  try {
    if (doc.at("version").get<int>() != 1) throw ParseError("var map: unsupported version");
    VarMap map(doc.at("n").get<std::size_t>());
    if (doc.at("witness_vars").get<std::vector<int>>() != map.witness_vars() ||
        doc.at("aux_match").get<std::vector<int>>() != map.aux_match() ||
        doc.at("aux_chain").get<std::vector<int>>() != map.aux_chain()) {
      throw ParseError("var map: blocks do not partition 1..3N in the expected layout");
    }
    return map;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("var map: ") + e.what());
  }
}

}  // namespace pmsat
