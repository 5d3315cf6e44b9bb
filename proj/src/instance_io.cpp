#include "pmsat/instance_io.hpp"

#include <json.hpp>

#include "pmsat/errors.hpp"

namespace pmsat {

namespace {

constexpr int kInstanceVersion = 1;

nlohmann::ordered_json rationals(const std::vector<Rational>& values) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& value : values) out.push_back(format_rational(value));
  return out;
}

std::vector<Rational> parse_vector(const nlohmann::json& node, std::size_t n, const char* name) {
  if (!node.is_array() || node.size() != n) {
    throw ParseError(std::string("instance: '") + name + "' must hold " + std::to_string(n) + " entries");
  }
  std::vector<Rational> out;
  out.reserve(n);
  for (const auto& cell : node) out.push_back(parse_rational(cell.get<std::string>()));
  return out;
}

}  // namespace

std::string instance_to_json(const PMatrixInstance& instance) {
  const std::size_t n = instance.n();
  nlohmann::ordered_json doc;
  doc["version"] = kInstanceVersion;
  doc["n"] = n;
  doc["k"] = instance.k();
  doc["seed"] = instance.seed();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < n; ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < n; ++c) row.push_back(format_rational(instance.base().at(r, c)));
    rows.push_back(std::move(row));
  }
  doc["base"] = std::move(rows);
  doc["u"] = rationals(instance.u());
  doc["v"] = rationals(instance.v());
  if (instance.witness()) {
    doc["witness"] = instance.witness()->indices();
  } else {
    doc["witness"] = nullptr;
  }
  doc["scale"] = instance.scale().get_str();
  return doc.dump(2) + "\n";
}

PMatrixInstance instance_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("instance: ") + e.what());
  }
  try {
    if (doc.at("version").get<int>() != kInstanceVersion) throw ParseError("instance: unsupported version");
    const auto n = doc.at("n").get<std::size_t>();
    if (n == 0 || n > kMaxMaskWidth) throw ParseError("instance: n out of range");

    const auto& rows = doc.at("base");
    if (!rows.is_array() || rows.size() != n) throw ParseError("instance: base must have n rows");
    RationalMatrix base(n);
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<Rational> row = parse_vector(rows[r], n, "base row");
      for (std::size_t c = 0; c < n; ++c) base.at(r, c) = std::move(row[c]);
    }
    std::vector<Rational> u = parse_vector(doc.at("u"), n, "u");
    std::vector<Rational> v = parse_vector(doc.at("v"), n, "v");

    std::optional<SubsetMask> witness;
    const auto& w = doc.at("witness");
    if (!w.is_null()) {
      auto indices = w.get<std::vector<std::size_t>>();
      witness = SubsetMask::from_indices(n, indices);
      if (witness->count() != indices.size()) throw ParseError("instance: witness lists an index twice");
    }

    PMatrixInstance instance(std::move(base), std::move(u), std::move(v), witness,
                             doc.value("k", std::size_t{0}), doc.value("seed", std::uint64_t{0}));
    const auto& scale = doc.at("scale");
    std::string scale_text = scale.is_string() ? scale.get<std::string>() : scale.dump();
    if (Integer(scale_text, 10) != instance.scale()) {
      throw ParseError("instance: scale " + scale_text + " does not clear the entries (expected " +
                       instance.scale().get_str() + ")");
    }
    return instance;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("instance: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("instance: ") + e.what());
  } catch (const DimensionMismatch& e) {
    throw ParseError(std::string("instance: ") + e.what());
  }
}

}  // namespace pmsat
