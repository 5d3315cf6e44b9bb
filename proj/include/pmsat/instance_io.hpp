#pragma once

#include <string>
#include <string_view>

#include "pmsat/instance.hpp"

namespace pmsat {

/// Versioned JSON: {version, n, k, seed, base, u, v, witness, scale}. Matrix
/// rows and vectors hold "p/q" strings; witness is an index list or null;
/// scale is a decimal string.
std::string instance_to_json(const PMatrixInstance& instance);

/// Throws ParseError on malformed documents, including a scale field that
/// does not match the entries.
PMatrixInstance instance_from_json(std::string_view text);

}  // namespace pmsat
