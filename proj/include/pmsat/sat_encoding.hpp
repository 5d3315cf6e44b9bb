#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pmsat/cnf.hpp"
#include "pmsat/instance.hpp"

namespace pmsat {

/// Variable layout of the witness-aware encoding over 3N variables:
///   x_i = i          indicator that index i-1 belongs to the witness
///   a_i = N + i      a_i <-> (x_i agrees with the witness)
///   b_i = 2N + i     b_i <-> (a_1 and ... and a_i)
class VarMap {
 public:
  VarMap() = default;
  explicit VarMap(std::size_t n) : n_(n) {}

  std::size_t n() const { return n_; }
  std::size_t var_count() const { return 3 * n_; }
  std::size_t aux_count() const { return 2 * n_; }

  /// Variable numbers for index i in 0..N-1.
  int witness_var(std::size_t i) const { return static_cast<int>(i + 1); }
  int match_var(std::size_t i) const { return static_cast<int>(n_ + i + 1); }
  int chain_var(std::size_t i) const { return static_cast<int>(2 * n_ + i + 1); }

  std::vector<int> witness_vars() const;
  std::vector<int> aux_match() const;
  std::vector<int> aux_chain() const;

  friend bool operator==(const VarMap&, const VarMap&) = default;

 private:
  std::size_t n_ = 0;
};

/// Emits the 5N-clause 3-CNF whose only model restricts to the witness
/// indicator on x. Throws MissingWitness for redacted instances.
std::pair<CnfFormula, VarMap> encode_sat(const PMatrixInstance& instance);

/// {i : x_{i+1} true}.
SubsetMask decode_sat_solution(const Assignment& assignment, const VarMap& map);

/// Sidecar JSON: {version, n, witness_vars, aux_match, aux_chain}.
std::string emit_varmap(const VarMap& map);
VarMap parse_varmap(std::string_view text);

}  // namespace pmsat
