#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pmsat/rational.hpp"
#include "pmsat/subset_mask.hpp"

namespace pmsat {

/// Exhaustive checks (2^n minors) refuse to run above this dimension unless
/// the caller raises the limit explicitly.
inline constexpr std::size_t kDefaultExhaustiveLimit = 20;

/// Rank-one perturbed matrix A = B + u v^T carrying a hidden subset W whose
/// principal minor is the only non-positive one.
///
/// Immutable once built. The constructor clears all denominators of A with a
/// single positive scale s so minors are evaluated as integer determinants:
/// det(A_S) = det((sA)_S) / s^|S|.
class PMatrixInstance {
 public:
  PMatrixInstance(RationalMatrix base, std::vector<Rational> u, std::vector<Rational> v,
                  std::optional<SubsetMask> witness, std::size_t k = 0, std::uint64_t seed = 0);

  std::size_t n() const { return base_.size(); }
  /// Witness size requested at generation time (0 when unknown).
  std::size_t k() const { return k_; }
  std::uint64_t seed() const { return seed_; }

  const RationalMatrix& base() const { return base_; }
  const std::vector<Rational>& u() const { return u_; }
  const std::vector<Rational>& v() const { return v_; }
  const std::optional<SubsetMask>& witness() const { return witness_; }
  const Integer& scale() const { return scale_; }

  /// Entry (i, j) of B + u v^T.
  Rational perturbed(std::size_t row, std::size_t col) const;

  /// Entry (i, j) of s * (B + u v^T).
  const Integer& scaled(std::size_t row, std::size_t col) const { return scaled_[row * n() + col]; }

  /// Copy with the witness removed, for blind-search experiments.
  PMatrixInstance redacted() const;
  /// Copy with a different witness field (used to build tampered fixtures).
  PMatrixInstance with_witness(std::optional<SubsetMask> witness) const;

 private:
  RationalMatrix base_;
  std::vector<Rational> u_;
  std::vector<Rational> v_;
  std::optional<SubsetMask> witness_;
  std::size_t k_;
  std::uint64_t seed_;
  Integer scale_;
  std::vector<Integer> scaled_;
};

struct VerifyOptions {
  std::size_t exhaustive_limit = kDefaultExhaustiveLimit;
  /// Worker threads for subset enumeration; results do not depend on it.
  unsigned jobs = 1;
};

/// Determinant of the principal submatrix of B + u v^T selected by subset.
/// The empty subset has minor 1.
Rational principal_minor(const PMatrixInstance& instance, const SubsetMask& subset);

/// True iff every nonempty principal minor of matrix is strictly positive.
bool is_p_matrix(const RationalMatrix& matrix, std::size_t exhaustive_limit = kDefaultExhaustiveLimit);

/// Identity base with u_i v_i = -(2k+1)/(2k^2) on the witness and +2 elsewhere,
/// u_i = w_i, v_i = 1. The witness is then the unique non-positive minor since
/// det((I + u v^T)_S) = 1 + sum_{i in S} u_i v_i.
PMatrixInstance build_unique_violation(const SubsetMask& witness, std::uint64_t seed = 0);

/// Draws a uniform size-k witness from seed and builds the instance above.
PMatrixInstance generate_unique_violation(std::size_t n, std::size_t k, std::uint64_t seed);

/// Enumerates all 2^n subsets and returns the single one with minor <= 0.
/// Throws UniquenessViolation when there are zero or several.
SubsetMask verify_unique_violation(const PMatrixInstance& instance, const VerifyOptions& options = {});

/// Every subset with a non-positive minor, in increasing mask order.
std::vector<SubsetMask> nonpositive_minors(const PMatrixInstance& instance,
                                           const VerifyOptions& options = {});

/// Equality query against the stored witness; falls back to the sign query
/// when the witness is redacted.
bool oracle_query_equality(const PMatrixInstance& instance, const SubsetMask& guess);

/// True iff principal_minor(instance, guess) <= 0.
bool oracle_query_sign(const PMatrixInstance& instance, const SubsetMask& guess);

enum class SearchOrder { kLexicographic, kRandomPermutation };

struct DirectSearchResult {
  SubsetMask witness;
  std::uint64_t trials = 0;
};

/// Issues sign queries in the given order until one succeeds.
DirectSearchResult direct_search(const PMatrixInstance& instance, SearchOrder order,
                                 std::uint64_t seed,
                                 std::size_t exhaustive_limit = kDefaultExhaustiveLimit);

}  // namespace pmsat
