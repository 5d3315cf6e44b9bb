#pragma once

// Reference computations used only by tests. They share no code with the
// library routines they check.

#include <cmath>
#include <cstdint>
#include <vector>

#include "pmsat/cnf.hpp"
#include "pmsat/instance.hpp"
#include "pmsat/subset_sum.hpp"

namespace pmsat::oracle {

/// Laplace expansion along the first row.
inline Rational cofactor_determinant(const std::vector<std::vector<Rational>>& m) {
  const std::size_t k = m.size();
  if (k == 0) return Rational(1);
  if (k == 1) return m[0][0];
  Rational det = 0;
  for (std::size_t col = 0; col < k; ++col) {
    if (m[0][col] == 0) continue;
    std::vector<std::vector<Rational>> minor;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<Rational> row;
      for (std::size_t c = 0; c < k; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    Rational term = m[0][col] * cofactor_determinant(minor);
    if (col % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

/// Principal submatrix of B + u v^T built straight from the stored fields.
inline std::vector<std::vector<Rational>> principal_submatrix(const PMatrixInstance& instance, std::uint64_t bits) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < instance.n(); ++i) {
    if ((bits >> i) & 1U) idx.push_back(i);
  }
  std::vector<std::vector<Rational>> m(idx.size(), std::vector<Rational>(idx.size()));
  for (std::size_t r = 0; r < idx.size(); ++r) {
    for (std::size_t c = 0; c < idx.size(); ++c) {
      m[r][c] = instance.base().at(idx[r], idx[c]) + instance.u()[idx[r]] * instance.v()[idx[c]];
    }
  }
  return m;
}

inline Rational cofactor_minor(const PMatrixInstance& instance, std::uint64_t bits) {
  return cofactor_determinant(principal_submatrix(instance, bits));
}

/// All masks whose cofactor minor is <= 0.
inline std::vector<std::uint64_t> cofactor_violations(const PMatrixInstance& instance) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << instance.n()); ++bits) {
    if (bits != 0 && cofactor_minor(instance, bits) <= 0) out.push_back(bits);
  }
  return out;
}

/// Every satisfying assignment by direct clause evaluation.
inline std::vector<Assignment> all_models(const CnfFormula& formula) {
  std::vector<Assignment> out;
  const std::size_t n = formula.var_count();
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
    Assignment candidate(n);
    for (std::size_t v = 0; v < n; ++v) candidate[v] = ((a >> (n - 1 - v)) & 1U) != 0;
    if (formula.satisfied_by(candidate)) out.push_back(std::move(candidate));
  }
  return out;
}

/// Every item subset whose plain column sums equal the target digits.
inline std::vector<ItemSelection> all_exact_sums(const SubsetSumInstance& ss) {
  std::vector<ItemSelection> out;
  const std::size_t count = ss.items.size();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << count); ++bits) {
    std::vector<unsigned> sums(ss.digit_count, 0);
    ItemSelection chosen;
    for (std::size_t i = 0; i < count; ++i) {
      if (!((bits >> i) & 1U)) continue;
      chosen.push_back(i);
      for (std::size_t p = 0; p < ss.digit_count; ++p) sums[p] += ss.items[i].digits[p];
    }
    bool ok = true;
    for (std::size_t p = 0; p < ss.digit_count && ok; ++p) ok = sums[p] == ss.target[p];
    if (ok) out.push_back(std::move(chosen));
  }
  return out;
}

/// I(W; Y) from the explicit joint table over (witness, answer) for the
/// uniform prior on `support` candidates, one of which is the fixed guess.
inline double joint_mutual_information(std::uint64_t support) {
  const double pw = 1.0 / static_cast<double>(support);
  double py1 = 0;
  for (std::uint64_t w = 0; w < support; ++w) py1 += (w == 0) ? pw : 0.0;
  const double py0 = 1.0 - py1;
  double info = 0;
  for (std::uint64_t w = 0; w < support; ++w) {
    bool hit = w == 0;
    double joint = pw;
    double marginal = hit ? py1 : py0;
    info += joint * std::log2(joint / (pw * marginal));
  }
  return info;
}

}  // namespace pmsat::oracle
