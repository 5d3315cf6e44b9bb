#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

namespace pmsat {

/// Prior over hidden witnesses. Guesses in experiments are drawn from the
/// same support.
struct WitnessPrior {
  enum class Kind { kUniformAllSubsets, kUniformSizeK };

  Kind kind = Kind::kUniformAllSubsets;
  std::size_t k = 0;

  static WitnessPrior all_subsets() { return {Kind::kUniformAllSubsets, 0}; }
  static WitnessPrior size_k(std::size_t k) { return {Kind::kUniformSizeK, k}; }

  /// "uniform-all-subsets" or "uniform-size-<k>".
  std::string to_string() const;
};

/// log2 of the prior's support size: n, or log2 C(n, k).
double witness_entropy(std::size_t n, const WitnessPrior& prior);

/// Probability that one fixed guess from the support equals the witness.
double query_success_prob(std::size_t n, const WitnessPrior& prior);

/// H_b(p) = -p log2 p - (1-p) log2 (1-p), with H_b(0) = H_b(1) = 0.
double binary_entropy(double p);

/// I(W; Y) for one equality query. Y is a function of W, so this is
/// H_b(query_success_prob).
double per_query_information(std::size_t n, const WitnessPrior& prior);

/// Bits gained from q distinct failed queries under the uniform-all prior:
/// n - log2(2^n - q). Throws InvalidParameter for q >= 2^n.
double eliminative_information(std::size_t n, std::uint64_t failed_queries);

struct AccessibilityProfile {
  std::size_t n = 0;
  WitnessPrior prior;
  double entropy_bits = 0;
  double success_prob = 0;
  double per_query_bits = 0;
  std::uint64_t queries_examined = 0;
  std::uint64_t successes = 0;
  /// Present only when queries were issued.
  std::optional<double> empirical_frequency;
  /// Binomial standard error sqrt(p(1-p)/queries) at the analytic p.
  std::optional<double> standard_error;
};

/// Analytic fields only.
AccessibilityProfile analytic_profile(std::size_t n, const WitnessPrior& prior);

/// Generates num_instances instances with size-k witnesses and issues
/// queries_per_instance fresh uniform guesses from the prior's support to
/// each, answered by the minor-sign oracle. Guesses are sampled with
/// replacement.
AccessibilityProfile empirical_query_experiment(std::size_t n, std::size_t k, const WitnessPrior& prior,
                                                std::size_t num_instances, std::size_t queries_per_instance,
                                                std::uint64_t seed);

std::string to_json(const AccessibilityProfile& profile);

/// n, H(W), Pr(Y=1), I-per-query and eliminative samples at q = 2^n * {0, 1/4, 1/2, 3/4} and 2^n - 1.
std::string render_accessibility_csv(const AccessibilityProfile& profile);
std::string render_accessibility_markdown(const AccessibilityProfile& profile);

}  // namespace pmsat
