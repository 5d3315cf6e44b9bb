#include <cmath>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pmsat/accessibility.hpp"
#include "pmsat/errors.hpp"

using namespace pmsat;

TEST(Accessibility, EntropyAndSuccessProbability) {
  EXPECT_DOUBLE_EQ(witness_entropy(6, WitnessPrior::all_subsets()), 6.0);
  EXPECT_DOUBLE_EQ(witness_entropy(1, WitnessPrior::all_subsets()), 1.0);
  EXPECT_NEAR(witness_entropy(6, WitnessPrior::size_k(3)), 4.321928094887363, 1e-12);
  EXPECT_DOUBLE_EQ(query_success_prob(6, WitnessPrior::all_subsets()), 1.0 / 64);
  EXPECT_DOUBLE_EQ(query_success_prob(1, WitnessPrior::all_subsets()), 0.5);
  EXPECT_DOUBLE_EQ(query_success_prob(6, WitnessPrior::size_k(3)), 1.0 / 20);
  EXPECT_THROW(witness_entropy(3, WitnessPrior::size_k(4)), InvalidParameter);
}

TEST(Accessibility, BinaryEntropy) {
  EXPECT_EQ(binary_entropy(0.0), 0.0);
  EXPECT_EQ(binary_entropy(1.0), 0.0);
  EXPECT_DOUBLE_EQ(binary_entropy(0.5), 1.0);
  EXPECT_NEAR(binary_entropy(1.0 / 64), 0.116115, 1e-6);
}

TEST(Accessibility, PerQueryInformationMatchesJointTable) {
  for (std::size_t n = 1; n <= 10; ++n) {
    double joint = oracle::joint_mutual_information(std::uint64_t{1} << n);
    EXPECT_NEAR(per_query_information(n, WitnessPrior::all_subsets()), joint, 1e-12) << n;
  }
  EXPECT_NEAR(per_query_information(6, WitnessPrior::size_k(3)), oracle::joint_mutual_information(20), 1e-12);
}

TEST(Accessibility, PerQueryInformationDecays) {
  double prev = per_query_information(2, WitnessPrior::all_subsets());
  for (std::size_t n = 3; n <= 30; ++n) {
    double cur = per_query_information(n, WitnessPrior::all_subsets());
    EXPECT_LT(cur, prev) << n;
    prev = cur;
  }
  EXPECT_NEAR(per_query_information(20, WitnessPrior::all_subsets()), 2.0e-5, 0.1e-5);
  EXPECT_DOUBLE_EQ(per_query_information(1, WitnessPrior::all_subsets()), 1.0);
}

TEST(Accessibility, EliminativeInformation) {
  EXPECT_DOUBLE_EQ(eliminative_information(6, 0), 0.0);
  EXPECT_DOUBLE_EQ(eliminative_information(6, 32), 1.0);
  EXPECT_DOUBLE_EQ(eliminative_information(6, 63), 6.0);
  EXPECT_THROW(eliminative_information(6, 64), InvalidParameter);
  double prev = -1;
  for (std::uint64_t q = 0; q < 64; ++q) {
    double cur = eliminative_information(6, q);
    EXPECT_GT(cur, prev);
    EXPECT_DOUBLE_EQ(6.0 - cur, std::log2(64.0 - static_cast<double>(q)));
    prev = cur;
  }
}

TEST(Accessibility, EmpiricalSizeKPrior) {
  AccessibilityProfile p = empirical_query_experiment(6, 3, WitnessPrior::size_k(3), 100, 1000, 17);
  ASSERT_TRUE(p.empirical_frequency);
  ASSERT_TRUE(p.standard_error);
  EXPECT_EQ(p.queries_examined, 100000U);
  EXPECT_LE(std::fabs(*p.empirical_frequency - 0.05), 3 * *p.standard_error);
  EXPECT_DOUBLE_EQ(p.success_prob, 0.05);
}

TEST(Accessibility, EmpiricalSingleIndex) {
  AccessibilityProfile p = empirical_query_experiment(1, 1, WitnessPrior::all_subsets(), 10, 1000, 3);
  EXPECT_LE(std::fabs(*p.empirical_frequency - 0.5), 3 * *p.standard_error);
}

TEST(Accessibility, ZeroQueriesLeavesAnalyticOnly) {
  AccessibilityProfile p = empirical_query_experiment(4, 2, WitnessPrior::all_subsets(), 3, 0, 1);
  EXPECT_EQ(p.queries_examined, 0U);
  EXPECT_FALSE(p.empirical_frequency);
  EXPECT_FALSE(p.standard_error);
  EXPECT_DOUBLE_EQ(p.entropy_bits, 4.0);
}

TEST(Accessibility, Rendering) {
  AccessibilityProfile p = analytic_profile(6, WitnessPrior::all_subsets());
  EXPECT_NE(to_json(p).find("uniform-all-subsets"), std::string::npos);
  EXPECT_NE(render_accessibility_markdown(p).find("0.11612"), std::string::npos);
  EXPECT_FALSE(render_accessibility_csv(p).empty());
}
