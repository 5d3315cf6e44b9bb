#include <cmath>

#include <gtest/gtest.h>

#include "pmsat/errors.hpp"
#include "pmsat/expansion.hpp"
#include "pmsat/sat_encoding.hpp"
#include "pmsat/subset_sum.hpp"

using namespace pmsat;

namespace {

void expect_row(const ExpansionRow& row, std::size_t aux, double ratio, std::size_t d, std::size_t n) {
  EXPECT_EQ(row.aux, aux) << row.stage;
  EXPECT_DOUBLE_EQ(row.ratio(n), ratio) << row.stage;
  EXPECT_EQ(row.dimension, d) << row.stage;
}

}  // namespace

TEST(Expansion, NominalSix) {
  ExpansionReport r = expansion_nominal(6);
  ASSERT_EQ(r.rows.size(), 3U);
  expect_row(r.rows[0], 0, 0.0, 6, 6);
  expect_row(r.rows[1], 12, 2.0, 18, 6);
  expect_row(r.rows[2], 42, 7.0, 48, 6);
  EXPECT_EQ(r.rows[1].stage, kStageSat);
}

TEST(Expansion, NominalOneAndDimensionIdentity) {
  ExpansionReport one = expansion_nominal(1);
  expect_row(one.rows[1], 2, 2.0, 3, 1);
  expect_row(one.rows[2], 7, 7.0, 8, 1);
  for (std::size_t n = 1; n <= 40; ++n) {
    for (const auto& row : expansion_nominal(n).rows) EXPECT_EQ(row.dimension - row.aux, n);
  }
  EXPECT_THROW(expansion_nominal(0), InvalidParameter);
}

TEST(Expansion, MeasuredFromArtifacts) {
  for (std::size_t n : {1U, 6U}) {
    auto [cnf, vmap] = encode_sat(generate_unique_violation(n, 1, 3));
    auto [ss, dmap] = encode_subset_sum(cnf);
    ExpansionReport r = expansion_measured(cnf, ss, n);
    ASSERT_TRUE(r.clauses);
    EXPECT_EQ(*r.clauses, 5 * n);
    expect_row(r.rows[0], 0, 0.0, n, n);
    expect_row(r.rows[1], 2 * n, 2.0, 3 * n, n);
    expect_row(r.rows[2], 15 * n, 15.0, 16 * n, n);
  }
}

TEST(Expansion, Rendering) {
  ExpansionReport r = expansion_nominal(6);
  std::string csv = render_csv(r);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "stage,M,ratio,d,mode");
  EXPECT_NE(csv.find("\"3-SAT (Tseytin-style)\",12,2.0,18,nominal"), std::string::npos);
  std::string md = render_markdown(r);
  EXPECT_NE(md.find("| Subset Sum (via 3-SAT encoding) | 42 | 7.0 | 48 |"), std::string::npos);
  EXPECT_NE(render_json(r).find("\"mode\": \"nominal\""), std::string::npos);
}

TEST(TrialRatios, ValuesAtSix) {
  ComplexityTable t = trial_ratio_table(6);
  ASSERT_EQ(t.rows.size(), 4U);
  EXPECT_DOUBLE_EQ(t.rows[0].trials(), 64.0);
  EXPECT_DOUBLE_EQ(t.ratio(t.rows[0]), 1.0);
  EXPECT_NEAR(t.rows[1].log2_trials(), 6.948, 1e-12);
  EXPECT_NEAR(t.rows[1].trials(), 123.47, 0.01);
  EXPECT_NEAR(t.ratio(t.rows[1]), 1.93, 0.005);
  EXPECT_NEAR(t.rows[2].trials(), 31173, 1.0);
  EXPECT_NEAR(t.ratio(t.rows[2]), 487.07, 0.01);
  EXPECT_NEAR(*t.rows[2].space(), std::exp2(0.256 * 48), 1e-6);
  EXPECT_NEAR(t.rows[3].trials(), 2936.7, 0.1);
  EXPECT_NEAR(t.ratio(t.rows[3]), 45.89, 0.01);
  EXPECT_FALSE(t.rows[1].space());
}

TEST(TrialRatios, Formatting) {
  EXPECT_EQ(format_sig3(64), "64");
  EXPECT_EQ(format_sig3(123.47), "123");
  EXPECT_EQ(format_sig3(31173.1), "3.12e+04");
  EXPECT_EQ(format_ratio(487.07), "487.1");
  std::string md = render_markdown(trial_ratio_table(6));
  EXPECT_NE(md.find("O(2^6)"), std::string::npos);
  EXPECT_NE(md.find("| 45.9 |"), std::string::npos);
  EXPECT_NE(render_csv(trial_ratio_table(6)).find("\"3-SAT (PPSZ-style)\",18,6.95,123,1.9,poly"), std::string::npos);
}
