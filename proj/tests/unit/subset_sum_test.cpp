#include <algorithm>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pmsat/errors.hpp"
#include "pmsat/sat_encoding.hpp"
#include "pmsat/subset_sum.hpp"

using namespace pmsat;

namespace {

std::pair<CnfFormula, VarMap> pipeline_cnf(std::size_t n, std::size_t k, std::uint64_t seed) {
  return encode_sat(generate_unique_violation(n, k, seed));
}

}  // namespace

TEST(SubsetSumEncoding, SingleIndexShape) {
  auto [cnf, vmap] = pipeline_cnf(1, 1, 0);
  auto [ss, dmap] = encode_subset_sum(cnf);
  EXPECT_EQ(ss.item_count(), 16U);
  EXPECT_EQ(ss.digit_count, 8U);
  EXPECT_EQ(digits_to_string(ss.target), "11144444");
  EXPECT_EQ(ss.items[0].label.to_string(), "T:1");
  EXPECT_EQ(ss.items[1].label.to_string(), "F:1");
  EXPECT_EQ(ss.items[6].label.to_string(), "S1:1");
  EXPECT_EQ(ss.items[7].label.to_string(), "S2:1");
  EXPECT_EQ(digits_to_string(ss.items[7].digits), "00020000");
}

TEST(SubsetSumEncoding, ExactSumsBijectWithModels) {
  auto [cnf, vmap] = pipeline_cnf(1, 1, 0);
  auto [ss, dmap] = encode_subset_sum(cnf);
  auto sums = oracle::all_exact_sums(ss);
  auto models = oracle::all_models(cnf);
  ASSERT_EQ(sums.size(), models.size());
  ASSERT_EQ(sums.size(), 1U);
  EXPECT_EQ(decode_subset_sum_solution(sums[0], dmap), models[0]);
  EXPECT_EQ(encode_assignment(models[0], cnf, dmap), sums[0]);
}

TEST(SubsetSumEncoding, SmallFormulaWithSeveralModels) {
  // (x1 v x2) and (!x1 v x3): 4 models over 3 variables.
  CnfFormula f(3);
  f.add(Clause::padded({1, 2}));
  f.add(Clause::padded({-1, 3}));
  auto [ss, dmap] = encode_subset_sum(f);
  auto sums = oracle::all_exact_sums(ss);
  auto models = oracle::all_models(f);
  ASSERT_EQ(models.size(), 4U);
  ASSERT_EQ(sums.size(), models.size());
  std::vector<Assignment> decoded;
  for (const auto& s : sums) decoded.push_back(decode_subset_sum_solution(s, dmap));
  std::sort(decoded.begin(), decoded.end());
  std::sort(models.begin(), models.end());
  EXPECT_EQ(decoded, models);
}

TEST(SubsetSumEncoding, SixIndexSizesAndCarryFreedom) {
  auto [cnf, vmap] = pipeline_cnf(6, 3, 4);
  auto [ss, dmap] = encode_subset_sum(cnf);
  EXPECT_EQ(ss.item_count(), 96U);
  EXPECT_EQ(ss.item_count(), 2 * cnf.var_count() + 2 * cnf.clause_count());
  CarryAudit audit = audit_carry_freeness(ss);
  EXPECT_TRUE(audit.carry_free);
  EXPECT_LE(audit.max_column_sum, 9U);
  EXPECT_TRUE(audit.offending_columns.empty());
}

TEST(SubsetSumEncoding, ForwardSumHitsTarget) {
  for (std::size_t n = 1; n <= 6; ++n) {
    PMatrixInstance inst = generate_unique_violation(n, (n + 1) / 2, n);
    auto [cnf, vmap] = encode_sat(inst);
    auto [ss, dmap] = encode_subset_sum(cnf);
    Assignment model = oracle::all_models(cnf).at(0);
    ItemSelection chosen = encode_assignment(model, cnf, dmap);
    EXPECT_TRUE(sums_to_target(ss, chosen));
    auto cols = column_sums(ss, chosen);
    for (std::size_t p = 0; p < ss.digit_count; ++p) EXPECT_EQ(cols[p], ss.target[p]);
    EXPECT_EQ(decode_sat_solution(decode_subset_sum_solution(chosen, dmap), vmap), *inst.witness());
  }
}

TEST(SubsetSumEncoding, UnsatisfyingAssignmentHasNoCompletion) {
  auto [cnf, vmap] = pipeline_cnf(2, 1, 0);
  auto [ss, dmap] = encode_subset_sum(cnf);
  EXPECT_THROW(encode_assignment(Assignment(6, false), cnf, dmap), DecodeError);
}

TEST(SubsetSumEncoding, TautologyRejected) {
  CnfFormula f(2);
  f.add(Clause::padded({1, -1, 2}));
  EXPECT_THROW(encode_subset_sum(f), InvalidParameter);
}

TEST(SubsetSumEncoding, RepeatedLiteralCountsOnce) {
  CnfFormula f(1);
  f.add(Clause::padded({1}));
  auto [ss, dmap] = encode_subset_sum(f);
  EXPECT_EQ(digits_to_string(ss.items[dmap.true_item(1)].digits), "11");
  EXPECT_EQ(digits_to_string(ss.items[dmap.false_item(1)].digits), "10");
}

TEST(SubsetSumDecode, BothOrNeitherPolarityRaises) {
  auto [cnf, vmap] = pipeline_cnf(1, 1, 0);
  auto [ss, dmap] = encode_subset_sum(cnf);
  ItemSelection both{dmap.true_item(1), dmap.false_item(1), dmap.true_item(2), dmap.true_item(3)};
  std::sort(both.begin(), both.end());
  EXPECT_THROW(decode_subset_sum_solution(both, dmap), DecodeError);
  ItemSelection neither{dmap.true_item(2), dmap.true_item(3)};
  EXPECT_THROW(decode_subset_sum_solution(neither, dmap), DecodeError);
}

TEST(SubsetSumArithmetic, CarryPropagation) {
  SubsetSumInstance ss;
  ss.digit_count = 2;
  ss.items = {{{ItemKind::kPlain, 0}, {0, 9}}, {{ItemKind::kPlain, 1}, {0, 3}}, {{ItemKind::kPlain, 2}, {9, 0}}};
  ss.target = {1, 2};
  EXPECT_EQ(digits_to_string(numeric_sum(ss, {0, 1})), "12");
  EXPECT_TRUE(sums_to_target(ss, {0, 1}));
  EXPECT_EQ(digits_to_string(numeric_sum(ss, {0, 1, 2})), "102");
  EXPECT_FALSE(audit_carry_freeness(ss).carry_free);
  EXPECT_EQ(audit_carry_freeness(ss).offending_columns, (std::vector<std::size_t>{1}));
}

TEST(SubsetSumJson, RoundTrip) {
  auto [cnf, vmap] = pipeline_cnf(3, 2, 9);
  auto [ss, dmap] = encode_subset_sum(cnf);
  std::string text = emit_subset_sum(ss);
  EXPECT_EQ(parse_subset_sum(text), ss);
  EXPECT_EQ(emit_subset_sum(parse_subset_sum(text)), text);
  EXPECT_EQ(parse_decode_map(emit_decode_map(dmap)), dmap);
  EXPECT_EQ(DecodeMap::from_instance(ss), dmap);
}

TEST(SubsetSumJson, EmptyInstanceRoundTrips) {
  auto [ss, dmap] = encode_subset_sum(CnfFormula(0));
  EXPECT_EQ(ss.item_count(), 0U);
  EXPECT_EQ(parse_subset_sum(emit_subset_sum(ss)), ss);
}

TEST(SubsetSumJson, RejectsMalformed) {
  EXPECT_THROW(parse_subset_sum("not json"), ParseError);
  EXPECT_THROW(digits_from_string("12a"), ParseError);
  EXPECT_THROW(ItemLabel::parse("Q:1"), ParseError);
  EXPECT_EQ(ItemLabel::parse("S2:7"), (ItemLabel{ItemKind::kSlack2, 7}));
}

TEST(PlantedSubsetSum, PlantedSelectionHitsTarget) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    PlantedInstance p = generate_planted_subset_sum(20, 12, seed);
    EXPECT_EQ(p.instance.item_count(), 20U);
    EXPECT_TRUE(sums_to_target(p.instance, p.planted));
    EXPECT_TRUE(audit_carry_freeness(p.instance).carry_free);
    EXPECT_THROW(DecodeMap::from_instance(p.instance), Error);
  }
}
