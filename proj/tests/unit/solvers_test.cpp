#include <algorithm>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pmsat/errors.hpp"
#include "pmsat/sat_encoding.hpp"
#include "pmsat/solvers.hpp"

using namespace pmsat;

TEST(SatEnumerate, MatchesBruteForceOracle) {
  CnfFormula f(3);
  f.add(Clause::padded({1, 2}));
  f.add(Clause::padded({-1, 3}));
  auto models = sat_enumerate(f);
  EXPECT_EQ(models, oracle::all_models(f));
  EXPECT_EQ(models.front(), Assignment({false, true, false}));
  EXPECT_EQ(sat_enumerate(CnfFormula(0)).size(), 1U);
  CnfFormula contradiction(1);
  contradiction.add(Clause::padded({1}));
  contradiction.add(Clause::padded({-1}));
  EXPECT_TRUE(sat_enumerate(contradiction).empty());
}

TEST(SatEnumerate, RefusesLargeFormulas) {
  EXPECT_THROW(sat_enumerate(CnfFormula(kSatEnumerateLimit + 1)), LimitExceeded);
  EXPECT_EQ(sat_enumerate(CnfFormula(10)).size(), 1024U);
}

TEST(UnitPropagation, ForcesChainHead) {
  auto [cnf, map] = encode_sat(generate_unique_violation(4, 2, 0));
  PropagationResult r = unit_propagate(cnf, PartialAssignment(cnf.var_count()));
  EXPECT_EQ(r.status, PropagationStatus::kStable);
  EXPECT_EQ(r.partial.get(map.chain_var(3)), Truth::kTrue);
}

TEST(UnitPropagation, SolvesPipelineFormulaFromScratch) {
  for (std::size_t n = 1; n <= 8; ++n) {
    PMatrixInstance inst = generate_unique_violation(n, (n + 2) / 3, n);
    auto [cnf, map] = encode_sat(inst);
    PropagationResult r = unit_propagate(cnf, PartialAssignment(cnf.var_count()));
    ASSERT_EQ(r.status, PropagationStatus::kStable);
    ASSERT_TRUE(r.partial.complete()) << n;
    EXPECT_EQ(decode_sat_solution(r.partial.to_assignment(), map), *inst.witness());
  }
}

TEST(UnitPropagation, ConflictWhenIndicatorContradictsWitness) {
  PMatrixInstance inst = generate_unique_violation(5, 2, 7);
  auto [cnf, map] = encode_sat(inst);
  for (std::size_t i = 0; i < 5; ++i) {
    PartialAssignment p(cnf.var_count());
    p.set(map.witness_var(i), !inst.witness()->contains(i));
    EXPECT_EQ(unit_propagate(cnf, p).status, PropagationStatus::kConflict) << i;
  }
}

TEST(UnitPropagation, PaddedRepeatsAreNotDoubleCounted) {
  CnfFormula f(2);
  f.add(Clause{{1, 1, 2}});
  PartialAssignment p(2);
  p.set(1, false);
  PropagationResult r = unit_propagate(f, p);
  EXPECT_EQ(r.status, PropagationStatus::kStable);
  EXPECT_EQ(r.partial.get(2), Truth::kTrue);
}

TEST(Ppsz, FirstTrialOnPipelineFormulas) {
  for (std::size_t n = 1; n <= 6; ++n) {
    PMatrixInstance inst = generate_unique_violation(n, 1 + n / 2, 50 + n);
    auto [cnf, map] = encode_sat(inst);
    PpszResult r = ppsz_solve(cnf, 1, 100000);
    ASSERT_TRUE(r.assignment);
    EXPECT_EQ(decode_sat_solution(*r.assignment, map), *inst.witness());
    EXPECT_EQ(r.log.trials, 1U);
    EXPECT_EQ(r.log.outcome, Outcome::kFound);
    EXPECT_EQ(r.log.d, 3 * n);
  }
}

TEST(Ppsz, ForcedSingleLiteral) {
  CnfFormula f(1);
  f.add(Clause{{1, 1, 1}});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    PpszResult r = ppsz_solve(f, seed, 10);
    ASSERT_TRUE(r.assignment);
    EXPECT_EQ(*r.assignment, Assignment({true}));
    EXPECT_EQ(r.log.trials, 1U);
  }
}

TEST(Ppsz, UnsatisfiableExhaustsBudget) {
  CnfFormula f(1);
  f.add(Clause::padded({1}));
  f.add(Clause::padded({-1}));
  PpszResult r = ppsz_solve(f, 3, 25);
  EXPECT_FALSE(r.assignment);
  EXPECT_EQ(r.log.outcome, Outcome::kExhausted);
  EXPECT_EQ(r.log.trials, 25U);
}

TEST(Ppsz, UnconstrainedPlantedTargetNeedsAboutTwoToTheN) {
  const std::size_t n = 10;
  CnfFormula empty(n);
  Assignment planted(n);
  for (std::size_t i = 0; i < n; ++i) planted[i] = (i % 3) == 0;
  double total = 0;
  const int runs = 200;
  for (int run = 0; run < runs; ++run) {
    PpszResult r = ppsz_solve(empty, 1000 + run, 1000000, [&](const Assignment& a) { return a == planted; });
    ASSERT_TRUE(r.assignment);
    total += static_cast<double>(r.log.trials);
  }
  // Geometric with p = 2^-10: mean 1024, sd of the mean about 72.
  EXPECT_NEAR(total / runs, 1024.0, 1024.0 * 0.2);
}

TEST(Ppsz, DeterministicPerSeed) {
  auto [cnf, map] = encode_sat(generate_unique_violation(5, 2, 1));
  EXPECT_EQ(ppsz_solve(cnf, 9, 100).log, ppsz_solve(cnf, 9, 100).log);
}

TEST(SubsetSumSolvers, BruteAndMitmAgreeOnPlanted) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    std::size_t items = 1 + seed % 16;
    PlantedInstance p = generate_planted_subset_sum(items, 6, seed);
    auto all = brute_force_subset_sum(p.instance);
    EXPECT_EQ(all, oracle::all_exact_sums(p.instance));
    ASSERT_FALSE(all.empty());
    EXPECT_NE(std::find(all.begin(), all.end(), p.planted), all.end());
    MitmResult m = mitm_subset_sum(p.instance);
    ASSERT_TRUE(m.solution);
    EXPECT_NE(std::find(all.begin(), all.end(), *m.solution), all.end());
    EXPECT_EQ(m.log.table_entries, std::uint64_t{1} << ((items + 1) / 2));
  }
}

TEST(SubsetSumSolvers, NoSolution) {
  SubsetSumInstance ss;
  ss.digit_count = 1;
  ss.items = {{{ItemKind::kPlain, 0}, {2}}, {{ItemKind::kPlain, 1}, {4}}};
  ss.target = {5};
  EXPECT_TRUE(brute_force_subset_sum(ss).empty());
  MitmResult m = mitm_subset_sum(ss);
  EXPECT_FALSE(m.solution);
  EXPECT_EQ(m.log.outcome, Outcome::kExhausted);
}

TEST(SubsetSumSolvers, MitmOnThirtyItems) {
  PlantedInstance p = generate_planted_subset_sum(30, 20, 5);
  MitmResult m = mitm_subset_sum(p.instance);
  ASSERT_TRUE(m.solution);
  EXPECT_TRUE(sums_to_target(p.instance, *m.solution));
  EXPECT_EQ(m.log.table_entries, 1U << 15);
  EXPECT_THROW(brute_force_subset_sum(p.instance), LimitExceeded);
}

TEST(SubsetSumSolvers, RefuseAboveLimits) {
  PlantedInstance p = generate_planted_subset_sum(kMitmItemLimit + 1, 4, 1);
  EXPECT_THROW(mitm_subset_sum(p.instance), LimitExceeded);
  auto [cnf, map] = encode_sat(generate_unique_violation(6, 3, 0));
  auto [ss, dmap] = encode_subset_sum(cnf);
  EXPECT_THROW(mitm_subset_sum(ss), LimitExceeded);
}

TEST(SubsetSumSolvers, PipelineInstanceAtOneIndex) {
  auto [cnf, map] = encode_sat(generate_unique_violation(1, 1, 0));
  auto [ss, dmap] = encode_subset_sum(cnf);
  auto all = brute_force_subset_sum(ss);
  ASSERT_EQ(all.size(), 1U);
  MitmResult m = mitm_subset_sum(ss);
  ASSERT_TRUE(m.solution);
  EXPECT_EQ(*m.solution, all[0]);
  EXPECT_EQ(decode_sat_solution(decode_subset_sum_solution(*m.solution, dmap), map), SubsetMask(1, 1));
}

TEST(TrialLog, JsonLine) {
  TrialLog log{"3sat", 6, 18, 42, 1, Outcome::kFound, 0, std::nullopt};
  std::string line = to_json_line(log);
  EXPECT_EQ(line.find('\n'), std::string::npos);
  EXPECT_NE(line.find("\"outcome\":\"found\""), std::string::npos);
  EXPECT_NE(line.find("\"millis\":null"), std::string::npos);
  EXPECT_STREQ(to_string(Outcome::kRefused), "refused");
}
