// Copyright 2026 The regret-forge Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "regret_forge/instances.hpp"
#include "regret_forge/mmr.hpp"
#include "regret_forge/oracle.hpp"

namespace regret_forge::oracle {
namespace {

using mmr::BinarySolution;
using mmr::BipInstance;

BipInstance TwoItemsOneSlot() {
  BipInstance inst;
  inst.num_vars = 2;
  inst.c_lo = {4, 4};
  inst.c_hi = {6, 6};
  inst.constraints.push_back({{{0, 1}, {1, 1}}, Sense::kLessEqual, 1});
  return inst;
}

TEST(BruteForceMmr, SingleUnconstrainedItem) {
  BipInstance inst;
  inst.num_vars = 1;
  inst.c_lo = {2};
  inst.c_hi = {4};
  const mmr::AlgorithmReport report = BruteForceMmr(inst);
  EXPECT_EQ(*report.max_regret, 0);
  EXPECT_EQ(*report.incumbent, BinarySolution({1}));
  EXPECT_EQ(report.status, mmr::ReportStatus::kOptimal);
}

TEST(BruteForceMmr, EmptyFeasibleSet) {
  BipInstance inst = TwoItemsOneSlot();
  inst.constraints.push_back({{{0, 1}}, Sense::kGreaterEqual, 2});
  const mmr::AlgorithmReport report = BruteForceMmr(inst);
  EXPECT_EQ(report.status, mmr::ReportStatus::kInfeasible);
  EXPECT_FALSE(report.max_regret.has_value());
}

TEST(BruteForceMmr, TwoItemsOneSlotTieBreaksLexicographically) {
  const mmr::AlgorithmReport report = BruteForceMmr(TwoItemsOneSlot());
  EXPECT_EQ(*report.max_regret, 2);
  // (0,1) and (1,0) tie; x_0 = 0 comes first.
  EXPECT_EQ(*report.incumbent, BinarySolution({0, 1}));
}

TEST(BruteForceMmr, SizeGuard) {
  BipInstance inst;
  inst.num_vars = kMmrVars + 1;
  inst.c_lo.assign(inst.num_vars, 0);
  inst.c_hi.assign(inst.num_vars, 1);
  EXPECT_THROW(BruteForceMmr(inst), TooLarge);
  inst.num_vars = kMaxRegretVars + 1;
  inst.c_lo.assign(inst.num_vars, 0);
  inst.c_hi.assign(inst.num_vars, 1);
  EXPECT_THROW(BruteForceMaxRegret(inst, BinarySolution::Zeros(inst.num_vars)), TooLarge);
}

TEST(BruteForceMaxRegret, DegenerateAndInfeasible) {
  BipInstance inst;
  inst.num_vars = 2;
  inst.c_lo = {5, 7};
  inst.c_hi = {5, 7};
  inst.constraints.push_back({{{0, 2}, {1, 3}}, Sense::kLessEqual, 5});
  EXPECT_EQ(BruteForceMaxRegret(inst, BinarySolution({1, 1})).max_regret, 0);
  inst.constraints[0].rhs = 4;
  EXPECT_THROW(BruteForceMaxRegret(inst, BinarySolution({1, 1})), InfeasibleSolution);
}

TEST(BruteForceMaxRegret, AgreesWithSolverEvaluation) {
  instances::Rng rng(99);
  int checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    instances::RandomInstanceSpec spec;
    spec.direction = trial % 2 ? Direction::kMaximize : Direction::kMinimize;
    spec.num_vars = 1 + trial % 10;
    spec.num_rows = trial % 3;
    spec.delta = 0.3;
    const BipInstance inst = instances::GenerateRandom(spec, rng);
    const std::vector<BinarySolution> feasible = EnumerateFeasible(inst);
    if (feasible.empty()) continue;
    const BinarySolution& x =
        feasible[rng.UniformInt(0, static_cast<int64_t>(feasible.size()) - 1)];
    const mmr::RegretEvaluation brute = BruteForceMaxRegret(inst, x);
    const mmr::RegretEvaluation solver = mmr::EvaluateMaxRegret(inst, x);
    EXPECT_EQ(brute.max_regret, solver.max_regret) << trial;
    EXPECT_EQ(brute.inner_optimum, solver.inner_optimum) << trial;
    EXPECT_EQ(brute.own_value, solver.own_value) << trial;
    EXPECT_TRUE(solver.exact);
    EXPECT_GE(solver.max_regret, 0);
    ++checked;
  }
  EXPECT_GT(checked, 400);
}

TEST(EnumerateFeasible, CountsKnapsackPoints) {
  // a = (1,2,3), b = 5: only (1,1,1) is too heavy.
  BipInstance inst;
  inst.num_vars = 3;
  inst.c_lo = {6, 10, 12};
  inst.c_hi = {6, 10, 12};
  inst.constraints.push_back({{{0, 1}, {1, 2}, {2, 3}}, Sense::kLessEqual, 5});
  EXPECT_EQ(EnumerateFeasible(inst).size(), 7u);
}

}  // namespace
}  // namespace regret_forge::oracle
