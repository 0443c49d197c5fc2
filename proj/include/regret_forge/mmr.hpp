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

// Min-max regret algorithms for interval binary programs.
//
// For a maximization instance the regret of x under scenario s is
// max_{y in X0} s.y - s.x; for a minimization instance it is
// s.x - min_{y in X0} s.y. The maximum over all scenarios is attained at the
// extreme scenario WorstScenario(x), so every max-regret value here comes
// from one exact inner solve.
//
// Models built by this module place the decision vector x at indices
// [0, num_vars).

#ifndef REGRET_FORGE_MMR_HPP_
#define REGRET_FORGE_MMR_HPP_

#include <vector>

#include "regret_forge/bip.hpp"
#include "regret_forge/milp.hpp"

namespace regret_forge::mmr {

// Extreme scenario that maximizes the regret of x: selected items at their
// least favorable bound (c_lo when maximizing, c_hi when minimizing), the
// others at their most favorable one.
Scenario WorstScenario(const BipInstance& inst, const BinarySolution& x);
// Mirror image of WorstScenario.
Scenario BestScenario(const BipInstance& inst, const BinarySolution& x);

// The classical problem over X0 with the given objective.
milp::MilpModel BuildClassicalModel(const BipInstance& inst,
                                    std::span<const int64_t> costs);

struct SlaveResult {
  BinarySolution y;
  int64_t value = 0;
  bool exact = true;
};

// Exact optimum of the classical problem under WorstScenario(x). Shared by
// regret evaluation and the branch-and-cut separation routine.
SlaveResult SlaveProblem(const BipInstance& inst, const BinarySolution& x,
                         const TimeBudget& budget = {});

RegretEvaluation EvaluateMaxRegret(const BipInstance& inst,
                                   const BinarySolution& x,
                                   const TimeBudget& budget = {});

// Solves the classical problem under the median scenario (c_lo + c_hi) / 2
// and reports its max regret; ceil(regret / 2) is a valid lower bound.
AlgorithmReport FixedScenario(const BipInstance& inst,
                              const TimeBudget& budget = {});

// Single-level model obtained by replacing the inner problem with the dual of
// its LP relaxation. Variable layout: x in [0, n), one multiplier per
// instance row in [n, n + m), one multiplier per upper bound y_j <= 1 in
// [n + m, 2n + m). Always a minimization.
milp::MilpModel BuildDsModel(const BipInstance& inst);

AlgorithmReport DualSubstitution(const BipInstance& inst,
                                 const TimeBudget& budget = {});

// sum_{xhat_j = 0} x_j + sum_{xhat_j = 1} (1 - x_j) >= d, with the constant
// moved to the right-hand side.
lp::LinearConstraint HammingCut(const BinarySolution& xhat, int d);

// Removes every solution dominated by xhat (see DominanceHolds), including
// xhat itself. Requires integral data.
lp::LinearConstraint BestScenarioCut(const BipInstance& inst,
                                     const BinarySolution& xhat);

// True when xhat is at least as good as xbar under the scenario most
// favorable to xbar; then r_max(xhat) <= r_max(xbar).
bool DominanceHolds(const BipInstance& inst, const BinarySolution& xbar,
                    const BinarySolution& xhat);

enum class CutFlavor { kHamming, kBestScenario };

struct IdsConfig {
  CutFlavor cut_flavor = CutFlavor::kBestScenario;
  int d = 1;
  bool local_exact = false;
  TimeBudget budget;
};

AlgorithmReport IteratedDs(const BipInstance& inst, const IdsConfig& config);

enum class LocalStatus { kOptimal, kInfeasible, kTimeLimit };

struct LocalRefineResult {
  LocalStatus status = LocalStatus::kInfeasible;
  std::optional<RegretEvaluation> best;
};

// Exact min-max regret over the Hamming shell 1 <= dist(x, xhat) <= d - 1.
LocalRefineResult LocalExactRefine(const BipInstance& inst,
                                   const BinarySolution& xhat, int d,
                                   const TimeBudget& budget = {});

AlgorithmReport BranchAndCut(const BipInstance& inst,
                             const TimeBudget& budget = {});

}  // namespace regret_forge::mmr

#endif  // REGRET_FORGE_MMR_HPP_
