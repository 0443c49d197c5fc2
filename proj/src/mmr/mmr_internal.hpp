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

#ifndef REGRET_FORGE_SRC_MMR_MMR_INTERNAL_HPP_
#define REGRET_FORGE_SRC_MMR_MMR_INTERNAL_HPP_

#include <span>
#include <vector>

#include "regret_forge/bip.hpp"
#include "regret_forge/lp.hpp"

namespace regret_forge::mmr {

lp::LinearConstraint ToLinear(const IntConstraint& row);

// Rounds the first n entries of an LP/MILP point to a binary vector.
BinarySolution ExtractBinary(std::span<const double> values, int n);

// Branch-and-cut over the master model restricted by `extra_rows` (on x).
// Each y in `seeds` contributes an initial optimality cut.
struct BcResult {
  enum class End { kOptimal, kInfeasible, kStopped };
  End end = End::kInfeasible;
  std::optional<RegretEvaluation> best;
  long long best_iteration = 0;
  long long slave_solves = 0;
  // Valid lower bound on the restricted optimum (meaningful unless
  // kInfeasible).
  double best_bound = 0.0;
  std::vector<TraceEntry> trace;
};

BcResult RunBranchAndCut(const BipInstance& inst,
                         const std::vector<BinarySolution>& seeds,
                         const std::vector<lp::LinearConstraint>& extra_rows,
                         const TimeBudget& budget);

}  // namespace regret_forge::mmr

#endif  // REGRET_FORGE_SRC_MMR_MMR_INTERNAL_HPP_
