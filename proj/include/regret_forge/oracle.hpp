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

// Exhaustive-enumeration reference solvers. Only meant for tiny instances in
// tests and acceptance runs.

#ifndef REGRET_FORGE_ORACLE_HPP_
#define REGRET_FORGE_ORACLE_HPP_

#include "regret_forge/bip.hpp"

namespace regret_forge::oracle {

inline constexpr int kMaxRegretVars = 20;
inline constexpr int kMmrVars = 14;

// Throws TooLarge above kMaxRegretVars, InfeasibleSolution when x is not in X0.
mmr::RegretEvaluation BruteForceMaxRegret(const mmr::BipInstance& inst,
                                          const mmr::BinarySolution& x);

// Exact min-max regret; ties go to the lexicographically smallest bit vector
// (x_0 compared first). Status INFEASIBLE when X0 is empty. Throws TooLarge
// above kMmrVars.
mmr::AlgorithmReport BruteForceMmr(const mmr::BipInstance& inst);

// Every feasible binary vector, in increasing mask order (bit j = x_j).
std::vector<mmr::BinarySolution> EnumerateFeasible(const mmr::BipInstance& inst);

}  // namespace regret_forge::oracle

#endif  // REGRET_FORGE_ORACLE_HPP_
