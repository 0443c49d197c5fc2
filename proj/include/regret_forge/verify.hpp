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

// Self-checks against the brute-force oracle on small random instances. Used
// by the `verify` command and the acceptance suite.

#ifndef REGRET_FORGE_VERIFY_HPP_
#define REGRET_FORGE_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "regret_forge/bench.hpp"

namespace regret_forge::bench {

struct CorpusSpec {
  Direction direction = Direction::kMaximize;
  int count = 200;
  uint64_t seed = 1;
  int min_vars = 4;
  int max_vars = 12;
  int max_rows = 3;
  std::vector<double> deltas = {0.1, 0.3};
  int64_t cost_min = 50;
  int64_t cost_max = 100;
  double tightness = 0.5;
};

// Instance k draws its size, row count and width from a generator seeded with
// seed + k, so corpora of different lengths share their prefix.
std::vector<mmr::BipInstance> BuildCorpus(const CorpusSpec& spec);

struct CheckResult {
  std::string name;
  long long checked = 0;
  long long violations = 0;
  std::string first_failure;

  bool passed() const { return checked > 0 && violations == 0; }
};

std::vector<int64_t> OracleOptima(const std::vector<mmr::BipInstance>& corpus);

// The algorithm must report OPTIMAL with exactly the oracle optimum.
CheckResult CheckExactness(const std::vector<mmr::BipInstance>& corpus,
                           const std::vector<int64_t>& optima,
                           const RunOptions& options);
// Fixed-scenario regret at most twice the optimum.
CheckResult CheckFixedScenarioBound(const std::vector<mmr::BipInstance>& corpus,
                                    const std::vector<int64_t>& optima);
// Single-level model objective bounds the optimum from above, and the
// evaluated regret of its solution does not exceed that objective.
CheckResult CheckDsBounds(const std::vector<mmr::BipInstance>& corpus,
                          const std::vector<int64_t>& optima);
// Sampled feasible pairs: whenever dominance holds, the oracle regret of the
// dominating solution is not larger. `checked` counts sampled pairs.
CheckResult CheckDominance(const std::vector<mmr::BipInstance>& corpus, int pairs,
                           uint64_t seed, long long* dominated_pairs = nullptr);
// For every feasible xhat of instances up to `max_vars` variables, the
// feasible points violating BestScenarioCut(xhat) are exactly those dominated
// by xhat.
CheckResult CheckCutRemovesDominated(const std::vector<mmr::BipInstance>& corpus,
                                     int max_vars);
// Multiplying every cost by k multiplies the optimum by k and keeps the
// optimal set. Checked with branch-and-cut against the oracle.
CheckResult CheckScaling(const std::vector<mmr::BipInstance>& corpus, int64_t k);

}  // namespace regret_forge::bench

#endif  // REGRET_FORGE_VERIFY_HPP_
