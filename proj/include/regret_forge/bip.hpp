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

// Domain types for binary programs with interval objective coefficients.

#ifndef REGRET_FORGE_BIP_HPP_
#define REGRET_FORGE_BIP_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "regret_forge/common.hpp"

namespace regret_forge::mmr {

struct IntTerm {
  int index = 0;
  int64_t coefficient = 0;

  bool operator==(const IntTerm&) const = default;
};

struct IntConstraint {
  std::vector<IntTerm> terms;
  Sense sense = Sense::kLessEqual;
  int64_t rhs = 0;

  bool operator==(const IntConstraint&) const = default;
};

struct BinarySolution {
  std::vector<uint8_t> bits;

  BinarySolution() = default;
  explicit BinarySolution(std::vector<uint8_t> b) : bits(std::move(b)) {}
  static BinarySolution Zeros(int n) {
    return BinarySolution(std::vector<uint8_t>(n, 0));
  }

  int size() const { return static_cast<int>(bits.size()); }
  bool operator[](int j) const { return bits[j] != 0; }
  std::string ToString() const;

  auto operator<=>(const BinarySolution&) const = default;
};

struct Scenario {
  std::vector<int64_t> costs;

  bool operator==(const Scenario&) const = default;
};

// A binary program with objective coefficients known only up to an interval
// [c_lo, c_hi]. All data are integers.
struct BipInstance {
  std::string name = "instance";
  Direction direction = Direction::kMaximize;
  int num_vars = 0;
  std::vector<int64_t> c_lo;
  std::vector<int64_t> c_hi;
  std::vector<IntConstraint> constraints;

  // Throws InvalidModel on inconsistent sizes, inverted intervals, bad indices
  // or an empty variable set.
  void Validate() const;

  bool IsFeasible(const BinarySolution& x) const;
  // Throws InfeasibleSolution when x has the wrong length or violates a row.
  void RequireFeasible(const BinarySolution& x) const;

  bool operator==(const BipInstance&) const = default;
};

// Objective value sum_j costs_j x_j.
int64_t Value(std::span<const int64_t> costs, const BinarySolution& x);

enum class Algorithm { kFix, kDs, kIdsH, kIdsB, kBc, kOracle };
const char* AlgorithmName(Algorithm algorithm);
std::optional<Algorithm> ParseAlgorithm(const std::string& name);

enum class ReportStatus { kOptimal, kFeasible, kTimeLimit, kInfeasible };
const char* ReportStatusName(ReportStatus status);
std::optional<ReportStatus> ParseReportStatus(const std::string& name);

struct RegretEvaluation {
  BinarySolution solution;
  Scenario worst_scenario;
  // Optimum of the classical problem under worst_scenario and a solution
  // attaining it.
  int64_t inner_optimum = 0;
  BinarySolution rival;
  int64_t own_value = 0;
  int64_t max_regret = 0;
  // False when the inner solve was cut off; max_regret is then only a lower
  // estimate.
  bool exact = true;
};

struct TraceEntry {
  long long iteration = 0;
  int64_t candidate_regret = 0;
  double model_objective = 0.0;
  int64_t best_regret = 0;  // best so far, including this entry
};

struct AlgorithmReport {
  Algorithm algorithm = Algorithm::kFix;
  std::optional<BinarySolution> incumbent;
  std::optional<int64_t> max_regret;
  int64_t lower_bound = 0;
  long long iterations = 0;
  // Iteration at which the incumbent was first found.
  long long best_iteration = 0;
  double elapsed_seconds = 0.0;
  ReportStatus status = ReportStatus::kInfeasible;
  std::vector<TraceEntry> trace;
};

}  // namespace regret_forge::mmr

#endif  // REGRET_FORGE_BIP_HPP_
