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

#include <bit>
#include <cstdint>
#include <string>

#include "regret_forge/mmr.hpp"
#include "regret_forge/oracle.hpp"

namespace regret_forge::oracle {

using mmr::BinarySolution;
using mmr::BipInstance;

namespace {

void RequireSize(const BipInstance& inst, int limit) {
  inst.Validate();
  if (inst.num_vars > limit) {
    throw TooLarge("enumeration limited to " + std::to_string(limit) +
                   " variables, instance has " + std::to_string(inst.num_vars));
  }
}

// Subset sums of `weights` for every mask, built from the mask without its
// lowest bit.
std::vector<int64_t> SubsetSums(std::span<const int64_t> weights) {
  const size_t count = size_t{1} << weights.size();
  std::vector<int64_t> sums(count, 0);
  for (size_t mask = 1; mask < count; ++mask) {
    const int low = std::countr_zero(mask);
    sums[mask] = sums[mask & (mask - 1)] + weights[low];
  }
  return sums;
}

std::vector<uint32_t> FeasibleMasks(const BipInstance& inst) {
  const int n = inst.num_vars;
  const size_t count = size_t{1} << n;
  std::vector<uint8_t> ok(count, 1);
  std::vector<int64_t> row_weights(n);
  for (const mmr::IntConstraint& row : inst.constraints) {
    std::fill(row_weights.begin(), row_weights.end(), 0);
    for (const mmr::IntTerm& t : row.terms) row_weights[t.index] += t.coefficient;
    const std::vector<int64_t> activity = SubsetSums(row_weights);
    for (size_t mask = 0; mask < count; ++mask) {
      const int64_t a = activity[mask];
      const bool satisfied = row.sense == Sense::kLessEqual      ? a <= row.rhs
                             : row.sense == Sense::kGreaterEqual ? a >= row.rhs
                                                                 : a == row.rhs;
      if (!satisfied) ok[mask] = 0;
    }
  }
  std::vector<uint32_t> masks;
  for (size_t mask = 0; mask < count; ++mask) {
    if (ok[mask]) masks.push_back(static_cast<uint32_t>(mask));
  }
  return masks;
}

BinarySolution FromMask(uint32_t mask, int n) {
  BinarySolution x = BinarySolution::Zeros(n);
  for (int j = 0; j < n; ++j) x.bits[j] = (mask >> j) & 1u;
  return x;
}

uint32_t ToMask(const BinarySolution& x) {
  uint32_t mask = 0;
  for (int j = 0; j < x.size(); ++j) {
    if (x[j]) mask |= 1u << j;
  }
  return mask;
}

}  // namespace

std::vector<BinarySolution> EnumerateFeasible(const BipInstance& inst) {
  RequireSize(inst, kMaxRegretVars);
  std::vector<BinarySolution> out;
  for (uint32_t mask : FeasibleMasks(inst)) out.push_back(FromMask(mask, inst.num_vars));
  return out;
}

mmr::RegretEvaluation BruteForceMaxRegret(const BipInstance& inst,
                                          const BinarySolution& x) {
  RequireSize(inst, kMaxRegretVars);
  inst.RequireFeasible(x);
  const bool max = inst.direction == Direction::kMaximize;
  mmr::RegretEvaluation eval;
  eval.solution = x;
  eval.worst_scenario = mmr::WorstScenario(inst, x);
  eval.own_value = mmr::Value(eval.worst_scenario.costs, x);
  const std::vector<int64_t> value = SubsetSums(eval.worst_scenario.costs);
  uint32_t best = ToMask(x);
  for (uint32_t mask : FeasibleMasks(inst)) {
    if (max ? value[mask] > value[best] : value[mask] < value[best]) best = mask;
  }
  eval.rival = FromMask(best, inst.num_vars);
  eval.inner_optimum = value[best];
  eval.max_regret = max ? eval.inner_optimum - eval.own_value
                        : eval.own_value - eval.inner_optimum;
  return eval;
}

mmr::AlgorithmReport BruteForceMmr(const BipInstance& inst) {
  RequireSize(inst, kMmrVars);
  Stopwatch watch;
  const int n = inst.num_vars;
  const bool max = inst.direction == Direction::kMaximize;
  mmr::AlgorithmReport report;
  report.algorithm = mmr::Algorithm::kOracle;
  const std::vector<uint32_t> feasible = FeasibleMasks(inst);
  if (feasible.empty()) {
    report.status = mmr::ReportStatus::kInfeasible;
    report.elapsed_seconds = watch.Seconds();
    return report;
  }
  std::vector<int64_t> spread(n);
  for (int j = 0; j < n; ++j) spread[j] = inst.c_hi[j] - inst.c_lo[j];
  const std::vector<int64_t> hi = SubsetSums(inst.c_hi);
  const std::vector<int64_t> lo = SubsetSums(inst.c_lo);
  const std::vector<int64_t> gap = SubsetSums(spread);

  // Under the worst scenario of x, a rival y is worth
  //   MAX: c_hi(y) - spread(x & y)     (own value c_lo(x))
  //   MIN: c_lo(y) + spread(x & y)     (own value c_hi(x))
  std::optional<BinarySolution> best;
  int64_t best_regret = 0;
  for (uint32_t x : feasible) {
    int64_t inner = max ? hi[x] - gap[x] : lo[x] + gap[x];
    for (uint32_t y : feasible) {
      const int64_t v = max ? hi[y] - gap[x & y] : lo[y] + gap[x & y];
      inner = max ? std::max(inner, v) : std::min(inner, v);
    }
    const int64_t regret = max ? inner - lo[x] : hi[x] - inner;
    BinarySolution candidate = FromMask(x, n);
    if (!best || regret < best_regret ||
        (regret == best_regret && candidate < *best)) {
      best = std::move(candidate);
      best_regret = regret;
    }
  }
  report.incumbent = best;
  report.max_regret = best_regret;
  report.lower_bound = best_regret;
  report.iterations = static_cast<long long>(feasible.size());
  report.best_iteration = report.iterations;
  report.status = mmr::ReportStatus::kOptimal;
  report.elapsed_seconds = watch.Seconds();
  return report;
}

}  // namespace regret_forge::oracle
