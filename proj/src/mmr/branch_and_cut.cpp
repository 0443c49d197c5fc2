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

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "mmr_internal.hpp"
#include "regret_forge/mmr.hpp"

namespace regret_forge::mmr {

namespace {

// Master model: x in [0, n), the inner-optimum estimate at index n.
//   MAX: min lambda - c_lo.x,  lambda + sum_j (c_hi - c_lo)_j y_j x_j >= c_hi.y
//   MIN: min c_hi.x - mu,      mu - sum_j (c_hi - c_lo)_j y_j x_j <= c_lo.y
// one optimality cut per rival y.
class Master {
 public:
  explicit Master(const BipInstance& inst) : inst_(inst) {
    const int n = inst.num_vars;
    max_ = inst.direction == Direction::kMaximize;
    lp::LpModel& base = model_.base;
    base.direction = Direction::kMinimize;
    double floor_sum = 0.0;
    double ceil_sum = 0.0;
    for (int j = 0; j < n; ++j) {
      base.AddVariable(0.0, 1.0,
                       max_ ? -static_cast<double>(inst.c_lo[j])
                           : static_cast<double>(inst.c_hi[j]));
      model_.binary_vars.push_back(j);
      floor_sum += std::min<double>(0.0, static_cast<double>(inst.c_lo[j]));
      ceil_sum += std::max<double>(0.0, static_cast<double>(inst.c_hi[j]));
    }
    // Loose but valid bounds keep the master bounded before any cut exists.
    if (max_) {
      base.AddVariable(floor_sum, kInfinity, 1.0);
    } else {
      base.AddVariable(-kInfinity, ceil_sum, -1.0);
    }
    for (const IntConstraint& row : inst.constraints) base.AddConstraint(ToLinear(row));
    model_.integral_objective = true;
  }

  bool max() const { return max_; }
  int estimate_index() const { return inst_.num_vars; }
  milp::MilpModel& model() { return model_; }
  const std::vector<double>& objective() const { return model_.base.objective; }

  lp::LinearConstraint OptimalityCut(const BinarySolution& y) const {
    lp::LinearConstraint cut;
    const int n = inst_.num_vars;
    cut.terms.push_back({n, 1.0});
    int64_t rhs = 0;
    for (int j = 0; j < n; ++j) {
      if (!y[j]) continue;
      const double spread = static_cast<double>(inst_.c_hi[j] - inst_.c_lo[j]);
      if (spread != 0.0) cut.terms.push_back({j, max_ ? spread : -spread});
      rhs += max_ ? inst_.c_hi[j] : inst_.c_lo[j];
    }
    cut.sense = max_ ? Sense::kGreaterEqual : Sense::kLessEqual;
    cut.rhs = static_cast<double>(rhs);
    return cut;
  }

 private:
  const BipInstance& inst_;
  bool max_ = true;
  milp::MilpModel model_;
};

class SlaveSeparator : public milp::LazyCutProvider {
 public:
  SlaveSeparator(const BipInstance& inst, const Master& master,
                 const TimeBudget& budget, BcResult& result)
      : inst_(inst), master_(master), budget_(budget), result_(result) {}

  milp::LazyDecision Check(std::span<const double> candidate) override {
    const BinarySolution x = ExtractBinary(candidate, inst_.num_vars);
    const double estimate = candidate[master_.estimate_index()];
    const std::string key = x.ToString();
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      SlaveResult slave = SlaveProblem(inst_, x, budget_);
      ++result_.slave_solves;
      if (slave.exact) RecordCandidate(x, slave, candidate);
      it = cache_.emplace(key, std::move(slave)).first;
    }
    const SlaveResult& slave = it->second;
    const double q = static_cast<double>(slave.value);
    const double threshold = 1e-6 * (1.0 + std::abs(estimate));
    const bool violated =
        master_.max() ? q > estimate + threshold : q < estimate - threshold;
    if (violated) {
      lp::LinearConstraint cut = master_.OptimalityCut(slave.y);
      if (cut.Violation(candidate) > tol_.Feasibility(cut.rhs)) {
        return milp::LazyDecision::Cut(std::move(cut));
      }
    }
    if (!slave.exact) {
      // The slave ran out of time without a violated cut; the candidate
      // cannot be certified, so the search stops here.
      cache_.erase(it);
      return milp::LazyDecision::Reject();
    }
    return milp::LazyDecision::Accept();
  }

 private:
  void RecordCandidate(const BinarySolution& x, const SlaveResult& slave,
                       std::span<const double> candidate) {
    RegretEvaluation eval;
    eval.solution = x;
    eval.worst_scenario = WorstScenario(inst_, x);
    eval.own_value = Value(eval.worst_scenario.costs, x);
    eval.inner_optimum = slave.value;
    eval.rival = slave.y;
    eval.max_regret = master_.max() ? slave.value - eval.own_value
                                    : eval.own_value - slave.value;
    double model_objective = 0.0;
    const std::vector<double>& objective = master_.objective();
    for (size_t j = 0; j < objective.size(); ++j) {
      model_objective += objective[j] * candidate[j];
    }
    const long long iteration = result_.slave_solves;
    if (!result_.best || eval.max_regret < result_.best->max_regret) {
      result_.best = eval;
      result_.best_iteration = iteration;
    }
    result_.trace.push_back(
        {iteration, eval.max_regret, model_objective, result_.best->max_regret});
  }

  const BipInstance& inst_;
  const Master& master_;
  const TimeBudget& budget_;
  BcResult& result_;
  ToleranceSet tol_;
  std::unordered_map<std::string, SlaveResult> cache_;
};

}  // namespace

BcResult RunBranchAndCut(const BipInstance& inst,
                         const std::vector<BinarySolution>& seeds,
                         const std::vector<lp::LinearConstraint>& extra_rows,
                         const TimeBudget& budget) {
  Master master(inst);
  for (const BinarySolution& y : seeds) {
    master.model().base.AddConstraint(master.OptimalityCut(y));
  }
  for (const lp::LinearConstraint& row : extra_rows) {
    master.model().base.AddConstraint(row);
  }
  BcResult result;
  SlaveSeparator separator(inst, master, budget, result);
  const milp::MilpOutcome outcome = milp::SolveMilp(master.model(), &separator, budget);
  result.best_bound = outcome.best_bound;
  switch (outcome.status) {
    case milp::MilpStatus::kOptimal:
      result.end = BcResult::End::kOptimal;
      break;
    case milp::MilpStatus::kInfeasible:
      result.end = BcResult::End::kInfeasible;
      break;
    default:
      result.end = BcResult::End::kStopped;
      break;
  }
  return result;
}

AlgorithmReport BranchAndCut(const BipInstance& inst, const TimeBudget& budget) {
  Stopwatch watch;
  AlgorithmReport report;
  report.algorithm = Algorithm::kBc;
  const AlgorithmReport fixed = FixedScenario(inst, budget);
  std::vector<BinarySolution> seeds;
  int64_t lower_bound = 0;
  if (fixed.incumbent) {
    seeds.push_back(*fixed.incumbent);
    lower_bound = fixed.lower_bound;
  }
  const BcResult run = RunBranchAndCut(inst, seeds, {}, budget);
  if (run.end == BcResult::End::kInfeasible) {
    throw InfeasibleInstance("instance " + inst.name + " has no feasible solution");
  }
  report.trace = run.trace;
  report.iterations = run.slave_solves;
  if (run.best) {
    report.incumbent = run.best->solution;
    report.max_regret = run.best->max_regret;
    report.best_iteration = run.best_iteration;
  }
  if (fixed.max_regret && (!report.max_regret || *fixed.max_regret < *report.max_regret)) {
    report.incumbent = fixed.incumbent;
    report.max_regret = fixed.max_regret;
    report.best_iteration = 0;
  }
  if (run.end == BcResult::End::kOptimal) {
    lower_bound = std::max(lower_bound, *report.max_regret);
  } else if (std::isfinite(run.best_bound)) {
    const double rounded = std::ceil(run.best_bound - 1e-6 * (1.0 + std::abs(run.best_bound)));
    lower_bound = std::max<int64_t>(lower_bound, static_cast<int64_t>(rounded));
  }
  if (report.max_regret) lower_bound = std::min(lower_bound, *report.max_regret);
  report.lower_bound = std::max<int64_t>(lower_bound, 0);
  if (report.max_regret && *report.max_regret == report.lower_bound) {
    report.status = ReportStatus::kOptimal;
  } else {
    report.status = ReportStatus::kTimeLimit;
  }
  report.elapsed_seconds = watch.Seconds();
  return report;
}

LocalRefineResult LocalExactRefine(const BipInstance& inst, const BinarySolution& xhat,
                                   int d, const TimeBudget& budget) {
  if (d < 2) throw ContractViolation("local refinement needs a radius of at least 2");
  inst.RequireFeasible(xhat);
  std::vector<lp::LinearConstraint> shell;
  shell.push_back(HammingCut(xhat, 1));
  // dist(x, xhat) <= d - 1
  lp::LinearConstraint inner;
  int ones = 0;
  for (int j = 0; j < inst.num_vars; ++j) {
    inner.terms.push_back({j, xhat[j] ? -1.0 : 1.0});
    if (xhat[j]) ++ones;
  }
  inner.sense = Sense::kLessEqual;
  inner.rhs = static_cast<double>(d - 1 - ones);
  shell.push_back(std::move(inner));

  const BcResult run = RunBranchAndCut(inst, {xhat}, shell, budget);
  LocalRefineResult result;
  result.best = run.best;
  switch (run.end) {
    case BcResult::End::kOptimal:
      result.status = LocalStatus::kOptimal;
      break;
    case BcResult::End::kInfeasible:
      result.status = LocalStatus::kInfeasible;
      result.best.reset();
      break;
    case BcResult::End::kStopped:
      result.status = LocalStatus::kTimeLimit;
      break;
  }
  return result;
}

}  // namespace regret_forge::mmr
