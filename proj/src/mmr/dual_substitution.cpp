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

#include "mmr_internal.hpp"
#include "regret_forge/mmr.hpp"

namespace regret_forge::mmr {

milp::MilpModel BuildDsModel(const BipInstance& inst) {
  inst.Validate();
  const int n = inst.num_vars;
  const int m = static_cast<int>(inst.constraints.size());
  const bool max = inst.direction == Direction::kMaximize;
  milp::MilpModel model;
  lp::LpModel& base = model.base;
  base.direction = Direction::kMinimize;

  // Inner problem under sigma(x): max (or min) sum_j sigma_j y_j over the LP
  // relaxation of X0 with 0 <= y <= 1. Its dual replaces it; row multipliers
  // take the sign dictated by each row sense, bound multipliers are >= 0.
  for (int j = 0; j < n; ++j) {
    const double cost = max ? -static_cast<double>(inst.c_lo[j])
                            : static_cast<double>(inst.c_hi[j]);
    base.AddVariable(0.0, 1.0, cost);
    model.binary_vars.push_back(j);
  }
  for (int i = 0; i < m; ++i) {
    const IntConstraint& row = inst.constraints[i];
    double lo = -kInfinity;
    double hi = kInfinity;
    if (row.sense == Sense::kLessEqual) (max ? lo : hi) = 0.0;
    if (row.sense == Sense::kGreaterEqual) (max ? hi : lo) = 0.0;
    const double b = static_cast<double>(row.rhs);
    base.AddVariable(lo, hi, max ? b : -b);
  }
  for (int j = 0; j < n; ++j) base.AddVariable(0.0, kInfinity, 1.0);

  std::vector<lp::LinearConstraint> dual_rows(n);
  for (int i = 0; i < m; ++i) {
    for (const IntTerm& t : inst.constraints[i].terms) {
      dual_rows[t.index].terms.push_back(
          {n + i, static_cast<double>(t.coefficient)});
    }
  }
  for (int j = 0; j < n; ++j) {
    lp::LinearConstraint& row = dual_rows[j];
    const double spread = static_cast<double>(inst.c_hi[j] - inst.c_lo[j]);
    if (max) {
      // sum_i a_ij u_i + v_j >= c_hi_j + (c_lo_j - c_hi_j) x_j
      row.terms.push_back({n + m + j, 1.0});
      if (spread != 0.0) row.terms.push_back({j, spread});
      row.sense = Sense::kGreaterEqual;
      row.rhs = static_cast<double>(inst.c_hi[j]);
    } else {
      // sum_i a_ij u_i - w_j <= c_lo_j + (c_hi_j - c_lo_j) x_j
      row.terms.push_back({n + m + j, -1.0});
      if (spread != 0.0) row.terms.push_back({j, -spread});
      row.sense = Sense::kLessEqual;
      row.rhs = static_cast<double>(inst.c_lo[j]);
    }
    base.AddConstraint(std::move(row));
  }
  for (const IntConstraint& row : inst.constraints) base.AddConstraint(ToLinear(row));
  return model;
}

namespace {

void Record(AlgorithmReport& report, const RegretEvaluation& eval,
            long long iteration, double model_objective) {
  if (!report.max_regret || eval.max_regret < *report.max_regret) {
    report.incumbent = eval.solution;
    report.max_regret = eval.max_regret;
    report.best_iteration = iteration;
  }
  report.trace.push_back(
      {iteration, eval.max_regret, model_objective, *report.max_regret});
}

}  // namespace

AlgorithmReport DualSubstitution(const BipInstance& inst, const TimeBudget& budget) {
  Stopwatch watch;
  AlgorithmReport report;
  report.algorithm = Algorithm::kDs;
  const milp::MilpOutcome outcome = milp::SolveMilp(BuildDsModel(inst), nullptr, budget);
  if (outcome.status == milp::MilpStatus::kInfeasible) {
    throw InfeasibleInstance("instance " + inst.name + " has no feasible solution");
  }
  if (outcome.incumbent) {
    const BinarySolution x = ExtractBinary(*outcome.incumbent, inst.num_vars);
    Record(report, EvaluateMaxRegret(inst, x), 1, *outcome.objective_value);
    report.iterations = 1;
  }
  if (report.max_regret && *report.max_regret == 0) {
    report.status = ReportStatus::kOptimal;
  } else if (outcome.status == milp::MilpStatus::kOptimal) {
    report.status = ReportStatus::kFeasible;
  } else {
    report.status = ReportStatus::kTimeLimit;
  }
  report.elapsed_seconds = watch.Seconds();
  return report;
}

AlgorithmReport IteratedDs(const BipInstance& inst, const IdsConfig& config) {
  const bool best_scenario = config.cut_flavor == CutFlavor::kBestScenario;
  if (!best_scenario && config.d < 1) {
    throw ContractViolation("Hamming radius must be at least 1");
  }
  const bool refine = !best_scenario && config.local_exact && config.d >= 2;
  Stopwatch watch;
  AlgorithmReport report;
  report.algorithm = best_scenario ? Algorithm::kIdsB : Algorithm::kIdsH;
  milp::BranchAndBound search(BuildDsModel(inst));
  // Whether running out of candidates proves the incumbent optimal.
  bool exhaustive = best_scenario || config.d == 1 || refine;
  bool emptied = false;
  long long iteration = 0;
  while (!config.budget.Expired()) {
    const milp::MilpOutcome outcome = search.Solve(config.budget);
    if (outcome.status == milp::MilpStatus::kInfeasible) {
      if (iteration == 0) {
        throw InfeasibleInstance("instance " + inst.name + " has no feasible solution");
      }
      emptied = true;
      break;
    }
    if (!outcome.incumbent) break;
    ++iteration;
    const BinarySolution x = ExtractBinary(*outcome.incumbent, inst.num_vars);
    const RegretEvaluation eval = EvaluateMaxRegret(inst, x);
    Record(report, eval, iteration, *outcome.objective_value);
    if (outcome.status != milp::MilpStatus::kOptimal) break;  // budget expired
    if (refine) {
      const LocalRefineResult local = LocalExactRefine(inst, x, config.d, config.budget);
      if (local.status == LocalStatus::kTimeLimit) exhaustive = false;
      if (local.best && local.best->max_regret < *report.max_regret) {
        report.incumbent = local.best->solution;
        report.max_regret = local.best->max_regret;
        report.best_iteration = iteration;
        report.trace.back().best_regret = local.best->max_regret;
      }
    }
    if (*report.max_regret == 0) {
      emptied = true;
      exhaustive = true;
      break;
    }
    search.AddGlobalConstraint(best_scenario ? BestScenarioCut(inst, x)
                                             : HammingCut(x, config.d));
  }
  report.iterations = iteration;
  if (emptied && exhaustive) {
    report.status = ReportStatus::kOptimal;
    report.lower_bound = *report.max_regret;
  } else if (emptied) {
    report.status = ReportStatus::kFeasible;
  } else {
    report.status = ReportStatus::kTimeLimit;
  }
  report.elapsed_seconds = watch.Seconds();
  return report;
}

}  // namespace regret_forge::mmr
