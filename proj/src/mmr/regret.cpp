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

namespace {

bool Maximizing(const BipInstance& inst) {
  return inst.direction == Direction::kMaximize;
}

}  // namespace

Scenario WorstScenario(const BipInstance& inst, const BinarySolution& x) {
  Scenario s;
  s.costs.resize(inst.num_vars);
  const bool max = Maximizing(inst);
  for (int j = 0; j < inst.num_vars; ++j) {
    const bool selected = x[j];
    s.costs[j] = (selected == max) ? inst.c_lo[j] : inst.c_hi[j];
  }
  return s;
}

Scenario BestScenario(const BipInstance& inst, const BinarySolution& x) {
  Scenario s;
  s.costs.resize(inst.num_vars);
  const bool max = Maximizing(inst);
  for (int j = 0; j < inst.num_vars; ++j) {
    const bool selected = x[j];
    s.costs[j] = (selected == max) ? inst.c_hi[j] : inst.c_lo[j];
  }
  return s;
}

lp::LinearConstraint ToLinear(const IntConstraint& row) {
  lp::LinearConstraint out;
  out.sense = row.sense;
  out.rhs = static_cast<double>(row.rhs);
  out.terms.reserve(row.terms.size());
  for (const IntTerm& t : row.terms) {
    out.terms.push_back({t.index, static_cast<double>(t.coefficient)});
  }
  return out;
}

milp::MilpModel BuildClassicalModel(const BipInstance& inst,
                                    std::span<const int64_t> costs) {
  milp::MilpModel model;
  model.base.direction = inst.direction;
  for (int j = 0; j < inst.num_vars; ++j) {
    model.base.AddVariable(0.0, 1.0, static_cast<double>(costs[j]));
    model.binary_vars.push_back(j);
  }
  for (const IntConstraint& row : inst.constraints) {
    model.base.AddConstraint(ToLinear(row));
  }
  model.integral_objective = true;
  return model;
}

BinarySolution ExtractBinary(std::span<const double> values, int n) {
  BinarySolution x = BinarySolution::Zeros(n);
  for (int j = 0; j < n; ++j) x.bits[j] = values[j] > 0.5 ? 1 : 0;
  return x;
}

SlaveResult SlaveProblem(const BipInstance& inst, const BinarySolution& x,
                         const TimeBudget& budget) {
  const Scenario worst = WorstScenario(inst, x);
  const milp::MilpOutcome outcome = milp::SolveMilp(
      BuildClassicalModel(inst, worst.costs), nullptr, budget);
  SlaveResult result;
  switch (outcome.status) {
    case milp::MilpStatus::kOptimal:
      result.y = ExtractBinary(*outcome.incumbent, inst.num_vars);
      result.exact = true;
      break;
    case milp::MilpStatus::kFeasible:
      result.y = ExtractBinary(*outcome.incumbent, inst.num_vars);
      result.exact = false;
      break;
    case milp::MilpStatus::kInfeasible:
      throw InfeasibleInstance("instance " + inst.name +
                               " has no feasible solution");
    case milp::MilpStatus::kTimeLimit:
      // No rival found in time; x itself is the only certified candidate.
      result.y = x;
      result.exact = false;
      break;
  }
  result.value = Value(worst.costs, result.y);
  return result;
}

RegretEvaluation EvaluateMaxRegret(const BipInstance& inst,
                                   const BinarySolution& x,
                                   const TimeBudget& budget) {
  inst.RequireFeasible(x);
  RegretEvaluation eval;
  eval.solution = x;
  eval.worst_scenario = WorstScenario(inst, x);
  eval.own_value = Value(eval.worst_scenario.costs, x);
  SlaveResult slave = SlaveProblem(inst, x, budget);
  const bool max = Maximizing(inst);
  // x is itself a feasible rival, so the regret is never negative.
  const bool rival_better =
      max ? slave.value > eval.own_value : slave.value < eval.own_value;
  if (rival_better) {
    eval.rival = std::move(slave.y);
    eval.inner_optimum = slave.value;
  } else {
    eval.rival = x;
    eval.inner_optimum = eval.own_value;
  }
  eval.max_regret = max ? eval.inner_optimum - eval.own_value
                        : eval.own_value - eval.inner_optimum;
  eval.exact = slave.exact;
  return eval;
}

AlgorithmReport FixedScenario(const BipInstance& inst, const TimeBudget& budget) {
  inst.Validate();
  Stopwatch watch;
  AlgorithmReport report;
  report.algorithm = Algorithm::kFix;
  // Median costs doubled to stay integral; the optimizer set is unchanged.
  std::vector<int64_t> doubled(inst.num_vars);
  for (int j = 0; j < inst.num_vars; ++j) doubled[j] = inst.c_lo[j] + inst.c_hi[j];
  const milp::MilpOutcome outcome =
      milp::SolveMilp(BuildClassicalModel(inst, doubled), nullptr, budget);
  if (outcome.status == milp::MilpStatus::kInfeasible) {
    throw InfeasibleInstance("instance " + inst.name + " has no feasible solution");
  }
  if (outcome.status == milp::MilpStatus::kTimeLimit) {
    report.status = ReportStatus::kTimeLimit;
    report.elapsed_seconds = watch.Seconds();
    return report;
  }
  const BinarySolution x = ExtractBinary(*outcome.incumbent, inst.num_vars);
  const RegretEvaluation eval = EvaluateMaxRegret(inst, x);
  report.incumbent = x;
  report.max_regret = eval.max_regret;
  report.iterations = 1;
  report.best_iteration = 1;
  if (outcome.status == milp::MilpStatus::kOptimal) {
    report.lower_bound = (eval.max_regret + 1) / 2;
  }
  report.status = report.lower_bound == eval.max_regret ? ReportStatus::kOptimal
                                                        : ReportStatus::kFeasible;
  report.trace.push_back({1, eval.max_regret,
                          outcome.objective_value.value_or(0.0),
                          eval.max_regret});
  report.elapsed_seconds = watch.Seconds();
  return report;
}

lp::LinearConstraint HammingCut(const BinarySolution& xhat, int d) {
  if (d < 1) throw ContractViolation("Hamming radius must be at least 1");
  lp::LinearConstraint cut;
  cut.sense = Sense::kGreaterEqual;
  int ones = 0;
  for (int j = 0; j < xhat.size(); ++j) {
    if (xhat[j]) {
      cut.terms.push_back({j, -1.0});
      ++ones;
    } else {
      cut.terms.push_back({j, 1.0});
    }
  }
  cut.rhs = static_cast<double>(d - ones);
  return cut;
}

lp::LinearConstraint BestScenarioCut(const BipInstance& inst,
                                     const BinarySolution& xhat) {
  // Data are int64 by construction; the strict inequality tightens by one.
  // Coefficients must stay exactly representable for that to be sound.
  constexpr int64_t kExactDoubleLimit = int64_t{1} << 53;
  for (int j = 0; j < inst.num_vars; ++j) {
    if (std::abs(inst.c_lo[j]) >= kExactDoubleLimit ||
        std::abs(inst.c_hi[j]) >= kExactDoubleLimit) {
      throw NonIntegralData("cost magnitude too large for exact cut tightening");
    }
  }
  const bool max = Maximizing(inst);
  lp::LinearConstraint cut;
  int64_t selected_total = 0;
  for (int j = 0; j < inst.num_vars; ++j) {
    // MAX: c_lo on xhat's items, c_hi elsewhere; MIN: the mirror.
    const bool chosen = xhat[j];
    const int64_t coef = (chosen == max) ? inst.c_lo[j] : inst.c_hi[j];
    if (chosen) selected_total += coef;
    if (coef != 0) cut.terms.push_back({j, static_cast<double>(coef)});
  }
  if (max) {
    cut.sense = Sense::kGreaterEqual;
    cut.rhs = static_cast<double>(selected_total + 1);
  } else {
    cut.sense = Sense::kLessEqual;
    cut.rhs = static_cast<double>(selected_total - 1);
  }
  return cut;
}

bool DominanceHolds(const BipInstance& inst, const BinarySolution& xbar,
                    const BinarySolution& xhat) {
  inst.RequireFeasible(xbar);
  inst.RequireFeasible(xhat);
  // For MIN the favorable scenario puts c_lo on xbar's items, which is the
  // maximization worst-case formula applied literally.
  const Scenario phi = BestScenario(inst, xbar);
  if (Maximizing(inst)) return Value(phi.costs, xhat) >= Value(phi.costs, xbar);
  return Value(phi.costs, xhat) <= Value(phi.costs, xbar);
}

}  // namespace regret_forge::mmr
