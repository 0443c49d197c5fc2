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

// Linear programming kernel: a dense bounded-variable primal simplex.
//
// Variables carry their own bounds (possibly infinite), so binaries relax to
// [0, 1] without extra rows. Each constraint row gets one slack column whose
// bounds encode the row sense; rows that the all-slack basis cannot satisfy
// receive an artificial column for phase one. Pricing is largest reduced cost
// with a permanent switch to Bland's rule after 2 * (rows + cols) consecutive
// degenerate pivots. The tableau is rebuilt from the original data every 100
// pivots.

#ifndef REGRET_FORGE_LP_HPP_
#define REGRET_FORGE_LP_HPP_

#include <span>
#include <vector>

#include "regret_forge/common.hpp"

namespace regret_forge::lp {

struct Term {
  int index = 0;
  double coefficient = 0.0;
};

struct LinearConstraint {
  std::vector<Term> terms;
  Sense sense = Sense::kLessEqual;
  double rhs = 0.0;

  double Activity(std::span<const double> values) const;
  // Positive when `values` violates the row, zero otherwise.
  double Violation(std::span<const double> values) const;
};

struct LpModel {
  int num_vars = 0;
  std::vector<double> objective;
  Direction direction = Direction::kMinimize;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<LinearConstraint> constraints;

  int AddVariable(double lower_bound, double upper_bound, double cost);
  void AddConstraint(LinearConstraint constraint);

  // Throws InvalidModel when an index is out of range, a bound pair is
  // inverted, or a right-hand side is not finite.
  void Validate() const;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };
const char* LpStatusName(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> primal;
  double objective_value = 0.0;
  // One multiplier per constraint and one reduced cost per variable, both
  // expressed for the model's own direction: objective = duals . b + sum of
  // reduced costs at the active bounds.
  std::vector<double> duals;
  std::vector<double> reduced_costs;
  int iterations = 0;
};

LpSolution SolveLp(const LpModel& model, const ToleranceSet& tol = {});

// Solves the model with `lower`/`upper` replacing the model bounds and
// `extra_rows` appended to the model rows. Used by branch-and-bound so node
// LPs do not copy the model. Duals cover model rows first, then extra rows.
LpSolution SolveLpWithOverrides(const LpModel& model,
                                std::span<const double> lower,
                                std::span<const double> upper,
                                std::span<const LinearConstraint> extra_rows,
                                const ToleranceSet& tol = {});

// Objective of the dual solution carried by `solution`: sum_i b_i y_i plus
// the bound multipliers. Throws ContractViolation unless the solution is
// optimal.
double LpDualObjective(const LpSolution& solution, const LpModel& model,
                       const ToleranceSet& tol = {});

}  // namespace regret_forge::lp

#endif  // REGRET_FORGE_LP_HPP_
