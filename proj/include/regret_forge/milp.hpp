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

// Branch-and-bound over LP relaxations for mixed binary programs.
//
// The search is best-bound with depth-first dives from each popped node,
// branching on the most fractional binary (lowest index on ties). Integer
// candidates can be vetted by a LazyCutProvider; rejected candidates yield a
// global cut and the node is re-solved. BranchAndBound keeps its tree between
// Solve() calls, so a caller can add global constraints after an optimum is
// reported and resume: nodes are never discarded by bound, only deferred.

#ifndef REGRET_FORGE_MILP_HPP_
#define REGRET_FORGE_MILP_HPP_

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "regret_forge/common.hpp"
#include "regret_forge/lp.hpp"

namespace regret_forge::milp {

using lp::LinearConstraint;
using lp::LpModel;
using lp::Term;

struct MilpModel {
  LpModel base;
  std::vector<int> binary_vars;
  // Set when every feasible solution has an integral objective value. Enables
  // ceil/floor rounding of node bounds. Inferred automatically when the
  // objective only touches binaries with integer coefficients.
  bool integral_objective = false;

  void Validate() const;
};

enum class MilpStatus { kOptimal, kFeasible, kInfeasible, kTimeLimit };
const char* MilpStatusName(MilpStatus status);

struct MilpOutcome {
  MilpStatus status = MilpStatus::kInfeasible;
  std::optional<std::vector<double>> incumbent;
  std::optional<double> objective_value;
  // Valid bound in the model's direction: <= optimum for MIN, >= for MAX.
  double best_bound = 0.0;
  long long nodes_explored = 0;
  long long cuts_added = 0;
};

struct LazyDecision {
  enum class Kind { kAccept, kCut, kReject };

  Kind kind = Kind::kAccept;
  LinearConstraint cut;

  static LazyDecision Accept() { return {}; }
  static LazyDecision Cut(LinearConstraint c) {
    return {Kind::kCut, std::move(c)};
  }
  // The candidate could not be classified (e.g. the check ran out of time).
  // The solver stops and reports what it has.
  static LazyDecision Reject() { return {Kind::kReject, {}}; }
};

// Consulted at every integer-feasible node. A returned cut must be violated
// by the candidate; it is added to the global model.
class LazyCutProvider {
 public:
  virtual ~LazyCutProvider() = default;
  virtual LazyDecision Check(std::span<const double> candidate) = 0;
};

class BranchAndBound {
 public:
  explicit BranchAndBound(MilpModel model, ToleranceSet tol = {});
  ~BranchAndBound();
  BranchAndBound(const BranchAndBound&) = delete;
  BranchAndBound& operator=(const BranchAndBound&) = delete;

  // Runs (or resumes) the search until optimality is proven, the feasible
  // set is exhausted, or the budget expires.
  MilpOutcome Solve(const TimeBudget& budget, LazyCutProvider* lazy = nullptr);

  // Intersects the feasible set with `constraint`; open nodes and any parked
  // integer solutions are re-examined against it on the next Solve().
  void AddGlobalConstraint(LinearConstraint constraint);

  long long nodes_explored() const;
  long long cuts_added() const;

 private:
  struct State;
  std::unique_ptr<State> state_;
};

MilpOutcome SolveMilp(const MilpModel& model, LazyCutProvider* lazy,
                      const TimeBudget& budget, const ToleranceSet& tol = {});

MilpModel AddGlobalConstraint(MilpModel model, LinearConstraint constraint);

}  // namespace regret_forge::milp

#endif  // REGRET_FORGE_MILP_HPP_
