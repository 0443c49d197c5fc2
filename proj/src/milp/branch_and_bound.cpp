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
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <unordered_set>

#include "regret_forge/milp.hpp"

namespace regret_forge::milp {

void MilpModel::Validate() const {
  base.Validate();
  for (int j : binary_vars) {
    if (j < 0 || j >= base.num_vars) {
      throw InvalidModel("binary index " + std::to_string(j) + " out of range");
    }
    if (base.lower[j] < 0.0 || base.upper[j] > 1.0) {
      throw InvalidModel("binary variable " + std::to_string(j) +
                         " has bounds outside [0, 1]");
    }
  }
}

const char* MilpStatusName(MilpStatus status) {
  switch (status) {
    case MilpStatus::kOptimal:
      return "OPTIMAL";
    case MilpStatus::kFeasible:
      return "FEASIBLE";
    case MilpStatus::kInfeasible:
      return "INFEASIBLE";
    case MilpStatus::kTimeLimit:
      return "TIME_LIMIT";
  }
  return "?";
}

namespace {

struct Node {
  std::vector<int8_t> fixing;  // per binary: -1 free, 0 or 1
  double bound = -kInfinity;   // minimization form
  int depth = 0;
  long long id = 0;
};

struct NodeOrder {
  bool operator()(const Node& a, const Node& b) const {
    // std::priority_queue pops the "largest"; we want the smallest bound,
    // then the deepest node, then the oldest.
    if (a.bound != b.bound) return a.bound > b.bound;
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.id > b.id;
  }
};

struct Parked {
  Node node;
  std::vector<double> solution;
  double value = 0.0;  // minimization form
};

}  // namespace

struct BranchAndBound::State {
  MilpModel model;
  ToleranceSet tol;
  double sign = 1.0;  // +1 for MIN, -1 for MAX
  std::vector<int> position_of_binary;
  // Constraints of the form sum_{j: p_j = 0} x_j + sum_{j: p_j = 1} (1 - x_j)
  // >= 1 over all binaries exclude exactly one binary point p. They are kept
  // here instead of in the LP.
  std::unordered_set<std::string> excluded_points;
  std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
  std::vector<Parked> parked;
  long long next_id = 0;
  long long nodes = 0;
  long long cuts = 0;
  bool stop_requested = false;

  State(MilpModel m, ToleranceSet t) : model(std::move(m)), tol(t) {
    model.Validate();
    sign = model.base.direction == Direction::kMaximize ? -1.0 : 1.0;
    position_of_binary.assign(model.base.num_vars, -1);
    for (size_t k = 0; k < model.binary_vars.size(); ++k) {
      position_of_binary[model.binary_vars[k]] = static_cast<int>(k);
    }
    if (!model.integral_objective) {
      bool integral = true;
      for (int j = 0; j < model.base.num_vars && integral; ++j) {
        const double c = model.base.objective[j];
        if (c == 0.0) continue;
        integral = position_of_binary[j] >= 0 && c == std::floor(c);
      }
      model.integral_objective = integral;
    }
    std::vector<LinearConstraint> rows = std::move(model.base.constraints);
    model.base.constraints.clear();
    for (LinearConstraint& row : rows) Add(std::move(row));

    Node root;
    root.fixing.assign(model.binary_vars.size(), -1);
    for (size_t k = 0; k < model.binary_vars.size(); ++k) {
      const int j = model.binary_vars[k];
      if (model.base.lower[j] > 0.5) root.fixing[k] = 1;
      if (model.base.upper[j] < 0.5) root.fixing[k] = 0;
    }
    root.id = next_id++;
    open.push(std::move(root));
  }

  // Returns the excluded binary point if `row` is a single-point no-good.
  std::optional<std::string> AsNoGood(const LinearConstraint& row) const {
    const size_t nb = model.binary_vars.size();
    if (nb == 0 || row.sense != Sense::kGreaterEqual || row.terms.size() != nb) {
      return std::nullopt;
    }
    std::string point(nb, '?');
    int ones = 0;
    for (const Term& t : row.terms) {
      const int k = position_of_binary[t.index];
      if (k < 0 || point[k] != '?') return std::nullopt;
      if (t.coefficient == 1.0) {
        point[k] = '0';
      } else if (t.coefficient == -1.0) {
        point[k] = '1';
        ++ones;
      } else {
        return std::nullopt;
      }
    }
    if (row.rhs != 1.0 - ones) return std::nullopt;
    return point;
  }

  std::string BinaryKey(std::span<const double> x) const {
    std::string key(model.binary_vars.size(), '0');
    for (size_t k = 0; k < model.binary_vars.size(); ++k) {
      if (x[model.binary_vars[k]] > 0.5) key[k] = '1';
    }
    return key;
  }

  void Add(LinearConstraint row) {
    for (const Term& t : row.terms) {
      if (t.index < 0 || t.index >= model.base.num_vars) {
        throw InvalidModel("constraint references variable " +
                           std::to_string(t.index));
      }
    }
    if (auto point = AsNoGood(row)) {
      excluded_points.insert(*point);
      Unpark([&](const Parked& p) { return BinaryKey(p.solution) == *point; });
      return;
    }
    const LinearConstraint& stored = model.base.constraints.emplace_back(std::move(row));
    Unpark([&](const Parked& p) {
      return stored.Violation(p.solution) > tol.Feasibility(stored.rhs);
    });
  }

  template <typename Pred>
  void Unpark(Pred violated) {
    auto it = std::stable_partition(parked.begin(), parked.end(),
                                    [&](const Parked& p) { return !violated(p); });
    for (auto moved = it; moved != parked.end(); ++moved) {
      open.push(std::move(moved->node));
    }
    parked.erase(it, parked.end());
  }

  const Parked* Incumbent() const {
    const Parked* best = nullptr;
    for (const Parked& p : parked) {
      if (best == nullptr || p.value < best->value) best = &p;
    }
    return best;
  }

  // True when nothing in a region with lower bound `bound` can beat `value`.
  bool Dominated(double bound, double value) const {
    if (model.integral_objective) {
      return bound > value - 1.0 + tol.Feasibility(value);
    }
    return bound >= value - tol.Duality(value);
  }

  double RoundBound(double bound) const {
    if (!model.integral_objective) return bound;
    return std::ceil(bound - tol.Feasibility(bound));
  }

  Node Child(const Node& parent, size_t k, int8_t value) {
    Node child;
    child.fixing = parent.fixing;
    child.fixing[k] = value;
    child.bound = parent.bound;
    child.depth = parent.depth + 1;
    child.id = next_id++;
    return child;
  }

  // Solves `node` and follows one child at a time until the dive ends.
  void Dive(Node node, const TimeBudget& budget, LazyCutProvider* lazy) {
    std::vector<double> lower = model.base.lower;
    std::vector<double> upper = model.base.upper;
    while (true) {
      if (budget.Expired() || stop_requested) {
        open.push(std::move(node));
        return;
      }
      const Parked* incumbent = Incumbent();
      if (incumbent != nullptr && Dominated(node.bound, incumbent->value)) {
        open.push(std::move(node));
        return;
      }
      for (size_t k = 0; k < node.fixing.size(); ++k) {
        const int j = model.binary_vars[k];
        lower[j] = node.fixing[k] == 1 ? 1.0 : model.base.lower[j];
        upper[j] = node.fixing[k] == 0 ? 0.0 : model.base.upper[j];
      }
      const lp::LpSolution relaxation =
          lp::SolveLpWithOverrides(model.base, lower, upper, {}, tol);
      ++nodes;
      if (relaxation.status == lp::LpStatus::kInfeasible) return;
      if (relaxation.status == lp::LpStatus::kUnbounded) {
        throw InvalidModel("LP relaxation is unbounded");
      }
      node.bound = std::max(node.bound, RoundBound(sign * relaxation.objective_value));
      if (incumbent != nullptr && Dominated(node.bound, incumbent->value)) {
        open.push(std::move(node));
        return;
      }

      // Most fractional binary, lowest index on ties.
      int branch = -1;
      double best_frac = 0.0;
      for (size_t k = 0; k < model.binary_vars.size(); ++k) {
        const double v = relaxation.primal[model.binary_vars[k]];
        const double frac = std::abs(v - std::round(v));
        if (frac > tol.integrality && frac > best_frac + 1e-12) {
          best_frac = frac;
          branch = static_cast<int>(k);
        }
      }

      if (branch >= 0) {
        const double v = relaxation.primal[model.binary_vars[branch]];
        const int8_t up_first = v >= 0.5 ? 1 : 0;
        Node follow = Child(node, branch, up_first);
        open.push(Child(node, branch, static_cast<int8_t>(1 - up_first)));
        node = std::move(follow);
        continue;
      }

      std::vector<double> candidate = relaxation.primal;
      for (int j : model.binary_vars) candidate[j] = std::round(candidate[j]);

      if (!excluded_points.empty() && excluded_points.count(BinaryKey(candidate)) > 0) {
        // The LP optimum is an excluded point: split on the first free binary
        // and continue on the side that does not contain it.
        size_t k = 0;
        while (k < node.fixing.size() && node.fixing[k] >= 0) ++k;
        if (k == node.fixing.size()) return;  // region is that single point
        const int8_t value = candidate[model.binary_vars[k]] > 0.5 ? 1 : 0;
        open.push(Child(node, k, value));
        node = Child(node, k, static_cast<int8_t>(1 - value));
        continue;
      }

      if (lazy != nullptr) {
        LazyDecision decision = lazy->Check(candidate);
        if (decision.kind == LazyDecision::Kind::kCut) {
          if (decision.cut.Violation(candidate) <= tol.Feasibility(decision.cut.rhs)) {
            throw ContractViolation("lazy cut is not violated by its candidate");
          }
          ++cuts;
          Add(std::move(decision.cut));
          continue;  // re-solve this node with the new cut
        }
        if (decision.kind == LazyDecision::Kind::kReject) {
          stop_requested = true;
          open.push(std::move(node));
          return;
        }
      }

      double value = 0.0;
      for (int j = 0; j < model.base.num_vars; ++j) {
        value += sign * model.base.objective[j] * candidate[j];
      }
      if (model.integral_objective) value = std::round(value);
      node.bound = std::max(node.bound, value);
      parked.push_back({std::move(node), std::move(candidate), value});
      return;
    }
  }

  MilpOutcome Run(const TimeBudget& budget, LazyCutProvider* lazy) {
    stop_requested = false;
    bool exhausted = false;
    while (true) {
      if (budget.Expired() || stop_requested) break;
      if (open.empty()) {
        exhausted = true;
        break;
      }
      const Parked* incumbent = Incumbent();
      if (incumbent != nullptr && Dominated(open.top().bound, incumbent->value)) {
        exhausted = true;
        break;
      }
      Node node = open.top();
      open.pop();
      Dive(std::move(node), budget, lazy);
    }

    MilpOutcome outcome;
    outcome.nodes_explored = nodes;
    outcome.cuts_added = cuts;
    const Parked* incumbent = Incumbent();
    double bound = open.empty() ? kInfinity : open.top().bound;
    if (incumbent != nullptr) {
      outcome.incumbent = incumbent->solution;
      outcome.objective_value = sign * incumbent->value;
      bound = exhausted ? incumbent->value : std::min(bound, incumbent->value);
      outcome.status = exhausted ? MilpStatus::kOptimal : MilpStatus::kFeasible;
    } else {
      outcome.status = exhausted ? MilpStatus::kInfeasible : MilpStatus::kTimeLimit;
    }
    outcome.best_bound = sign * bound;
    return outcome;
  }
};

BranchAndBound::BranchAndBound(MilpModel model, ToleranceSet tol)
    : state_(std::make_unique<State>(std::move(model), tol)) {}

BranchAndBound::~BranchAndBound() = default;

MilpOutcome BranchAndBound::Solve(const TimeBudget& budget, LazyCutProvider* lazy) {
  return state_->Run(budget, lazy);
}

void BranchAndBound::AddGlobalConstraint(LinearConstraint constraint) {
  state_->Add(std::move(constraint));
}

long long BranchAndBound::nodes_explored() const { return state_->nodes; }
long long BranchAndBound::cuts_added() const { return state_->cuts; }

MilpOutcome SolveMilp(const MilpModel& model, LazyCutProvider* lazy,
                      const TimeBudget& budget, const ToleranceSet& tol) {
  BranchAndBound search(model, tol);
  return search.Solve(budget, lazy);
}

MilpModel AddGlobalConstraint(MilpModel model, LinearConstraint constraint) {
  for (const Term& t : constraint.terms) {
    if (t.index < 0 || t.index >= model.base.num_vars) {
      throw InvalidModel("constraint references variable " + std::to_string(t.index));
    }
  }
  model.base.constraints.push_back(std::move(constraint));
  return model;
}

}  // namespace regret_forge::milp
