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

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "regret_forge/lp.hpp"

namespace regret_forge::lp {

double LinearConstraint::Activity(std::span<const double> values) const {
  double activity = 0.0;
  for (const Term& t : terms) activity += t.coefficient * values[t.index];
  return activity;
}

double LinearConstraint::Violation(std::span<const double> values) const {
  const double activity = Activity(values);
  switch (sense) {
    case Sense::kLessEqual:
      return std::max(0.0, activity - rhs);
    case Sense::kGreaterEqual:
      return std::max(0.0, rhs - activity);
    case Sense::kEqual:
      return std::abs(activity - rhs);
  }
  return 0.0;
}

int LpModel::AddVariable(double lower_bound, double upper_bound, double cost) {
  lower.push_back(lower_bound);
  upper.push_back(upper_bound);
  objective.push_back(cost);
  return num_vars++;
}

void LpModel::AddConstraint(LinearConstraint constraint) {
  constraints.push_back(std::move(constraint));
}

void LpModel::Validate() const {
  if (num_vars < 0 || static_cast<int>(objective.size()) != num_vars ||
      static_cast<int>(lower.size()) != num_vars ||
      static_cast<int>(upper.size()) != num_vars) {
    throw InvalidModel("objective/bound vectors do not match num_vars");
  }
  for (int j = 0; j < num_vars; ++j) {
    if (lower[j] > upper[j] || std::isnan(lower[j]) || std::isnan(upper[j])) {
      throw InvalidModel("variable " + std::to_string(j) +
                         " has lower bound above upper bound");
    }
    if (!std::isfinite(objective[j])) {
      throw InvalidModel("objective coefficient " + std::to_string(j) +
                         " is not finite");
    }
  }
  for (size_t i = 0; i < constraints.size(); ++i) {
    const LinearConstraint& row = constraints[i];
    if (!std::isfinite(row.rhs)) {
      throw InvalidModel("row " + std::to_string(i) + " has non-finite rhs");
    }
    for (const Term& t : row.terms) {
      if (t.index < 0 || t.index >= num_vars) {
        throw InvalidModel("row " + std::to_string(i) +
                           " references variable " + std::to_string(t.index));
      }
    }
  }
}

const char* LpStatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "OPTIMAL";
    case LpStatus::kInfeasible:
      return "INFEASIBLE";
    case LpStatus::kUnbounded:
      return "UNBOUNDED";
  }
  return "?";
}

namespace {

using Matrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

constexpr int kRefactorInterval = 100;

enum class NonbasicState { kBasic, kAtLower, kAtUpper, kFreeAtZero };

// Works on min c'x, A x + s = b, l <= (x, s) <= u. Column layout:
// [structural | slack | artificial].
class BoundedSimplex {
 public:
  BoundedSimplex(int num_structural, std::span<const double> cost,
                 std::span<const double> lower, std::span<const double> upper,
                 std::span<const LinearConstraint* const> rows,
                 const ToleranceSet& tol)
      : n_(num_structural),
        m_(static_cast<int>(rows.size())),
        tol_(tol),
        rows_(rows) {
    const int base_cols = n_ + m_;
    lower_.assign(lower.begin(), lower.end());
    upper_.assign(upper.begin(), upper.end());
    lower_.resize(base_cols);
    upper_.resize(base_cols);
    cost_.assign(cost.begin(), cost.end());
    cost_.resize(base_cols, 0.0);
    rhs_.resize(m_);
    for (int i = 0; i < m_; ++i) {
      const LinearConstraint& row = *rows[i];
      rhs_[i] = row.rhs;
      switch (row.sense) {
        case Sense::kLessEqual:
          lower_[n_ + i] = 0.0;
          upper_[n_ + i] = kInfinity;
          break;
        case Sense::kGreaterEqual:
          lower_[n_ + i] = -kInfinity;
          upper_[n_ + i] = 0.0;
          break;
        case Sense::kEqual:
          lower_[n_ + i] = 0.0;
          upper_[n_ + i] = 0.0;
          break;
      }
    }
  }

  LpSolution Solve() {
    LpSolution result;
    if (!InitialBasis()) {
      result.status = LpStatus::kInfeasible;
      return result;
    }
    if (num_artificial_ > 0) {
      std::vector<double> phase_one(total_cols_, 0.0);
      for (int k = 0; k < num_artificial_; ++k) phase_one[n_ + m_ + k] = 1.0;
      SetObjective(phase_one);
      const LpStatus phase_status = Iterate();
      if (phase_status != LpStatus::kOptimal) {
        throw NumericalBreakdown("phase one did not terminate at an optimum");
      }
      double infeasibility = 0.0;
      for (int k = 0; k < num_artificial_; ++k) {
        infeasibility += ColumnValue(n_ + m_ + k);
      }
      double scale = 1.0;
      for (double b : rhs_) scale = std::max(scale, std::abs(b));
      if (infeasibility > tol_.Feasibility(scale)) {
        result.status = LpStatus::kInfeasible;
        result.iterations = iterations_;
        return result;
      }
      // Artificials are pinned to zero for the rest of the solve.
      for (int k = 0; k < num_artificial_; ++k) {
        const int col = n_ + m_ + k;
        lower_[col] = 0.0;
        upper_[col] = 0.0;
        if (state_[col] != NonbasicState::kBasic) {
          state_[col] = NonbasicState::kAtLower;
          value_[col] = 0.0;
        }
      }
      RecomputeBasicValues();
    }
    std::vector<double> phase_two(total_cols_, 0.0);
    std::copy(cost_.begin(), cost_.begin() + n_, phase_two.begin());
    SetObjective(phase_two);
    const LpStatus status = Iterate();
    result.status = status;
    result.iterations = iterations_;
    if (status != LpStatus::kOptimal) return result;

    result.primal.resize(n_);
    for (int j = 0; j < n_; ++j) result.primal[j] = ColumnValue(j);
    result.objective_value = 0.0;
    for (int j = 0; j < n_; ++j) result.objective_value += cost_[j] * result.primal[j];
    result.duals.resize(m_);
    for (int i = 0; i < m_; ++i) result.duals[i] = -reduced_[n_ + i];
    result.reduced_costs.assign(reduced_.begin(), reduced_.begin() + n_);
    return result;
  }

 private:
  double ColumnValue(int col) const {
    return state_[col] == NonbasicState::kBasic ? basic_value_[row_of_[col]]
                                                : value_[col];
  }

  double RowEntry(int row, int col) const {
    // Original (unfactored) coefficient of column `col` in row `row`.
    if (col < n_) return dense_rows_(row, col);
    if (col < n_ + m_) return col - n_ == row ? 1.0 : 0.0;
    const int k = col - n_ - m_;
    return artificial_row_[k] == row ? artificial_sign_[k] : 0.0;
  }

  bool InitialBasis() {
    dense_rows_ = Matrix::Zero(m_, n_);
    for (int i = 0; i < m_; ++i) {
      for (const Term& t : rows_[i]->terms) dense_rows_(i, t.index) += t.coefficient;
    }
    for (int j = 0; j < n_; ++j) {
      if (lower_[j] > upper_[j]) return false;
    }
    value_.assign(n_ + m_, 0.0);
    state_.assign(n_ + m_, NonbasicState::kAtLower);
    for (int j = 0; j < n_; ++j) {
      if (std::isfinite(lower_[j])) {
        value_[j] = lower_[j];
        state_[j] = NonbasicState::kAtLower;
      } else if (std::isfinite(upper_[j])) {
        value_[j] = upper_[j];
        state_[j] = NonbasicState::kAtUpper;
      } else {
        value_[j] = 0.0;
        state_[j] = NonbasicState::kFreeAtZero;
      }
    }
    // Row residuals with all structurals at their starting values.
    std::vector<double> residual(m_);
    Eigen::Map<const Eigen::VectorXd> x(value_.data(), n_);
    Eigen::VectorXd ax = dense_rows_ * x;
    for (int i = 0; i < m_; ++i) residual[i] = rhs_[i] - ax(i);

    num_artificial_ = 0;
    artificial_row_.clear();
    artificial_sign_.clear();
    std::vector<int> basic_col(m_);
    for (int i = 0; i < m_; ++i) {
      const int slack = n_ + i;
      const double feas = tol_.Feasibility(rhs_[i]);
      if (residual[i] < lower_[slack] - feas || residual[i] > upper_[slack] + feas) {
        const bool below = residual[i] < lower_[slack];
        const double bound = below ? lower_[slack] : upper_[slack];
        value_[slack] = bound;
        state_[slack] = below ? NonbasicState::kAtLower : NonbasicState::kAtUpper;
        if (lower_[slack] == upper_[slack]) state_[slack] = NonbasicState::kAtLower;
        artificial_row_.push_back(i);
        artificial_sign_.push_back(below ? -1.0 : 1.0);
        basic_col[i] = n_ + m_ + num_artificial_;
        ++num_artificial_;
      } else {
        basic_col[i] = slack;
      }
    }
    total_cols_ = n_ + m_ + num_artificial_;
    lower_.resize(total_cols_, 0.0);
    upper_.resize(total_cols_, kInfinity);
    value_.resize(total_cols_, 0.0);
    state_.resize(total_cols_, NonbasicState::kAtLower);
    basis_ = basic_col;
    row_of_.assign(total_cols_, -1);
    for (int i = 0; i < m_; ++i) {
      state_[basis_[i]] = NonbasicState::kBasic;
      row_of_[basis_[i]] = i;
    }
    // With slack/artificial basis B is diagonal with +-1 entries.
    tableau_ = Matrix::Zero(m_, total_cols_);
    for (int i = 0; i < m_; ++i) {
      const double sign = basis_[i] >= n_ + m_ ? artificial_sign_[basis_[i] - n_ - m_] : 1.0;
      tableau_.row(i).head(n_) = dense_rows_.row(i) * sign;
      tableau_(i, n_ + i) = sign;
      if (basis_[i] >= n_ + m_) tableau_(i, basis_[i]) = 1.0;
    }
    basic_value_.resize(m_);
    RecomputeBasicValues();
    return true;
  }

  void RecomputeBasicValues() {
    // x_B = B^{-1} (b - N x_N); tableau slack columns hold B^{-1}.
    Eigen::VectorXd r(m_);
    for (int i = 0; i < m_; ++i) r(i) = rhs_[i];
    for (int col = 0; col < total_cols_; ++col) {
      if (state_[col] == NonbasicState::kBasic || value_[col] == 0.0) continue;
      for (int i = 0; i < m_; ++i) {
        const double a = RowEntry(i, col);
        if (a != 0.0) r(i) -= a * value_[col];
      }
    }
    Eigen::VectorXd xb = tableau_.middleCols(n_, m_) * r;
    for (int i = 0; i < m_; ++i) basic_value_[i] = xb(i);
  }

  void SetObjective(const std::vector<double>& objective) {
    objective_ = objective;
    RecomputeReducedCosts();
  }

  void RecomputeReducedCosts() {
    Eigen::RowVectorXd cb(m_);
    for (int i = 0; i < m_; ++i) cb(i) = objective_[basis_[i]];
    Eigen::RowVectorXd d = -(cb * tableau_);
    reduced_.resize(total_cols_);
    for (int col = 0; col < total_cols_; ++col) {
      reduced_[col] = state_[col] == NonbasicState::kBasic ? 0.0 : objective_[col] + d(col);
    }
  }

  void Refactor() {
    Eigen::MatrixXd basis_matrix(m_, m_);
    for (int i = 0; i < m_; ++i) {
      for (int r = 0; r < m_; ++r) basis_matrix(r, i) = RowEntry(r, basis_[i]);
    }
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(basis_matrix);
    const double min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
    if (!(min_pivot > tol_.pivot)) {
      throw NumericalBreakdown("basis became singular during refactorization");
    }
    Eigen::MatrixXd full(m_, total_cols_);
    full.leftCols(n_) = dense_rows_;
    full.middleCols(n_, m_).setIdentity();
    for (int k = 0; k < num_artificial_; ++k) {
      full.col(n_ + m_ + k).setZero();
      full(artificial_row_[k], n_ + m_ + k) = artificial_sign_[k];
    }
    tableau_ = lu.solve(full);
    RecomputeBasicValues();
    RecomputeReducedCosts();
  }

  // Returns the entering column and its direction (+1 / -1), or -1.
  int Price(bool bland, int* direction) const {
    int best = -1;
    double best_score = 0.0;
    for (int col = 0; col < total_cols_; ++col) {
      const NonbasicState s = state_[col];
      if (s == NonbasicState::kBasic) continue;
      if (lower_[col] == upper_[col]) continue;
      const double d = reduced_[col];
      const double threshold = 1e-9 * (1.0 + std::abs(objective_[col]));
      int dir = 0;
      if ((s == NonbasicState::kAtLower || s == NonbasicState::kFreeAtZero) &&
          d < -threshold) {
        dir = 1;
      } else if ((s == NonbasicState::kAtUpper || s == NonbasicState::kFreeAtZero) &&
                 d > threshold) {
        dir = -1;
      }
      if (dir == 0) continue;
      if (bland) {
        *direction = dir;
        return col;
      }
      if (std::abs(d) > best_score) {
        best_score = std::abs(d);
        best = col;
        *direction = dir;
      }
    }
    return best;
  }

  LpStatus Iterate() {
    const long long degenerate_limit = 2LL * (m_ + total_cols_);
    const long long iteration_cap = 200LL * (m_ + total_cols_) + 10000;
    long long degenerate_run = 0;
    bool bland = false;
    int since_refactor = 0;
    while (true) {
      if (iterations_ > iteration_cap) {
        throw NumericalBreakdown("simplex iteration limit exceeded");
      }
      int dir = 0;
      const int q = Price(bland, &dir);
      if (q < 0) return LpStatus::kOptimal;

      // Ratio test.
      double step = upper_[q] - lower_[q];  // bound flip distance
      int leave_row = -1;
      double leave_pivot = 0.0;
      for (int i = 0; i < m_; ++i) {
        const double alpha = tableau_(i, q);
        if (std::abs(alpha) < tol_.pivot) continue;
        const double rate = -dir * alpha;  // d x_B[i] / d t
        const int col = basis_[i];
        double limit;
        if (rate < 0.0) {
          if (!std::isfinite(lower_[col])) continue;
          limit = (basic_value_[i] - lower_[col]) / -rate;
        } else {
          if (!std::isfinite(upper_[col])) continue;
          limit = (upper_[col] - basic_value_[i]) / rate;
        }
        limit = std::max(0.0, limit);
        const double slack = std::isfinite(step) ? 1e-12 * (1.0 + std::abs(step)) : 0.0;
        bool take = false;
        if (limit < step - slack) {
          take = true;
        } else if (limit <= step + slack && leave_row >= 0) {
          take = bland ? basis_[i] < basis_[leave_row]
                       : std::abs(alpha) > std::abs(leave_pivot);
        }
        if (take) {
          step = limit;
          leave_row = i;
          leave_pivot = alpha;
        }
      }
      if (leave_row < 0 && !std::isfinite(step)) return LpStatus::kUnbounded;

      ++iterations_;
      if (step <= 1e-12) {
        if (++degenerate_run > degenerate_limit) bland = true;
      } else {
        degenerate_run = 0;
      }

      // Move the basic values along the edge.
      const double delta = dir * step;
      for (int i = 0; i < m_; ++i) {
        const double alpha = tableau_(i, q);
        if (alpha != 0.0) basic_value_[i] -= alpha * delta;
      }
      const double entering_value = value_[q] + delta;

      if (leave_row < 0) {
        // Bound flip, basis unchanged.
        value_[q] = dir > 0 ? upper_[q] : lower_[q];
        state_[q] = dir > 0 ? NonbasicState::kAtUpper : NonbasicState::kAtLower;
        continue;
      }

      const int leaving = basis_[leave_row];
      const double alpha = tableau_(leave_row, q);
      const double rate = -dir * alpha;
      if (rate < 0.0) {
        state_[leaving] = NonbasicState::kAtLower;
        value_[leaving] = lower_[leaving];
      } else {
        state_[leaving] = NonbasicState::kAtUpper;
        value_[leaving] = upper_[leaving];
      }
      if (lower_[leaving] == upper_[leaving]) state_[leaving] = NonbasicState::kAtLower;
      row_of_[leaving] = -1;

      tableau_.row(leave_row) /= alpha;
      for (int i = 0; i < m_; ++i) {
        if (i == leave_row) continue;
        const double factor = tableau_(i, q);
        if (factor != 0.0) tableau_.row(i) -= factor * tableau_.row(leave_row);
      }
      const double dq = reduced_[q];
      if (dq != 0.0) {
        for (int col = 0; col < total_cols_; ++col) {
          reduced_[col] -= dq * tableau_(leave_row, col);
        }
      }
      reduced_[q] = 0.0;

      basis_[leave_row] = q;
      row_of_[q] = leave_row;
      state_[q] = NonbasicState::kBasic;
      basic_value_[leave_row] = entering_value;

      if (++since_refactor >= kRefactorInterval) {
        since_refactor = 0;
        Refactor();
      }
    }
  }

  const int n_;
  const int m_;
  const ToleranceSet tol_;
  std::span<const LinearConstraint* const> rows_;

  int num_artificial_ = 0;
  int total_cols_ = 0;
  std::vector<int> artificial_row_;
  std::vector<double> artificial_sign_;

  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<double> cost_;
  std::vector<double> rhs_;
  std::vector<double> objective_;
  std::vector<double> reduced_;
  std::vector<double> value_;
  std::vector<NonbasicState> state_;
  std::vector<int> basis_;
  std::vector<int> row_of_;
  std::vector<double> basic_value_;
  Matrix dense_rows_;
  Matrix tableau_;
  long long iterations_ = 0;
};

}  // namespace

LpSolution SolveLpWithOverrides(const LpModel& model,
                                std::span<const double> lower,
                                std::span<const double> upper,
                                std::span<const LinearConstraint> extra_rows,
                                const ToleranceSet& tol) {
  std::vector<const LinearConstraint*> rows;
  rows.reserve(model.constraints.size() + extra_rows.size());
  for (const LinearConstraint& row : model.constraints) rows.push_back(&row);
  for (const LinearConstraint& row : extra_rows) rows.push_back(&row);

  const double sign = model.direction == Direction::kMaximize ? -1.0 : 1.0;
  std::vector<double> cost(model.num_vars);
  for (int j = 0; j < model.num_vars; ++j) cost[j] = sign * model.objective[j];

  BoundedSimplex simplex(model.num_vars, cost, lower, upper, rows, tol);
  LpSolution solution = simplex.Solve();
  if (solution.status == LpStatus::kOptimal) {
    solution.objective_value *= sign;
    for (double& y : solution.duals) y *= sign;
    for (double& d : solution.reduced_costs) d *= sign;
  }
  return solution;
}

LpSolution SolveLp(const LpModel& model, const ToleranceSet& tol) {
  model.Validate();
  return SolveLpWithOverrides(model, model.lower, model.upper, {}, tol);
}

double LpDualObjective(const LpSolution& solution, const LpModel& model,
                       const ToleranceSet& tol) {
  if (solution.status != LpStatus::kOptimal) {
    throw ContractViolation("dual objective requested for a non-optimal LP");
  }
  // Work in minimization form, then restore the model's sign.
  const double sign = model.direction == Direction::kMaximize ? -1.0 : 1.0;
  double value = 0.0;
  for (size_t i = 0; i < model.constraints.size(); ++i) {
    value += model.constraints[i].rhs * sign * solution.duals[i];
  }
  for (int j = 0; j < model.num_vars; ++j) {
    const double d = sign * solution.reduced_costs[j];
    const double threshold = tol.Duality(model.objective[j]);
    if (d > threshold) {
      value += d * model.lower[j];
    } else if (d < -threshold) {
      value += d * model.upper[j];
    }
  }
  return sign * value;
}

}  // namespace regret_forge::lp
