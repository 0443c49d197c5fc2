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

#include <string>

#include "regret_forge/problems.hpp"

namespace regret_forge::problems {

namespace {

void CheckIntervals(const std::vector<int64_t>& lo, const std::vector<int64_t>& hi,
                    size_t n) {
  if (lo.size() != n || hi.size() != n) {
    throw InvalidModel("cost intervals do not match the number of variables");
  }
}

BipInstance Skeleton(std::string name, Direction direction,
                     const std::vector<int64_t>& lo,
                     const std::vector<int64_t>& hi) {
  BipInstance inst;
  inst.name = std::move(name);
  inst.direction = direction;
  inst.num_vars = static_cast<int>(lo.size());
  inst.c_lo = lo;
  inst.c_hi = hi;
  return inst;
}

}  // namespace

BipInstance EncodeKp(const KpSpec& spec, std::string name) {
  const size_t n = spec.weights.size();
  CheckIntervals(spec.c_lo, spec.c_hi, n);
  if (spec.capacity < 0) throw InvalidModel("negative knapsack capacity");
  BipInstance inst = Skeleton(std::move(name), Direction::kMaximize, spec.c_lo, spec.c_hi);
  mmr::IntConstraint row;
  for (size_t j = 0; j < n; ++j) {
    if (spec.weights[j] < 1) throw InvalidModel("knapsack weights must be positive");
    row.terms.push_back({static_cast<int>(j), spec.weights[j]});
  }
  row.sense = Sense::kLessEqual;
  row.rhs = spec.capacity;
  inst.constraints.push_back(std::move(row));
  inst.Validate();
  return inst;
}

BipInstance EncodeMkp(const MkpSpec& spec, std::string name) {
  const int n = spec.num_items;
  CheckIntervals(spec.c_lo, spec.c_hi, n);
  if (static_cast<int>(spec.usage.size()) != spec.num_resources ||
      static_cast<int>(spec.capacity.size()) != spec.num_resources) {
    throw InvalidModel("resource matrix does not match num_resources");
  }
  BipInstance inst = Skeleton(std::move(name), Direction::kMaximize, spec.c_lo, spec.c_hi);
  for (int i = 0; i < spec.num_resources; ++i) {
    if (static_cast<int>(spec.usage[i].size()) != n) {
      throw InvalidModel("resource row " + std::to_string(i) + " has wrong length");
    }
    if (spec.capacity[i] < 0) throw InvalidModel("negative capacity");
    mmr::IntConstraint row;
    for (int j = 0; j < n; ++j) {
      const int64_t a = spec.usage[i][j];
      if (a < 0) throw InvalidModel("negative resource usage");
      if (a != 0) row.terms.push_back({j, a});
    }
    row.sense = Sense::kLessEqual;
    row.rhs = spec.capacity[i];
    inst.constraints.push_back(std::move(row));
  }
  inst.Validate();
  return inst;
}

BipInstance EncodeScp(const ScpSpec& spec, std::string name) {
  CheckIntervals(spec.c_lo, spec.c_hi, spec.num_cols);
  if (static_cast<int>(spec.covers.size()) != spec.num_rows) {
    throw InvalidModel("cover lists do not match num_rows");
  }
  BipInstance inst = Skeleton(std::move(name), Direction::kMinimize, spec.c_lo, spec.c_hi);
  for (int i = 0; i < spec.num_rows; ++i) {
    if (spec.covers[i].empty()) {
      throw InfeasibleInstance("row " + std::to_string(i) + " cannot be covered");
    }
    mmr::IntConstraint row;
    std::vector<uint8_t> seen(spec.num_cols, 0);
    for (int col : spec.covers[i]) {
      if (col < 0 || col >= spec.num_cols) {
        throw InvalidModel("row " + std::to_string(i) + " lists column " +
                           std::to_string(col));
      }
      if (seen[col]) continue;
      seen[col] = 1;
      row.terms.push_back({col, 1});
    }
    row.sense = Sense::kGreaterEqual;
    row.rhs = 1;
    inst.constraints.push_back(std::move(row));
  }
  inst.Validate();
  return inst;
}

BipInstance EncodeGap(const GapSpec& spec, std::string name) {
  const int m = spec.num_agents;
  const int n = spec.num_jobs;
  CheckIntervals(spec.c_lo, spec.c_hi, static_cast<size_t>(m) * n);
  if (static_cast<int>(spec.usage.size()) != m ||
      static_cast<int>(spec.capacity.size()) != m) {
    throw InvalidModel("resource matrix does not match num_agents");
  }
  BipInstance inst = Skeleton(std::move(name), Direction::kMinimize, spec.c_lo, spec.c_hi);
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(spec.usage[i].size()) != n) {
      throw InvalidModel("agent row " + std::to_string(i) + " has wrong length");
    }
    if (spec.capacity[i] < 1) throw InvalidModel("capacities must be positive");
    mmr::IntConstraint row;
    for (int j = 0; j < n; ++j) {
      if (spec.usage[i][j] < 1) throw InvalidModel("resources must be positive");
      row.terms.push_back({GapIndex(i, j, n), spec.usage[i][j]});
    }
    row.sense = Sense::kLessEqual;
    row.rhs = spec.capacity[i];
    inst.constraints.push_back(std::move(row));
  }
  for (int j = 0; j < n; ++j) {
    mmr::IntConstraint row;
    for (int i = 0; i < m; ++i) row.terms.push_back({GapIndex(i, j, n), 1});
    row.sense = Sense::kEqual;
    row.rhs = 1;
    inst.constraints.push_back(std::move(row));
  }
  inst.Validate();
  return inst;
}

std::vector<int> DecodeGap(const GapSpec& spec, const BinarySolution& x) {
  std::vector<int> agent(spec.num_jobs, -1);
  for (int i = 0; i < spec.num_agents; ++i) {
    for (int j = 0; j < spec.num_jobs; ++j) {
      if (x[GapIndex(i, j, spec.num_jobs)]) agent[j] = i;
    }
  }
  return agent;
}

std::vector<int> DecodeScp(const ScpSpec& spec, const BinarySolution& x) {
  std::vector<int> cols;
  for (int j = 0; j < spec.num_cols; ++j) {
    if (x[j]) cols.push_back(j);
  }
  return cols;
}

}  // namespace regret_forge::problems
