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

#include "regret_forge/bip.hpp"

namespace regret_forge::mmr {

std::string BinarySolution::ToString() const {
  std::string s;
  s.reserve(bits.size());
  for (uint8_t b : bits) s.push_back(b ? '1' : '0');
  return s;
}

void BipInstance::Validate() const {
  if (num_vars < 1) throw InvalidModel("instance has no variables");
  if (static_cast<int>(c_lo.size()) != num_vars ||
      static_cast<int>(c_hi.size()) != num_vars) {
    throw InvalidModel("cost interval vectors do not match num_vars");
  }
  for (int j = 0; j < num_vars; ++j) {
    if (c_lo[j] > c_hi[j]) {
      throw InvalidModel("interval of variable " + std::to_string(j) +
                         " is inverted");
    }
  }
  for (size_t i = 0; i < constraints.size(); ++i) {
    for (const IntTerm& t : constraints[i].terms) {
      if (t.index < 0 || t.index >= num_vars) {
        throw InvalidModel("row " + std::to_string(i) +
                           " references variable " + std::to_string(t.index));
      }
    }
  }
}

bool BipInstance::IsFeasible(const BinarySolution& x) const {
  if (x.size() != num_vars) return false;
  for (const IntConstraint& row : constraints) {
    int64_t activity = 0;
    for (const IntTerm& t : row.terms) {
      if (x[t.index]) activity += t.coefficient;
    }
    switch (row.sense) {
      case Sense::kLessEqual:
        if (activity > row.rhs) return false;
        break;
      case Sense::kGreaterEqual:
        if (activity < row.rhs) return false;
        break;
      case Sense::kEqual:
        if (activity != row.rhs) return false;
        break;
    }
  }
  return true;
}

void BipInstance::RequireFeasible(const BinarySolution& x) const {
  if (x.size() != num_vars) {
    throw InfeasibleSolution("solution has " + std::to_string(x.size()) +
                             " entries, instance has " +
                             std::to_string(num_vars) + " variables");
  }
  if (!IsFeasible(x)) {
    throw InfeasibleSolution("solution " + x.ToString() +
                             " violates a constraint of " + name);
  }
}

int64_t Value(std::span<const int64_t> costs, const BinarySolution& x) {
  int64_t total = 0;
  for (int j = 0; j < x.size(); ++j) {
    if (x[j]) total += costs[j];
  }
  return total;
}

const char* AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kFix:
      return "fix";
    case Algorithm::kDs:
      return "ds";
    case Algorithm::kIdsH:
      return "ids-h";
    case Algorithm::kIdsB:
      return "ids-b";
    case Algorithm::kBc:
      return "bc";
    case Algorithm::kOracle:
      return "oracle";
  }
  return "?";
}

std::optional<Algorithm> ParseAlgorithm(const std::string& name) {
  for (Algorithm a : {Algorithm::kFix, Algorithm::kDs, Algorithm::kIdsH,
                      Algorithm::kIdsB, Algorithm::kBc, Algorithm::kOracle}) {
    if (name == AlgorithmName(a)) return a;
  }
  return std::nullopt;
}

const char* ReportStatusName(ReportStatus status) {
  switch (status) {
    case ReportStatus::kOptimal:
      return "OPTIMAL";
    case ReportStatus::kFeasible:
      return "FEASIBLE";
    case ReportStatus::kTimeLimit:
      return "TIME_LIMIT";
    case ReportStatus::kInfeasible:
      return "INFEASIBLE";
  }
  return "?";
}

std::optional<ReportStatus> ParseReportStatus(const std::string& name) {
  for (ReportStatus s : {ReportStatus::kOptimal, ReportStatus::kFeasible,
                         ReportStatus::kTimeLimit, ReportStatus::kInfeasible}) {
    if (name == ReportStatusName(s)) return s;
  }
  return std::nullopt;
}

}  // namespace regret_forge::mmr
