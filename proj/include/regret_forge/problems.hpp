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

// The four benchmark problems and their encodings as interval BIPs.

#ifndef REGRET_FORGE_PROBLEMS_HPP_
#define REGRET_FORGE_PROBLEMS_HPP_

#include <cstdint>
#include <vector>

#include "regret_forge/bip.hpp"

namespace regret_forge::problems {

using mmr::BinarySolution;
using mmr::BipInstance;

// Every spec carries its cost intervals; parsers of classical files set
// c_lo = c_hi = nominal cost.
struct KpSpec {
  std::vector<int64_t> weights;
  int64_t capacity = 0;
  std::vector<int64_t> c_lo;
  std::vector<int64_t> c_hi;

  bool operator==(const KpSpec&) const = default;
};

struct MkpSpec {
  int num_resources = 0;
  int num_items = 0;
  std::vector<std::vector<int64_t>> usage;  // [resource][item]
  std::vector<int64_t> capacity;
  std::vector<int64_t> c_lo;
  std::vector<int64_t> c_hi;

  bool operator==(const MkpSpec&) const = default;
};

struct ScpSpec {
  int num_rows = 0;
  int num_cols = 0;
  std::vector<std::vector<int>> covers;  // per row, the columns covering it
  std::vector<int64_t> c_lo;
  std::vector<int64_t> c_hi;

  bool operator==(const ScpSpec&) const = default;
};

struct GapSpec {
  int num_agents = 0;
  int num_jobs = 0;
  std::vector<std::vector<int64_t>> usage;  // [agent][job]
  std::vector<int64_t> capacity;
  std::vector<int64_t> c_lo;  // flattened agent * num_jobs + job
  std::vector<int64_t> c_hi;

  bool operator==(const GapSpec&) const = default;
};

// All encoders throw InvalidModel on a malformed spec.
BipInstance EncodeKp(const KpSpec& spec, std::string name = "kp");
BipInstance EncodeMkp(const MkpSpec& spec, std::string name = "mkp");
// Throws InfeasibleInstance when a row has no covering column.
BipInstance EncodeScp(const ScpSpec& spec, std::string name = "scp");
BipInstance EncodeGap(const GapSpec& spec, std::string name = "gap");

inline int GapIndex(int agent, int job, int num_jobs) {
  return agent * num_jobs + job;
}

// Agent of every job, or -1 where x assigns none.
std::vector<int> DecodeGap(const GapSpec& spec, const BinarySolution& x);
// Columns selected by x, ascending.
std::vector<int> DecodeScp(const ScpSpec& spec, const BinarySolution& x);

}  // namespace regret_forge::problems

#endif  // REGRET_FORGE_PROBLEMS_HPP_
