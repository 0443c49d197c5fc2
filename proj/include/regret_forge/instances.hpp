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

// Instance generation and file formats.
//
// Random draws come from splitmix64 with a fixed integer-sampling rule, so
// every generator is reproducible bit-for-bit from its seed:
//   next():          state += 0x9E3779B97F4A7C15, then the splitmix64 mix.
//   UniformInt(a,b): w = b - a + 1; k = bit width of (w - 1);
//                    r = next() >> (64 - k), retried while r >= w; a + r.
//   UniformReal():   (next() >> 11) * 2^-53, in [0, 1).

#ifndef REGRET_FORGE_INSTANCES_HPP_
#define REGRET_FORGE_INSTANCES_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "regret_forge/bip.hpp"
#include "regret_forge/problems.hpp"

namespace regret_forge::instances {

class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t Next();
  int64_t UniformInt(int64_t lo, int64_t hi);
  double UniformReal();

 private:
  uint64_t state_;
};

struct Intervals {
  std::vector<int64_t> c_lo;
  std::vector<int64_t> c_hi;
};

// c_lo[j] ~ U[ceil((1 - delta) c_j), c_j], c_hi[j] ~ U[c_j, floor((1 + delta) c_j)],
// drawn lo then hi for each j in order. Costs must be non-negative.
Intervals OverlayIntervals(const std::vector<int64_t>& costs, double delta, Rng& rng);

// Knapsack types 1..9: uncorrelated, weakly correlated, strongly correlated,
// inverse strongly correlated, almost strongly correlated, subset sum,
// even-odd subset sum, even-odd strongly correlated, uncorrelated with
// similar weights. range is R in {1000, 10000}; capacity = floor(tightness *
// sum a), bumped to odd for types 7 and 8.
problems::KpSpec GenerateKp(int type, int n, int64_t range, double tightness,
                            double delta, Rng& rng);

enum class ScpFlavor { kB, kM, kK };
// B: overlay of the base costs. M: c_hi ~ U[0,1000], c_lo ~ U[0,c_hi].
// K: c_lo ~ U[0,1000], c_hi ~ U[c_lo, c_lo + 1000].
Intervals GenerateScpIntervals(const std::vector<int64_t>& base_costs,
                               ScpFlavor flavor, double delta, Rng& rng);

enum class GapType { kA, kB, kC, kE };
problems::GapSpec GenerateGap(GapType type, int agents, int jobs, double delta,
                              Rng& rng);

// Small random instances for exhaustive cross-checks. MAX instances are
// knapsack-like (LE rows, positive weights); MIN instances are covering-like
// (GE rows, non-negative coefficients).
struct RandomInstanceSpec {
  Direction direction = Direction::kMaximize;
  int num_vars = 8;
  int num_rows = 1;
  double delta = 0.1;
  // Fraction of each row's total weight used as its right-hand side.
  double tightness = 0.5;
  // Nominal costs are drawn from U[cost_min, cost_max] before the overlay.
  int64_t cost_min = 1;
  int64_t cost_max = 100;
};
mmr::BipInstance GenerateRandom(const RandomInstanceSpec& spec, Rng& rng,
                                std::string name = "random");

// Classical benchmark formats. All throw ParseError(line, column).
problems::ScpSpec ParseOrlibScp(std::string_view text);
// Files may hold several problems behind a leading count; `index` picks one.
problems::GapSpec ParseOrlibGap(std::string_view text, int index = 0);
problems::MkpSpec ParseChuBeasleyMkp(std::string_view text, int index = 0);

// Native format:
//   MMRBIP v1 <name> <MAX|MIN> <n> <m>
//   <c_lo> <c_hi>                              (n lines)
//   <LE|GE|EQ> <rhs> <nnz> (<idx> <coef>)*     (m lines, 0-based indices)
mmr::BipInstance ParseNative(std::string_view text);
std::string SerializeNative(const mmr::BipInstance& inst);

mmr::BipInstance ReadNativeFile(const std::string& path);
void WriteNativeFile(const mmr::BipInstance& inst, const std::string& path);

}  // namespace regret_forge::instances

#endif  // REGRET_FORGE_INSTANCES_HPP_
