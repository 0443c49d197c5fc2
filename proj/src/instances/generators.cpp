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
#include <bit>
#include <cmath>
#include <string>

#include "regret_forge/instances.hpp"

namespace regret_forge::instances {

uint64_t Rng::Next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

int64_t Rng::UniformInt(int64_t lo, int64_t hi) {
  if (lo > hi) throw ContractViolation("empty integer range");
  const uint64_t width = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo) + 1;
  if (width == 0) return static_cast<int64_t>(Next());  // full 64-bit range
  if (width == 1) return lo;
  const int bits = std::bit_width(width - 1);
  while (true) {
    const uint64_t r = Next() >> (64 - bits);
    if (r < width) return static_cast<int64_t>(static_cast<uint64_t>(lo) + r);
  }
}

double Rng::UniformReal() {
  return static_cast<double>(Next() >> 11) * 0x1.0p-53;
}

Intervals OverlayIntervals(const std::vector<int64_t>& costs, double delta, Rng& rng) {
  if (delta < 0) throw ContractViolation("negative interval width");
  Intervals out;
  out.c_lo.reserve(costs.size());
  out.c_hi.reserve(costs.size());
  for (int64_t c : costs) {
    if (c < 0) throw ContractViolation("overlay needs non-negative costs");
    const double base = static_cast<double>(c);
    const auto lo_min = static_cast<int64_t>(std::ceil((1.0 - delta) * base - 1e-9));
    const auto hi_max = static_cast<int64_t>(std::floor((1.0 + delta) * base + 1e-9));
    out.c_lo.push_back(rng.UniformInt(std::min(lo_min, c), c));
    out.c_hi.push_back(rng.UniformInt(c, std::max(hi_max, c)));
  }
  return out;
}

namespace {

int64_t Capacity(const std::vector<int64_t>& weights, double tightness) {
  int64_t total = 0;
  for (int64_t a : weights) total += a;
  return static_cast<int64_t>(std::floor(tightness * static_cast<double>(total) + 1e-9));
}

}  // namespace

problems::KpSpec GenerateKp(int type, int n, int64_t range, double tightness,
                            double delta, Rng& rng) {
  if (type < 1 || type > 9) throw ContractViolation("knapsack type must be in 1..9");
  if (n < 1 || range < 2) throw ContractViolation("bad knapsack size or range");
  const int64_t tenth = range / 10;
  const int64_t spread = range / 500;
  problems::KpSpec spec;
  std::vector<int64_t> costs;
  for (int j = 0; j < n; ++j) {
    int64_t a = 0;
    int64_t c = 0;
    switch (type) {
      case 1:
        a = rng.UniformInt(1, range);
        c = rng.UniformInt(1, range);
        break;
      case 2:
        a = rng.UniformInt(1, range);
        c = rng.UniformInt(std::max<int64_t>(1, a - tenth), a + tenth);
        break;
      case 3:
        a = rng.UniformInt(1, range);
        c = a + tenth;
        break;
      case 4:
        c = rng.UniformInt(1, range);
        a = c + tenth;
        break;
      case 5:
        a = rng.UniformInt(1, range);
        c = rng.UniformInt(a + tenth - spread, a + tenth + spread);
        break;
      case 6:
        a = rng.UniformInt(1, range);
        c = a;
        break;
      case 7:
        a = 2 * rng.UniformInt(1, range / 2);
        c = a;
        break;
      case 8:
        a = 2 * rng.UniformInt(1, range / 2);
        c = a + tenth;
        break;
      case 9:
        a = rng.UniformInt(100 * range, 100 * range + tenth);
        c = rng.UniformInt(1, range);
        break;
    }
    spec.weights.push_back(a);
    costs.push_back(c);
  }
  spec.capacity = Capacity(spec.weights, tightness);
  if ((type == 7 || type == 8) && spec.capacity % 2 == 0) ++spec.capacity;
  Intervals iv = OverlayIntervals(costs, delta, rng);
  spec.c_lo = std::move(iv.c_lo);
  spec.c_hi = std::move(iv.c_hi);
  return spec;
}

Intervals GenerateScpIntervals(const std::vector<int64_t>& base_costs,
                               ScpFlavor flavor, double delta, Rng& rng) {
  if (flavor == ScpFlavor::kB) return OverlayIntervals(base_costs, delta, rng);
  Intervals out;
  for (size_t j = 0; j < base_costs.size(); ++j) {
    if (flavor == ScpFlavor::kM) {
      const int64_t hi = rng.UniformInt(0, 1000);
      out.c_hi.push_back(hi);
      out.c_lo.push_back(rng.UniformInt(0, hi));
    } else {
      const int64_t lo = rng.UniformInt(0, 1000);
      out.c_lo.push_back(lo);
      out.c_hi.push_back(rng.UniformInt(lo, lo + 1000));
    }
  }
  return out;
}

problems::GapSpec GenerateGap(GapType type, int agents, int jobs, double delta,
                              Rng& rng) {
  if (agents < 1 || jobs < 1) throw ContractViolation("GAP needs agents and jobs");
  problems::GapSpec spec;
  spec.num_agents = agents;
  spec.num_jobs = jobs;
  spec.usage.assign(agents, std::vector<int64_t>(jobs));
  std::vector<int64_t> costs(static_cast<size_t>(agents) * jobs);
  for (int i = 0; i < agents; ++i) {
    for (int j = 0; j < jobs; ++j) {
      int64_t& a = spec.usage[i][j];
      int64_t& c = costs[problems::GapIndex(i, j, jobs)];
      if (type == GapType::kE) {
        const double e2 = 1.0 - rng.UniformReal();  // (0, 1]
        const double e3 = rng.UniformReal();
        const double a_real = 1.0 - 10.0 * std::log(e2);
        a = std::llround(a_real);
        c = std::max<int64_t>(0, std::llround(1000.0 / a_real - 10.0 * e3));
      } else {
        a = rng.UniformInt(5, 25);
        c = rng.UniformInt(10, 50);
      }
    }
  }
  spec.capacity.assign(agents, 0);
  if (type == GapType::kA || type == GapType::kB) {
    // Load each job on its cheapest agent (lowest index on ties).
    std::vector<int64_t> load(agents, 0);
    for (int j = 0; j < jobs; ++j) {
      int cheapest = 0;
      for (int i = 1; i < agents; ++i) {
        if (costs[problems::GapIndex(i, j, jobs)] <
            costs[problems::GapIndex(cheapest, j, jobs)]) {
          cheapest = i;
        }
      }
      load[cheapest] += spec.usage[cheapest][j];
    }
    const double heaviest = static_cast<double>(*std::max_element(load.begin(), load.end()));
    const double base = 0.6 * (static_cast<double>(jobs) / agents) * 15.0 + 0.4 * heaviest;
    for (int i = 0; i < agents; ++i) {
      int64_t b = static_cast<int64_t>(std::floor(base + 1e-9));
      if (type == GapType::kB) b = static_cast<int64_t>(std::floor(0.7 * b + 1e-9));
      spec.capacity[i] = b;
    }
  } else {
    for (int i = 0; i < agents; ++i) {
      int64_t total = 0;
      for (int j = 0; j < jobs; ++j) total += spec.usage[i][j];
      spec.capacity[i] =
          static_cast<int64_t>(std::floor(0.8 * static_cast<double>(total) / agents + 1e-9));
    }
  }
  Intervals iv = OverlayIntervals(costs, delta, rng);
  spec.c_lo = std::move(iv.c_lo);
  spec.c_hi = std::move(iv.c_hi);
  return spec;
}

mmr::BipInstance GenerateRandom(const RandomInstanceSpec& spec, Rng& rng,
                                std::string name) {
  if (spec.num_vars < 1 || spec.num_rows < 0) {
    throw ContractViolation("random instance needs at least one variable");
  }
  const bool max = spec.direction == Direction::kMaximize;
  std::vector<int64_t> costs(spec.num_vars);
  for (int64_t& c : costs) c = rng.UniformInt(spec.cost_min, spec.cost_max);
  Intervals iv = OverlayIntervals(costs, spec.delta, rng);
  mmr::BipInstance inst;
  inst.name = std::move(name);
  inst.direction = spec.direction;
  inst.num_vars = spec.num_vars;
  inst.c_lo = std::move(iv.c_lo);
  inst.c_hi = std::move(iv.c_hi);
  for (int i = 0; i < spec.num_rows; ++i) {
    mmr::IntConstraint row;
    int64_t total = 0;
    for (int j = 0; j < spec.num_vars; ++j) {
      const int64_t a = max ? rng.UniformInt(1, 30) : rng.UniformInt(0, 10);
      if (a == 0) continue;
      row.terms.push_back({j, a});
      total += a;
    }
    const double share = spec.tightness * static_cast<double>(total);
    if (max) {
      row.sense = Sense::kLessEqual;
      row.rhs = static_cast<int64_t>(std::floor(share + 1e-9));
    } else {
      row.sense = Sense::kGreaterEqual;
      row.rhs = static_cast<int64_t>(std::ceil(share - 1e-9));
    }
    inst.constraints.push_back(std::move(row));
  }
  inst.Validate();
  return inst;
}

}  // namespace regret_forge::instances
