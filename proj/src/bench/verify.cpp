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
#include <map>
#include <set>

#include "regret_forge/instances.hpp"
#include "regret_forge/oracle.hpp"
#include "regret_forge/verify.hpp"

namespace regret_forge::bench {

namespace {

void Fail(CheckResult& result, const std::string& message) {
  if (result.violations++ == 0) result.first_failure = message;
}

std::vector<double> AsDoubles(const mmr::BinarySolution& x) {
  return std::vector<double>(x.bits.begin(), x.bits.end());
}

std::set<mmr::BinarySolution> OptimalSet(const mmr::BipInstance& inst) {
  std::set<mmr::BinarySolution> best;
  int64_t best_regret = 0;
  for (const mmr::BinarySolution& x : oracle::EnumerateFeasible(inst)) {
    const int64_t r = oracle::BruteForceMaxRegret(inst, x).max_regret;
    if (best.empty() || r < best_regret) {
      best = {x};
      best_regret = r;
    } else if (r == best_regret) {
      best.insert(x);
    }
  }
  return best;
}

}  // namespace

std::vector<mmr::BipInstance> BuildCorpus(const CorpusSpec& spec) {
  std::vector<mmr::BipInstance> corpus;
  const char* tag = spec.direction == Direction::kMaximize ? "max" : "min";
  for (int k = 0; k < spec.count; ++k) {
    instances::Rng rng(spec.seed + static_cast<uint64_t>(k));
    instances::RandomInstanceSpec r;
    r.direction = spec.direction;
    r.num_vars = static_cast<int>(rng.UniformInt(spec.min_vars, spec.max_vars));
    r.num_rows = static_cast<int>(rng.UniformInt(1, spec.max_rows));
    r.delta = spec.deltas[rng.UniformInt(0, static_cast<int64_t>(spec.deltas.size()) - 1)];
    r.tightness = spec.tightness;
    r.cost_min = spec.cost_min;
    r.cost_max = spec.cost_max;
    corpus.push_back(instances::GenerateRandom(
        r, rng, std::string("rnd") + tag + "-" + std::to_string(k)));
  }
  return corpus;
}

std::vector<int64_t> OracleOptima(const std::vector<mmr::BipInstance>& corpus) {
  std::vector<int64_t> optima;
  optima.reserve(corpus.size());
  for (const mmr::BipInstance& inst : corpus) {
    optima.push_back(*oracle::BruteForceMmr(inst).max_regret);
  }
  return optima;
}

CheckResult CheckExactness(const std::vector<mmr::BipInstance>& corpus,
                           const std::vector<int64_t>& optima,
                           const RunOptions& options) {
  CheckResult result;
  result.name = mmr::AlgorithmName(options.algorithm);
  for (size_t k = 0; k < corpus.size(); ++k) {
    const RunRecord r = RunAlgorithm(corpus[k], options);
    ++result.checked;
    if (!r.obj || *r.obj != optima[k] || r.status != "OPTIMAL") {
      Fail(result, corpus[k].name + ": " + r.status + " obj " +
                       (r.obj ? std::to_string(*r.obj) : "none") + ", oracle " +
                       std::to_string(optima[k]));
    }
  }
  return result;
}

CheckResult CheckFixedScenarioBound(const std::vector<mmr::BipInstance>& corpus,
                                    const std::vector<int64_t>& optima) {
  CheckResult result;
  result.name = "fixed-scenario 2-approximation";
  for (size_t k = 0; k < corpus.size(); ++k) {
    const mmr::AlgorithmReport fix = mmr::FixedScenario(corpus[k]);
    ++result.checked;
    if (!fix.max_regret || *fix.max_regret > 2 * optima[k] ||
        fix.lower_bound > optima[k]) {
      Fail(result, corpus[k].name + ": fix " +
                       (fix.max_regret ? std::to_string(*fix.max_regret) : "none") +
                       ", bound " + std::to_string(fix.lower_bound) + ", oracle " +
                       std::to_string(optima[k]));
    }
  }
  return result;
}

CheckResult CheckDsBounds(const std::vector<mmr::BipInstance>& corpus,
                          const std::vector<int64_t>& optima) {
  CheckResult result;
  result.name = "single-level model bounds";
  for (size_t k = 0; k < corpus.size(); ++k) {
    const mmr::AlgorithmReport ds = mmr::DualSubstitution(corpus[k]);
    ++result.checked;
    if (!ds.max_regret || ds.trace.empty()) {
      Fail(result, corpus[k].name + ": no solution");
      continue;
    }
    const double model = ds.trace.front().model_objective;
    const double tol = 1e-6 * (1.0 + std::abs(model));
    const auto opt = static_cast<double>(optima[k]);
    const auto regret = static_cast<double>(*ds.max_regret);
    if (model < opt - tol || regret > model + tol) {
      Fail(result, corpus[k].name + ": model " + std::to_string(model) +
                       ", evaluated " + std::to_string(*ds.max_regret) + ", oracle " +
                       std::to_string(optima[k]));
    }
  }
  return result;
}

CheckResult CheckDominance(const std::vector<mmr::BipInstance>& corpus, int pairs,
                           uint64_t seed, long long* dominated_pairs) {
  CheckResult result;
  result.name = "dominance";
  if (corpus.empty()) return result;
  instances::Rng rng(seed);
  std::map<size_t, std::vector<mmr::BinarySolution>> feasible;
  long long dominated = 0;
  for (int p = 0; p < pairs; ++p) {
    const auto k = static_cast<size_t>(
        rng.UniformInt(0, static_cast<int64_t>(corpus.size()) - 1));
    const mmr::BipInstance& inst = corpus[k];
    auto it = feasible.find(k);
    if (it == feasible.end()) it = feasible.emplace(k, oracle::EnumerateFeasible(inst)).first;
    const auto& points = it->second;
    const int64_t last = static_cast<int64_t>(points.size()) - 1;
    const mmr::BinarySolution& xbar = points[rng.UniformInt(0, last)];
    const mmr::BinarySolution& xhat = points[rng.UniformInt(0, last)];
    ++result.checked;
    if (!mmr::DominanceHolds(inst, xbar, xhat)) continue;
    ++dominated;
    const int64_t r_hat = oracle::BruteForceMaxRegret(inst, xhat).max_regret;
    const int64_t r_bar = oracle::BruteForceMaxRegret(inst, xbar).max_regret;
    if (r_hat > r_bar) {
      Fail(result, inst.name + ": xbar " + xbar.ToString() + " (" + std::to_string(r_bar) +
                       "), xhat " + xhat.ToString() + " (" + std::to_string(r_hat) + ")");
    }
  }
  if (dominated_pairs) *dominated_pairs = dominated;
  return result;
}

CheckResult CheckCutRemovesDominated(const std::vector<mmr::BipInstance>& corpus,
                                     int max_vars) {
  CheckResult result;
  result.name = "best-scenario cut";
  for (const mmr::BipInstance& inst : corpus) {
    if (inst.num_vars > max_vars) continue;
    const std::vector<mmr::BinarySolution> points = oracle::EnumerateFeasible(inst);
    std::vector<std::vector<double>> values;
    for (const auto& x : points) values.push_back(AsDoubles(x));
    for (const mmr::BinarySolution& xhat : points) {
      const lp::LinearConstraint cut = mmr::BestScenarioCut(inst, xhat);
      for (size_t k = 0; k < points.size(); ++k) {
        ++result.checked;
        const bool removed = cut.Violation(values[k]) > 1e-9;
        const bool dominated = mmr::DominanceHolds(inst, points[k], xhat);
        if (removed != dominated) {
          Fail(result, inst.name + ": xhat " + xhat.ToString() + ", x " +
                           points[k].ToString() + (removed ? " removed" : " kept") +
                           " but dominance is " + (dominated ? "true" : "false"));
        }
      }
    }
  }
  return result;
}

CheckResult CheckScaling(const std::vector<mmr::BipInstance>& corpus, int64_t k) {
  CheckResult result;
  result.name = "cost scaling";
  for (const mmr::BipInstance& inst : corpus) {
    mmr::BipInstance scaled = inst;
    for (int64_t& c : scaled.c_lo) c *= k;
    for (int64_t& c : scaled.c_hi) c *= k;
    ++result.checked;
    const int64_t base = *oracle::BruteForceMmr(inst).max_regret;
    const int64_t big = *oracle::BruteForceMmr(scaled).max_regret;
    const auto bc_base = mmr::BranchAndCut(inst).max_regret;
    const auto bc_big = mmr::BranchAndCut(scaled).max_regret;
    const bool same_set = OptimalSet(inst) == OptimalSet(scaled);
    if (big != k * base || !bc_base || !bc_big || *bc_big != k * *bc_base ||
        *bc_base != base || !same_set) {
      Fail(result, inst.name + ": oracle " + std::to_string(base) + " -> " +
                       std::to_string(big) + ", bc " +
                       (bc_base ? std::to_string(*bc_base) : "none") + " -> " +
                       (bc_big ? std::to_string(*bc_big) : "none") +
                       (same_set ? "" : ", optimal sets differ"));
    }
  }
  return result;
}

}  // namespace regret_forge::bench
