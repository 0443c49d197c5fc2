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
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "regret_forge/bench.hpp"
#include "regret_forge/oracle.hpp"

namespace regret_forge::bench {

RunRecord RunAlgorithm(const mmr::BipInstance& inst, const RunOptions& options) {
  using mmr::Algorithm;
  const TimeBudget budget = TimeBudget::Seconds(options.time_limit_seconds);
  Stopwatch watch;
  mmr::AlgorithmReport report;
  switch (options.algorithm) {
    case Algorithm::kFix:
      report = mmr::FixedScenario(inst, budget);
      break;
    case Algorithm::kDs:
      report = mmr::DualSubstitution(inst, budget);
      break;
    case Algorithm::kIdsH:
      report = mmr::IteratedDs(inst, {mmr::CutFlavor::kHamming, options.d,
                                      options.local_exact, budget});
      break;
    case Algorithm::kIdsB:
      report = mmr::IteratedDs(inst, {mmr::CutFlavor::kBestScenario, 1, false, budget});
      break;
    case Algorithm::kBc:
      report = mmr::BranchAndCut(inst, budget);
      break;
    case Algorithm::kOracle:
      report = oracle::BruteForceMmr(inst);
      break;
  }
  const double elapsed = watch.Seconds();
  if (report.status == mmr::ReportStatus::kInfeasible) {
    throw InfeasibleInstance("instance " + inst.name + " has no feasible solution");
  }
  RunRecord record;
  record.instance = inst.name;
  record.algorithm = mmr::AlgorithmName(options.algorithm);
  record.obj = report.max_regret;
  record.time_seconds = elapsed;
  record.iterations = report.iterations;
  record.best_iteration = report.best_iteration;
  record.lower_bound = report.lower_bound;
  record.gap_percent = GapPercent(record.obj, record.lower_bound);
  record.status = mmr::ReportStatusName(report.status);
  return record;
}

std::vector<RunRecord> RunAll(const std::vector<RunJob>& jobs, int threads) {
  std::vector<RunRecord> results(jobs.size());
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto work = [&] {
    while (true) {
      const size_t k = next.fetch_add(1);
      if (k >= jobs.size()) return;
      try {
        results[k] = RunAlgorithm(*jobs[k].instance, jobs[k].options);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = jobs.size();
      }
    }
  };
  const int workers =
      std::max(1, std::min<int>(threads, static_cast<int>(jobs.size())));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

int ThreadsFromEnvironment() {
  const char* value = std::getenv("REGRET_FORGE_THREADS");
  if (!value || !*value) return 1;
  char* end = nullptr;
  const long parsed = std::strtol(value, &end, 10);
  if (*end != '\0' || parsed < 1) return 1;
  return static_cast<int>(std::min<long>(parsed, 256));
}

}  // namespace regret_forge::bench
