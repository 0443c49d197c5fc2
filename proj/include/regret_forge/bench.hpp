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

// Benchmark harness: running algorithms, storing run records as CSV and
// aggregating them into per-family tables.

#ifndef REGRET_FORGE_BENCH_HPP_
#define REGRET_FORGE_BENCH_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "regret_forge/bip.hpp"
#include "regret_forge/mmr.hpp"

namespace regret_forge::bench {

inline constexpr const char* kRecordSchema = "rf-run-v1";

struct RunRecord {
  std::string schema = kRecordSchema;
  std::string instance;
  std::string algorithm;
  std::optional<int64_t> obj;  // max regret of the returned solution
  double time_seconds = 0.0;
  long long iterations = 0;
  long long best_iteration = 0;
  int64_t lower_bound = 0;
  std::optional<double> gap_percent;
  std::string status;

  bool operator==(const RunRecord&) const = default;
};

// 100 (obj - lb) / obj, 0 when obj is 0, never negative.
std::optional<double> GapPercent(std::optional<int64_t> obj, int64_t lower_bound);

struct RunOptions {
  mmr::Algorithm algorithm = mmr::Algorithm::kIdsB;
  double time_limit_seconds = 3600.0;
  int d = 1;
  // Only consulted for ids-h; ids-b always uses the best-scenario cut.
  bool local_exact = false;
};

// Wall-clock time covers the algorithm call only.
RunRecord RunAlgorithm(const mmr::BipInstance& inst, const RunOptions& options);

// Runs every (instance, options) job on up to `threads` workers and returns
// the records in job order.
struct RunJob {
  const mmr::BipInstance* instance = nullptr;
  RunOptions options;
};
std::vector<RunRecord> RunAll(const std::vector<RunJob>& jobs, int threads);

// Worker count from REGRET_FORGE_THREADS (default 1, at least 1).
int ThreadsFromEnvironment();

// RFC 4180 CSV with a header row.
std::string CsvField(const std::string& field);
std::string CsvHeader();
std::string ToCsvRow(const RunRecord& record);
// Throws ParseError on malformed text, unknown schema or a wrong header.
std::vector<RunRecord> ParseCsv(std::string_view text);
// Appends records to a result store, writing the header if the file is new
// or empty.
void AppendCsv(const std::string& path, const std::vector<RunRecord>& records);
std::vector<RunRecord> ReadCsv(const std::string& path);

// "05-100-10-07" -> "05-100-10"; names without '-' are their own family.
std::string FamilyOf(const std::string& instance);

struct TableRow {
  std::string family;
  std::string algorithm;
  int instances = 0;
  int solved = 0;  // records with a solution
  double avg_time = 0.0;
  double avg_iterations = 0.0;
  std::optional<double> avg_gap;
  int num_opt = 0;
  int num_best = 0;
  bool best_in_family = false;  // most #best within the family, ties included

  bool operator==(const TableRow&) const = default;
};

// Lower bound per instance is the maximum recorded by any run. #best counts
// instances where the algorithm matched the smallest obj across algorithms.
// If an algorithm has several records for one instance, the one with the
// smallest obj (then shortest time) is used. Throws Error on an empty input.
std::vector<TableRow> Aggregate(const std::vector<RunRecord>& records);

enum class TableFormat { kCsv, kText };
std::string RenderTable(const std::vector<TableRow>& rows, TableFormat format);

}  // namespace regret_forge::bench

#endif  // REGRET_FORGE_BENCH_HPP_
