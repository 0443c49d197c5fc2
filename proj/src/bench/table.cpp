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
#include <cstdio>
#include <map>
#include <tuple>

#include "regret_forge/bench.hpp"

namespace regret_forge::bench {

namespace {

// Known algorithms in their usual column order, anything else afterwards.
int AlgorithmRank(const std::string& name) {
  const auto parsed = mmr::ParseAlgorithm(name);
  return parsed ? static_cast<int>(*parsed) : 100;
}

bool AlgorithmBefore(const std::string& a, const std::string& b) {
  return std::make_pair(AlgorithmRank(a), a) < std::make_pair(AlgorithmRank(b), b);
}

// Total order so that the chosen record never depends on input order.
bool Preferred(const RunRecord& a, const RunRecord& b) {
  const auto key = [](const RunRecord& r) {
    return std::make_tuple(!r.obj.has_value(), r.obj.value_or(0), r.time_seconds,
                           ToCsvRow(r));
  };
  return key(a) < key(b);
}

std::string Fixed(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
  return buffer;
}

}  // namespace

std::vector<TableRow> Aggregate(const std::vector<RunRecord>& records) {
  if (records.empty()) throw Error("no run records to aggregate");
  // instance -> algorithm -> representative record
  std::map<std::string, std::map<std::string, RunRecord>> chosen;
  std::map<std::string, int64_t> instance_lb;
  for (const RunRecord& r : records) {
    auto [lb, fresh] = instance_lb.try_emplace(r.instance, r.lower_bound);
    if (!fresh) lb->second = std::max(lb->second, r.lower_bound);
    auto& slot = chosen[r.instance];
    auto it = slot.find(r.algorithm);
    if (it == slot.end()) {
      slot.emplace(r.algorithm, r);
    } else if (Preferred(r, it->second)) {
      it->second = r;
    }
  }

  struct Sums {
    TableRow row;
    double gap_sum = 0.0;
    double iteration_sum = 0.0;
    double time_sum = 0.0;
  };
  std::map<std::pair<std::string, std::string>, Sums> groups;
  for (const auto& [instance, by_alg] : chosen) {
    std::optional<int64_t> best;
    for (const auto& [alg, r] : by_alg) {
      if (r.obj && (!best || *r.obj < *best)) best = r.obj;
    }
    const int64_t lb = instance_lb.at(instance);
    const std::string family = FamilyOf(instance);
    for (const auto& [alg, r] : by_alg) {
      Sums& s = groups[{family, alg}];
      s.row.family = family;
      s.row.algorithm = alg;
      ++s.row.instances;
      s.time_sum += r.time_seconds;
      s.iteration_sum += static_cast<double>(r.best_iteration);
      if (r.status == mmr::ReportStatusName(mmr::ReportStatus::kOptimal)) ++s.row.num_opt;
      if (!r.obj) continue;
      ++s.row.solved;
      s.gap_sum += *GapPercent(r.obj, lb);
      if (*r.obj == *best) ++s.row.num_best;
    }
  }

  std::vector<TableRow> rows;
  for (auto& [key, s] : groups) {
    s.row.avg_time = s.time_sum / s.row.instances;
    s.row.avg_iterations = s.iteration_sum / s.row.instances;
    if (s.row.solved > 0) s.row.avg_gap = s.gap_sum / s.row.solved;
    rows.push_back(s.row);
  }
  std::sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) {
    if (a.family != b.family) return a.family < b.family;
    return AlgorithmBefore(a.algorithm, b.algorithm);
  });
  for (size_t begin = 0; begin < rows.size();) {
    size_t end = begin;
    int most = 0;
    while (end < rows.size() && rows[end].family == rows[begin].family) {
      most = std::max(most, rows[end].num_best);
      ++end;
    }
    for (size_t k = begin; k < end; ++k) {
      rows[k].best_in_family = most > 0 && rows[k].num_best == most;
    }
    begin = end;
  }
  return rows;
}

std::string RenderTable(const std::vector<TableRow>& rows, TableFormat format) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"family", "algorithm", "instances", "solved", "time", "iter", "%gap",
                   "#opt", "#best", "best"});
  for (const TableRow& r : rows) {
    cells.push_back({r.family, r.algorithm, std::to_string(r.instances),
                     std::to_string(r.solved), Fixed(r.avg_time, 2),
                     Fixed(r.avg_iterations, 1), r.avg_gap ? Fixed(*r.avg_gap, 2) : "-",
                     std::to_string(r.num_opt), std::to_string(r.num_best),
                     r.best_in_family ? "*" : ""});
  }
  std::string out;
  if (format == TableFormat::kCsv) {
    for (const auto& line : cells) {
      for (size_t c = 0; c < line.size(); ++c) {
        if (c) out += ',';
        out += CsvField(line[c]);
      }
      out += "\r\n";
    }
    return out;
  }
  std::vector<size_t> width(cells.front().size(), 0);
  for (const auto& line : cells) {
    for (size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  }
  for (const auto& line : cells) {
    std::string text;
    for (size_t c = 0; c < line.size(); ++c) {
      const std::string& f = line[c];
      const std::string pad(width[c] - f.size(), ' ');
      // Names left-aligned, numbers right-aligned.
      text += c < 2 ? f + pad : pad + f;
      if (c + 1 < line.size()) text += "  ";
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out += text + '\n';
  }
  return out;
}

}  // namespace regret_forge::bench
