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

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <system_error>

#include "regret_forge/bench.hpp"

namespace regret_forge::bench {

namespace {

constexpr const char* kColumns[] = {
    "schema",     "instance",       "algorithm",   "obj",         "time_seconds",
    "iterations", "best_iteration", "lower_bound", "gap_percent", "status"};
constexpr size_t kNumColumns = std::size(kColumns);

// Shortest text that reads back to the same double.
std::string FormatDouble(double value) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc()) throw Error("cannot format number");
  return std::string(buffer, end);
}

struct Row {
  std::vector<std::string> fields;
  int line = 1;
};

std::vector<Row> SplitCsv(std::string_view text) {
  std::vector<Row> rows;
  Row row;
  std::string field;
  int line = 1;
  row.line = line;
  bool quoted = false;
  bool field_started = false;
  size_t i = 0;
  const auto end_field = [&] {
    row.fields.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  const auto end_row = [&] {
    end_field();
    rows.push_back(std::move(row));
    row = Row();
    row.line = line;
  };
  while (i < text.size()) {
    const char ch = text[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          i += 2;
          continue;
        }
        quoted = false;
        ++i;
        if (i < text.size() && text[i] != ',' && text[i] != '\n' && text[i] != '\r') {
          throw ParseError("characters after closing quote", line, 1);
        }
        continue;
      }
      if (ch == '\n') ++line;
      field += ch;
      ++i;
      continue;
    }
    if (ch == '"') {
      if (field_started) throw ParseError("quote inside unquoted field", line, 1);
      quoted = true;
      field_started = true;
      ++i;
    } else if (ch == ',') {
      end_field();
      ++i;
    } else if (ch == '\r' || ch == '\n') {
      if (ch == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      ++i;
      ++line;
      end_row();
    } else {
      field += ch;
      field_started = true;
      ++i;
    }
  }
  if (quoted) throw ParseError("unterminated quoted field", line, 1);
  if (field_started || !row.fields.empty()) end_row();
  return rows;
}

int64_t ParseInt(const std::string& s, const char* what, int line) {
  int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(std::string("bad ") + what + " '" + s + "'", line, 1);
  }
  return value;
}

double ParseDouble(const std::string& s, const char* what, int line) {
  double value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(std::string("bad ") + what + " '" + s + "'", line, 1);
  }
  return value;
}

}  // namespace

std::string CsvField(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::optional<double> GapPercent(std::optional<int64_t> obj, int64_t lower_bound) {
  if (!obj) return std::nullopt;
  if (*obj <= 0) return 0.0;
  const double gap = 100.0 * static_cast<double>(*obj - lower_bound) /
                     static_cast<double>(*obj);
  return gap > 0.0 ? gap : 0.0;
}

std::string CsvHeader() {
  std::string out;
  for (size_t c = 0; c < kNumColumns; ++c) {
    if (c) out += ',';
    out += kColumns[c];
  }
  return out + "\r\n";
}

std::string ToCsvRow(const RunRecord& r) {
  const std::string fields[] = {
      r.schema,
      r.instance,
      r.algorithm,
      r.obj ? std::to_string(*r.obj) : "",
      FormatDouble(r.time_seconds),
      std::to_string(r.iterations),
      std::to_string(r.best_iteration),
      std::to_string(r.lower_bound),
      r.gap_percent ? FormatDouble(*r.gap_percent) : "",
      r.status};
  std::string out;
  for (size_t c = 0; c < kNumColumns; ++c) {
    if (c) out += ',';
    out += CsvField(fields[c]);
  }
  return out + "\r\n";
}

std::vector<RunRecord> ParseCsv(std::string_view text) {
  const std::vector<Row> rows = SplitCsv(text);
  if (rows.empty()) throw ParseError("result store has no header", 1, 1);
  const Row& header = rows.front();
  bool header_ok = header.fields.size() == kNumColumns;
  for (size_t c = 0; header_ok && c < kNumColumns; ++c) {
    header_ok = header.fields[c] == kColumns[c];
  }
  if (!header_ok) throw ParseError("unexpected result store header", header.line, 1);
  std::vector<RunRecord> records;
  for (size_t k = 1; k < rows.size(); ++k) {
    const Row& row = rows[k];
    if (row.fields.size() == 1 && row.fields[0].empty()) continue;  // blank line
    if (row.fields.size() != kNumColumns) {
      throw ParseError("expected " + std::to_string(kNumColumns) + " fields, found " +
                           std::to_string(row.fields.size()),
                       row.line, 1);
    }
    const auto& f = row.fields;
    if (f[0] != kRecordSchema) {
      throw ParseError("unknown record schema '" + f[0] + "'", row.line, 1);
    }
    RunRecord r;
    r.instance = f[1];
    r.algorithm = f[2];
    if (!f[3].empty()) r.obj = ParseInt(f[3], "obj", row.line);
    r.time_seconds = ParseDouble(f[4], "time", row.line);
    r.iterations = ParseInt(f[5], "iterations", row.line);
    r.best_iteration = ParseInt(f[6], "best iteration", row.line);
    r.lower_bound = ParseInt(f[7], "lower bound", row.line);
    if (!f[8].empty()) r.gap_percent = ParseDouble(f[8], "gap", row.line);
    if (!mmr::ParseReportStatus(f[9])) {
      throw ParseError("unknown status '" + f[9] + "'", row.line, 1);
    }
    r.status = f[9];
    records.push_back(std::move(r));
  }
  return records;
}

void AppendCsv(const std::string& path, const std::vector<RunRecord>& records) {
  std::error_code ec;
  const bool fresh = !std::filesystem::exists(path, ec) ||
                     std::filesystem::file_size(path, ec) == 0;
  std::ofstream out(path, std::ios::binary | std::ios::app);
  if (!out) throw Error("cannot open result store " + path);
  if (fresh) out << CsvHeader();
  for (const RunRecord& r : records) out << ToCsvRow(r);
  if (!out) throw Error("failed writing result store " + path);
}

std::vector<RunRecord> ReadCsv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open result store " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseCsv(buffer.str());
}

std::string FamilyOf(const std::string& instance) {
  const size_t dash = instance.rfind('-');
  if (dash == std::string::npos || dash == 0) return instance;
  return instance.substr(0, dash);
}

}  // namespace regret_forge::bench
