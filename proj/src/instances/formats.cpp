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

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "regret_forge/instances.hpp"

namespace regret_forge::instances {

namespace {

struct Token {
  std::string_view text;
  int line = 1;
  int column = 1;
};

class Tokens {
 public:
  explicit Tokens(std::string_view text) {
    int line = 1;
    int column = 1;
    size_t i = 0;
    while (i < text.size()) {
      const char ch = text[i];
      if (ch == '\n') {
        ++line;
        column = 1;
        ++i;
        continue;
      }
      if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\f' || ch == '\v') {
        ++column;
        ++i;
        continue;
      }
      const size_t start = i;
      const int start_column = column;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
        ++column;
      }
      tokens_.push_back({text.substr(start, i - start), line, start_column});
    }
    end_line_ = line;
    end_column_ = column;
  }

  size_t remaining() const { return tokens_.size() - next_; }
  bool done() const { return next_ == tokens_.size(); }
  const Token& peek() const { return tokens_[next_]; }

  Token Take(const char* what) {
    if (done()) {
      throw ParseError(std::string("unexpected end of input, expected ") + what,
                       end_line_, end_column_);
    }
    return tokens_[next_++];
  }

  int64_t Int(const char* what) {
    const Token t = Take(what);
    int64_t value = 0;
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    if (*first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) {
      throw ParseError(std::string("expected integer ") + what + ", found '" +
                           std::string(t.text) + "'",
                       t.line, t.column);
    }
    return value;
  }

  int Count(const char* what, int64_t limit = 100000000) {
    const Token t = done() ? Token{} : peek();
    const int64_t value = Int(what);
    if (value < 0 || value > limit) {
      throw ParseError(std::string(what) + " out of range: " + std::to_string(value),
                       t.line, t.column);
    }
    return static_cast<int>(value);
  }

  void ExpectEnd() const {
    if (!done()) {
      throw ParseError("unexpected trailing data '" + std::string(peek().text) + "'",
                       peek().line, peek().column);
    }
  }

  void Rewind() { next_ = 0; }

 private:
  std::vector<Token> tokens_;
  size_t next_ = 0;
  int end_line_ = 1;
  int end_column_ = 1;
};

// Several OR-Library files start with a problem count; single-problem files
// start directly with the dimensions. Returns true when `problem_tokens`
// (the token count of one problem given its two leading dimensions) accounts
// for the file only when a count is present.
template <typename SizeOf>
bool HasProblemCount(Tokens& tokens, SizeOf problem_tokens) {
  if (tokens.remaining() < 3) return false;
  const size_t total = tokens.remaining();
  // Interpretation without a count: one problem starting at token 0.
  int64_t d0 = 0;
  int64_t d1 = 0;
  try {
    d0 = tokens.Int("dimension");
    d1 = tokens.Int("dimension");
  } catch (const ParseError&) {
    tokens.Rewind();
    return false;
  }
  tokens.Rewind();
  if (d0 > 0 && d1 > 0 && problem_tokens(d0, d1) == total) return false;
  return true;
}

}  // namespace

problems::ScpSpec ParseOrlibScp(std::string_view text) {
  Tokens tokens(text);
  problems::ScpSpec spec;
  spec.num_rows = tokens.Count("row count");
  spec.num_cols = tokens.Count("column count");
  if (spec.num_rows == 0 || spec.num_cols == 0) {
    throw ParseError("empty set covering instance", 1, 1);
  }
  std::vector<int64_t> costs(spec.num_cols);
  for (int64_t& c : costs) {
    const Token& t = tokens.done() ? Token{} : tokens.peek();
    c = tokens.Int("column cost");
    if (c < 0) throw ParseError("negative column cost", t.line, t.column);
  }
  spec.covers.resize(spec.num_rows);
  for (int i = 0; i < spec.num_rows; ++i) {
    const int k = tokens.Count("cover count", spec.num_cols);
    for (int r = 0; r < k; ++r) {
      const Token& t = tokens.done() ? Token{} : tokens.peek();
      const int64_t col = tokens.Int("column index");
      if (col < 1 || col > spec.num_cols) {
        throw ParseError("column index " + std::to_string(col) + " out of range",
                         t.line, t.column);
      }
      spec.covers[i].push_back(static_cast<int>(col - 1));
    }
  }
  tokens.ExpectEnd();
  spec.c_lo = costs;
  spec.c_hi = costs;
  return spec;
}

problems::GapSpec ParseOrlibGap(std::string_view text, int index) {
  Tokens tokens(text);
  const auto size_of = [](int64_t m, int64_t n) {
    return static_cast<size_t>(2 + 2 * m * n + m);
  };
  int problems_in_file = 1;
  if (HasProblemCount(tokens, size_of)) problems_in_file = tokens.Count("problem count");
  if (index < 0 || index >= problems_in_file) {
    throw ParseError("problem index " + std::to_string(index) + " not in file", 1, 1);
  }
  problems::GapSpec chosen;
  // Every problem is read so that truncation anywhere is detected.
  for (int p = 0; p < problems_in_file; ++p) {
    problems::GapSpec spec;
    spec.num_agents = tokens.Count("agent count", 100000);
    spec.num_jobs = tokens.Count("job count", 100000);
    if (spec.num_agents == 0 || spec.num_jobs == 0) {
      throw ParseError("empty assignment problem", 1, 1);
    }
    const int m = spec.num_agents;
    const int n = spec.num_jobs;
    std::vector<int64_t> costs(static_cast<size_t>(m) * n);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) costs[problems::GapIndex(i, j, n)] = tokens.Int("cost");
    }
    spec.usage.assign(m, std::vector<int64_t>(n));
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) spec.usage[i][j] = tokens.Int("resource");
    }
    spec.capacity.resize(m);
    for (int64_t& b : spec.capacity) b = tokens.Int("capacity");
    spec.c_lo = costs;
    spec.c_hi = std::move(costs);
    if (p == index) chosen = std::move(spec);
  }
  tokens.ExpectEnd();
  return chosen;
}

problems::MkpSpec ParseChuBeasleyMkp(std::string_view text, int index) {
  Tokens tokens(text);
  const auto size_of = [](int64_t n, int64_t m) {
    return static_cast<size_t>(3 + n + m * n + m);
  };
  int problems_in_file = 1;
  if (HasProblemCount(tokens, size_of)) problems_in_file = tokens.Count("problem count");
  if (index < 0 || index >= problems_in_file) {
    throw ParseError("problem index " + std::to_string(index) + " not in file", 1, 1);
  }
  problems::MkpSpec chosen;
  // Every problem is read so that truncation anywhere is detected.
  for (int p = 0; p < problems_in_file; ++p) {
    problems::MkpSpec spec;
    spec.num_items = tokens.Count("item count", 1000000);
    spec.num_resources = tokens.Count("resource count", 100000);
    if (spec.num_items == 0) throw ParseError("empty knapsack problem", 1, 1);
    tokens.Take("known optimum");  // may be 0 or a real number; unused
    std::vector<int64_t> costs(spec.num_items);
    for (int64_t& c : costs) c = tokens.Int("profit");
    spec.usage.assign(spec.num_resources, std::vector<int64_t>(spec.num_items));
    for (auto& row : spec.usage) {
      for (int64_t& a : row) a = tokens.Int("resource usage");
    }
    spec.capacity.resize(spec.num_resources);
    for (int64_t& b : spec.capacity) b = tokens.Int("capacity");
    spec.c_lo = costs;
    spec.c_hi = std::move(costs);
    if (p == index) chosen = std::move(spec);
  }
  tokens.ExpectEnd();
  return chosen;
}

mmr::BipInstance ParseNative(std::string_view text) {
  Tokens tokens(text);
  const Token magic = tokens.Take("header");
  if (magic.text != "MMRBIP") {
    throw ParseError("missing MMRBIP header", magic.line, magic.column);
  }
  const Token version = tokens.Take("version");
  if (version.text != "v1") {
    throw ParseError("unsupported version '" + std::string(version.text) + "'",
                     version.line, version.column);
  }
  mmr::BipInstance inst;
  inst.name = std::string(tokens.Take("name").text);
  const Token direction = tokens.Take("direction");
  if (direction.text == "MAX") {
    inst.direction = Direction::kMaximize;
  } else if (direction.text == "MIN") {
    inst.direction = Direction::kMinimize;
  } else {
    throw ParseError("direction must be MAX or MIN", direction.line, direction.column);
  }
  const Token n_token = tokens.done() ? direction : tokens.peek();
  inst.num_vars = tokens.Count("variable count");
  if (inst.num_vars == 0) {
    throw ParseError("instance needs at least one variable", n_token.line, n_token.column);
  }
  const int m = tokens.Count("constraint count");
  for (int j = 0; j < inst.num_vars; ++j) {
    const Token& t = tokens.done() ? n_token : tokens.peek();
    const int64_t lo = tokens.Int("interval lower end");
    const int64_t hi = tokens.Int("interval upper end");
    if (lo > hi) {
      throw ParseError("interval of variable " + std::to_string(j) + " is inverted",
                       t.line, t.column);
    }
    inst.c_lo.push_back(lo);
    inst.c_hi.push_back(hi);
  }
  for (int i = 0; i < m; ++i) {
    mmr::IntConstraint row;
    const Token sense = tokens.Take("constraint sense");
    if (sense.text == "LE") {
      row.sense = Sense::kLessEqual;
    } else if (sense.text == "GE") {
      row.sense = Sense::kGreaterEqual;
    } else if (sense.text == "EQ") {
      row.sense = Sense::kEqual;
    } else {
      throw ParseError("constraint sense must be LE, GE or EQ", sense.line, sense.column);
    }
    row.rhs = tokens.Int("right-hand side");
    const int nnz = tokens.Count("nonzero count");
    for (int k = 0; k < nnz; ++k) {
      const Token& t = tokens.done() ? sense : tokens.peek();
      const int64_t index = tokens.Int("variable index");
      if (index < 0 || index >= inst.num_vars) {
        throw ParseError("variable index " + std::to_string(index) + " out of range",
                         t.line, t.column);
      }
      row.terms.push_back({static_cast<int>(index), tokens.Int("coefficient")});
    }
    inst.constraints.push_back(std::move(row));
  }
  tokens.ExpectEnd();
  return inst;
}

std::string SerializeNative(const mmr::BipInstance& inst) {
  inst.Validate();
  if (inst.name.empty() ||
      inst.name.find_first_of(" \t\r\n\f\v") != std::string::npos) {
    throw InvalidModel("instance name must be a single non-empty token");
  }
  std::ostringstream out;
  out << "MMRBIP v1 " << inst.name << ' ' << DirectionName(inst.direction) << ' '
      << inst.num_vars << ' ' << inst.constraints.size() << '\n';
  for (int j = 0; j < inst.num_vars; ++j) {
    out << inst.c_lo[j] << ' ' << inst.c_hi[j] << '\n';
  }
  for (const mmr::IntConstraint& row : inst.constraints) {
    out << SenseName(row.sense) << ' ' << row.rhs << ' ' << row.terms.size();
    for (const mmr::IntTerm& t : row.terms) out << ' ' << t.index << ' ' << t.coefficient;
    out << '\n';
  }
  return out.str();
}

mmr::BipInstance ReadNativeFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseNative(buffer.str());
}

void WriteNativeFile(const mmr::BipInstance& inst, const std::string& path) {
  const std::string text = SerializeNative(inst);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("failed writing " + path);
}

}  // namespace regret_forge::instances
