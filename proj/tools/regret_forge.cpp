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

// regret-forge command-line tool: gen | run | table | verify.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "regret_forge/bench.hpp"
#include "regret_forge/instances.hpp"
#include "regret_forge/verify.hpp"

namespace rf = regret_forge;

namespace {

enum ExitCode { kOk = 0, kInputError = 1, kInfeasible = 2, kInternal = 3 };

struct GenFlags {
  std::string kind = "random";
  uint64_t seed = 1;
  std::string out;
  std::string name;
  std::string direction = "max";
  int n = 10;
  int rows = 1;
  double delta = 0.1;
  double tightness = 0.5;
  int64_t cost_min = 1;
  int64_t cost_max = 100;
  int kp_type = 1;
  int64_t range = 1000;
  std::string gap_type = "A";
  int agents = 5;
  int jobs = 40;
  std::string flavor = "B";
  std::string source;
  int index = 0;
};

struct RunFlags {
  std::vector<std::string> instances;
  std::string alg = "ids-b";
  double time_limit = 3600.0;
  uint64_t seed = 1;
  int d = 1;
  std::string cut;
  bool local_exact = false;
  std::string out;
  std::string format = "csv";
};

struct TableFlags {
  std::string in;
  std::string out;
  std::string format = "text";
};

struct VerifyFlags {
  uint64_t seed = 1;
  int count = 20;
  int max_vars = 8;
  int pairs = 200;
};

std::string ReadText(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw rf::Error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void Emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw rf::Error("cannot write " + path);
  out << text;
}

rf::mmr::BipInstance Generate(const GenFlags& f) {
  using namespace rf::instances;
  Rng rng(f.seed);
  const std::string seed_tag = std::to_string(f.seed);
  if (f.kind == "random") {
    RandomInstanceSpec spec;
    spec.direction = f.direction == "min" ? rf::Direction::kMinimize
                                          : rf::Direction::kMaximize;
    spec.num_vars = f.n;
    spec.num_rows = f.rows;
    spec.delta = f.delta;
    spec.tightness = f.tightness;
    spec.cost_min = f.cost_min;
    spec.cost_max = f.cost_max;
    return GenerateRandom(spec, rng, f.name.empty() ? "random-" + seed_tag : f.name);
  }
  if (f.kind == "kp") {
    const rf::problems::KpSpec spec =
        GenerateKp(f.kp_type, f.n, f.range, f.tightness, f.delta, rng);
    return rf::problems::EncodeKp(
        spec, f.name.empty() ? "kp" + std::to_string(f.kp_type) + "-" + seed_tag : f.name);
  }
  if (f.kind == "gap") {
    if (!f.source.empty()) {
      rf::problems::GapSpec spec = ParseOrlibGap(ReadText(f.source), f.index);
      Intervals iv = OverlayIntervals(spec.c_lo, f.delta, rng);
      spec.c_lo = std::move(iv.c_lo);
      spec.c_hi = std::move(iv.c_hi);
      return rf::problems::EncodeGap(spec, f.name.empty() ? "gap-" + seed_tag : f.name);
    }
    static const std::map<std::string, GapType> kTypes = {
        {"A", GapType::kA}, {"B", GapType::kB}, {"C", GapType::kC}, {"E", GapType::kE}};
    const rf::problems::GapSpec spec =
        GenerateGap(kTypes.at(f.gap_type), f.agents, f.jobs, f.delta, rng);
    return rf::problems::EncodeGap(
        spec, f.name.empty() ? "gap" + f.gap_type + "-" + seed_tag : f.name);
  }
  if (f.kind == "scp") {
    rf::problems::ScpSpec spec = ParseOrlibScp(ReadText(f.source));
    static const std::map<std::string, ScpFlavor> kFlavors = {
        {"B", ScpFlavor::kB}, {"M", ScpFlavor::kM}, {"K", ScpFlavor::kK}};
    Intervals iv = GenerateScpIntervals(spec.c_lo, kFlavors.at(f.flavor), f.delta, rng);
    spec.c_lo = std::move(iv.c_lo);
    spec.c_hi = std::move(iv.c_hi);
    return rf::problems::EncodeScp(spec,
                                   f.name.empty() ? "scp" + f.flavor + "-" + seed_tag : f.name);
  }
  // mkp
  rf::problems::MkpSpec spec = ParseChuBeasleyMkp(ReadText(f.source), f.index);
  Intervals iv = OverlayIntervals(spec.c_lo, f.delta, rng);
  spec.c_lo = std::move(iv.c_lo);
  spec.c_hi = std::move(iv.c_hi);
  return rf::problems::EncodeMkp(spec, f.name.empty() ? "mkp-" + seed_tag : f.name);
}

int CmdGen(const GenFlags& f) {
  const rf::mmr::BipInstance inst = Generate(f);
  if (f.out.empty()) {
    std::cout << rf::instances::SerializeNative(inst);
  } else {
    rf::instances::WriteNativeFile(inst, f.out);
  }
  return kOk;
}

std::string RunText(const std::vector<rf::bench::RunRecord>& records) {
  std::ostringstream out;
  for (const auto& r : records) {
    char line[512];
    std::snprintf(line, sizeof(line), "%-24s %-7s obj=%-10s time=%.3fs iter=%lld lb=%lld gap=%s %s\n",
                  r.instance.c_str(), r.algorithm.c_str(),
                  r.obj ? std::to_string(*r.obj).c_str() : "-", r.time_seconds,
                  r.iterations, static_cast<long long>(r.lower_bound),
                  r.gap_percent ? std::to_string(*r.gap_percent).c_str() : "-",
                  r.status.c_str());
    out << line;
  }
  return out.str();
}

int CmdRun(const RunFlags& f) {
  const auto algorithm = rf::mmr::ParseAlgorithm(f.alg);
  if (!algorithm) throw rf::InvalidModel("unknown algorithm " + f.alg);
  if (!f.cut.empty()) {
    const bool hamming = f.cut == "hamming";
    if ((*algorithm == rf::mmr::Algorithm::kIdsH && !hamming) ||
        (*algorithm == rf::mmr::Algorithm::kIdsB && hamming) ||
        (*algorithm != rf::mmr::Algorithm::kIdsH && *algorithm != rf::mmr::Algorithm::kIdsB)) {
      throw rf::InvalidModel("--cut " + f.cut + " does not apply to " + f.alg);
    }
  }
  rf::bench::RunOptions options;
  options.algorithm = *algorithm;
  options.time_limit_seconds = f.time_limit;
  options.d = f.d;
  options.local_exact = f.local_exact;
  std::vector<rf::mmr::BipInstance> instances;
  instances.reserve(f.instances.size());
  for (const std::string& path : f.instances) {
    instances.push_back(rf::instances::ReadNativeFile(path));
  }
  std::vector<rf::bench::RunJob> jobs;
  for (const auto& inst : instances) jobs.push_back({&inst, options});
  const std::vector<rf::bench::RunRecord> records =
      rf::bench::RunAll(jobs, rf::bench::ThreadsFromEnvironment());
  if (!f.out.empty()) rf::bench::AppendCsv(f.out, records);
  if (f.format == "csv") {
    std::cout << rf::bench::CsvHeader();
    for (const auto& r : records) std::cout << rf::bench::ToCsvRow(r);
  } else {
    std::cout << RunText(records);
  }
  return kOk;
}

int CmdTable(const TableFlags& f) {
  const std::vector<rf::bench::RunRecord> records = rf::bench::ReadCsv(f.in);
  if (records.empty()) {
    std::cerr << "error: result store " << f.in << " has no records\n";
    return kInputError;
  }
  const auto format =
      f.format == "csv" ? rf::bench::TableFormat::kCsv : rf::bench::TableFormat::kText;
  Emit(rf::bench::RenderTable(rf::bench::Aggregate(records), format), f.out);
  return kOk;
}

int CmdVerify(const VerifyFlags& f) {
  using namespace rf::bench;
  std::vector<CheckResult> results;
  for (rf::Direction direction : {rf::Direction::kMaximize, rf::Direction::kMinimize}) {
    CorpusSpec spec;
    spec.direction = direction;
    spec.count = f.count;
    spec.seed = f.seed;
    spec.max_vars = f.max_vars;
    spec.min_vars = std::min(4, f.max_vars);
    const auto corpus = BuildCorpus(spec);
    const auto optima = OracleOptima(corpus);
    const std::string tag = std::string(" [") + rf::DirectionName(direction) + "]";
    RunOptions exact;
    exact.time_limit_seconds = 1e12;
    for (rf::mmr::Algorithm a : {rf::mmr::Algorithm::kBc, rf::mmr::Algorithm::kIdsB,
                                 rf::mmr::Algorithm::kIdsH}) {
      exact.algorithm = a;
      results.push_back(CheckExactness(corpus, optima, exact));
      results.back().name += " exactness" + tag;
    }
    results.push_back(CheckFixedScenarioBound(corpus, optima));
    results.back().name += tag;
    results.push_back(CheckDsBounds(corpus, optima));
    results.back().name += tag;
    results.push_back(CheckDominance(corpus, f.pairs, f.seed));
    results.back().name += tag;
    results.push_back(CheckCutRemovesDominated(corpus, 10));
    results.back().name += tag;
  }
  int failed = 0;
  for (const CheckResult& r : results) {
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.checked
              << " checked, " << r.violations << " violations";
    if (!r.first_failure.empty()) std::cout << " (first: " << r.first_failure << ")";
    std::cout << '\n';
    failed += !r.passed();
  }
  std::cout << (results.size() - failed) << " passed, " << failed << " failed\n";
  return failed == 0 ? kOk : kInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Min-max regret solvers for interval binary programs"};
  app.require_subcommand(1);

  GenFlags gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate an instance in native format");
  gen_cmd->add_option("--kind", gen.kind, "random, kp, gap, scp or mkp")
      ->check(CLI::IsMember({"random", "kp", "gap", "scp", "mkp"}));
  gen_cmd->add_option("--seed", gen.seed, "Generator seed");
  gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");
  gen_cmd->add_option("--name", gen.name, "Instance name");
  gen_cmd->add_option("--direction", gen.direction, "random: max or min")
      ->check(CLI::IsMember({"max", "min"}));
  gen_cmd->add_option("--n", gen.n, "random/kp: number of variables or items")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--rows", gen.rows, "random: number of constraints")
      ->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--delta", gen.delta, "Relative interval width")
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--tightness", gen.tightness, "Capacity share of total weight")
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--cost-min", gen.cost_min, "random: smallest nominal cost");
  gen_cmd->add_option("--cost-max", gen.cost_max, "random: largest nominal cost");
  gen_cmd->add_option("--kp-type", gen.kp_type, "kp: recipe 1..9")->check(CLI::Range(1, 9));
  gen_cmd->add_option("--range", gen.range, "kp: coefficient range")->check(CLI::Range(10, 1000000));
  gen_cmd->add_option("--gap-type", gen.gap_type, "gap: A, B, C or E")
      ->check(CLI::IsMember({"A", "B", "C", "E"}));
  gen_cmd->add_option("--agents", gen.agents, "gap: agents")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--jobs", gen.jobs, "gap: jobs")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--flavor", gen.flavor, "scp: B, M or K")
      ->check(CLI::IsMember({"B", "M", "K"}));
  gen_cmd->add_option("--instance", gen.source,
                      "scp/mkp/gap: OR-Library or Chu-Beasley source file");
  gen_cmd->add_option("--index", gen.index, "Problem index inside a multi-problem file")
      ->check(CLI::NonNegativeNumber);

  RunFlags run;
  CLI::App* run_cmd = app.add_subcommand("run", "Run an algorithm on native instances");
  run_cmd->add_option("--instance", run.instances, "Native instance file (repeatable)")
      ->required();
  run_cmd->add_option("--alg", run.alg, "fix, ds, ids-h, ids-b, bc or oracle")
      ->check(CLI::IsMember({"fix", "ds", "ids-h", "ids-b", "bc", "oracle"}));
  run_cmd->add_option("--time-limit", run.time_limit, "Seconds per instance")
      ->check(CLI::NonNegativeNumber);
  run_cmd->add_option("--seed", run.seed,
                      "Accepted for protocol parity; every algorithm is deterministic");
  run_cmd->add_option("--d", run.d, "Hamming radius for ids-h")->check(CLI::PositiveNumber);
  run_cmd->add_option("--cut", run.cut, "hamming or best-scenario (must match --alg)")
      ->check(CLI::IsMember({"hamming", "best-scenario"}));
  run_cmd->add_flag("--local-exact", run.local_exact,
                    "ids-h: exact search of the Hamming shell after each iteration");
  run_cmd->add_option("--out", run.out, "Result store to append to (CSV)");
  run_cmd->add_option("--format", run.format, "csv or text")
      ->check(CLI::IsMember({"csv", "text"}));

  TableFlags table;
  CLI::App* table_cmd = app.add_subcommand("table", "Aggregate a result store by family");
  table_cmd->add_option("--in", table.in, "Result store (CSV)")->required();
  table_cmd->add_option("--out", table.out, "Output file (default stdout)");
  table_cmd->add_option("--format", table.format, "csv or text")
      ->check(CLI::IsMember({"csv", "text"}));

  VerifyFlags verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Check algorithms and dominance properties against the oracle");
  verify_cmd->add_option("--seed", verify.seed, "Corpus seed");
  verify_cmd->add_option("--count", verify.count, "Instances per direction")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-vars", verify.max_vars, "Largest instance size")
      ->check(CLI::Range(1, 14));
  verify_cmd->add_option("--pairs", verify.pairs, "Dominance pairs per direction")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  try {
    if (*gen_cmd) {
      if ((gen.kind == "scp" || gen.kind == "mkp") && gen.source.empty()) {
        throw rf::InvalidModel("--kind " + gen.kind + " needs --instance");
      }
      return CmdGen(gen);
    }
    if (*run_cmd) return CmdRun(run);
    if (*table_cmd) return CmdTable(table);
    return CmdVerify(verify);
  } catch (const rf::InfeasibleInstance& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInfeasible;
  } catch (const rf::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const rf::NumericalBreakdown& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kInternal;
  } catch (const rf::InvalidModel& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const rf::TooLarge& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const rf::ContractViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const rf::Error& e) {
    // Remaining library errors come from file access.
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
}
