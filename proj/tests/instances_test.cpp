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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include "regret_forge/instances.hpp"

namespace regret_forge::instances {
namespace {

// Reference values from an independent splitmix64 implementation.
TEST(Rng, FrozenSequence) {
  Rng rng(42);
  EXPECT_EQ(rng.Next(), 0xbdd732262feb6e95ULL);
  EXPECT_EQ(rng.Next(), 0x28efe333b266f103ULL);
  EXPECT_EQ(rng.Next(), 0x47526757130f9f52ULL);
}

TEST(Rng, FrozenUniformDraws) {
  Rng ints(42);
  const std::vector<int64_t> expected = {95, 21, 36, 45, 5, 28, 44, 80};
  for (int64_t e : expected) EXPECT_EQ(ints.UniformInt(1, 100), e);
  Rng reals(42);
  EXPECT_DOUBLE_EQ(reals.UniformReal(), 0.7415648787718233);
  EXPECT_DOUBLE_EQ(reals.UniformReal(), 0.1599103928769201);
}

TEST(Rng, UniformIntCoversRangeAndStaysInside) {
  Rng rng(7);
  std::vector<int> hits(7, 0);
  for (int k = 0; k < 7000; ++k) {
    const int64_t v = rng.UniformInt(-3, 3);
    ASSERT_GE(v, -3);
    ASSERT_LE(v, 3);
    ++hits[v + 3];
  }
  for (int h : hits) {
    EXPECT_GT(h, 800);
    EXPECT_LT(h, 1200);
  }
  EXPECT_EQ(rng.UniformInt(5, 5), 5);
  EXPECT_THROW(rng.UniformInt(2, 1), ContractViolation);
  for (int k = 0; k < 100; ++k) {
    const double u = rng.UniformReal();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(OverlayIntervals, ZeroWidthIsDegenerate) {
  Rng rng(1);
  const std::vector<int64_t> costs = {0, 5, 17, 1000};
  const Intervals iv = OverlayIntervals(costs, 0.0, rng);
  EXPECT_EQ(iv.c_lo, costs);
  EXPECT_EQ(iv.c_hi, costs);
}

TEST(OverlayIntervals, BoundsForThirtyPercent) {
  for (uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    const Intervals iv = OverlayIntervals({100}, 0.3, rng);
    EXPECT_GE(iv.c_lo[0], 70);
    EXPECT_LE(iv.c_lo[0], 100);
    EXPECT_GE(iv.c_hi[0], 100);
    EXPECT_LE(iv.c_hi[0], 130);
  }
}

TEST(OverlayIntervals, FrozenDraw) {
  Rng a(42);
  Rng b(42);
  const Intervals first = OverlayIntervals({10, 20}, 0.1, a);
  const Intervals second = OverlayIntervals({10, 20}, 0.1, b);
  EXPECT_EQ(first.c_lo, second.c_lo);
  EXPECT_EQ(first.c_hi, second.c_hi);
  EXPECT_EQ(first.c_lo, (std::vector<int64_t>{10, 19}));
  EXPECT_EQ(first.c_hi, (std::vector<int64_t>{10, 21}));
}

TEST(OverlayIntervals, RejectsNegativeCosts) {
  Rng rng(1);
  EXPECT_THROW(OverlayIntervals({-1}, 0.1, rng), ContractViolation);
}

int64_t FlooredShare(const std::vector<int64_t>& a, double gamma) {
  int64_t total = 0;
  for (int64_t v : a) total += v;
  return static_cast<int64_t>(std::floor(gamma * static_cast<double>(total) + 1e-9));
}

TEST(GenerateKp, TypeRecipes) {
  const int64_t range = 1000;
  for (int type = 1; type <= 9; ++type) {
    Rng rng(100 + type);
    const problems::KpSpec spec = GenerateKp(type, 60, range, 0.5, 0.0, rng);
    ASSERT_EQ(spec.weights.size(), 60u);
    // Zero width: the intervals expose the nominal costs.
    ASSERT_EQ(spec.c_lo, spec.c_hi);
    const auto& a = spec.weights;
    const auto& c = spec.c_lo;
    for (size_t j = 0; j < a.size(); ++j) {
      switch (type) {
        case 1:
          EXPECT_TRUE(a[j] >= 1 && a[j] <= range && c[j] >= 1 && c[j] <= range);
          break;
        case 2:
          EXPECT_LE(std::abs(c[j] - a[j]), range / 10);
          EXPECT_GE(c[j], 1);
          break;
        case 3:
          EXPECT_EQ(c[j], a[j] + 100);
          break;
        case 4:
          EXPECT_EQ(a[j], c[j] + 100);
          break;
        case 5:
          EXPECT_GE(c[j], a[j] + 98);
          EXPECT_LE(c[j], a[j] + 102);
          break;
        case 6:
          EXPECT_EQ(c[j], a[j]);
          break;
        case 7:
          EXPECT_EQ(a[j] % 2, 0);
          EXPECT_EQ(c[j], a[j]);
          break;
        case 8:
          EXPECT_EQ(a[j] % 2, 0);
          EXPECT_EQ(c[j], a[j] + 100);
          break;
        case 9:
          EXPECT_GE(a[j], 100 * range);
          EXPECT_LE(a[j], 100 * range + 100);
          EXPECT_TRUE(c[j] >= 1 && c[j] <= range);
          break;
      }
    }
    int64_t b = FlooredShare(a, 0.5);
    if ((type == 7 || type == 8) && b % 2 == 0) ++b;
    EXPECT_EQ(spec.capacity, b) << "type " << type;
    if (type == 7) {
      EXPECT_EQ(spec.capacity % 2, 1);
    }
  }
  Rng rng(1);
  EXPECT_THROW(GenerateKp(10, 5, 1000, 0.5, 0.1, rng), ContractViolation);
}

TEST(GenerateKp, IntervalsContainNominalCost) {
  Rng rng(5);
  const problems::KpSpec spec = GenerateKp(6, 50, 1000, 0.5, 0.2, rng);
  for (size_t j = 0; j < spec.weights.size(); ++j) {
    // Subset sum: nominal cost equals the weight.
    EXPECT_LE(spec.c_lo[j], spec.weights[j]);
    EXPECT_GE(spec.c_hi[j], spec.weights[j]);
    EXPECT_GE(spec.c_lo[j], static_cast<int64_t>(std::ceil(0.8 * spec.weights[j] - 1e-9)));
    EXPECT_LE(spec.c_hi[j], static_cast<int64_t>(std::floor(1.2 * spec.weights[j] + 1e-9)));
  }
}

TEST(GenerateScpIntervals, Flavors) {
  std::vector<int64_t> base(300);
  for (size_t j = 0; j < base.size(); ++j) base[j] = 1 + static_cast<int64_t>(j % 100);
  Rng rng(3);
  const Intervals b = GenerateScpIntervals(base, ScpFlavor::kB, 0.0, rng);
  EXPECT_EQ(b.c_lo, base);
  EXPECT_EQ(b.c_hi, base);
  const Intervals m = GenerateScpIntervals(base, ScpFlavor::kM, 0.0, rng);
  const Intervals k = GenerateScpIntervals(base, ScpFlavor::kK, 0.0, rng);
  ASSERT_EQ(m.c_lo.size(), base.size());
  ASSERT_EQ(k.c_lo.size(), base.size());
  for (size_t j = 0; j < base.size(); ++j) {
    EXPECT_LE(0, m.c_lo[j]);
    EXPECT_LE(m.c_lo[j], m.c_hi[j]);
    EXPECT_LE(m.c_hi[j], 1000);
    EXPECT_LE(0, k.c_lo[j]);
    EXPECT_LE(k.c_lo[j], 1000);
    EXPECT_LE(k.c_lo[j], k.c_hi[j]);
    EXPECT_LE(k.c_hi[j] - k.c_lo[j], 1000);
  }
}

int64_t TypeACapacity(const problems::GapSpec& spec) {
  const int m = spec.num_agents;
  const int n = spec.num_jobs;
  std::vector<int64_t> load(m, 0);
  for (int j = 0; j < n; ++j) {
    int best = 0;
    for (int i = 1; i < m; ++i) {
      // Nominal costs are exposed because the tests use zero width.
      if (spec.c_lo[i * n + j] < spec.c_lo[best * n + j]) best = i;
    }
    load[best] += spec.usage[best][j];
  }
  const int64_t heaviest = *std::max_element(load.begin(), load.end());
  return static_cast<int64_t>(
      std::floor(0.6 * (static_cast<double>(n) / m) * 15.0 + 0.4 * heaviest + 1e-9));
}

TEST(GenerateGap, TypeAandB) {
  Rng ra(11);
  Rng rb(11);
  const problems::GapSpec a = GenerateGap(GapType::kA, 5, 40, 0.0, ra);
  const problems::GapSpec b = GenerateGap(GapType::kB, 5, 40, 0.0, rb);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 40; ++j) {
      EXPECT_GE(a.usage[i][j], 5);
      EXPECT_LE(a.usage[i][j], 25);
      EXPECT_GE(a.c_lo[i * 40 + j], 10);
      EXPECT_LE(a.c_lo[i * 40 + j], 50);
    }
  }
  const int64_t cap_a = TypeACapacity(a);
  EXPECT_EQ(a.capacity, std::vector<int64_t>(5, cap_a));
  // Same seed, same draws: B is 70% of A.
  EXPECT_EQ(b.usage, a.usage);
  EXPECT_EQ(b.capacity,
            std::vector<int64_t>(5, static_cast<int64_t>(std::floor(0.7 * cap_a + 1e-9))));
}

TEST(GenerateGap, TypeCCapacity) {
  Rng rng(12);
  const problems::GapSpec c = GenerateGap(GapType::kC, 10, 80, 0.0, rng);
  for (int i = 0; i < 10; ++i) {
    int64_t total = 0;
    for (int64_t a : c.usage[i]) total += a;
    EXPECT_EQ(c.capacity[i],
              static_cast<int64_t>(std::floor(0.8 * static_cast<double>(total) / 10 + 1e-9)));
  }
}

TEST(GenerateGap, TypeEIsIntegralAndPositive) {
  Rng rng(13);
  const problems::GapSpec e = GenerateGap(GapType::kE, 5, 40, 0.1, rng);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 40; ++j) {
      EXPECT_GE(e.usage[i][j], 1);
      EXPECT_GE(e.c_lo[i * 40 + j], 0);
      EXPECT_LE(e.c_lo[i * 40 + j], e.c_hi[i * 40 + j]);
    }
  }
  // a = 1 - 10 ln e2 has mean 11.
  double mean = 0;
  for (const auto& row : e.usage) {
    for (int64_t a : row) mean += static_cast<double>(a);
  }
  mean /= 200.0;
  EXPECT_GT(mean, 8.0);
  EXPECT_LT(mean, 14.0);
}

TEST(GenerateRandom, SameSeedGivesIdenticalFile) {
  RandomInstanceSpec spec;
  spec.num_vars = 12;
  spec.num_rows = 3;
  for (Direction d : {Direction::kMaximize, Direction::kMinimize}) {
    spec.direction = d;
    Rng a(99);
    Rng b(99);
    EXPECT_EQ(SerializeNative(GenerateRandom(spec, a)),
              SerializeNative(GenerateRandom(spec, b)));
  }
}

mmr::BipInstance Sample() {
  mmr::BipInstance inst;
  inst.name = "sample-1";
  inst.direction = Direction::kMinimize;
  inst.num_vars = 3;
  inst.c_lo = {-2, 0, 7};
  inst.c_hi = {4, 0, 12};
  inst.constraints.push_back({{{0, 1}, {2, -3}}, Sense::kGreaterEqual, -1});
  inst.constraints.push_back({{{1, 2}}, Sense::kEqual, 2});
  inst.constraints.push_back({{}, Sense::kLessEqual, 0});
  return inst;
}

TEST(NativeFormat, RoundTrip) {
  const mmr::BipInstance inst = Sample();
  const std::string text = SerializeNative(inst);
  EXPECT_EQ(text.substr(0, text.find('\n')), "MMRBIP v1 sample-1 MIN 3 3");
  EXPECT_EQ(ParseNative(text), inst);
  EXPECT_EQ(SerializeNative(ParseNative(text)), text);
}

TEST(NativeFormat, FileRoundTrip) {
  const std::string path =
      (std::filesystem::temp_directory_path() / "rf_native_roundtrip.mmr").string();
  WriteNativeFile(Sample(), path);
  EXPECT_EQ(ReadNativeFile(path), Sample());
  std::remove(path.c_str());
  EXPECT_THROW(ReadNativeFile(path), Error);
}

TEST(NativeFormat, HeaderCountMismatch) {
  // Header promises two rows, file has one.
  EXPECT_THROW(ParseNative("MMRBIP v1 x MAX 1 2\n1 2\nLE 1 1 0 1\n"), ParseError);
  // Header promises one row, file has two.
  EXPECT_THROW(ParseNative("MMRBIP v1 x MAX 1 1\n1 2\nLE 1 1 0 1\nLE 1 1 0 1\n"),
               ParseError);
}

TEST(NativeFormat, ErrorsCarryPosition) {
  try {
    ParseNative("MMRBIP v1 x MAX 2 0\n1 2\n3 y\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 3);
  }
  EXPECT_THROW(ParseNative("MMRBIP v2 x MAX 1 0\n1 2\n"), ParseError);
  EXPECT_THROW(ParseNative("MMRBIP v1 x UP 1 0\n1 2\n"), ParseError);
  EXPECT_THROW(ParseNative("MMRBIP v1 x MAX 1 0\n3 2\n"), ParseError);
  EXPECT_THROW(ParseNative("MMRBIP v1 x MAX 1 1\n1 2\nNE 0 0\n"), ParseError);
  EXPECT_THROW(ParseNative("MMRBIP v1 x MAX 1 1\n1 2\nLE 0 1 1 1\n"), ParseError);
  EXPECT_THROW(ParseNative("MMRBIP v1 x MAX 0 0\n"), ParseError);
  EXPECT_THROW(ParseNative(""), ParseError);
}

std::vector<std::string> Words(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> words;
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

TEST(NativeFormat, EveryTruncationIsRejected) {
  const std::vector<std::string> words = Words(SerializeNative(Sample()));
  for (size_t keep = 0; keep < words.size(); ++keep) {
    std::string text;
    for (size_t k = 0; k < keep; ++k) text += words[k] + " ";
    EXPECT_THROW(ParseNative(text), ParseError) << "kept " << keep << " tokens";
  }
}

TEST(NativeFormat, MalformedBytesOnlyRaiseParseErrors) {
  const std::string text = SerializeNative(Sample());
  Rng rng(2024);
  const std::string alphabet = "0123456789 -+\nxLEGQMAXIN\t";
  for (int trial = 0; trial < 3000; ++trial) {
    std::string mutated = text;
    const int edits = static_cast<int>(rng.UniformInt(1, 4));
    for (int e = 0; e < edits; ++e) {
      const auto pos = static_cast<size_t>(rng.UniformInt(0, mutated.size() - 1));
      mutated[pos] = alphabet[rng.UniformInt(0, alphabet.size() - 1)];
    }
    try {
      const mmr::BipInstance parsed = ParseNative(mutated);
      parsed.Validate();
    } catch (const ParseError&) {
    } catch (const std::exception& ex) {
      FAIL() << "unexpected exception: " << ex.what() << "\n" << mutated;
    }
  }
}

TEST(OrlibScp, ParsesCoverLists) {
  const problems::ScpSpec spec = ParseOrlibScp("3 4\n1 2 3 4\n2 1 2\n1 3\n3 1 2 4\n");
  EXPECT_EQ(spec.num_rows, 3);
  EXPECT_EQ(spec.num_cols, 4);
  EXPECT_EQ(spec.c_lo, (std::vector<int64_t>{1, 2, 3, 4}));
  EXPECT_EQ(spec.covers[0], (std::vector<int>{0, 1}));
  EXPECT_EQ(spec.covers[2], (std::vector<int>{0, 1, 3}));
  EXPECT_THROW(ParseOrlibScp("1 2\n1 1\n1 3\n"), ParseError);
  EXPECT_THROW(ParseOrlibScp("2 2\n1 1\n1 1\n"), ParseError);
  EXPECT_THROW(ParseOrlibScp("1 2\n1 1\n1 1 7\n"), ParseError);
}

TEST(OrlibGap, SingleAndMultiProblemFiles) {
  // 2 agents, 2 jobs: costs, resources, capacities.
  const std::string one = "2 2\n1 2\n3 4\n5 6\n7 8\n9 10\n";
  const problems::GapSpec a = ParseOrlibGap(one);
  EXPECT_EQ(a.num_agents, 2);
  EXPECT_EQ(a.c_lo, (std::vector<int64_t>{1, 2, 3, 4}));
  EXPECT_EQ(a.usage[1], (std::vector<int64_t>{7, 8}));
  EXPECT_EQ(a.capacity, (std::vector<int64_t>{9, 10}));
  const std::string two = "2\n" + one + "1 1\n4\n2\n3\n";
  EXPECT_EQ(ParseOrlibGap(two, 0), a);
  const problems::GapSpec b = ParseOrlibGap(two, 1);
  EXPECT_EQ(b.num_agents, 1);
  EXPECT_EQ(b.c_lo, (std::vector<int64_t>{4}));
  EXPECT_EQ(b.capacity, (std::vector<int64_t>{3}));
  EXPECT_THROW(ParseOrlibGap(two, 2), ParseError);
  EXPECT_THROW(ParseOrlibGap("2 2\n1 2\n3 4\n5 6\n7 8\n9\n"), ParseError);
}

TEST(ChuBeasleyMkp, ParsesProblems) {
  // n=3 items, m=2 resources, optimum 0.
  const std::string one = "3 2 0\n5 6 7\n1 2 3\n4 5 6\n10 11\n";
  const problems::MkpSpec a = ParseChuBeasleyMkp(one);
  EXPECT_EQ(a.num_items, 3);
  EXPECT_EQ(a.num_resources, 2);
  EXPECT_EQ(a.c_hi, (std::vector<int64_t>{5, 6, 7}));
  EXPECT_EQ(a.usage[1], (std::vector<int64_t>{4, 5, 6}));
  EXPECT_EQ(a.capacity, (std::vector<int64_t>{10, 11}));
  const std::string two = "2\n" + one + "1 1 3.5\n9\n2\n5\n";
  EXPECT_EQ(ParseChuBeasleyMkp(two, 0), a);
  EXPECT_EQ(ParseChuBeasleyMkp(two, 1).c_lo, (std::vector<int64_t>{9}));
  EXPECT_THROW(ParseChuBeasleyMkp("3 2 0\n5 6 7\n1 2 3\n4 5 6\n10\n"), ParseError);
  EXPECT_THROW(ParseChuBeasleyMkp("3 2 0\n5 x 7\n1 2 3\n4 5 6\n10 11\n"), ParseError);
}

}  // namespace
}  // namespace regret_forge::instances
