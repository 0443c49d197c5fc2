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

#ifndef REGRET_FORGE_COMMON_HPP_
#define REGRET_FORGE_COMMON_HPP_

#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace regret_forge {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Numerical tolerances shared by the LP and MILP kernels. All of them are
// applied relative to (1 + |magnitude|) of the quantity being tested.
struct ToleranceSet {
  double feasibility = 1e-6;
  double duality = 1e-6;
  double pivot = 1e-9;
  double integrality = 1e-6;

  double Feasibility(double magnitude) const {
    return feasibility * (1.0 + std::abs(magnitude));
  }
  double Duality(double magnitude) const {
    return duality * (1.0 + std::abs(magnitude));
  }
};

enum class Direction { kMinimize, kMaximize };
enum class Sense { kLessEqual, kGreaterEqual, kEqual };

const char* DirectionName(Direction direction);
const char* SenseName(Sense sense);

// Wall-clock budget. A default-constructed budget never expires.
class TimeBudget {
 public:
  using Clock = std::chrono::steady_clock;

  TimeBudget() : deadline_(Clock::time_point::max()) {}
  static TimeBudget Unlimited() { return TimeBudget(); }
  static TimeBudget Seconds(double seconds);

  bool Expired() const { return Clock::now() >= deadline_; }
  bool Unbounded() const { return deadline_ == Clock::time_point::max(); }
  double RemainingSeconds() const;

 private:
  explicit TimeBudget(Clock::time_point deadline) : deadline_(deadline) {}
  Clock::time_point deadline_;
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double Seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Error hierarchy. Every failure the library reports is one of these.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NumericalBreakdown : public Error {
 public:
  using Error::Error;
};
class InvalidModel : public Error {
 public:
  using Error::Error;
};
class InfeasibleSolution : public Error {
 public:
  using Error::Error;
};
class InfeasibleInstance : public Error {
 public:
  using Error::Error;
};
class NonIntegralData : public Error {
 public:
  using Error::Error;
};
class TooLarge : public Error {
 public:
  using Error::Error;
};
class ContractViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace regret_forge

#endif  // REGRET_FORGE_COMMON_HPP_
