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

#include "regret_forge/common.hpp"

#include <algorithm>

namespace regret_forge {

const char* DirectionName(Direction direction) {
  return direction == Direction::kMaximize ? "MAX" : "MIN";
}

const char* SenseName(Sense sense) {
  switch (sense) {
    case Sense::kLessEqual:
      return "LE";
    case Sense::kGreaterEqual:
      return "GE";
    case Sense::kEqual:
      return "EQ";
  }
  return "??";
}

TimeBudget TimeBudget::Seconds(double seconds) {
  // Beyond a few decades the deadline would overflow the clock.
  if (!std::isfinite(seconds) || seconds > 1e9) return TimeBudget();
  const auto span = std::chrono::duration_cast<Clock::duration>(
      std::chrono::duration<double>(std::max(0.0, seconds)));
  return TimeBudget(Clock::now() + span);
}

double TimeBudget::RemainingSeconds() const {
  if (Unbounded()) return kInfinity;
  return std::max(
      0.0, std::chrono::duration<double>(deadline_ - Clock::now()).count());
}

}  // namespace regret_forge
