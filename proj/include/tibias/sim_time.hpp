/*
 * Copyright 2026 The tibias-sim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef TIBIAS_SIM_TIME_HPP
#define TIBIAS_SIM_TIME_HPP

#include <cmath>
#include <compare>
#include <cstdint>

namespace tibias {

/// Simulation timestamp at microsecond granularity.
///
/// Event times are kept as integer microseconds so that ordering and
/// tie-breaking are portable across platforms; conversion from seconds
/// rounds to the nearest tick.
class SimTime {
 public:
  constexpr SimTime() = default;

  static constexpr SimTime from_us(std::int64_t us) { return SimTime(us); }

  static SimTime from_seconds(double s) {
    return SimTime(static_cast<std::int64_t>(std::llround(s * 1e6)));
  }

  constexpr std::int64_t us() const { return us_; }
  constexpr double seconds() const { return static_cast<double>(us_) * 1e-6; }

  friend constexpr SimTime operator+(SimTime a, SimTime b) {
    return SimTime(a.us_ + b.us_);
  }
  friend constexpr SimTime operator-(SimTime a, SimTime b) {
    return SimTime(a.us_ - b.us_);
  }
  friend constexpr auto operator<=>(SimTime a, SimTime b) = default;

 private:
  explicit constexpr SimTime(std::int64_t us) : us_(us) {}

  std::int64_t us_ = 0;
};

}  // namespace tibias

#endif  // TIBIAS_SIM_TIME_HPP
