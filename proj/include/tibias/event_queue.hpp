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

#ifndef TIBIAS_EVENT_QUEUE_HPP
#define TIBIAS_EVENT_QUEUE_HPP

#include <cstdint>
#include <functional>
#include <queue>
#include <vector>

#include "tibias/sim_time.hpp"

namespace tibias {

/// Discrete-event scheduler with a monotone virtual clock.
///
/// Events at equal timestamps dispatch in insertion order, so the full
/// dispatch sequence is a pure function of the schedule calls.
class EventQueue {
 public:
  using Handler = std::function<void()>;

  SimTime now() const { return now_; }

  /// Schedules `fn` at absolute time `at`. Scheduling in the past is a
  /// fatal scenario error.
  void schedule(SimTime at, Handler fn);

  void schedule_in(SimTime delay, Handler fn) { schedule(now_ + delay, fn); }

  bool empty() const { return heap_.empty(); }
  std::size_t pending() const { return heap_.size(); }

  /// Dispatches events in (timestamp, insertion) order until the queue
  /// drains or the next event lies beyond `until`. Returns true if the
  /// queue was exhausted before reaching `until`.
  bool run_until(SimTime until);

 private:
  struct Entry {
    SimTime at;
    std::uint64_t seq;
    Handler fn;
  };
  struct Later {
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.at != b.at) return a.at > b.at;
      return a.seq > b.seq;
    }
  };

  SimTime now_;
  std::uint64_t next_seq_ = 0;
  std::priority_queue<Entry, std::vector<Entry>, Later> heap_;
};

}  // namespace tibias

#endif  // TIBIAS_EVENT_QUEUE_HPP
