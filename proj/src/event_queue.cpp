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

#include "tibias/event_queue.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace tibias {

void EventQueue::schedule(SimTime at, Handler fn) {
  if (at < now_) {
    throw std::logic_error("event scheduled in the past: t=" +
                           std::to_string(at.seconds()) +
                           " now=" + std::to_string(now_.seconds()));
  }
  heap_.push(Entry{at, next_seq_++, std::move(fn)});
}

bool EventQueue::run_until(SimTime until) {
  while (!heap_.empty()) {
    const Entry& top = heap_.top();
    if (top.at > until) {
      now_ = until;
      return false;
    }
    // Move the handler out before popping; the handler may schedule.
    Handler fn = std::move(const_cast<Entry&>(top).fn);
    now_ = top.at;
    heap_.pop();
    fn();
  }
  now_ = until;
  return true;
}

}  // namespace tibias
