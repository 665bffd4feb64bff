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

#ifndef TIBIAS_DROP_TAIL_QUEUE_HPP
#define TIBIAS_DROP_TAIL_QUEUE_HPP

#include <cassert>
#include <cstdint>
#include <deque>

#include "tibias/core_types.hpp"

namespace tibias {

/// Byte-capacity FIFO. An arrival that would exceed capacity is dropped
/// (a congestion loss); occupancy never exceeds capacity.
class DropTailQueue {
 public:
  explicit DropTailQueue(std::int64_t capacity_bytes)
      : capacity_(capacity_bytes) {}

  /// Returns true when accepted. The caller records the drop otherwise.
  bool enqueue(const Segment& seg) {
    if (occupancy_ + seg.size_bytes > capacity_) {
      ++drops_;
      return false;
    }
    occupancy_ += seg.size_bytes;
    if (occupancy_ > max_occupancy_) max_occupancy_ = occupancy_;
    fifo_.push_back(seg);
    assert(occupancy_ <= capacity_);
    return true;
  }

  Segment dequeue() {
    assert(!fifo_.empty());
    Segment seg = fifo_.front();
    fifo_.pop_front();
    occupancy_ -= seg.size_bytes;
    assert(occupancy_ >= 0);
    return seg;
  }

  bool empty() const { return fifo_.empty(); }
  std::int64_t occupancy_bytes() const { return occupancy_; }
  std::int64_t capacity_bytes() const { return capacity_; }
  std::int64_t max_occupancy_bytes() const { return max_occupancy_; }
  std::int64_t drops() const { return drops_; }

 private:
  std::int64_t capacity_;
  std::int64_t occupancy_ = 0;
  std::int64_t max_occupancy_ = 0;
  std::int64_t drops_ = 0;
  std::deque<Segment> fifo_;
};

}  // namespace tibias

#endif  // TIBIAS_DROP_TAIL_QUEUE_HPP
