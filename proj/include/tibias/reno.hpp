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

#ifndef TIBIAS_RENO_HPP
#define TIBIAS_RENO_HPP

#include "tibias/sender.hpp"

namespace tibias {

/// TCP Reno with NewReno partial-ack handling, behind the same sender
/// interface as the socially-aware sender. Slow-start initial window is
/// one segment; every fast retransmit and timeout halves and logs a
/// window reduction.
class RenoSender : public Sender {
 public:
  RenoSender(FlowId id, SenderEnv& env, std::int64_t seg_size,
             std::int64_t max_window)
      : Sender(id, env, seg_size, max_window) {}

 protected:
  void grow_on_new_ack(std::int64_t newly_acked) override;
  void enter_loss_recovery() override;
  void on_dup_in_recovery() override;
  void on_partial_ack(std::int64_t newly_acked) override;
  void on_full_ack() override;
  void apply_rto_backoff() override;
  std::int64_t send_allowance() const override;
};

}  // namespace tibias

#endif  // TIBIAS_RENO_HPP
