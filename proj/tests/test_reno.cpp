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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "tibias/reno.hpp"

using namespace tibias;

namespace {

class MockEnv : public SenderEnv {
 public:
  double now = 0.0;
  struct Emit {
    SeqNo seq;
    bool retx;
  };
  std::vector<Emit> emits;

  double now_s() const override { return now; }
  void emit_segment(FlowId, SeqNo seq, bool retx) override {
    emits.push_back({seq, retx});
  }
  void arm_rto(FlowId, double) override {}
  void cancel_rto(FlowId) override {}
};

Ack make_ack(SeqNo cum, double echo_s, std::int64_t bytes) {
  Ack a;
  a.flow_id = 0;
  a.cum_ack = cum;
  a.echo_ts = SimTime::from_seconds(echo_s);
  a.acked_bytes = bytes;
  return a;
}

/// Drives the sender with one-segment acks until `cum` is reached.
void ack_up_to(RenoSender& s, MockEnv& env, SeqNo& cum, SeqNo target) {
  while (cum < target) {
    env.now += 0.01;
    s.on_ack(make_ack(++cum, env.now - 0.2, 1500));
  }
}

}  // namespace

TEST_CASE("slow start doubles per round trip") {
  MockEnv env;
  RenoSender s(0, env, 1500, 4096);
  s.start();
  CHECK(s.cwnd() == 1.0);
  SeqNo cum = 0;
  env.now = 0.2;
  ack_up_to(s, env, cum, 2);  // window 2 acked
  CHECK(s.cwnd() == 3.0);
  ack_up_to(s, env, cum, 4);
  CHECK(s.cwnd() == 5.0);
}

TEST_CASE("congestion avoidance grows one segment per window") {
  MockEnv env;
  RenoSender s(0, env, 1500, 4096);
  s.start();
  SeqNo cum = 0;
  env.now = 0.2;
  // Reach avoidance by crossing a small ssthresh via a timeout cycle:
  // instead, drive slow start to the cap and halve once.
  ack_up_to(s, env, cum, 40);
  env.now += 1.0;
  for (int i = 0; i < 3; ++i) s.on_ack(make_ack(cum, env.now - 0.2, 0));
  // Recovery: exit by acking everything sent so far.
  SeqNo snd_nxt = 0;
  for (const auto& e : env.emits) {
    if (!e.retx) ++snd_nxt;
  }
  env.now += 0.2;
  s.on_ack(make_ack(snd_nxt, env.now - 0.2, 1500));
  cum = snd_nxt;
  REQUIRE(s.phase() == Phase::kAvoidance);
  const double w = s.cwnd();
  // One window of acks adds one segment.
  ack_up_to(s, env, cum, cum + static_cast<SeqNo>(w));
  CHECK(s.cwnd() == doctest::Approx(w + 1.0).epsilon(0.02));
}

TEST_CASE("third duplicate ack halves and retransmits") {
  MockEnv env;
  RenoSender s(0, env, 1500, 4096);
  s.start();
  SeqNo cum = 0;
  env.now = 0.2;
  ack_up_to(s, env, cum, 39);  // cwnd 40
  REQUIRE(s.cwnd() == 40.0);

  const auto emits_before = env.emits.size();
  for (int i = 0; i < 3; ++i) {
    env.now += 0.005;
    s.on_ack(make_ack(cum, env.now - 0.2, 0));
  }
  CHECK(s.phase() == Phase::kRecovery);
  CHECK(s.ssthresh() == 20.0);
  CHECK(s.cwnd() == 23.0);
  REQUIRE(env.emits.size() > emits_before);
  // Limited transmit emits new data on the first two duplicates; the
  // third triggers the fast retransmission.
  bool retransmitted = false;
  for (auto i = emits_before; i < env.emits.size(); ++i) {
    retransmitted = retransmitted || (env.emits[i].retx && env.emits[i].seq == cum);
  }
  CHECK(retransmitted);
  REQUIRE(s.reductions().size() == 1);
  CHECK(s.reductions()[0].cause == ReductionCause::kFastRetransmit);
  // Reno labels every dupack loss as congestion.
  REQUIRE(s.classifications().size() == 1);
  CHECK(s.classifications()[0].predicted == DropCause::kCongestion);
}

TEST_CASE("halving floors at two") {
  MockEnv env;
  RenoSender s(0, env, 1500, 4096);
  s.start();
  SeqNo cum = 0;
  env.now = 0.2;
  ack_up_to(s, env, cum, 2);  // cwnd 3
  REQUIRE(s.cwnd() == 3.0);
  for (int i = 0; i < 3; ++i) {
    env.now += 0.005;
    s.on_ack(make_ack(cum, env.now - 0.2, 0));
  }
  CHECK(s.ssthresh() == 2.0);
  CHECK(s.cwnd() == 5.0);
}

TEST_CASE("further duplicates inflate, new ack deflates to ssthresh") {
  MockEnv env;
  RenoSender s(0, env, 1500, 4096);
  s.start();
  SeqNo cum = 0;
  env.now = 0.2;
  ack_up_to(s, env, cum, 39);
  for (int i = 0; i < 3; ++i) {
    env.now += 0.005;
    s.on_ack(make_ack(cum, env.now - 0.2, 0));
  }
  REQUIRE(s.cwnd() == 23.0);
  s.on_ack(make_ack(cum, env.now, 0));
  s.on_ack(make_ack(cum, env.now, 0));
  CHECK(s.cwnd() == 25.0);

  SeqNo snd_nxt = 0;
  for (const auto& e : env.emits) {
    if (!e.retx) ++snd_nxt;
  }
  env.now += 0.2;
  s.on_ack(make_ack(snd_nxt, env.now - 0.2, 1500));
  CHECK(s.phase() == Phase::kAvoidance);
  CHECK(s.cwnd() == 20.0);
}

TEST_CASE("partial ack keeps recovery and retransmits the next hole") {
  MockEnv env;
  RenoSender s(0, env, 1500, 4096);
  s.start();
  SeqNo cum = 0;
  env.now = 0.2;
  ack_up_to(s, env, cum, 30);
  for (int i = 0; i < 3; ++i) {
    env.now += 0.005;
    s.on_ack(make_ack(cum, env.now - 0.2, 0));
  }
  REQUIRE(s.phase() == Phase::kRecovery);
  const auto retx_before = s.retransmit_count();
  env.now += 0.3;  // beyond the dedup guard of the entry retransmission
  s.on_ack(make_ack(cum + 2, env.now - 0.2, 2 * 1500));
  CHECK(s.phase() == Phase::kRecovery);
  CHECK(s.retransmit_count() == retx_before + 1);
}

TEST_CASE("timeout resets the window to one and doubles the timer") {
  MockEnv env;
  RenoSender s(0, env, 1500, 4096);
  s.start();
  SeqNo cum = 0;
  env.now = 0.2;
  ack_up_to(s, env, cum, 19);  // cwnd 20
  REQUIRE(s.cwnd() == 20.0);
  env.now += 10.0;
  s.on_rto_timer();
  CHECK(s.cwnd() == 1.0);
  CHECK(s.ssthresh() == 10.0);
  CHECK(s.phase() == Phase::kSlowStart);
  CHECK(s.reductions().back().cause == ReductionCause::kRto);

  // Back-to-back expiries keep halving the threshold down to two.
  s.on_rto_timer();
  s.on_rto_timer();
  s.on_rto_timer();
  s.on_rto_timer();
  CHECK(s.ssthresh() == 2.0);
  CHECK(s.cwnd() == 1.0);
}
