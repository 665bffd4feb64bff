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

#include "tibias/simulation.hpp"

#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "tibias/allocator.hpp"
#include "tibias/drop_tail_queue.hpp"
#include "tibias/event_queue.hpp"
#include "tibias/link.hpp"
#include "tibias/metadata.hpp"
#include "tibias/receiver.hpp"
#include "tibias/reno.hpp"
#include "tibias/rng.hpp"
#include "tibias/scadm.hpp"

namespace tibias {

namespace {

constexpr double kAccessJitterMaxS = 0.002;

class Simulation : public SenderEnv {
 public:
  Simulation(const ScenarioConfig& cfg, TraceSink sink)
      : cfg_(cfg),
        sink_(std::move(sink)),
        queue_(cfg.queue_capacity),
        bottleneck_rng_(cfg.seed, "loss.bottleneck"),
        start_rng_(cfg.seed, "start.jitter") {
    access_.bandwidth_bps = cfg.access_bandwidth;
    access_.prop_delay_s = cfg.prop_delay_s;
    access_.loss_prob = cfg.loss_prob;
    bottleneck_.bandwidth_bps = cfg.bottleneck_bandwidth;
    bottleneck_.prop_delay_s = cfg.prop_delay_s;
    bottleneck_.loss_prob = cfg.loss_prob;
    ack_path_delay_ =
        SimTime::from_seconds(2.0 * cfg.prop_delay_s);

    auto profiles = resolve_profiles(cfg);
    intermediate_profile_ = std::move(profiles.back());
    profiles.pop_back();
    sender_profiles_ = std::move(profiles);

    if (cfg.protocol == Protocol::kTibias) {
      handshake_.emplace(intermediate_profile_, cfg.threshld);
      registry_.set_advertise([this](FlowId flow, std::int64_t t, double sim) {
        // The advertisement carries the intermediate node's own link
        // rate as the network-wide available bandwidth.
        const double net_bw = cfg_.bottleneck_bandwidth;
        q_.schedule_in(SimTime::from_seconds(cfg_.prop_delay_s),
                       [this, flow, t, sim, net_bw] {
                         senders_[flow]->on_advertisement(t, sim, net_bw);
                       });
      });
    }

    const auto n = static_cast<std::size_t>(cfg.n_connections);
    trace_.flows.resize(n);
    in_flight_.assign(n, 0);
    drops_w_.assign(n, 0);
    drops_c_.assign(n, 0);
    access_busy_until_.assign(n, SimTime{});
    rto_gen_.assign(n, 0);
    delack_gen_.assign(n, 0);

    ScasParams params;
    params.epsilon = cfg.epsilon;
    params.gamma_dec = cfg.gamma_dec;
    params.gamma_inc = cfg.gamma_inc;
    params.seg_size = cfg.seg_size;
    params.max_window = cfg.max_window;

    access_last_arrival_.assign(n, SimTime{});
    for (FlowId i = 0; i < n; ++i) {
      access_rng_.emplace_back(cfg.seed,
                               "loss.access." + std::to_string(i));
      access_jitter_rng_.emplace_back(cfg.seed,
                                      "jitter.access." + std::to_string(i));
      if (cfg.protocol == Protocol::kTibias) {
        senders_.push_back(
            std::make_unique<TibiasSender>(i, *this, params, cfg.k));
      } else {
        senders_.push_back(std::make_unique<RenoSender>(
            i, *this, cfg.seg_size, cfg.max_window));
      }
      Receiver::Env renv;
      renv.now_s = [this] { return q_.now().seconds(); };
      renv.send_ack = [this](const Ack& ack) { deliver_ack(ack); };
      renv.arm_delack = [this](FlowId f, double d) { arm_delack(f, d); };
      renv.cancel_delack = [this](FlowId f) { ++delack_gen_[f]; };
      receivers_.push_back(
          std::make_unique<Receiver>(i, cfg.seg_size, std::move(renv)));
    }
  }

  RunResult run() {
    for (FlowId i = 0; i < senders_.size(); ++i) {
      const double jitter = start_rng_.next_double() * cfg_.start_spread_s;
      q_.schedule(SimTime::from_seconds(jitter), [this, i] { start_flow(i); });
    }
    const bool drained =
        q_.run_until(SimTime::from_seconds(cfg_.duration_s));
    return finalize(drained);
  }

  // SenderEnv
  double now_s() const override { return q_.now().seconds(); }

  void emit_segment(FlowId flow, SeqNo seq, bool is_retransmit) override {
    Segment seg;
    seg.flow_id = flow;
    seg.seq = seq;
    seg.size_bytes = cfg_.seg_size;
    seg.sent_at = q_.now();
    seg.is_retransmit = is_retransmit;

    ++trace_.flows[flow].sent;
    ++in_flight_[flow];
    log(seg.sent_at, flow, is_retransmit ? "retx" : "send", "seq", seq);

    const SimTime depart =
        std::max(q_.now(), access_busy_until_[flow]);
    const SimTime tx_end =
        depart + access_.serialization_delay(seg.size_bytes);
    access_busy_until_[flow] = tx_end;
    const DeliveryOutcome out =
        transmit(seg, access_, depart, access_rng_[flow]);
    if (out.delivered) {
      // Contention jitter of the wireless hop. Without it, an
      // ack-clocked flow arrives in lockstep with its own departures
      // and can monopolize a full drop-tail buffer indefinitely.
      // Arrival order on the link is preserved.
      const SimTime jitter = SimTime::from_seconds(
          access_jitter_rng_[flow].next_double() * kAccessJitterMaxS);
      SimTime arrival = out.arrival + jitter;
      if (arrival <= access_last_arrival_[flow]) {
        arrival = access_last_arrival_[flow] + SimTime::from_us(1);
      }
      access_last_arrival_[flow] = arrival;
      q_.schedule(arrival, [this, seg] { arrive_at_queue(seg); });
    } else {
      record_drop(seg, DropCause::kWireless, tx_end);
    }
  }

  bool tracing() const override { return static_cast<bool>(sink_); }

  void trace_line(FlowId flow, const std::string& line) override {
    if (!sink_) return;
    std::ostringstream os;
    os << csv_num(q_.now().seconds()) << " flow=" << flow << ' ' << line;
    sink_(os.str());
  }

  void arm_rto(FlowId flow, double delay_s) override {
    const std::uint64_t gen = ++rto_gen_[flow];
    q_.schedule_in(SimTime::from_seconds(delay_s), [this, flow, gen] {
      if (gen != rto_gen_[flow]) return;
      log(q_.now(), flow, "rto_fire", "una", -1);
      senders_[flow]->on_rto_timer();
    });
  }

  void cancel_rto(FlowId flow) override { ++rto_gen_[flow]; }

 private:
  void start_flow(FlowId i) {
    if (handshake_) {
      const auto res = handshake_->handshake(
          sender_profiles_[i], registry_.t_connections() + 1, trace_.ledger);
      registry_.join(i, res.sim, *handshake_, trace_.ledger);
      log(q_.now(), i, "handshake", "sim_x1000",
          static_cast<SeqNo>(res.sim * 1000.0));
    }
    senders_[i]->start();
  }

  void arrive_at_queue(const Segment& seg) {
    if (queue_.enqueue(seg)) {
      service_bottleneck();
    } else {
      record_drop(seg, DropCause::kCongestion, q_.now());
    }
  }

  void service_bottleneck() {
    if (bottleneck_busy_ || queue_.empty()) return;
    bottleneck_busy_ = true;
    const Segment seg = queue_.dequeue();
    const SimTime tx_end =
        q_.now() + bottleneck_.serialization_delay(seg.size_bytes);
    const DeliveryOutcome out =
        transmit(seg, bottleneck_, q_.now(), bottleneck_rng_);
    if (out.delivered) {
      q_.schedule(out.arrival, [this, seg] {
        log(q_.now(), seg.flow_id, "deliver", "seq", seg.seq);
        --in_flight_[seg.flow_id];
        receivers_[seg.flow_id]->on_segment(seg);
      });
    } else {
      record_drop(seg, DropCause::kWireless, tx_end);
    }
    q_.schedule(tx_end, [this] {
      bottleneck_busy_ = false;
      service_bottleneck();
    });
  }

  void deliver_ack(const Ack& ack) {
    log(q_.now(), ack.flow_id, "ack", "cum", ack.cum_ack);
    q_.schedule(q_.now() + ack_path_delay_, [this, ack] {
      senders_[ack.flow_id]->on_ack(ack);
    });
  }

  void arm_delack(FlowId flow, double delay_s) {
    const std::uint64_t gen = ++delack_gen_[flow];
    q_.schedule_in(SimTime::from_seconds(delay_s), [this, flow, gen] {
      if (gen != delack_gen_[flow]) return;
      receivers_[flow]->on_delack_timer();
    });
  }

  void record_drop(const Segment& seg, DropCause cause, SimTime at) {
    trace_.drops.push_back(DropRecord{seg.flow_id, seg.seq, cause, at});
    --in_flight_[seg.flow_id];
    if (cause == DropCause::kWireless) {
      ++drops_w_[seg.flow_id];
    } else {
      ++drops_c_[seg.flow_id];
    }
    log(at, seg.flow_id, "drop",
        cause == DropCause::kWireless ? "wireless_seq" : "congestion_seq",
        seg.seq);
  }

  void log(SimTime at, FlowId flow, const char* event, const char* field,
           SeqNo value) {
    if (!sink_) return;
    std::ostringstream os;
    os << csv_num(at.seconds()) << " flow=" << flow << " event=" << event
       << ' ' << field << '=' << value;
    sink_(os.str());
  }

  RunResult finalize(bool drained) {
    trace_.duration_s = cfg_.duration_s;
    trace_.bottleneck_bandwidth = cfg_.bottleneck_bandwidth;
    trace_.queue_capacity = cfg_.queue_capacity;
    trace_.max_queue_occupancy = queue_.max_occupancy_bytes();
    trace_.ended_early = drained;

    for (FlowId i = 0; i < senders_.size(); ++i) {
      FlowCounters& f = trace_.flows[i];
      f.retransmits = senders_[i]->retransmit_count();
      f.arrivals = receivers_[i]->arrivals();
      f.unique_bytes = receivers_[i]->unique_bytes();
      f.drops_wireless = drops_w_[i];
      f.drops_congestion = drops_c_[i];
      f.in_flight_end = in_flight_[i];
      for (const ReductionEvent& r : senders_[i]->reductions()) {
        trace_.reductions.push_back(
            ReductionRecord{r.time_s, i, r.cause, r.trigger_seq});
      }
      for (const ClassificationEvent& c : senders_[i]->classifications()) {
        trace_.classifications.push_back(
            ClassificationRecord{c.time_s, i, c.seq, c.predicted});
      }

      // sent = delivered + wireless drops + congestion drops + in flight
      const std::int64_t rhs =
          f.arrivals + f.drops_wireless + f.drops_congestion + f.in_flight_end;
      if (f.sent != rhs) {
        throw std::logic_error(
            "segment conservation violated for flow " + std::to_string(i) +
            ": sent=" + std::to_string(f.sent) +
            " accounted=" + std::to_string(rhs));
      }
    }

    RunResult result;
    result.trace = std::move(trace_);
    result.metrics = compute_metrics(result.trace, cfg_);
    return result;
  }

  ScenarioConfig cfg_;
  TraceSink sink_;
  EventQueue q_;

  LinkSpec access_;
  LinkSpec bottleneck_;
  SimTime ack_path_delay_;

  DropTailQueue queue_;
  bool bottleneck_busy_ = false;
  RngStream bottleneck_rng_;
  RngStream start_rng_;
  std::vector<RngStream> access_rng_;
  std::vector<RngStream> access_jitter_rng_;
  std::vector<SimTime> access_last_arrival_;

  Profile intermediate_profile_;
  std::vector<Profile> sender_profiles_;
  std::optional<HandshakeService> handshake_;
  ConnectionRegistry registry_;

  std::vector<std::unique_ptr<Sender>> senders_;
  std::vector<std::unique_ptr<Receiver>> receivers_;
  std::vector<SimTime> access_busy_until_;
  std::vector<std::uint64_t> rto_gen_;
  std::vector<std::uint64_t> delack_gen_;
  std::vector<std::int64_t> in_flight_;
  std::vector<std::int64_t> drops_w_;
  std::vector<std::int64_t> drops_c_;

  RunTrace trace_;
};

}  // namespace

RunResult run_scenario(const ScenarioConfig& cfg, TraceSink sink) {
  validate(cfg);
  Simulation sim(cfg, std::move(sink));
  return sim.run();
}

std::vector<Profile> default_profiles(std::int64_t n_connections) {
  Profile intermediate;
  intermediate.node_id = "intermediate";
  for (int i = 0; i < 10; ++i) {
    intermediate.concepts.push_back(
        Concept{"topic" + std::to_string(i), {}});
  }
  std::vector<Profile> out;
  for (std::int64_t i = 0; i < n_connections; ++i) {
    Profile p = intermediate;
    p.node_id = "sender" + std::to_string(i);
    out.push_back(std::move(p));
  }
  out.push_back(std::move(intermediate));
  return out;
}

std::vector<Profile> resolve_profiles(const ScenarioConfig& cfg) {
  if (cfg.profiles.empty()) return default_profiles(cfg.n_connections);

  const auto loaded = load_profiles(cfg.profiles);
  std::unordered_map<std::string, const Profile*> by_id;
  for (const Profile& p : loaded) by_id[p.node_id] = &p;

  std::vector<Profile> out;
  for (std::int64_t i = 0; i < cfg.n_connections; ++i) {
    const std::string id = "sender" + std::to_string(i);
    auto it = by_id.find(id);
    if (it == by_id.end()) {
      throw ScenarioError("profile file missing node '" + id + "'");
    }
    out.push_back(*it->second);
  }
  auto it = by_id.find("intermediate");
  if (it == by_id.end()) {
    throw ScenarioError("profile file missing node 'intermediate'");
  }
  out.push_back(*it->second);
  return out;
}

}  // namespace tibias
