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

#include "tibias/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <sstream>
#include <thread>

#include "tibias/simulation.hpp"

namespace tibias {

const char* to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::kLoss: return "loss";
    case SweepAxis::kDelay: return "delay";
    case SweepAxis::kBandwidth: return "bandwidth";
    case SweepAxis::kQueue: return "queue";
    case SweepAxis::kConnections: return "connections";
  }
  return "?";
}

std::optional<SweepAxis> axis_from_string(const std::string& name) {
  if (name == "loss") return SweepAxis::kLoss;
  if (name == "delay") return SweepAxis::kDelay;
  if (name == "bandwidth") return SweepAxis::kBandwidth;
  if (name == "queue") return SweepAxis::kQueue;
  if (name == "connections") return SweepAxis::kConnections;
  return std::nullopt;
}

ScenarioConfig apply_axis(ScenarioConfig base, SweepAxis axis, double value) {
  switch (axis) {
    case SweepAxis::kLoss:
      base.loss_prob = value;
      break;
    case SweepAxis::kDelay:
      base.prop_delay_s = value;
      break;
    case SweepAxis::kBandwidth:
      base.access_bandwidth = value;
      base.bottleneck_bandwidth = value;
      break;
    case SweepAxis::kQueue:
      base.queue_capacity = static_cast<std::int64_t>(value);
      break;
    case SweepAxis::kConnections:
      base.n_connections = static_cast<std::int64_t>(value);
      break;
  }
  validate(base);
  return base;
}

std::vector<SweepRow> run_sweep(const ScenarioConfig& base, SweepAxis axis,
                                const std::vector<double>& points,
                                int n_seeds, int jobs) {
  struct Task {
    double value;
    Protocol protocol;
    std::uint64_t seed;
  };
  std::vector<Task> tasks;
  for (double value : points) {
    for (Protocol protocol : {Protocol::kTibias, Protocol::kReno}) {
      for (int s = 0; s < n_seeds; ++s) {
        tasks.push_back(Task{value, protocol, base.seed + s});
      }
    }
  }

  std::vector<SweepRow> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      const Task& t = tasks[i];
      SweepRow& row = rows[i];
      row.protocol = t.protocol;
      row.seed = t.seed;
      row.axis = axis;
      row.value = t.value;
      try {
        ScenarioConfig cfg = apply_axis(base, axis, t.value);
        cfg.protocol = t.protocol;
        cfg.seed = t.seed;
        row.scenario_id = cfg.config_hash();
        row.metrics = run_scenario(cfg).metrics;
        row.ok = true;
      } catch (const std::exception& e) {
        row.ok = false;
        row.error = e.what();
      }
    }
  };

  if (jobs <= 0) {
    jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs <= 0) jobs = 1;
  }
  jobs = std::min<int>(jobs, static_cast<int>(tasks.size()));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::stable_sort(rows.begin(), rows.end(),
                   [](const SweepRow& a, const SweepRow& b) {
                     if (a.value != b.value) return a.value < b.value;
                     const std::string pa = to_string(a.protocol);
                     const std::string pb = to_string(b.protocol);
                     if (pa != pb) return pa < pb;
                     return a.seed < b.seed;
                   });
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << kCsvHeader << '\n';
  for (const SweepRow& row : rows) {
    if (row.ok) {
      os << csv_row(row.scenario_id, row.protocol, row.seed,
                    to_string(row.axis), row.value, row.metrics);
    } else {
      os << csv_error_row(row.scenario_id, row.protocol, row.seed,
                          to_string(row.axis), row.value);
    }
    os << '\n';
  }
  return os.str();
}

namespace {

struct PointStats {
  double goodput[2] = {0.0, 0.0};  // [tibias, reno]
  double util[2] = {0.0, 0.0};
  double superfluous[2] = {0.0, 0.0};
  int count[2] = {0, 0};
};

int proto_index(Protocol p) { return p == Protocol::kTibias ? 0 : 1; }

/// Seed means per (value, protocol); error rows are skipped.
std::map<double, PointStats> aggregate(const std::vector<SweepRow>& rows) {
  std::map<double, PointStats> points;
  for (const SweepRow& row : rows) {
    if (!row.ok) continue;
    PointStats& p = points[row.value];
    const int i = proto_index(row.protocol);
    p.goodput[i] += row.metrics.goodput_bps;
    p.util[i] += row.metrics.utilization;
    p.superfluous[i] +=
        static_cast<double>(row.metrics.superfluous_reductions);
    ++p.count[i];
  }
  for (auto& [value, p] : points) {
    for (int i = 0; i < 2; ++i) {
      if (p.count[i] > 0) {
        p.goodput[i] /= p.count[i];
        p.util[i] /= p.count[i];
        p.superfluous[i] /= p.count[i];
      }
    }
  }
  return points;
}

std::string fmt_pair(double value, double a, double b) {
  std::ostringstream os;
  os << "at " << csv_num(value) << ": tibias=" << csv_num(a)
     << " reno=" << csv_num(b);
  return os.str();
}

}  // namespace

TrendCheck check_loss_utilization(const std::vector<SweepRow>& rows) {
  TrendCheck out;
  const auto points = aggregate(rows);
  for (int i = 0; i < 2; ++i) {
    int inversions = 0;
    double prev = -1.0;
    double prev_value = 0.0;
    for (const auto& [value, p] : points) {
      if (prev >= 0.0 && p.util[i] > prev) {
        const double jump = p.util[i] - prev;
        ++inversions;
        if (inversions > 1 || jump > 0.02) {
          std::ostringstream os;
          os << (i == 0 ? "tibias" : "reno")
             << " utilization rises from loss " << csv_num(prev_value)
             << " to " << csv_num(value) << " by " << csv_num(jump);
          out.fail(os.str());
        }
      }
      prev = p.util[i];
      prev_value = value;
    }
  }
  for (const auto& [value, p] : points) {
    if (value >= 1e-3 && p.util[0] < p.util[1]) {
      out.fail("tibias utilization below reno " +
               fmt_pair(value, p.util[0], p.util[1]));
    }
  }
  return out;
}

TrendCheck check_superfluous_ordering(const std::vector<SweepRow>& rows) {
  TrendCheck out;
  for (const auto& [value, p] : aggregate(rows)) {
    if (!(p.superfluous[0] < p.superfluous[1])) {
      out.fail("superfluous reductions not below reno " +
               fmt_pair(value, p.superfluous[0], p.superfluous[1]));
    }
  }
  return out;
}

TrendCheck check_goodput_trend(const std::vector<SweepRow>& rows,
                               SweepAxis axis) {
  TrendCheck out;
  const auto points = aggregate(rows);
  if (points.empty()) {
    out.fail("no successful rows");
    return out;
  }

  for (const auto& [value, p] : points) {
    if (p.goodput[0] < p.goodput[1]) {
      out.fail("tibias goodput below reno " +
               fmt_pair(value, p.goodput[0], p.goodput[1]));
    }
  }

  const bool decreasing = axis == SweepAxis::kDelay;
  double prev = -1.0;
  double prev_value = 0.0;
  for (const auto& [value, p] : points) {
    if (prev >= 0.0) {
      const bool bad =
          decreasing ? p.goodput[0] > prev : p.goodput[0] < prev;
      if (bad) {
        std::ostringstream os;
        os << "tibias goodput not " << (decreasing ? "non-increasing" : "non-decreasing")
           << " between " << csv_num(prev_value) << " and " << csv_num(value);
        out.fail(os.str());
      }
    }
    prev = p.goodput[0];
    prev_value = value;
  }

  const auto& extreme = *points.rbegin();
  if (extreme.second.goodput[0] < 1.05 * extreme.second.goodput[1]) {
    out.fail("tibias lacks 5% margin at the extreme point " +
             fmt_pair(extreme.first, extreme.second.goodput[0],
                      extreme.second.goodput[1]));
  }
  return out;
}

TrendCheck check_sweep(const std::vector<SweepRow>& rows, SweepAxis axis) {
  switch (axis) {
    case SweepAxis::kLoss: {
      bool heavy = !rows.empty();
      for (const SweepRow& r : rows) heavy = heavy && r.value >= 0.05;
      return heavy ? check_superfluous_ordering(rows)
                   : check_loss_utilization(rows);
    }
    case SweepAxis::kDelay:
    case SweepAxis::kBandwidth:
    case SweepAxis::kQueue:
      return check_goodput_trend(rows, axis);
    case SweepAxis::kConnections:
      return TrendCheck{};
  }
  return TrendCheck{};
}

}  // namespace tibias
