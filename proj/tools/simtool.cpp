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

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tibias/metrics.hpp"
#include "tibias/scenario.hpp"
#include "tibias/simulation.hpp"
#include "tibias/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 2;
constexpr int kExitCheckFailed = 3;

struct Preset {
  tibias::SweepAxis axis;
  std::vector<double> points;
};

const std::map<std::string, Preset>& presets() {
  static const std::map<std::string, Preset> table = {
      {"loss-fine",
       {tibias::SweepAxis::kLoss, {1e-7, 1e-6, 1e-5, 1e-4, 1e-3, 1e-2}}},
      {"loss-heavy", {tibias::SweepAxis::kLoss, {0.05, 0.075, 0.10}}},
      {"delay",
       {tibias::SweepAxis::kDelay, {0.05, 0.075, 0.10, 0.125, 0.15}}},
      {"bandwidth",
       {tibias::SweepAxis::kBandwidth,
        {1250000, 2500000, 3750000, 5000000}}},
      {"queue",
       {tibias::SweepAxis::kQueue, {40000, 50000, 60000, 70000, 80000}}},
      {"connections",
       {tibias::SweepAxis::kConnections, {1, 5, 10, 15, 20}}},
  };
  return table;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << text;
}

int cmd_run(const std::string& scenario_path, const std::string& out_path,
            const std::string& trace_path, bool check) {
  const tibias::ScenarioConfig cfg = tibias::load_scenario(scenario_path);

  tibias::TraceSink sink;
  std::ofstream trace_file;
  if (!trace_path.empty()) {
    trace_file.open(trace_path, std::ios::binary);
    if (!trace_file) {
      throw std::runtime_error("cannot open trace file: " + trace_path);
    }
    sink = [&trace_file](const std::string& line) {
      trace_file << line << '\n';
    };
  }

  const tibias::RunResult result = tibias::run_scenario(cfg, sink);
  std::string csv = std::string(tibias::kCsvHeader) + "\n" +
                    tibias::csv_row(cfg.config_hash(), cfg.protocol, cfg.seed,
                                    "none", 0.0, result.metrics) +
                    "\n";
  write_output(csv, out_path);

  std::cerr << "run " << cfg.config_hash() << ": goodput "
            << tibias::csv_num(result.metrics.goodput_bps)
            << " B/s, utilization "
            << tibias::csv_num(result.metrics.utilization) << ", retx "
            << result.metrics.retransmissions << ", superfluous "
            << result.metrics.superfluous_reductions << "\n";

  if (check) {
    // Re-run and compare: the CSV must be bit-identical for one seed.
    const tibias::RunResult again = tibias::run_scenario(cfg);
    const std::string row_a = tibias::csv_row(
        cfg.config_hash(), cfg.protocol, cfg.seed, "none", 0.0,
        result.metrics);
    const std::string row_b = tibias::csv_row(
        cfg.config_hash(), cfg.protocol, cfg.seed, "none", 0.0,
        again.metrics);
    if (row_a != row_b) {
      std::cerr << "check failed: repeated run differs\n";
      return kExitCheckFailed;
    }
    std::cerr << "check passed: repeated run identical\n";
  }
  return kExitOk;
}

int cmd_sweep(const std::string& scenario_path, const std::string& axis_name,
              std::vector<double> points, const std::string& preset_name,
              int seeds, int jobs, const std::string& out_path, bool check) {
  const tibias::ScenarioConfig base = tibias::load_scenario(scenario_path);

  tibias::SweepAxis axis;
  if (!preset_name.empty()) {
    auto it = presets().find(preset_name);
    if (it == presets().end()) {
      throw tibias::ScenarioError("unknown preset: " + preset_name);
    }
    axis = it->second.axis;
    points = it->second.points;
  } else {
    const auto parsed = tibias::axis_from_string(axis_name);
    if (!parsed) throw tibias::ScenarioError("unknown axis: " + axis_name);
    if (points.empty()) {
      throw tibias::ScenarioError("sweep needs --points or --preset");
    }
    axis = *parsed;
  }

  const auto rows = tibias::run_sweep(base, axis, points, seeds, jobs);
  write_output(tibias::sweep_csv(rows), out_path);

  for (const auto& row : rows) {
    if (!row.ok) {
      std::cerr << "point " << tibias::csv_num(row.value) << " seed "
                << row.seed << " (" << tibias::to_string(row.protocol)
                << ") failed: " << row.error << "\n";
    }
  }

  if (check) {
    const tibias::TrendCheck verdict = tibias::check_sweep(rows, axis);
    for (const std::string& note : verdict.notes) {
      std::cerr << "check: " << note << "\n";
    }
    if (!verdict.pass) {
      std::cerr << "check failed\n";
      return kExitCheckFailed;
    }
    std::cerr << "check passed\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Star-topology congestion control simulator"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string out_path;
  std::string trace_path;
  std::string axis_name;
  std::string preset_name;
  std::vector<double> points;
  int seeds = 3;
  int jobs = 0;
  bool check = false;

  auto* run = app.add_subcommand("run", "Run one scenario and emit CSV");
  run->add_option("scenario", scenario_path, "Scenario file")->required();
  run->add_option("--out", out_path, "CSV output path (default stdout)");
  run->add_option("--trace", trace_path, "Write the per-flow event trace");
  run->add_flag("--check", check, "Verify determinism by re-running");

  auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep");
  sweep->add_option("scenario", scenario_path, "Scenario file")->required();
  sweep->add_option("--axis", axis_name,
                    "loss|delay|bandwidth|queue|connections");
  sweep->add_option("--points", points, "Axis values")->delimiter(',');
  sweep->add_option("--preset", preset_name,
                    "loss-fine|loss-heavy|delay|bandwidth|queue|connections");
  sweep->add_option("--seeds", seeds, "Seeds per point (default 3)");
  sweep->add_option("--jobs", jobs, "Worker threads (default: hardware)");
  sweep->add_option("--out", out_path, "CSV output path (default stdout)");
  sweep->add_flag("--check", check, "Evaluate the axis trend checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      return cmd_run(scenario_path, out_path, trace_path, check);
    }
    return cmd_sweep(scenario_path, axis_name, points, preset_name, seeds,
                     jobs, out_path, check);
  } catch (const tibias::ScenarioError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
