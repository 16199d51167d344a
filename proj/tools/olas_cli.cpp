// Copyright 2026 The OLAS Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: run, bench, verify, calibrate, plot-data.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "olas/benchmark.hpp"
#include "olas/calibration.hpp"
#include "olas/config.hpp"
#include "olas/engine.hpp"
#include "olas/verification.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kData = 2, kVerification = 3 };

struct CommonFlags {
  std::optional<std::string> config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::string> dataset;
  std::optional<std::string> preset;
  std::vector<std::string> strategies;
  std::optional<int> replications;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--config", f.config, "JSON config file");
  cmd->add_option("--seed", f.seed, "Master seed");
  cmd->add_option("--out", f.out, "Output directory");
  cmd->add_option("--dataset", f.dataset, "CSV dataset path (overrides the config)");
  cmd->add_option("--preset", f.preset, "Budget/labeler preset: statlog, ionosphere, connectionist, spambase");
  cmd->add_option("--strategy", f.strategies, "Strategy (RS+RLA, RS+OLA, ES+RLA, ES+OLA, OLAS); repeatable for bench");
  cmd->add_option("--replications", f.replications, "Replications per strategy");
}

// Directory searched for a preset's shipped dataset when no path is given.
fs::path data_dir() {
  if (const char* env = std::getenv("OLAS_DATA_DIR")) return env;
  return "data";
}

olas::ProjectConfig resolve(const CommonFlags& f) {
  olas::ProjectConfig c;
  if (f.config) c = olas::load_project_config(*f.config);
  if (f.preset) {
    const olas::TablePreset& preset = olas::find_preset(*f.preset);
    olas::apply_preset(c.experiment, preset);
    c.preset = preset.name;
    c.schema = preset.schema;
    if (!f.dataset && !preset.dataset_file.empty()) {
      c.synthetic.reset();
      c.dataset_path = data_dir() / preset.dataset_file;
    }
  }
  if (f.dataset) {
    c.synthetic.reset();
    c.dataset_path = *f.dataset;
  }
  if (f.seed) c.experiment.seed = *f.seed;
  if (!f.strategies.empty()) {
    c.strategies.clear();
    for (const auto& s : f.strategies) c.strategies.push_back(olas::parse_strategy(s));
    c.experiment.strategy = c.strategies.back();
  }
  if (f.replications) {
    if (*f.replications < 1) throw olas::ConfigError("--replications must be >= 1");
    c.replications = *f.replications;
    c.calibration_replications = *f.replications;
  }
  c.experiment.validate();
  return c;
}

void write_json(const fs::path& path, const ordered_json& j) {
  std::ofstream out(path);
  if (!out) throw olas::DataError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

fs::path make_out_dir(const std::optional<std::string>& out) {
  fs::path dir = out ? fs::path(*out) : fs::path("olas_out");
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw olas::DataError("cannot create output directory " + dir.string() + ": " + ec.message());
  return dir;
}

ordered_json dataset_json(const olas::Dataset& d) {
  return {{"samples", d.size()}, {"features", d.feature_dim}, {"classes", d.num_classes}};
}

int cmd_run(const CommonFlags& f) {
  const olas::ProjectConfig c = resolve(f);
  const olas::Dataset dataset = olas::load_dataset(c);
  const olas::ExperimentResult result = olas::run_experiment(dataset, c.experiment);

  ordered_json j;
  j["strategy"] = olas::to_string(c.experiment.strategy);
  j["seed"] = c.experiment.seed;
  ordered_json panel = ordered_json::array();
  for (const auto& l : result.panel) panel.push_back({{"accuracy", l.accuracy}, {"capacity", l.capacity}});
  j["panel"] = panel;
  j["initial_f1"] = result.initial_f1;
  ordered_json cycles = ordered_json::array();
  for (const auto& cycle : result.cycles) {
    ordered_json queries = ordered_json::array();
    for (const auto& q : cycle.queries) {
      queries.push_back({{"id", q.id},
                         {"labeler", q.labeler},
                         {"entropy", q.entropy},
                         {"noise", q.noise},
                         {"corrupted", q.corrupted},
                         {"true_label", q.true_label},
                         {"observed_label", q.observed_label}});
    }
    cycles.push_back({{"cycle", cycle.cycle}, {"f1", cycle.f1}, {"queries", queries}});
  }
  j["cycles"] = cycles;

  if (f.out) write_json(make_out_dir(f.out) / "run.json", j);
  for (const auto& cycle : result.cycles) {
    std::cout << "cycle " << cycle.cycle << "  queries " << cycle.queries.size() << "  f1 "
              << cycle.f1 << '\n';
    for (const auto& q : cycle.queries) {
      std::cout << "  id " << q.id << "  labeler " << q.labeler << "  entropy " << q.entropy
                << "  noise " << q.noise << "  label " << q.true_label << "->" << q.observed_label
                << (q.corrupted ? "  corrupted" : "") << '\n';
    }
  }
  return kOk;
}

int cmd_bench(const CommonFlags& f) {
  const olas::ProjectConfig c = resolve(f);
  const olas::Dataset dataset = olas::load_dataset(c);
  olas::BenchmarkSettings settings;
  settings.strategies = c.strategies;
  settings.base = c.experiment;
  settings.replications = c.replications;
  settings.master_seed = c.experiment.seed;
  const olas::BenchmarkResult result = olas::run_benchmark(dataset, settings);

  const fs::path dir = make_out_dir(f.out);
  ordered_json summary;
  summary["config"] = olas::to_json(c);
  summary["dataset"] = dataset_json(dataset);
  summary["upper_bound_mean_f1"] = result.upper_bound_mean;
  ordered_json rows = ordered_json::array();
  for (const auto& s : result.summary) {
    rows.push_back({{"strategy", olas::to_string(s.strategy)},
                    {"mean_final_f1", s.mean_final_f1},
                    {"std_final_f1", s.std_final_f1}});
    std::printf("%-7s  %.3f +- %.3f\n", olas::to_string(s.strategy).c_str(), s.mean_final_f1,
                s.std_final_f1);
  }
  std::printf("%-7s  %.3f\n", "upper", result.upper_bound_mean);
  summary["strategies"] = rows;
  write_json(dir / "summary.json", summary);
  olas::write_cycle_matrix(result.matrix, dir);
  olas::emit_plot_data(result.matrix, dir);
  return kOk;
}

int cmd_verify(const CommonFlags& f) {
  const std::uint64_t seed = f.seed.value_or(0);
  const olas::VerificationReport reports[] = {olas::verify_assignment_oracle(500, seed),
                                              olas::verify_olas_oracle(300, seed),
                                              olas::verify_noise_functions()};
  bool ok = true;
  for (const auto& r : reports) {
    std::printf("%-4s %-10s %4d cases  %d failures  %.3fs\n", r.ok() ? "ok" : "FAIL", r.name.c_str(),
                r.cases, r.failures, r.seconds);
    for (const auto& m : r.messages) std::printf("     %s\n", m.c_str());
    ok = ok && r.ok();
  }
  return ok ? kOk : kVerification;
}

int cmd_calibrate(const CommonFlags& f) {
  const olas::ProjectConfig c = resolve(f);
  const olas::Dataset golden = olas::load_dataset(c);
  const olas::CalibrationResult result = olas::calibrate(
      golden, c.beta_grid, c.experiment, c.calibration_replications, c.experiment.seed);

  ordered_json j;
  j["coefficients"] = {result.coefficients.intercept, result.coefficients.entropy,
                       result.coefficients.accuracy};
  j["log_loss"] = result.log_loss;
  j["beta_star"] = result.beta_star;
  ordered_json scores = ordered_json::array();
  for (const auto& s : result.scores) scores.push_back({{"beta", s.beta}, {"mean_f1", s.mean_f1}});
  j["scores"] = scores;
  if (f.out) write_json(make_out_dir(f.out) / "calibration.json", j);
  std::cout << j.dump(2) << '\n';
  return kOk;
}

int cmd_plot_data(const CommonFlags& f, const std::string& from) {
  const olas::CycleMatrix matrix = olas::read_cycle_matrix(from);
  olas::emit_plot_data(matrix, make_out_dir(f.out ? f.out : std::optional<std::string>(from)));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noise-aware active learning with labeler assignment"};
  app.require_subcommand(1);

  CommonFlags run_flags, bench_flags, verify_flags, calibrate_flags, plot_flags;
  std::string from;
  CLI::App* run = app.add_subcommand("run", "Run one experiment and print its cycle records");
  CLI::App* bench = app.add_subcommand("bench", "Compare strategies over seeded replications");
  CLI::App* verify = app.add_subcommand("verify", "Check the solvers against exhaustive search");
  CLI::App* calibrate = app.add_subcommand("calibrate", "Fit the noise model and tune beta on a golden set");
  CLI::App* plot = app.add_subcommand("plot-data", "Re-emit figure files from a saved cycle matrix");
  add_common(run, run_flags);
  add_common(bench, bench_flags);
  add_common(verify, verify_flags);
  add_common(calibrate, calibrate_flags);
  add_common(plot, plot_flags);
  plot->add_option("--from", from, "Directory holding cycle_f1.csv and upper_bound.csv")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (run->parsed()) return cmd_run(run_flags);
    if (bench->parsed()) return cmd_bench(bench_flags);
    if (verify->parsed()) return cmd_verify(verify_flags);
    if (calibrate->parsed()) return cmd_calibrate(calibrate_flags);
    if (plot->parsed()) return cmd_plot_data(plot_flags, from);
  } catch (const olas::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kUsage;
  } catch (const olas::DataError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
