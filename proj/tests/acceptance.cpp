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


// Acceptance gate: one PASS/FAIL line per criterion; exits nonzero if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "olas/benchmark.hpp"
#include "olas/calibration.hpp"
#include "olas/config.hpp"
#include "olas/dataset_io.hpp"
#include "olas/engine.hpp"
#include "olas/noise.hpp"
#include "olas/verification.hpp"

using namespace olas;
namespace fs = std::filesystem;

namespace {

const fs::path kData = OLAS_DATA_DIR;
const fs::path kConfigs = OLAS_CONFIG_DIR;
const std::string kCli = OLAS_CLI;

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, double limit_seconds,
            const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && seconds > limit_seconds) {
    out.pass = false;
    out.detail += " (over the " + std::to_string(static_cast<int>(limit_seconds)) + " s limit)";
  }
  if (!out.pass) ++failures;
  std::printf("%s  %d. %s  [%.2fs]  %s\n", out.pass ? "PASS" : "FAIL", id, name.c_str(), seconds,
              out.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return "<missing " + p.string() + ">";
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome verification(const VerificationReport& r) {
  std::string detail = std::to_string(r.cases) + " cases, " + std::to_string(r.failures) + " mismatches";
  if (!r.messages.empty()) detail += "; first: " + r.messages.front();
  return {r.ok(), detail};
}

// Statlog benchmark with the Table-2 preset, shared by criteria 5 and 6.
ALConfig statlog_config(const NoiseSpec& noise) {
  ALConfig c;
  apply_preset(c, find_preset("statlog"));
  c.noise = noise;
  c.corruption = {CorruptionMode::Threshold, 0.2};
  c.beta = 0.15;
  c.cycles = 10;
  c.classifier.l2 = 0.3;
  return c;
}

BenchmarkResult statlog_bench(const Dataset& d, const NoiseSpec& noise) {
  BenchmarkSettings s;
  s.base = statlog_config(noise);
  s.replications = 20;
  s.master_seed = 2026;
  return run_benchmark(d, s);
}

Outcome gap_check(const BenchmarkResult& r) {
  double olas = 0, best = -1;
  std::string best_name;
  for (const auto& s : r.summary) {
    if (s.strategy == Strategy::Olas) {
      olas = s.mean_final_f1;
    } else if (s.mean_final_f1 > best) {
      best = s.mean_final_f1;
      best_name = to_string(s.strategy);
    }
  }
  return {olas >= best + 0.15,
          fmt("OLAS %.3f, best baseline %.3f", olas, best) + " (" + best_name + fmt("), gap %.3f >= 0.15", olas - best)};
}

Outcome dominance(const BenchmarkResult& r) {
  double worst_margin = 1e9;
  for (const auto& s : r.summary) worst_margin = std::min(worst_margin, r.upper_bound_mean - s.mean_final_f1);
  return {worst_margin >= 0.0, fmt("upper bound %.4f, smallest margin %.4f", r.upper_bound_mean, worst_margin)};
}

}  // namespace

int main() {
  report(1, "closed-form assignment equals exhaustive min-max", 5, [] {
    return verification(verify_assignment_oracle(500, 1));
  });

  report(2, "OLAS equals exhaustive integer-program search", 30, [] {
    return verification(verify_olas_oracle(300, 2));
  });

  report(3, "noise function validity", 1, [] {
    bool ok = validate_noise_function(noise_model1).is_valid && validate_noise_function(noise_model2).is_valid;
    std::string detail = ok ? "both sweeps valid" : "sweep reported violations";
    double worst_gap = 0;
    for (int i = 1; i <= 9; ++i) {
      const double a = i / 10.0;
      worst_gap = std::max(worst_gap, std::abs(detail::model2_low_branch(a, 0.5) - detail::model2_high_branch(a, 0.5)));
      // Endpoint rule of the second model; the first gives e(1-a), so only
      // its e=0 end is pinned.
      ok = ok && noise_model2(a, 0.0) == 0.0 && noise_model2(a, 1.0) == 1.0 && noise_model1(a, 0.0) == 0.0;
    }
    ok = ok && worst_gap <= 1e-9;
    ok = ok && noise_model1(0.5, 0.4) == 0.2;
    // At e=0.5 both branches reduce to 1-a, evaluated as 1.0 - 0.7 in binary.
    ok = ok && noise_model2(0.7, 0.5) == 1.0 - 0.7;
    return Outcome{ok, detail + fmt(", branch gap %.2e, e1(0.5,0.4)=%.17g, e2(0.7,0.5)=%.17g", worst_gap,
                                    noise_model1(0.5, 0.4), noise_model2(0.7, 0.5))};
  });

  report(4, "OLAS at beta 1 reproduces ES+OLA", 30, [] {
    const Dataset d = synth_dataset({2, 100, 4, 1.5, 4});
    int identical = 0;
    for (int r = 0; r < 5; ++r) {
      ALConfig olas;
      olas.cycles = 5;
      olas.budget = 15;
      olas.beta = 1.0;
      olas.strategy = Strategy::Olas;
      olas.seed = derive_seed(4, r);
      ALConfig es = olas;
      es.strategy = Strategy::EsOla;
      const ExperimentResult a = run_experiment(d, olas);
      const ExperimentResult b = run_experiment(d, es);
      identical += a.cycles == b.cycles && a.initial_f1 == b.initial_f1;
    }
    return Outcome{identical == 5, std::to_string(identical) + "/5 replications identical in queries, labelers and F1"};
  });

  const Dataset statlog = load_csv_dataset(kData / "statlog_heart.csv", find_preset("statlog").schema);
  BenchmarkResult nm1, nm2;
  report(5, "Statlog gap, first noise model", 0, [&] {
    nm1 = statlog_bench(statlog, NoiseSpec::model1());
    return gap_check(nm1);
  });
  report(5, "Statlog gap, second noise model", 0, [&] {
    nm2 = statlog_bench(statlog, NoiseSpec::model2());
    return gap_check(nm2);
  });

  report(6, "upper bound dominates, Statlog (first noise model)", 0, [&] { return dominance(nm1); });
  report(6, "upper bound dominates, Statlog (second noise model)", 0, [&] { return dominance(nm2); });
  report(6, "upper bound dominates, synthetic", 0, [] {
    const ProjectConfig c = load_project_config(kConfigs / "synthetic.json");
    BenchmarkSettings s;
    s.base = c.experiment;
    s.replications = 20;
    s.master_seed = c.experiment.seed;
    return dominance(run_benchmark(load_dataset(c), s));
  });

  report(7, "noise calibration", 120, [&] {
    Rng rng(7);
    const auto records = synthetic_golden_records(10000, NoiseSpec::model1(), rng);
    const NoiseFit fitted = fit_noise_logistic(records);
    const auto& w = fitted.coefficients;
    const NoiseLikelihood f(records);
    const Eigen::Vector3d at(w.intercept, w.entropy, w.accuracy);
    double grad_err = 0;
    for (const Eigen::Vector3d& p : {at, Eigen::Vector3d(0, 0, 0), Eigen::Vector3d(0.5, -1, 2)}) {
      const Eigen::Vector3d g = f.gradient(p);
      for (int i = 0; i < 3; ++i) {
        Eigen::Vector3d up = p, down = p;
        up[i] += 1e-5;
        down[i] -= 1e-5;
        grad_err = std::max(grad_err, std::abs(g[i] - (f.value(up) - f.value(down)) / 2e-5));
      }
    }

    ALConfig config = statlog_config(NoiseSpec::model1());
    config.planning_noise = NoiseSpec::estimated(w);
    const std::vector<double> grid{0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5};
    const BetaTuning tuning = tune_beta(statlog, grid, config, 5, 7);
    double best = 0, chosen = -1;
    for (const auto& s : tuning.scores) {
      best = std::max(best, s.mean_f1);
      if (s.beta == tuning.best_beta) chosen = s.mean_f1;
    }
    const bool ok = w.entropy > 0 && w.accuracy < 0 && grad_err <= 1e-6 && chosen >= best - 0.02;
    return Outcome{ok, fmt("w_e %.3f, w_a %.3f, gradient error %.1e", w.entropy, w.accuracy, grad_err) +
                           fmt(", beta* %.2f (F1 %.3f, grid max %.3f)", tuning.best_beta, chosen, best)};
  });

  report(8, "bench output is byte-identical across runs", 0, [] {
    const fs::path root = fs::temp_directory_path() / "olas_acceptance_determinism";
    fs::remove_all(root);
    const std::string config = (kConfigs / "statlog_model1.json").string();
    const char* files[] = {"summary.json", "cycle_f1.csv", "upper_bound.csv", "median_f1.csv", "final_f1.csv"};
    for (const char* run : {"a", "b"}) {
      const std::string cmd = "\"" + kCli + "\" bench --config \"" + config + "\" --replications 5 --out \"" +
                              (root / run).string() + "\" > /dev/null";
      if (std::system(cmd.c_str()) != 0) return Outcome{false, "bench run failed: " + cmd};
    }
    int same = 0;
    for (const char* f : files) same += slurp(root / "a" / f) == slurp(root / "b" / f);
    return Outcome{same == 5, std::to_string(same) + "/5 files identical"};
  });

  std::printf("%s\n", failures == 0 ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return failures == 0 ? 0 : 1;
}
