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

#ifndef OLAS_ENGINE_HPP_
#define OLAS_ENGINE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "olas/classifier.hpp"
#include "olas/domain.hpp"
#include "olas/noise.hpp"
#include "olas/rng.hpp"

namespace olas {

enum class Strategy { RsRla, RsOla, EsRla, EsOla, Olas };

inline constexpr Strategy kAllStrategies[] = {Strategy::RsRla, Strategy::RsOla, Strategy::EsRla,
                                              Strategy::EsOla, Strategy::Olas};

std::string to_string(Strategy s);
// Accepts "RS+RLA", "rs+rla", "rs-rla", "olas", ...
Strategy parse_strategy(const std::string& name);

struct ALConfig {
  int cycles = 10;
  // Per-cycle budget; the panel's total capacity when absent.
  std::optional<int> budget;
  double beta = 0.15;
  // Noise that corrupts labels in the simulation.
  NoiseSpec noise = NoiseSpec::model1();
  // Noise the planner believes in; `noise` when absent.
  std::optional<NoiseSpec> planning_noise;
  CorruptionRule corruption;
  Strategy strategy = Strategy::Olas;
  std::uint64_t seed = 0;
  ClassifierSettings classifier;

  int num_labelers = 5;
  int capacity = 3;
  double accuracy_low = 0.5;
  double accuracy_high = 0.95;
  // Fixed accuracies; drawn from [accuracy_low, accuracy_high] per
  // experiment seed when empty.
  std::vector<double> accuracies;

  double test_fraction = 0.2;
  // Fraction of the whole dataset labeled (with true labels) up front.
  double initial_fraction = 0.16;

  const NoiseSpec& planner_noise() const { return planning_noise ? *planning_noise : noise; }
  // Throws ConfigError.
  void validate() const;

  bool operator==(const ALConfig&) const = default;
};

struct QueryRecord {
  SampleId id;
  int labeler;  // sorted panel index
  double entropy;
  double noise;  // simulation noise of the (labeler, sample) pair
  bool corrupted;
  int true_label;
  int observed_label;

  bool operator==(const QueryRecord&) const = default;
};

struct CycleRecord {
  int cycle = 0;
  std::vector<QueryRecord> queries;
  double f1 = 0.0;

  bool operator==(const CycleRecord&) const = default;
};

// Independent random streams of one experiment, all derived from its seed.
struct ExperimentStreams {
  explicit ExperimentStreams(std::uint64_t seed);

  Rng split;
  Rng panel;
  Rng selection;
  Rng corruption;
};

// Seeded split stratified by class: round(test_fraction n) test samples,
// round(initial_fraction n) initially labeled ones carrying their true
// labels, the rest unlabeled.  Reshuffles up to 10 times when a class is
// missing from the labeled part, then throws DataError.
PoolState initial_split(const Dataset& dataset, double test_fraction, double initial_fraction,
                        Rng& rng);

std::vector<double> sample_labeler_accuracies(int count, double low, double high, Rng& rng);

// Fixed or drawn accuracies, each with config.capacity.
LabelerPanel make_panel(const ALConfig& config, Rng& rng);

struct CycleOutcome {
  PoolState state;
  ClassifierModel model;
  CycleRecord record;
};

// One active-learning cycle: score U_t, select and assign per the
// strategy, corrupt the assigned labels, move Q_t into the labeled pool,
// refit and measure test F1.
CycleOutcome run_cycle(const Dataset& dataset, const PoolState& state,
                       const ClassifierModel& model, const ALConfig& config,
                       const LabelerPanel& panel, ExperimentStreams& streams);

struct ExperimentResult {
  std::vector<LabelerProfile> panel;  // sorted
  double initial_f1 = 0.0;
  std::vector<CycleRecord> cycles;
  PoolState final_state;
};

// Split, fit, then config.cycles cycles, all seeded by config.seed.
ExperimentResult run_experiment(const Dataset& dataset, const ALConfig& config);

// As run_experiment from a caller-supplied starting state.
ExperimentResult run_experiment(const Dataset& dataset, const ALConfig& config,
                                PoolState initial, ExperimentStreams& streams);

// Test F1 of the classifier fit on the whole training partition with true
// labels, on the split run_experiment uses for `config.seed`.
double upper_bound_f1(const Dataset& dataset, const ALConfig& config);

// Test-set F1 of `model` with the default averaging for the dataset.
double test_f1(const Dataset& dataset, const PoolState& state, const ClassifierModel& model);

}  // namespace olas

#endif  // OLAS_ENGINE_HPP_
