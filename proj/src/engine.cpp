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

#include "olas/engine.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <unordered_map>

#include "olas/assignment.hpp"
#include "olas/sampling.hpp"

namespace olas {

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::RsRla: return "RS+RLA";
    case Strategy::RsOla: return "RS+OLA";
    case Strategy::EsRla: return "ES+RLA";
    case Strategy::EsOla: return "ES+OLA";
    case Strategy::Olas: return "OLAS";
  }
  return "unknown";
}

Strategy parse_strategy(const std::string& name) {
  std::string key;
  for (char c : name) {
    if (c == '-' || c == '_') c = '+';
    key.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  for (Strategy s : kAllStrategies) {
    if (to_string(s) == key) return s;
  }
  throw ConfigError("unknown strategy '" + name + "'");
}

void ALConfig::validate() const {
  auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (cycles < 1) throw ConfigError("cycles must be >= 1");
  if (!in_unit(beta)) throw ConfigError("beta must lie in [0,1]");
  if (!in_unit(corruption.alpha)) throw ConfigError("alpha must lie in [0,1]");
  if (capacity < 1) throw ConfigError("capacity must be >= 1");
  if (accuracies.empty()) {
    if (num_labelers < 1) throw ConfigError("num_labelers must be >= 1");
    if (!(in_unit(accuracy_low) && in_unit(accuracy_high) && accuracy_low < accuracy_high)) {
      throw ConfigError("accuracy range must satisfy 0 <= low < high <= 1");
    }
  } else {
    for (double a : accuracies) {
      if (!in_unit(a)) throw ConfigError("labeler accuracies must lie in [0,1]");
    }
  }
  const int labelers = accuracies.empty() ? num_labelers : static_cast<int>(accuracies.size());
  if (budget && (*budget < 1 || *budget > labelers * capacity)) {
    throw ConfigError("budget must lie in [1, total capacity]");
  }
  if (!(test_fraction > 0.0 && test_fraction < 1.0 && initial_fraction > 0.0 &&
        initial_fraction < 1.0 && test_fraction + initial_fraction < 1.0)) {
    throw ConfigError("test and initial fractions must lie in (0,1) and sum below 1");
  }
  if (classifier.iterations < 1 || !(classifier.learning_rate > 0.0) || classifier.l2 < 0.0) {
    throw ConfigError("invalid classifier settings");
  }
}

ExperimentStreams::ExperimentStreams(std::uint64_t seed)
    : split(derive_seed(seed, 1)),
      panel(derive_seed(seed, 2)),
      selection(derive_seed(seed, 3)),
      corruption(derive_seed(seed, 4)) {}

PoolState initial_split(const Dataset& dataset, double test_fraction, double initial_fraction,
                        Rng& rng) {
  if (!(test_fraction > 0.0 && initial_fraction > 0.0 && test_fraction + initial_fraction < 1.0)) {
    throw std::invalid_argument("fractions must be positive and sum below 1");
  }
  if (!dataset.fully_labeled()) throw DataError("initial_split needs a fully labeled dataset");
  const std::size_t n = dataset.size();
  const auto n_test = static_cast<std::size_t>(std::llround(test_fraction * static_cast<double>(n)));
  const auto n_init =
      static_cast<std::size_t>(std::llround(initial_fraction * static_cast<double>(n)));
  if (n_test + n_init >= n || n_init < static_cast<std::size_t>(dataset.num_classes)) {
    throw DataError("dataset too small for the requested split");
  }

  std::vector<std::vector<SampleId>> by_class(static_cast<std::size_t>(dataset.num_classes));
  for (const auto& s : dataset.samples) by_class[static_cast<std::size_t>(*s.label)].push_back(s.id);

  // Test quota per class by largest remainder, ties to the lower class.
  std::vector<std::size_t> quota(by_class.size());
  std::vector<std::pair<double, std::size_t>> remainders;
  std::size_t assigned = 0;
  for (std::size_t c = 0; c < by_class.size(); ++c) {
    const double exact = static_cast<double>(n_test) * static_cast<double>(by_class[c].size()) /
                         static_cast<double>(n);
    quota[c] = static_cast<std::size_t>(std::floor(exact));
    assigned += quota[c];
    remainders.emplace_back(exact - std::floor(exact), c);
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t k = 0; assigned < n_test; ++k, ++assigned) ++quota[remainders[k].second];

  for (int attempt = 0; attempt < 10; ++attempt) {
    PoolState state;
    std::vector<SampleId> training;
    for (std::size_t c = 0; c < by_class.size(); ++c) {
      std::vector<SampleId> ids = by_class[c];
      rng.shuffle(std::span<SampleId>(ids));
      state.test.insert(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(quota[c]));
      training.insert(training.end(), ids.begin() + static_cast<std::ptrdiff_t>(quota[c]), ids.end());
    }
    std::sort(training.begin(), training.end());
    rng.shuffle(std::span<SampleId>(training));
    std::vector<bool> seen(by_class.size(), false);
    for (std::size_t k = 0; k < training.size(); ++k) {
      const SampleId id = training[k];
      if (k < n_init) {
        const int label = *dataset.at(id).label;
        state.labeled[id] = label;
        seen[static_cast<std::size_t>(label)] = true;
      } else {
        state.unlabeled.insert(id);
      }
    }
    if (std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) return state;
  }
  throw DataError("initial labeled set misses a class after 10 reshuffles");
}

std::vector<double> sample_labeler_accuracies(int count, double low, double high, Rng& rng) {
  if (count < 1 || !(low < high)) throw std::invalid_argument("need count >= 1 and low < high");
  std::vector<double> out(static_cast<std::size_t>(count));
  for (double& a : out) a = rng.uniform(low, high);
  return out;
}

LabelerPanel make_panel(const ALConfig& config, Rng& rng) {
  const std::vector<double> accuracies =
      config.accuracies.empty()
          ? sample_labeler_accuracies(config.num_labelers, config.accuracy_low,
                                      config.accuracy_high, rng)
          : config.accuracies;
  std::vector<LabelerProfile> profiles;
  for (double a : accuracies) profiles.push_back({a, config.capacity});
  return validate_panel(profiles);
}

double test_f1(const Dataset& dataset, const PoolState& state, const ClassifierModel& model) {
  const std::vector<SampleId> ids(state.test.begin(), state.test.end());
  std::vector<int> truth;
  truth.reserve(ids.size());
  for (SampleId id : ids) truth.push_back(*dataset.at(id).label);
  const std::vector<int> predicted = predict_labels(model, feature_matrix(dataset, ids));
  return f1_score(predicted, truth, default_f1_averaging(dataset.num_classes),
                  dataset.num_classes);
}

CycleOutcome run_cycle(const Dataset& dataset, const PoolState& state,
                       const ClassifierModel& model, const ALConfig& config,
                       const LabelerPanel& panel, ExperimentStreams& streams) {
  CycleOutcome out{state, model, {}};
  out.state.cycle = state.cycle + 1;
  out.record.cycle = out.state.cycle;
  if (state.unlabeled.empty()) {
    out.record.f1 = test_f1(dataset, out.state, out.model);
    return out;
  }

  const std::vector<SampleId> pool(state.unlabeled.begin(), state.unlabeled.end());
  const Eigen::MatrixXd probs = predict_proba(model, feature_matrix(dataset, pool));
  std::vector<EntropyTable::Entry> entries;
  entries.reserve(pool.size());
  for (std::size_t k = 0; k < pool.size(); ++k) {
    const Eigen::VectorXd row = probs.row(static_cast<Eigen::Index>(k)).transpose();
    entries.push_back({pool[k], normalized_entropy(std::span<const double>(row.data(), static_cast<std::size_t>(row.size())),
                                                   dataset.num_classes)});
  }
  const EntropyTable table(std::move(entries));

  const LabelerPanel active = config.budget ? panel.limited_to(*config.budget) : panel;
  const int budget = active.total_capacity();
  const NoiseSpec& planner = config.planner_noise();

  // (rank, labeler) pairs in rank order.
  std::vector<std::pair<std::size_t, int>> pairs;
  if (config.strategy == Strategy::Olas) {
    const QueryPlan plan = olas_select(table, active, planner, config.beta);
    for (const auto& s : plan.selections) pairs.emplace_back(s.rank, s.labeler);
  } else {
    std::vector<std::size_t> ranks;
    if (config.strategy == Strategy::RsRla || config.strategy == Strategy::RsOla) {
      std::unordered_map<SampleId, std::size_t> rank_of;
      for (std::size_t r = 0; r < table.size(); ++r) rank_of[table[r].id] = r;
      for (SampleId id : random_sampling(pool, budget, streams.selection)) ranks.push_back(rank_of.at(id));
      std::sort(ranks.begin(), ranks.end());
    } else {
      const std::size_t k = std::min(static_cast<std::size_t>(budget), table.size());
      for (std::size_t r = 0; r < k; ++r) ranks.push_back(r);
    }
    std::vector<double> entropies;
    for (std::size_t r : ranks) entropies.push_back(table[r].entropy);
    const bool random_labelers =
        config.strategy == Strategy::RsRla || config.strategy == Strategy::EsRla;
    const AssignmentPlan plan = random_labelers
                                    ? random_assignment(ranks.size(), active, streams.selection)
                                    : optimal_assignment(entropies, active, planner);
    for (std::size_t q = 0; q < ranks.size(); ++q) {
      pairs.emplace_back(ranks[q], plan.labeler_for_position[q]);
    }
  }

  const auto loads = [&] {
    std::vector<int> l(active.size(), 0);
    for (const auto& [rank, labeler] : pairs) ++l[static_cast<std::size_t>(labeler)];
    return l;
  }();
  for (std::size_t i = 0; i < active.size(); ++i) {
    if (loads[i] > active[i].capacity) throw std::logic_error("labeler capacity exceeded");
  }

  for (const auto& [rank, labeler] : pairs) {
    const auto& entry = table[rank];
    const int truth = *dataset.at(entry.id).label;
    const double noise = config.noise(active[static_cast<std::size_t>(labeler)].accuracy, entry.entropy);
    const CorruptionOutcome outcome =
        corrupt_label(truth, noise, config.corruption, dataset.num_classes, streams.corruption);
    out.record.queries.push_back(
        {entry.id, labeler, entry.entropy, noise, outcome.corrupted, truth, outcome.observed_label});
    out.state.labeled[entry.id] = outcome.observed_label;
    out.state.unlabeled.erase(entry.id);
  }

  if (!pairs.empty()) out.model = fit(dataset, out.state.labeled, config.classifier);
  out.record.f1 = test_f1(dataset, out.state, out.model);
  return out;
}

ExperimentResult run_experiment(const Dataset& dataset, const ALConfig& config, PoolState initial,
                                ExperimentStreams& streams) {
  config.validate();
  const LabelerPanel panel = make_panel(config, streams.panel);
  ExperimentResult result;
  result.panel.assign(panel.labelers().begin(), panel.labelers().end());

  ClassifierModel model = fit(dataset, initial.labeled, config.classifier);
  result.initial_f1 = test_f1(dataset, initial, model);
  PoolState state = std::move(initial);
  for (int t = 0; t < config.cycles; ++t) {
    CycleOutcome step = run_cycle(dataset, state, model, config, panel, streams);
    state = std::move(step.state);
    model = std::move(step.model);
    result.cycles.push_back(std::move(step.record));
  }
  result.final_state = std::move(state);
  return result;
}

ExperimentResult run_experiment(const Dataset& dataset, const ALConfig& config) {
  config.validate();
  ExperimentStreams streams(config.seed);
  PoolState initial =
      initial_split(dataset, config.test_fraction, config.initial_fraction, streams.split);
  return run_experiment(dataset, config, std::move(initial), streams);
}

double upper_bound_f1(const Dataset& dataset, const ALConfig& config) {
  config.validate();
  ExperimentStreams streams(config.seed);
  PoolState state =
      initial_split(dataset, config.test_fraction, config.initial_fraction, streams.split);
  for (SampleId id : state.unlabeled) state.labeled[id] = *dataset.at(id).label;
  state.unlabeled.clear();
  const ClassifierModel model = fit(dataset, state.labeled, config.classifier);
  return test_f1(dataset, state, model);
}

}  // namespace olas
