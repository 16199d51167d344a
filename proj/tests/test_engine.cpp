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


#include <cmath>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "olas/dataset_io.hpp"
#include "olas/engine.hpp"
#include "olas/rng.hpp"

using namespace olas;

namespace {

Dataset blobs(std::uint64_t seed, int per_class = 50, double spread = 1.5) {
  return synth_dataset({2, per_class, 3, spread, seed});
}

ALConfig small_config(Strategy s) {
  ALConfig c;
  c.strategy = s;
  c.cycles = 4;
  c.budget = 6;
  c.num_labelers = 3;
  c.capacity = 3;
  c.classifier.iterations = 100;
  c.seed = 12;
  return c;
}

}  // namespace

TEST_CASE("strategy names round-trip") {
  for (Strategy s : kAllStrategies) CHECK(parse_strategy(to_string(s)) == s);
  CHECK(parse_strategy("es-ola") == Strategy::EsOla);
  CHECK(parse_strategy("rs_rla") == Strategy::RsRla);
  CHECK(parse_strategy("olas") == Strategy::Olas);
  CHECK_THROWS_AS(parse_strategy("best"), ConfigError);
}

TEST_CASE("config validation") {
  ALConfig c;
  CHECK_NOTHROW(c.validate());
  ALConfig bad = c;
  bad.test_fraction = 0.6;
  bad.initial_fraction = 0.4;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = c;
  bad.budget = 16;  // 5 labelers x 3
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = c;
  bad.beta = 1.5;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = c;
  bad.accuracies = {0.9, 1.1};
  CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("initial split sizes and determinism") {
  const Dataset d = blobs(1);
  Rng a(5), b(5);
  const PoolState s = initial_split(d, 0.2, 0.16, a);
  CHECK(s.test.size() == 20);
  CHECK(s.labeled.size() == 16);
  CHECK(s.unlabeled.size() == 64);
  CHECK(s.disjoint());
  for (const auto& [id, label] : s.labeled) CHECK(label == *d.at(id).label);
  const PoolState t = initial_split(d, 0.2, 0.16, b);
  CHECK(s.labeled == t.labeled);
  CHECK(s.test == t.test);
  // Stratified test partition: 10 per class.
  int ones = 0;
  for (SampleId id : s.test) ones += *d.at(id).label;
  CHECK(ones == 10);
  Rng c(1);
  CHECK_THROWS(initial_split(d, 0.6, 0.4, c));
}

TEST_CASE("labeler accuracies") {
  Rng rng(3);
  const auto acc = sample_labeler_accuracies(10000, 0.5, 0.95, rng);
  for (double a : acc) {
    CHECK(a >= 0.5);
    CHECK(a <= 0.95);
  }
  const double mean = std::accumulate(acc.begin(), acc.end(), 0.0) / acc.size();
  CHECK(std::abs(mean - 0.725) <= 0.005);
  Rng x(4), y(4);
  CHECK(sample_labeler_accuracies(5, 0.5, 0.95, x) == sample_labeler_accuracies(5, 0.5, 0.95, y));
}

TEST_CASE("cycle bookkeeping for every strategy") {
  const Dataset d = blobs(2);
  for (Strategy s : kAllStrategies) {
    CAPTURE(to_string(s));
    const ALConfig config = small_config(s);
    ExperimentStreams streams(config.seed);
    const LabelerPanel panel = make_panel(config, streams.panel);
    PoolState state = initial_split(d, config.test_fraction, config.initial_fraction, streams.split);
    ClassifierModel model = fit(d, state.labeled, config.classifier);
    for (int t = 0; t < config.cycles; ++t) {
      const std::size_t before = state.labeled.size();
      const std::size_t pool = state.unlabeled.size();
      CycleOutcome out = run_cycle(d, state, model, config, panel, streams);
      const std::size_t q = out.record.queries.size();
      CHECK(q <= 6);
      CHECK(out.state.labeled.size() == before + q);
      CHECK(out.state.unlabeled.size() == pool - q);
      CHECK(out.state.test == state.test);
      CHECK(out.state.disjoint());
      std::vector<int> loads(panel.size(), 0);
      for (const auto& rec : out.record.queries) {
        ++loads[rec.labeler];
        CHECK(out.state.labeled.at(rec.id) == rec.observed_label);
        CHECK(rec.true_label == *d.at(rec.id).label);
        CHECK(rec.corrupted == (rec.observed_label != rec.true_label));
      }
      for (std::size_t i = 0; i < panel.size(); ++i) CHECK(loads[i] <= panel[i].capacity);
      state = out.state;
      model = out.model;
    }
  }
}

TEST_CASE("threshold corruption flags follow the rule") {
  const Dataset d = blobs(3);
  ALConfig config = small_config(Strategy::EsRla);
  const ExperimentResult r = run_experiment(d, config);
  for (const auto& cycle : r.cycles) {
    for (const auto& q : cycle.queries) {
      CHECK(q.corrupted == (q.noise >= config.corruption.alpha));
    }
  }
}

TEST_CASE("perfect labelers never corrupt") {
  const Dataset d = blobs(4);
  for (Strategy s : kAllStrategies) {
    ALConfig config = small_config(s);
    config.accuracies = {1.0, 1.0, 1.0};
    config.noise = NoiseSpec::model2();
    const ExperimentResult r = run_experiment(d, config);
    for (const auto& cycle : r.cycles) {
      for (const auto& q : cycle.queries) CHECK_FALSE(q.corrupted);
    }
  }
}

TEST_CASE("unreachable beta leaves the pools untouched") {
  const Dataset d = blobs(5);
  ALConfig config = small_config(Strategy::Olas);
  config.beta = 0.0;
  config.accuracies = {0.8, 0.7, 0.6};
  ExperimentStreams streams(config.seed);
  const LabelerPanel panel = make_panel(config, streams.panel);
  const PoolState state =
      initial_split(d, config.test_fraction, config.initial_fraction, streams.split);
  const ClassifierModel model = fit(d, state.labeled, config.classifier);
  const CycleOutcome out = run_cycle(d, state, model, config, panel, streams);
  CHECK(out.record.queries.empty());
  CHECK(out.state.labeled == state.labeled);
  CHECK(out.state.unlabeled == state.unlabeled);
  CHECK(out.model.weights() == model.weights());
  CHECK(out.record.f1 == test_f1(d, state, model));
}

TEST_CASE("query totals are bounded by T x B") {
  const Dataset d = blobs(6, 150);
  ALConfig config = small_config(Strategy::RsRla);
  config.cycles = 10;
  config.num_labelers = 5;
  config.budget = 15;
  const ExperimentResult r = run_experiment(d, config);
  std::size_t total = 0;
  for (const auto& c : r.cycles) total += c.queries.size();
  CHECK(total == 150);
  CHECK(r.cycles.size() == 10);
}

TEST_CASE("experiments are deterministic in the seed") {
  const Dataset d = blobs(7);
  for (Strategy s : kAllStrategies) {
    const ALConfig config = small_config(s);
    const ExperimentResult a = run_experiment(d, config);
    const ExperimentResult b = run_experiment(d, config);
    CHECK(a.cycles == b.cycles);
    CHECK(a.initial_f1 == b.initial_f1);
  }
}

TEST_CASE("one cycle equals run_cycle after the split") {
  const Dataset d = blobs(8);
  ALConfig config = small_config(Strategy::Olas);
  config.cycles = 1;
  const ExperimentResult r = run_experiment(d, config);

  ExperimentStreams streams(config.seed);
  const PoolState state =
      initial_split(d, config.test_fraction, config.initial_fraction, streams.split);
  const LabelerPanel panel = make_panel(config, streams.panel);
  const ClassifierModel model = fit(d, state.labeled, config.classifier);
  const CycleOutcome out = run_cycle(d, state, model, config, panel, streams);
  REQUIRE(r.cycles.size() == 1);
  CHECK(r.cycles[0].queries == out.record.queries);
  CHECK(r.cycles[0].f1 == out.record.f1);
}

TEST_CASE("OLAS with beta one matches ES+OLA step for step") {
  const Dataset d = blobs(9, 60);
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    ALConfig olas = small_config(Strategy::Olas);
    olas.beta = 1.0;
    olas.seed = seed;
    ALConfig es = olas;
    es.strategy = Strategy::EsOla;
    const ExperimentResult a = run_experiment(d, olas);
    const ExperimentResult b = run_experiment(d, es);
    CHECK(a.cycles == b.cycles);
  }
}

TEST_CASE("upper bound") {
  const Dataset separable = synth_dataset({2, 50, 2, 1e-3, 3});
  ALConfig config;
  CHECK(upper_bound_f1(separable, config) == 1.0);
  const Dataset d = blobs(10);
  CHECK(upper_bound_f1(d, config) == upper_bound_f1(d, config));
}

TEST_CASE("a separate planning model steers selection only") {
  const Dataset d = blobs(11);
  ALConfig config = small_config(Strategy::Olas);
  config.noise = NoiseSpec::model1();
  config.planning_noise = NoiseSpec::model2();
  const ExperimentResult r = run_experiment(d, config);
  const ExperimentResult again = run_experiment(d, config);
  CHECK(r.cycles == again.cycles);
  // Recorded noise is always the simulation model's.
  for (const auto& cycle : r.cycles) {
    for (const auto& q : cycle.queries) {
      CHECK(q.noise == noise_model1(r.panel[q.labeler].accuracy, q.entropy));
    }
  }
}
