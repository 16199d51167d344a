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
#include <vector>

#include "doctest.h"
#include "olas/calibration.hpp"
#include "olas/dataset_io.hpp"
#include "olas/rng.hpp"

using namespace olas;

namespace {

// Gradient of `f` by central differences.
template <typename F>
Eigen::Vector3d numeric_gradient(F f, Eigen::Vector3d w, double h) {
  Eigen::Vector3d g;
  for (int i = 0; i < 3; ++i) {
    const double saved = w[i];
    w[i] = saved + h;
    const double up = f(w);
    w[i] = saved - h;
    const double down = f(w);
    w[i] = saved;
    g[i] = (up - down) / (2 * h);
  }
  return g;
}

ClassifierModel model_for(const Dataset& d, int labeled_per_class) {
  std::map<SampleId, int> labeled;
  std::vector<int> taken(d.num_classes, 0);
  for (const auto& s : d.samples) {
    if (taken[*s.label]++ < labeled_per_class) labeled[s.id] = *s.label;
  }
  return fit(d, labeled, {100, 0.1, 1e-3});
}

}  // namespace

TEST_CASE("golden records are one per sample and labeler") {
  const Dataset d = synth_dataset({2, 5, 2, 1.0, 1});
  const LabelerPanel panel = validate_panel(std::vector<LabelerProfile>{{0.9, 1}, {0.7, 1}, {0.5, 1}});
  Rng rng(2);
  const auto records = build_golden_records(d, panel, model_for(d, 3),
                                            simulated_oracle(panel, NoiseSpec::model1(),
                                                             {CorruptionMode::Bernoulli, 0.2}, 2, rng));
  CHECK(records.size() == 30);
  CHECK(records[0].accuracy == 0.9);
  CHECK(records[1].accuracy == 0.7);
  CHECK(records[0].entropy == records[2].entropy);
}

TEST_CASE("a perfect labeler is always right") {
  const Dataset d = synth_dataset({3, 40, 2, 1.0, 2});
  const LabelerPanel panel = validate_panel(std::vector<LabelerProfile>{{1.0, 1}, {0.2, 1}});
  Rng rng(3);
  for (const NoiseSpec& noise : {NoiseSpec::model1(), NoiseSpec::model2()}) {
    const auto records = build_golden_records(
        d, panel, model_for(d, 5),
        simulated_oracle(panel, noise, {CorruptionMode::Bernoulli, 0.2}, 3, rng));
    for (std::size_t k = 0; k < records.size(); k += 2) CHECK(records[k].correct);
  }
}

TEST_CASE("supplied labels and missing truth") {
  Dataset d = synth_dataset({2, 3, 1, 1.0, 4});
  const LabelerPanel panel = validate_panel(std::vector<LabelerProfile>{{0.9, 1}});
  std::vector<int> answers;
  for (const auto& s : d.samples) answers.push_back(1 - *s.label);
  const auto records = build_golden_records(d, panel, ClassifierModel::zero(2, 1),
                                            supplied_oracle({answers}));
  for (const auto& r : records) {
    CHECK_FALSE(r.correct);
    CHECK(r.entropy == doctest::Approx(1.0));
  }
  d.samples[0].label.reset();
  CHECK_THROWS_AS(build_golden_records(d, panel, ClassifierModel::zero(2, 1), supplied_oracle({answers})),
                  DataError);
}

TEST_CASE("simulated error rates match the first noise model per bucket (binomial oracle)") {
  // Points on a line, label = sign; a classifier fit on a few of them
  // yields entropies across the whole unit interval.
  Dataset d;
  d.num_classes = 2;
  d.feature_dim = 1;
  for (int i = 0; i < 3000; ++i) {
    const double x = -4.0 + 8.0 * i / 2999.0;
    d.samples.push_back({i, {x}, x > 0 ? 1 : 0});
  }
  const std::vector<double> acc{0.2, 0.5, 0.8};
  const LabelerPanel panel = validate_panel(std::vector<LabelerProfile>{{acc[0], 1}, {acc[1], 1}, {acc[2], 1}});
  Rng rng(6);
  const auto records = build_golden_records(
      d, panel, model_for(d, 10),
      simulated_oracle(panel, NoiseSpec::model1(), {CorruptionMode::Bernoulli, 0.2}, 2, rng));
  // Buckets: 4 entropy bands x 3 accuracies.
  const int bands = 4;
  std::vector<double> n(bands * 3, 0), wrong(bands * 3, 0), expected(bands * 3, 0);
  for (const auto& r : records) {
    const int band = std::min(bands - 1, static_cast<int>(r.entropy * bands));
    int li = 0;
    while (acc[li] != r.accuracy) ++li;
    const int k = band * 3 + li;
    n[k] += 1;
    wrong[k] += !r.correct;
    expected[k] += r.entropy * (1 - r.accuracy);
  }
  int checked = 0;
  for (int k = 0; k < bands * 3; ++k) {
    if (n[k] < 50) continue;
    const double p = expected[k] / n[k];
    const double sigma = std::sqrt(std::max(p * (1 - p), 1e-6) / n[k]);
    CHECK(std::abs(wrong[k] / n[k] - p) <= 3 * sigma);
    ++checked;
  }
  CHECK(checked >= 6);
}

TEST_CASE("noise likelihood derivatives match finite differences") {
  Rng rng(7);
  const auto records = synthetic_golden_records(500, NoiseSpec::model2(), rng);
  const NoiseLikelihood f(records);
  for (int k = 0; k < 10; ++k) {
    const Eigen::Vector3d w(rng.normal(), 2 * rng.normal(), 2 * rng.normal());
    const auto value = [&](const Eigen::Vector3d& v) { return f.value(v); };
    CHECK((f.gradient(w) - numeric_gradient(value, w, 1e-5)).cwiseAbs().maxCoeff() <= 1e-6);
    Eigen::Matrix3d numeric_hessian;
    for (int i = 0; i < 3; ++i) {
      const auto component = [&](const Eigen::Vector3d& v) { return f.gradient(v)[i]; };
      numeric_hessian.row(i) = numeric_gradient(component, w, 1e-5).transpose();
    }
    CHECK((f.hessian(w) - numeric_hessian).cwiseAbs().maxCoeff() <= 1e-6);
  }
}

TEST_CASE("fitted coefficients follow the generator's monotonicity") {
  Rng rng(8);
  for (const NoiseSpec& noise : {NoiseSpec::model1(), NoiseSpec::model2()}) {
    const auto records = synthetic_golden_records(5000, noise, rng);
    const NoiseFit fitted = fit_noise_logistic(records);
    CHECK(fitted.coefficients.entropy > 0.0);
    CHECK(fitted.coefficients.accuracy < 0.0);
    CHECK(std::isfinite(fitted.log_loss));
  }
}

TEST_CASE("independent outcomes give near-zero slopes") {
  // A slope fitted to 5000 fair-coin outcomes has a standard error near
  // 0.1, so the 0.1 bound is applied to the mean magnitude over 20 seeded
  // sets, and each set must fall within 4 standard errors of zero.
  const int sets = 20;
  double sum_e = 0, sum_a = 0;
  for (int k = 0; k < sets; ++k) {
    Rng rng(derive_seed(9, k));
    std::vector<GoldenRecord> records(5000);
    for (auto& r : records) r = {rng.uniform(), rng.uniform(), rng.bernoulli(0.5)};
    const NoiseFit fitted = fit_noise_logistic(records);
    const NoiseLikelihood f(records);
    const Eigen::Vector3d w(fitted.coefficients.intercept, fitted.coefficients.entropy,
                            fitted.coefficients.accuracy);
    const Eigen::Matrix3d cov = (f.hessian(w) * static_cast<double>(records.size())).inverse();
    CHECK(std::abs(w[1]) <= 4 * std::sqrt(cov(1, 1)));
    CHECK(std::abs(w[2]) <= 4 * std::sqrt(cov(2, 2)));
    sum_e += std::abs(w[1]);
    sum_a += std::abs(w[2]);
  }
  CHECK(sum_e / sets <= 0.1);
  CHECK(sum_a / sets <= 0.1);
}

TEST_CASE("duplicating the records leaves the fit unchanged") {
  Rng rng(10);
  const auto records = synthetic_golden_records(1000, NoiseSpec::model1(), rng);
  std::vector<GoldenRecord> doubled = records;
  doubled.insert(doubled.end(), records.begin(), records.end());
  const NoiseFit a = fit_noise_logistic(records);
  const NoiseFit b = fit_noise_logistic(doubled);
  CHECK(a.coefficients.intercept == doctest::Approx(b.coefficients.intercept).epsilon(1e-9));
  CHECK(a.coefficients.entropy == doctest::Approx(b.coefficients.entropy).epsilon(1e-9));
  CHECK(a.coefficients.accuracy == doctest::Approx(b.coefficients.accuracy).epsilon(1e-9));
}

TEST_CASE("constant outcomes cannot be fit") {
  std::vector<GoldenRecord> records{{0.1, 0.5, true}, {0.9, 0.2, true}, {0.5, 0.5, true}};
  CHECK_THROWS_AS(fit_noise_logistic(records), std::invalid_argument);
  CHECK_THROWS_AS(fit_noise_logistic(std::vector<GoldenRecord>{}), std::invalid_argument);
}

TEST_CASE("beta tuning") {
  const Dataset golden = synth_dataset({2, 60, 3, 1.5, 11});
  ALConfig config;
  config.cycles = 3;
  config.num_labelers = 3;
  config.capacity = 3;
  config.accuracies = {0.95, 0.9, 0.85};
  config.classifier.iterations = 100;
  config.initial_fraction = 0.05;

  SUBCASE("a single candidate is chosen") {
    const std::vector<double> grid{0.2};
    CHECK(tune_beta(golden, grid, config, 2, 1).best_beta == 0.2);
  }
  SUBCASE("beta zero adds no data and loses to beta one") {
    const std::vector<double> grid{0.0, 1.0};
    const BetaTuning t = tune_beta(golden, grid, config, 3, 2);
    CHECK(t.best_beta == 1.0);
    REQUIRE(t.scores.size() == 2);
    CHECK(t.scores[1].mean_f1 > t.scores[0].mean_f1);
  }
  SUBCASE("same seed, same table") {
    const std::vector<double> grid{0.05, 0.15, 0.3};
    const BetaTuning a = tune_beta(golden, grid, config, 2, 3);
    const BetaTuning b = tune_beta(golden, grid, config, 2, 3);
    REQUIRE(a.scores.size() == b.scores.size());
    for (std::size_t i = 0; i < a.scores.size(); ++i) CHECK(a.scores[i].mean_f1 == b.scores[i].mean_f1);
    CHECK(a.best_beta == b.best_beta);
  }
  SUBCASE("small golden sets are rejected") {
    const Dataset tiny = synth_dataset({2, 10, 2, 1.0, 1});
    const std::vector<double> grid{0.1};
    CHECK_THROWS_AS(tune_beta(tiny, grid, config, 1, 1), DataError);
  }
}

TEST_CASE("calibration pipeline") {
  const Dataset golden = synth_dataset({2, 80, 3, 1.5, 12});
  ALConfig config;
  config.cycles = 2;
  config.classifier.iterations = 100;
  const std::vector<double> grid{0.1, 0.3};
  const CalibrationResult r = calibrate(golden, grid, config, 2, 5);
  CHECK(r.scores.size() == 2);
  CHECK((r.beta_star == 0.1 || r.beta_star == 0.3));
  CHECK(std::isfinite(r.coefficients.entropy));
  const CalibrationResult again = calibrate(golden, grid, config, 2, 5);
  CHECK(again.coefficients.entropy == r.coefficients.entropy);
  CHECK(again.beta_star == r.beta_star);
}
