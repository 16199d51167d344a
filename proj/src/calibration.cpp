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

#include "olas/calibration.hpp"

#include <cmath>
#include <stdexcept>

namespace olas {

namespace {

double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double ez = std::exp(z);
  return ez / (1.0 + ez);
}

// log(1 + exp(z)) without overflow.
double softplus(double z) { return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); }

}  // namespace

LabelOracle simulated_oracle(const LabelerPanel& panel, NoiseSpec noise, CorruptionRule rule,
                             int num_classes, Rng& rng) {
  std::vector<double> accuracies;
  for (const auto& l : panel.labelers()) accuracies.push_back(l.accuracy);
  return [accuracies = std::move(accuracies), noise, rule, num_classes, &rng](
             const Sample& sample, std::size_t labeler, double entropy) {
    const double eps = noise(accuracies.at(labeler), entropy);
    return corrupt_label(*sample.label, eps, rule, num_classes, rng).observed_label;
  };
}

LabelOracle supplied_oracle(std::vector<std::vector<int>> labels) {
  return [labels = std::move(labels)](const Sample& sample, std::size_t labeler, double) {
    return labels.at(labeler).at(static_cast<std::size_t>(sample.id));
  };
}

std::vector<GoldenRecord> build_golden_records(const Dataset& golden, const LabelerPanel& panel,
                                               const ClassifierModel& model,
                                               const LabelOracle& oracle) {
  if (!golden.fully_labeled()) throw DataError("golden set must carry true labels for every sample");
  std::vector<GoldenRecord> records;
  records.reserve(golden.size() * panel.size());
  for (const auto& sample : golden.samples) {
    const ProbVector p = predict_proba(model, sample.features);
    const double e = normalized_entropy(p, golden.num_classes);
    for (std::size_t i = 0; i < panel.size(); ++i) {
      const int observed = oracle(sample, i, e);
      records.push_back({e, panel[i].accuracy, observed == *sample.label});
    }
  }
  return records;
}

std::vector<GoldenRecord> synthetic_golden_records(std::size_t n, const NoiseSpec& noise, Rng& rng) {
  std::vector<GoldenRecord> records;
  records.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double e = rng.uniform();
    const double a = rng.uniform();
    records.push_back({e, a, !rng.bernoulli(noise(a, e))});
  }
  return records;
}

NoiseLikelihood::NoiseLikelihood(std::span<const GoldenRecord> records, double ridge)
    : design_(static_cast<Eigen::Index>(records.size()), 3),
      target_(static_cast<Eigen::Index>(records.size())),
      ridge_(ridge) {
  for (std::size_t k = 0; k < records.size(); ++k) {
    const auto r = static_cast<Eigen::Index>(k);
    design_.row(r) << 1.0, records[k].entropy, records[k].accuracy;
    target_(r) = records[k].correct ? 0.0 : 1.0;
  }
}

double NoiseLikelihood::value(const Eigen::Vector3d& w) const {
  const Eigen::VectorXd z = design_ * w;
  double nll = 0.0;
  for (Eigen::Index k = 0; k < z.size(); ++k) nll += softplus(z(k)) - target_(k) * z(k);
  return nll / static_cast<double>(z.size()) +
         0.5 * ridge_ * (w(1) * w(1) + w(2) * w(2));
}

Eigen::Vector3d NoiseLikelihood::gradient(const Eigen::Vector3d& w) const {
  Eigen::VectorXd residual = design_ * w;
  for (Eigen::Index k = 0; k < residual.size(); ++k) residual(k) = sigmoid(residual(k)) - target_(k);
  Eigen::Vector3d g = design_.transpose() * residual / static_cast<double>(residual.size());
  g(1) += ridge_ * w(1);
  g(2) += ridge_ * w(2);
  return g;
}

Eigen::Matrix3d NoiseLikelihood::hessian(const Eigen::Vector3d& w) const {
  const Eigen::VectorXd z = design_ * w;
  Eigen::VectorXd weight(z.size());
  for (Eigen::Index k = 0; k < z.size(); ++k) {
    const double p = sigmoid(z(k));
    weight(k) = p * (1.0 - p);
  }
  Eigen::Matrix3d h = design_.transpose() * weight.asDiagonal() * design_ / static_cast<double>(z.size());
  h(1, 1) += ridge_;
  h(2, 2) += ridge_;
  return h;
}

NoiseFit fit_noise_logistic(std::span<const GoldenRecord> records) {
  std::size_t incorrect = 0;
  for (const auto& r : records) incorrect += !r.correct;
  if (records.empty() || incorrect == 0 || incorrect == records.size()) {
    throw std::invalid_argument(
        "noise fit needs both correct and incorrect records; threshold-mode corruption "
        "yields a step function, simulate golden labels in bernoulli mode");
  }
  const NoiseLikelihood likelihood(records);
  Eigen::Vector3d w = Eigen::Vector3d::Zero();
  double loss = likelihood.value(w);
  NoiseFit fit;
  for (int it = 0; it < 100; ++it) {
    const Eigen::Vector3d g = likelihood.gradient(w);
    if (g.cwiseAbs().maxCoeff() < 1e-13) break;
    const Eigen::Vector3d step = likelihood.hessian(w).ldlt().solve(g);
    double scale = 1.0;
    bool improved = false;
    for (int halving = 0; halving < 40; ++halving, scale *= 0.5) {
      const Eigen::Vector3d trial = w - scale * step;
      const double trial_loss = likelihood.value(trial);
      // Slack for rounding: near the optimum a full Newton step can show
      // a loss change below the last bit.
      if (trial_loss <= loss + 1e-15 * std::abs(loss)) {
        w = trial;
        loss = trial_loss;
        improved = true;
        break;
      }
    }
    fit.iterations = it + 1;
    if (!improved || (scale * step).cwiseAbs().maxCoeff() < 1e-12) break;
  }
  fit.coefficients = {w(0), w(1), w(2)};
  fit.log_loss = NoiseLikelihood(records, 0.0).value(w);
  return fit;
}

BetaTuning tune_beta(const Dataset& golden, std::span<const double> grid,
                     const ALConfig& config_template, int replications, std::uint64_t seed) {
  if (grid.empty()) throw std::invalid_argument("beta grid is empty");
  if (golden.size() < kMinGoldenSize) {
    throw DataError("golden set needs at least " + std::to_string(kMinGoldenSize) + " samples");
  }
  if (replications < 1) throw std::invalid_argument("replications must be >= 1");
  for (double b : grid) {
    if (!(b >= 0.0 && b <= 1.0)) throw std::invalid_argument("beta grid values must lie in [0,1]");
  }

  std::vector<PoolState> splits;
  for (int r = 0; r < replications; ++r) {
    Rng split_rng(derive_seed(seed, 0, static_cast<std::uint64_t>(r)));
    splits.push_back(initial_split(golden, kGoldenHoldoutFraction, config_template.initial_fraction,
                                   split_rng));
  }

  BetaTuning out;
  for (std::size_t b = 0; b < grid.size(); ++b) {
    ALConfig config = config_template;
    config.strategy = Strategy::Olas;
    config.beta = grid[b];
    double total = 0.0;
    for (int r = 0; r < replications; ++r) {
      ExperimentStreams streams(derive_seed(seed, b + 1, static_cast<std::uint64_t>(r)));
      const ExperimentResult run = run_experiment(golden, config, splits[static_cast<std::size_t>(r)], streams);
      total += run.cycles.empty() ? run.initial_f1 : run.cycles.back().f1;
    }
    out.scores.push_back({grid[b], total / replications});
  }
  const BetaScore* best = &out.scores.front();
  for (const auto& s : out.scores) {
    if (s.mean_f1 > best->mean_f1 || (s.mean_f1 == best->mean_f1 && s.beta < best->beta)) best = &s;
  }
  out.best_beta = best->beta;
  return out;
}

CalibrationResult calibrate(const Dataset& golden, std::span<const double> grid,
                            const ALConfig& config_template, int replications, std::uint64_t seed) {
  config_template.validate();
  if (golden.size() < kMinGoldenSize) {
    throw DataError("golden set needs at least " + std::to_string(kMinGoldenSize) + " samples");
  }
  Rng rng(derive_seed(seed, 0xca1));
  const PoolState seed_split =
      initial_split(golden, kGoldenHoldoutFraction, config_template.initial_fraction, rng);
  const ClassifierModel model = fit(golden, seed_split.labeled, config_template.classifier);
  const LabelerPanel panel = make_panel(config_template, rng);

  const CorruptionRule bernoulli{CorruptionMode::Bernoulli, config_template.corruption.alpha};
  const LabelOracle oracle =
      simulated_oracle(panel, config_template.noise, bernoulli, golden.num_classes, rng);
  const std::vector<GoldenRecord> records = build_golden_records(golden, panel, model, oracle);
  const NoiseFit noise_fit = fit_noise_logistic(records);

  ALConfig tuned = config_template;
  tuned.planning_noise = NoiseSpec::estimated(noise_fit.coefficients);
  const BetaTuning tuning = tune_beta(golden, grid, tuned, replications, seed);
  return {noise_fit.coefficients, noise_fit.log_loss, tuning.best_beta, tuning.scores};
}

}  // namespace olas
