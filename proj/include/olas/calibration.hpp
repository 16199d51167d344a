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

#ifndef OLAS_CALIBRATION_HPP_
#define OLAS_CALIBRATION_HPP_

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "olas/classifier.hpp"
#include "olas/domain.hpp"
#include "olas/engine.hpp"
#include "olas/noise.hpp"
#include "olas/rng.hpp"

namespace olas {

// One (sample, labeler) evaluation from a golden-labeled set.
struct GoldenRecord {
  double entropy;
  double accuracy;
  bool correct;
};

// Label a labeler returns for a golden sample.
using LabelOracle =
    std::function<int(const Sample& sample, std::size_t labeler, double entropy)>;

// Oracle that corrupts the true label with noise(a_labeler, entropy) under
// `rule`.  `rng` must outlive the oracle.
LabelOracle simulated_oracle(const LabelerPanel& panel, NoiseSpec noise, CorruptionRule rule,
                             int num_classes, Rng& rng);

// Oracle that looks up supplied labels: labels[labeler][sample id].
LabelOracle supplied_oracle(std::vector<std::vector<int>> labels);

// One record per (sample, labeler), sample-major.  Entropies come from
// `model`.  Throws DataError when a golden sample lacks its true label.
std::vector<GoldenRecord> build_golden_records(const Dataset& golden, const LabelerPanel& panel,
                                               const ClassifierModel& model,
                                               const LabelOracle& oracle);

// n records with entropy and accuracy uniform on [0,1] and correctness
// drawn as Bernoulli(1 - noise).
std::vector<GoldenRecord> synthetic_golden_records(std::size_t n, const NoiseSpec& noise, Rng& rng);

// Mean negative log-likelihood of "incorrect" under sigmoid(w0 + w_e e +
// w_a a), plus a small ridge on the two slopes.  Parameters are ordered
// (w0, w_e, w_a).
class NoiseLikelihood {
 public:
  explicit NoiseLikelihood(std::span<const GoldenRecord> records, double ridge = 1e-6);

  double value(const Eigen::Vector3d& w) const;
  Eigen::Vector3d gradient(const Eigen::Vector3d& w) const;
  Eigen::Matrix3d hessian(const Eigen::Vector3d& w) const;

 private:
  Eigen::MatrixXd design_;  // (n, 3): 1, e, a
  Eigen::VectorXd target_;  // 1 = incorrect
  double ridge_;
};

struct NoiseFit {
  LogisticCoefficients coefficients;
  double log_loss = 0.0;  // mean negative log-likelihood without the ridge
  int iterations = 0;
};

// Damped Newton on NoiseLikelihood from zero.  Throws std::invalid_argument
// when every record has the same outcome; that happens with threshold-mode
// data and calls for bernoulli-mode records instead.
NoiseFit fit_noise_logistic(std::span<const GoldenRecord> records);

struct BetaScore {
  double beta;
  double mean_f1;
};

struct BetaTuning {
  double best_beta = 0.0;
  std::vector<BetaScore> scores;  // grid order
};

inline constexpr double kGoldenHoldoutFraction = 0.3;
inline constexpr std::size_t kMinGoldenSize = 30;

// For each beta, runs OLAS on 70% of the golden set (seed-labeled part plus
// pool) and scores final-cycle F1 on the held-out 30%, averaged over
// `replications`.  Replication r uses the same split for every beta; the
// run streams are derived from (seed, beta index, r).  Ties go to the
// smaller beta.
BetaTuning tune_beta(const Dataset& golden, std::span<const double> grid,
                     const ALConfig& config_template, int replications, std::uint64_t seed);

struct CalibrationResult {
  LogisticCoefficients coefficients;
  double log_loss = 0.0;
  double beta_star = 0.0;
  std::vector<BetaScore> scores;
};

// Full pipeline on a golden set: fit the classifier on a seeded labeled
// subset, simulate every labeler of the configured panel on every golden
// sample with bernoulli corruption, fit the noise logistic, then tune beta
// with the fitted noise as the planner's model.
CalibrationResult calibrate(const Dataset& golden, std::span<const double> grid,
                            const ALConfig& config_template, int replications, std::uint64_t seed);

}  // namespace olas

#endif  // OLAS_CALIBRATION_HPP_
