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

#ifndef OLAS_CLASSIFIER_HPP_
#define OLAS_CLASSIFIER_HPP_

#include <Eigen/Dense>

#include <map>
#include <span>
#include <vector>

#include "olas/domain.hpp"

namespace olas {

struct ClassifierSettings {
  int iterations = 500;
  double learning_rate = 0.1;
  double l2 = 1e-3;

  bool operator==(const ClassifierSettings&) const = default;
};

using ProbVector = std::vector<double>;

// L2-regularized multinomial logistic regression over standardized
// features.  Immutable after fit; safe to share across threads.
class ClassifierModel {
 public:
  ClassifierModel(Eigen::MatrixXd weights, Eigen::VectorXd mean, Eigen::VectorXd scale,
                  std::vector<double> loss_history = {});

  // Zero weights, identity standardization.
  static ClassifierModel zero(int num_classes, int feature_dim);

  int num_classes() const { return static_cast<int>(weights_.rows()); }
  int feature_dim() const { return static_cast<int>(weights_.cols()) - 1; }

  // (num_classes, feature_dim + 1); the last column holds the intercepts.
  const Eigen::MatrixXd& weights() const { return weights_; }
  const Eigen::VectorXd& feature_mean() const { return mean_; }
  const Eigen::VectorXd& feature_scale() const { return scale_; }
  // Training objective before the first step and after every accepted step.
  const std::vector<double>& loss_history() const { return loss_history_; }

  // Rows of `features` (n, feature_dim) mapped to the augmented design
  // (n, feature_dim + 1) used by the objective.
  Eigen::MatrixXd design(const Eigen::MatrixXd& features) const;

 private:
  Eigen::MatrixXd weights_;
  Eigen::VectorXd mean_;
  Eigen::VectorXd scale_;
  std::vector<double> loss_history_;
};

// Mean negative log-likelihood plus (l2/2)||W||^2 over the non-intercept
// columns.
class SoftmaxObjective {
 public:
  SoftmaxObjective(Eigen::MatrixXd design, std::vector<int> labels, int num_classes,
                   double l2);

  double value(const Eigen::MatrixXd& weights) const;
  Eigen::MatrixXd gradient(const Eigen::MatrixXd& weights) const;

 private:
  Eigen::MatrixXd probabilities(const Eigen::MatrixXd& weights) const;

  Eigen::MatrixXd design_;
  std::vector<int> labels_;
  int num_classes_;
  double l2_;
};

// Full-batch gradient descent from zero weights.  A step that would raise
// the objective is halved until it does not, so the loss history is
// non-increasing.  Deterministic in its inputs.
//
// Throws std::invalid_argument on shape mismatches or when fewer than two
// distinct classes are present.
ClassifierModel fit(const Eigen::MatrixXd& features, std::span<const int> labels,
                    int num_classes, const ClassifierSettings& settings = {});

// Fits on the observed labels of `labeled` (id -> label).
ClassifierModel fit(const Dataset& dataset, const std::map<SampleId, int>& labeled,
                    const ClassifierSettings& settings = {});

ProbVector predict_proba(const ClassifierModel& model, std::span<const double> features);

// One row of probabilities per row of `features`.
Eigen::MatrixXd predict_proba(const ClassifierModel& model, const Eigen::MatrixXd& features);

// Arg-max class per row, lowest class index on ties.
std::vector<int> predict_labels(const ClassifierModel& model, const Eigen::MatrixXd& features);

// -sum p ln p with 0 ln 0 = 0.
double raw_entropy(std::span<const double> p);

// raw_entropy / ln(num_classes), in [0,1].
double normalized_entropy(std::span<const double> p, int num_classes);

enum class F1Averaging { BinaryPositive, Macro };

// Binary-positive for two classes, macro otherwise.
F1Averaging default_f1_averaging(int num_classes);

// Macro averages over all `num_classes` classes; a class with no true,
// predicted, or missed instances scores 0.  Throws on empty or mismatched
// input.
double f1_score(std::span<const int> predicted, std::span<const int> truth,
                F1Averaging averaging, int num_classes, int positive_class = 1);

// Features of the given samples stacked as rows.
Eigen::MatrixXd feature_matrix(const Dataset& dataset, std::span<const SampleId> ids);

}  // namespace olas

#endif  // OLAS_CLASSIFIER_HPP_
