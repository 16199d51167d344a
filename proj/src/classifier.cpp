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

#include "olas/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace olas {

namespace {

constexpr double kProbFloor = 1e-12;

// Row-wise softmax of scores, shifted by the row maximum.
Eigen::MatrixXd softmax_rows(Eigen::MatrixXd scores) {
  for (Eigen::Index r = 0; r < scores.rows(); ++r) {
    const double top = scores.row(r).maxCoeff();
    scores.row(r) = (scores.row(r).array() - top).exp().matrix();
    scores.row(r) /= scores.row(r).sum();
  }
  return scores;
}

}  // namespace

ClassifierModel::ClassifierModel(Eigen::MatrixXd weights, Eigen::VectorXd mean,
                                 Eigen::VectorXd scale, std::vector<double> loss_history)
    : weights_(std::move(weights)),
      mean_(std::move(mean)),
      scale_(std::move(scale)),
      loss_history_(std::move(loss_history)) {
  if (weights_.rows() < 2 || weights_.cols() < 2 || mean_.size() != weights_.cols() - 1 ||
      scale_.size() != mean_.size()) {
    throw std::invalid_argument("classifier parameter shapes are inconsistent");
  }
}

ClassifierModel ClassifierModel::zero(int num_classes, int feature_dim) {
  return ClassifierModel(Eigen::MatrixXd::Zero(num_classes, feature_dim + 1),
                         Eigen::VectorXd::Zero(feature_dim),
                         Eigen::VectorXd::Ones(feature_dim));
}

Eigen::MatrixXd ClassifierModel::design(const Eigen::MatrixXd& features) const {
  if (features.cols() != feature_dim()) {
    throw std::invalid_argument("feature dimension " + std::to_string(features.cols()) +
                                " does not match model dimension " +
                                std::to_string(feature_dim()));
  }
  Eigen::MatrixXd z(features.rows(), features.cols() + 1);
  z.leftCols(features.cols()) =
      ((features.rowwise() - mean_.transpose()).array().rowwise() /
       scale_.transpose().array())
          .matrix();
  z.col(features.cols()).setOnes();
  return z;
}

SoftmaxObjective::SoftmaxObjective(Eigen::MatrixXd design, std::vector<int> labels,
                                   int num_classes, double l2)
    : design_(std::move(design)), labels_(std::move(labels)), num_classes_(num_classes), l2_(l2) {
  if (static_cast<std::size_t>(design_.rows()) != labels_.size()) {
    throw std::invalid_argument("design rows and label count differ");
  }
}

Eigen::MatrixXd SoftmaxObjective::probabilities(const Eigen::MatrixXd& weights) const {
  return softmax_rows(design_ * weights.transpose());
}

double SoftmaxObjective::value(const Eigen::MatrixXd& weights) const {
  const Eigen::MatrixXd scores = design_ * weights.transpose();
  double nll = 0.0;
  for (Eigen::Index r = 0; r < scores.rows(); ++r) {
    const double top = scores.row(r).maxCoeff();
    const double log_norm = top + std::log((scores.row(r).array() - top).exp().sum());
    nll += log_norm - scores(r, labels_[static_cast<std::size_t>(r)]);
  }
  const auto body = weights.leftCols(weights.cols() - 1);
  return nll / static_cast<double>(scores.rows()) + 0.5 * l2_ * body.squaredNorm();
}

Eigen::MatrixXd SoftmaxObjective::gradient(const Eigen::MatrixXd& weights) const {
  Eigen::MatrixXd residual = probabilities(weights);
  for (std::size_t r = 0; r < labels_.size(); ++r) {
    residual(static_cast<Eigen::Index>(r), labels_[r]) -= 1.0;
  }
  Eigen::MatrixXd grad = residual.transpose() * design_ / static_cast<double>(design_.rows());
  grad.leftCols(grad.cols() - 1) += l2_ * weights.leftCols(weights.cols() - 1);
  return grad;
}

ClassifierModel fit(const Eigen::MatrixXd& features, std::span<const int> labels,
                    int num_classes, const ClassifierSettings& settings) {
  if (static_cast<std::size_t>(features.rows()) != labels.size() || labels.empty()) {
    throw std::invalid_argument("feature rows and labels must be non-empty and equal in number");
  }
  if (num_classes < 2) throw std::invalid_argument("need at least 2 classes");
  std::set<int> distinct;
  for (int y : labels) {
    if (y < 0 || y >= num_classes) throw std::invalid_argument("label out of range");
    distinct.insert(y);
  }
  if (distinct.size() < 2) {
    throw std::invalid_argument("training data must contain at least 2 distinct classes");
  }

  const Eigen::Index dim = features.cols();
  const double n = static_cast<double>(features.rows());
  Eigen::VectorXd mean = features.colwise().mean().transpose();
  Eigen::VectorXd scale(dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    const double var = (features.col(c).array() - mean(c)).square().sum() / n;
    scale(c) = var > 1e-24 ? std::sqrt(var) : 1.0;
  }

  ClassifierModel shape(Eigen::MatrixXd::Zero(num_classes, dim + 1), mean, scale);
  SoftmaxObjective objective(shape.design(features),
                             std::vector<int>(labels.begin(), labels.end()), num_classes,
                             settings.l2);

  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(num_classes, dim + 1);
  double loss = objective.value(w);
  std::vector<double> history{loss};
  history.reserve(static_cast<std::size_t>(settings.iterations) + 1);
  for (int it = 0; it < settings.iterations; ++it) {
    const Eigen::MatrixXd grad = objective.gradient(w);
    double step = settings.learning_rate;
    bool accepted = false;
    for (int halving = 0; halving < 40; ++halving, step *= 0.5) {
      Eigen::MatrixXd trial = w - step * grad;
      const double trial_loss = objective.value(trial);
      if (trial_loss <= loss) {
        w = std::move(trial);
        loss = trial_loss;
        accepted = true;
        break;
      }
    }
    if (!accepted) break;  // stationary to machine precision
    history.push_back(loss);
  }
  return ClassifierModel(std::move(w), std::move(mean), std::move(scale), std::move(history));
}

ClassifierModel fit(const Dataset& dataset, const std::map<SampleId, int>& labeled,
                    const ClassifierSettings& settings) {
  std::vector<SampleId> ids;
  std::vector<int> labels;
  ids.reserve(labeled.size());
  labels.reserve(labeled.size());
  for (const auto& [id, label] : labeled) {
    ids.push_back(id);
    labels.push_back(label);
  }
  return fit(feature_matrix(dataset, ids), labels, dataset.num_classes, settings);
}

ProbVector predict_proba(const ClassifierModel& model, std::span<const double> features) {
  Eigen::MatrixXd row(1, static_cast<Eigen::Index>(features.size()));
  for (std::size_t c = 0; c < features.size(); ++c) row(0, static_cast<Eigen::Index>(c)) = features[c];
  const Eigen::MatrixXd p = predict_proba(model, row);
  return ProbVector(p.data(), p.data() + p.size());
}

Eigen::MatrixXd predict_proba(const ClassifierModel& model, const Eigen::MatrixXd& features) {
  return softmax_rows(model.design(features) * model.weights().transpose());
}

std::vector<int> predict_labels(const ClassifierModel& model, const Eigen::MatrixXd& features) {
  const Eigen::MatrixXd p = predict_proba(model, features);
  std::vector<int> out(static_cast<std::size_t>(p.rows()));
  for (Eigen::Index r = 0; r < p.rows(); ++r) {
    Eigen::Index best = 0;
    for (Eigen::Index c = 1; c < p.cols(); ++c) {
      if (p(r, c) > p(r, best)) best = c;
    }
    out[static_cast<std::size_t>(r)] = static_cast<int>(best);
  }
  return out;
}

double raw_entropy(std::span<const double> p) {
  double h = 0.0;
  for (double pi : p) {
    if (pi <= 0.0) continue;
    h -= pi * std::log(std::clamp(pi, kProbFloor, 1.0));
  }
  return std::max(h, 0.0);
}

double normalized_entropy(std::span<const double> p, int num_classes) {
  if (num_classes < 2) throw std::invalid_argument("normalized entropy needs >= 2 classes");
  return std::clamp(raw_entropy(p) / std::log(static_cast<double>(num_classes)), 0.0, 1.0);
}

F1Averaging default_f1_averaging(int num_classes) {
  return num_classes == 2 ? F1Averaging::BinaryPositive : F1Averaging::Macro;
}

double f1_score(std::span<const int> predicted, std::span<const int> truth,
                F1Averaging averaging, int num_classes, int positive_class) {
  if (predicted.empty()) throw std::invalid_argument("f1_score: empty input");
  if (predicted.size() != truth.size()) {
    throw std::invalid_argument("f1_score: prediction and truth lengths differ");
  }
  auto class_f1 = [&](int k) {
    std::size_t tp = 0, fp = 0, fn = 0;
    for (std::size_t i = 0; i < predicted.size(); ++i) {
      const bool p = predicted[i] == k;
      const bool t = truth[i] == k;
      tp += p && t;
      fp += p && !t;
      fn += !p && t;
    }
    if (tp == 0) return 0.0;
    return 2.0 * static_cast<double>(tp) / static_cast<double>(2 * tp + fp + fn);
  };
  if (averaging == F1Averaging::BinaryPositive) return class_f1(positive_class);
  double sum = 0.0;
  for (int k = 0; k < num_classes; ++k) sum += class_f1(k);
  return sum / static_cast<double>(num_classes);
}

Eigen::MatrixXd feature_matrix(const Dataset& dataset, std::span<const SampleId> ids) {
  Eigen::MatrixXd x(static_cast<Eigen::Index>(ids.size()), dataset.feature_dim);
  for (std::size_t r = 0; r < ids.size(); ++r) {
    const auto& f = dataset.at(ids[r]).features;
    for (int c = 0; c < dataset.feature_dim; ++c) {
      x(static_cast<Eigen::Index>(r), c) = f[static_cast<std::size_t>(c)];
    }
  }
  return x;
}

}  // namespace olas
