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

#include "olas/noise.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace olas {

namespace {

void check_domain(double accuracy, double entropy) {
  if (!(accuracy >= 0.0 && accuracy <= 1.0) || !(entropy >= 0.0 && entropy <= 1.0)) {
    throw std::invalid_argument("noise function arguments must lie in [0,1]");
  }
}

// (1 - base^p)^(1/p) for base in (0,1), p > 0, via log1p.
double inverse_power_mean(double base, double p) {
  return std::exp(std::log1p(-std::exp(p * std::log(base))) / p);
}

}  // namespace

double noise_model1(double accuracy, double entropy) {
  check_domain(accuracy, entropy);
  return entropy * (1.0 - accuracy);
}

namespace detail {

double model2_low_branch(double accuracy, double entropy) {
  if (accuracy >= 1.0) return 0.0;
  if (accuracy <= 0.0) return 1.0;
  return inverse_power_mean(accuracy, 2.0 * entropy);
}

double model2_high_branch(double accuracy, double entropy) {
  if (accuracy >= 1.0) return 0.0;
  if (accuracy <= 0.0) return 1.0;
  return 1.0 - inverse_power_mean(1.0 - accuracy, 2.0 * (1.0 - entropy));
}

}  // namespace detail

double noise_model2(double accuracy, double entropy) {
  check_domain(accuracy, entropy);
  if (accuracy == 1.0) return 0.0;
  if (entropy == 0.0) return 0.0;
  if (entropy == 1.0) return 1.0;
  if (accuracy == 0.0) return 1.0;
  return entropy <= 0.5 ? detail::model2_low_branch(accuracy, entropy)
                        : detail::model2_high_branch(accuracy, entropy);
}

double estimated_noise(const LogisticCoefficients& c, double accuracy, double entropy) {
  const double logit = c.intercept + c.entropy * entropy + c.accuracy * accuracy;
  if (logit >= 0.0) return 1.0 / (1.0 + std::exp(-logit));
  const double ez = std::exp(logit);
  return ez / (1.0 + ez);
}

std::string to_string(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::Model1: return "model1";
    case NoiseKind::Model2: return "model2";
    case NoiseKind::Estimated: return "estimated";
  }
  return "unknown";
}

NoiseKind parse_noise_kind(const std::string& name) {
  if (name == "model1") return NoiseKind::Model1;
  if (name == "model2") return NoiseKind::Model2;
  if (name == "estimated") return NoiseKind::Estimated;
  throw std::invalid_argument("unknown noise model '" + name + "'");
}

double NoiseSpec::operator()(double accuracy, double entropy) const {
  switch (kind) {
    case NoiseKind::Model1: return noise_model1(accuracy, entropy);
    case NoiseKind::Model2: return noise_model2(accuracy, entropy);
    case NoiseKind::Estimated: return estimated_noise(coefficients, accuracy, entropy);
  }
  throw std::logic_error("unhandled noise kind");
}

NoiseValidationReport validate_noise_function(const NoiseFunction& f, double step,
                                              std::size_t max_reported) {
  if (!(step > 0.0 && step <= 1.0)) throw std::invalid_argument("grid step must lie in (0,1]");
  constexpr double kTol = 1e-9;
  const auto points = static_cast<int>(std::llround(1.0 / step));
  auto grid = [&](int k) { return k >= points ? 1.0 : k * step; };

  NoiseValidationReport report;
  auto flag = [&](const char* what, double a, double e, double v) {
    report.is_valid = false;
    if (report.violations.size() < max_reported) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "%s at a=%.4f e=%.4f (value %.12g)", what, a, e, v);
      report.violations.emplace_back(buf);
    }
  };

  std::vector<double> previous_row(static_cast<std::size_t>(points) + 1);
  for (int ia = 0; ia <= points; ++ia) {
    const double a = grid(ia);
    double previous_in_e = 0.0;
    for (int ie = 0; ie <= points; ++ie) {
      const double e = grid(ie);
      const double v = f(a, e);
      if (!(v >= -kTol && v <= 1.0 + kTol)) flag("value outside [0,1]", a, e, v);
      if (ie > 0 && v < previous_in_e - kTol) flag("decreasing in entropy", a, e, v);
      if (ia > 0 && v > previous_row[static_cast<std::size_t>(ie)] + kTol) {
        flag("increasing in accuracy", a, e, v);
      }
      previous_in_e = v;
      previous_row[static_cast<std::size_t>(ie)] = v;
    }
  }
  return report;
}

std::string to_string(CorruptionMode mode) {
  return mode == CorruptionMode::Threshold ? "threshold" : "bernoulli";
}

CorruptionMode parse_corruption_mode(const std::string& name) {
  if (name == "threshold") return CorruptionMode::Threshold;
  if (name == "bernoulli") return CorruptionMode::Bernoulli;
  throw std::invalid_argument("unknown corruption mode '" + name + "'");
}

CorruptionOutcome corrupt_label(int true_label, double noise, const CorruptionRule& rule,
                                int num_classes, Rng& rng) {
  if (num_classes < 2) throw std::invalid_argument("corruption needs >= 2 classes");
  const bool corrupted = rule.mode == CorruptionMode::Threshold ? noise >= rule.alpha
                                                                : rng.bernoulli(noise);
  if (!corrupted) return {true_label, false};
  const auto k = static_cast<int>(rng.uniform_index(static_cast<std::size_t>(num_classes - 1)));
  return {k < true_label ? k : k + 1, true};
}

}  // namespace olas
