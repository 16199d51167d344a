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

#ifndef OLAS_NOISE_HPP_
#define OLAS_NOISE_HPP_

#include <functional>
#include <string>
#include <vector>

#include "olas/rng.hpp"

namespace olas {

// Noise Model 1: e (1 - a).
double noise_model1(double accuracy, double entropy);

// Noise Model 2, piecewise in the entropy with the branch boundary at 0.5:
//   e <= 0.5:  (1 - a^(2e))^(1/(2e))
//   e >  0.5:  1 - (1 - (1-a)^(2(1-e)))^(1/(2(1-e)))
// Both branches are evaluated in log space.  The e -> 0 and e -> 1 limits
// (0 and 1 for 0 < a < 1) are returned exactly at the endpoints; a = 1 gives
// 0 and a = 0 gives 1 for interior entropies.
double noise_model2(double accuracy, double entropy);

namespace detail {
// Raw branches of noise_model2 without endpoint handling, for tests.
double model2_low_branch(double accuracy, double entropy);
double model2_high_branch(double accuracy, double entropy);
}  // namespace detail

struct LogisticCoefficients {
  double intercept = 0.0;
  double entropy = 0.0;
  double accuracy = 0.0;

  bool operator==(const LogisticCoefficients&) const = default;
};

// Probability of an incorrect label, sigmoid(w0 + w_e e + w_a a).
double estimated_noise(const LogisticCoefficients& coefficients, double accuracy,
                       double entropy);

enum class NoiseKind { Model1, Model2, Estimated };

std::string to_string(NoiseKind kind);
NoiseKind parse_noise_kind(const std::string& name);

struct NoiseSpec {
  NoiseKind kind = NoiseKind::Model1;
  LogisticCoefficients coefficients;  // Estimated only

  static NoiseSpec model1() { return {NoiseKind::Model1, {}}; }
  static NoiseSpec model2() { return {NoiseKind::Model2, {}}; }
  static NoiseSpec estimated(LogisticCoefficients c) { return {NoiseKind::Estimated, c}; }

  double operator()(double accuracy, double entropy) const;

  bool operator==(const NoiseSpec&) const = default;
};

using NoiseFunction = std::function<double(double accuracy, double entropy)>;

struct NoiseValidationReport {
  bool is_valid = true;
  std::vector<std::string> violations;
};

// Sweeps [0,1]^2 on a grid and checks the range, non-increase in accuracy
// and non-decrease in entropy (tolerance 1e-9).  Violations are reported,
// at most `max_reported` of them verbatim.
NoiseValidationReport validate_noise_function(const NoiseFunction& f, double step = 0.01,
                                              std::size_t max_reported = 20);

enum class CorruptionMode { Threshold, Bernoulli };

std::string to_string(CorruptionMode mode);
CorruptionMode parse_corruption_mode(const std::string& name);

struct CorruptionRule {
  CorruptionMode mode = CorruptionMode::Threshold;
  double alpha = 0.2;  // threshold mode only

  bool operator==(const CorruptionRule&) const = default;
};

struct CorruptionOutcome {
  int observed_label;
  bool corrupted;
};

// Threshold mode corrupts iff noise >= alpha and touches the rng only when
// it corrupts.  Bernoulli mode corrupts with probability `noise`.  A
// corrupted label is drawn uniformly from the other classes.
CorruptionOutcome corrupt_label(int true_label, double noise, const CorruptionRule& rule,
                                int num_classes, Rng& rng);

}  // namespace olas

#endif  // OLAS_NOISE_HPP_
