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


#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "doctest.h"
#include "olas/assignment.hpp"
#include "olas/rng.hpp"
#include "olas/verification.hpp"

using namespace olas;

TEST_CASE("closed-form assignment fills the most accurate labelers first") {
  const LabelerPanel panel = validate_panel(std::vector<LabelerProfile>{{0.9, 2}, {0.8, 2}, {0.7, 2}});
  const std::vector<double> e{0.9, 0.8, 0.6, 0.5, 0.1};
  const AssignmentPlan plan = optimal_assignment(e, panel, NoiseSpec::model1());
  CHECK(plan.labeler_for_position == std::vector<int>{0, 0, 1, 1, 2});
  CHECK(plan.loads(3) == std::vector<int>{2, 2, 1});
}

TEST_CASE("single labeler takes everything") {
  const LabelerPanel panel = validate_panel(std::vector<LabelerProfile>{{0.6, 3}});
  const std::vector<double> e{0.7, 0.4, 0.2};
  CHECK(optimal_assignment(e, panel, NoiseSpec::model2()).labeler_for_position ==
        std::vector<int>{0, 0, 0});
}

TEST_CASE("two-point instance matches hand enumeration") {
  const LabelerPanel panel = validate_panel(std::vector<LabelerProfile>{{0.9, 1}, {0.7, 1}});
  const std::vector<double> e{0.8, 0.4};
  const AssignmentPlan plan = optimal_assignment(e, panel, NoiseSpec::model1());
  CHECK(plan.labeler_for_position == std::vector<int>{0, 1});
  // max(0.8*0.1, 0.4*0.3) = 0.12; the swap gives max(0.8*0.3, 0.4*0.1) = 0.24.
  CHECK(plan.max_noise == doctest::Approx(0.12).epsilon(1e-15));
  const MinMaxSolution best = brute_force_minmax(e, panel, NoiseSpec::model1());
  CHECK(best.value == doctest::Approx(0.12).epsilon(1e-15));
}

TEST_CASE("one query goes to the most accurate labeler") {
  const LabelerPanel panel = validate_panel(std::vector<LabelerProfile>{{0.5, 1}, {0.95, 1}, {0.7, 2}});
  const std::vector<double> e{0.6};
  const MinMaxSolution best = brute_force_minmax(e, panel, NoiseSpec::model2());
  CHECK(best.value == noise_model2(0.95, 0.6));
}

TEST_CASE("assignment input checks") {
  const LabelerPanel panel = validate_panel(std::vector<LabelerProfile>{{0.9, 1}});
  CHECK_THROWS_AS(optimal_assignment(std::vector<double>{0.2, 0.5}, panel, NoiseSpec::model1()),
                  std::invalid_argument);
  CHECK_THROWS_AS(optimal_assignment(std::vector<double>{0.5, 0.2}, panel, NoiseSpec::model1()),
                  std::invalid_argument);
  CHECK(optimal_assignment(std::vector<double>{}, panel, NoiseSpec::model1()).size() == 0);
}

TEST_CASE("closed form equals exhaustive min-max on random instances") {
  const VerificationReport report = verify_assignment_oracle(300, 99);
  CHECK(report.cases == 600);
  CHECK(report.failures == 0);
}

TEST_CASE("closed form stays optimal for an arbitrary monotone noise function") {
  // The pairing argument only needs monotonicity; check it with an
  // estimated-noise model too.
  Rng rng(8);
  const NoiseSpec noise = NoiseSpec::estimated({-1.0, 4.0, -3.0});
  for (int k = 0; k < 100; ++k) {
    std::vector<LabelerProfile> labelers(1 + rng.uniform_index(3));
    for (auto& l : labelers) l = {rng.uniform(), 3};
    const LabelerPanel panel = validate_panel(labelers);
    std::vector<double> e(1 + rng.uniform_index(std::min<std::size_t>(7, 3 * labelers.size())));
    for (double& x : e) x = rng.uniform();
    std::sort(e.begin(), e.end(), std::greater<>());
    CHECK(std::abs(optimal_assignment(e, panel, noise).max_noise -
                   brute_force_minmax(e, panel, noise).value) <= 1e-12);
  }
}

TEST_CASE("random assignment is feasible and reproducible") {
  const LabelerPanel panel = validate_panel(std::vector<LabelerProfile>{{0.9, 2}, {0.6, 1}, {0.5, 3}});
  Rng a(3), b(3);
  const AssignmentPlan p = random_assignment(6, panel, a);
  CHECK(p.labeler_for_position == random_assignment(6, panel, b).labeler_for_position);
  // Total capacity equals the query count: every labeler is full.
  CHECK(p.loads(3) == std::vector<int>{2, 1, 3});
  Rng c(4);
  const AssignmentPlan q = random_assignment(4, panel, c);
  const auto loads = q.loads(3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(loads[i] <= panel[i].capacity);
}

TEST_CASE("random assignment picks each perfect matching half the time (frequency oracle)") {
  const LabelerPanel panel = validate_panel(std::vector<LabelerProfile>{{0.9, 1}, {0.6, 1}});
  Rng rng(77);
  const int n = 10000;
  int identity = 0;
  for (int i = 0; i < n; ++i) {
    const AssignmentPlan p = random_assignment(2, panel, rng);
    CHECK(p.labeler_for_position[0] != p.labeler_for_position[1]);
    identity += p.labeler_for_position[0] == 0;
  }
  CHECK(std::abs(identity / double(n) - 0.5) <= 0.02);
}
