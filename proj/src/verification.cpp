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

#include "olas/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <vector>

#include "olas/assignment.hpp"
#include "olas/domain.hpp"
#include "olas/noise.hpp"
#include "olas/rng.hpp"
#include "olas/sampling.hpp"

namespace olas {
namespace {

constexpr double kTolerance = 1e-12;
constexpr std::size_t kMaxMessages = 10;

std::vector<double> sorted_entropies(std::size_t n, Rng& rng) {
  std::vector<double> e(n);
  for (double& x : e) x = rng.uniform();
  std::sort(e.begin(), e.end(), std::greater<>());
  return e;
}

LabelerPanel random_panel(std::size_t m, int min_total, Rng& rng) {
  std::vector<LabelerProfile> labelers(m);
  for (auto& l : labelers) {
    l.accuracy = rng.uniform();
    l.capacity = 1 + static_cast<int>(rng.uniform_index(3));
  }
  // Top up capacities until the panel can absorb min_total queries.
  int total = 0;
  for (const auto& l : labelers) total += l.capacity;
  for (std::size_t i = 0; total < min_total; i = (i + 1) % m) {
    if (labelers[i].capacity < 3) {
      ++labelers[i].capacity;
      ++total;
    }
  }
  return validate_panel(labelers);
}

void record_failure(VerificationReport& report, std::string message) {
  ++report.failures;
  if (report.messages.size() < kMaxMessages) report.messages.push_back(std::move(message));
}

template <typename Body>
VerificationReport timed(std::string name, Body body) {
  VerificationReport report;
  report.name = std::move(name);
  const auto start = std::chrono::steady_clock::now();
  body(report);
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

VerificationReport verify_assignment_oracle(int instances, std::uint64_t seed) {
  return timed("assignment", [&](VerificationReport& report) {
    Rng rng(seed);
    const NoiseSpec models[] = {NoiseSpec::model1(), NoiseSpec::model2()};
    for (int k = 0; k < instances; ++k) {
      const std::size_t m = 1 + rng.uniform_index(kMaxEnumerationLabelers);
      // 3 labelers of capacity <= 3 hold at most 9, so N <= 7 always fits
      // after topping up.
      const std::size_t n = 1 + rng.uniform_index(7);
      if (static_cast<int>(n) > 3 * static_cast<int>(m)) {
        --k;
        continue;
      }
      const auto entropies = sorted_entropies(n, rng);
      const LabelerPanel panel = random_panel(m, static_cast<int>(n), rng);
      for (const NoiseSpec& noise : models) {
        ++report.cases;
        const AssignmentPlan plan = optimal_assignment(entropies, panel, noise);
        const MinMaxSolution best = brute_force_minmax(entropies, panel, noise);
        if (std::abs(plan.max_noise - best.value) > kTolerance) {
          char buf[160];
          std::snprintf(buf, sizeof buf, "instance %d (%s): closed form %.17g, search %.17g", k,
                        to_string(noise.kind).c_str(), plan.max_noise, best.value);
          record_failure(report, buf);
        }
      }
    }
  });
}

VerificationReport verify_olas_oracle(int instances, std::uint64_t seed) {
  return timed("olas", [&](VerificationReport& report) {
    Rng rng(seed);
    const NoiseSpec models[] = {NoiseSpec::model1(), NoiseSpec::model2()};
    for (int k = 0; k < instances; ++k) {
      const std::size_t u = 1 + rng.uniform_index(kMaxEnumerationPoints);
      const std::size_t m = 1 + rng.uniform_index(kMaxEnumerationLabelers);
      const auto entropies = sorted_entropies(u, rng);
      const LabelerPanel panel = random_panel(m, 0, rng);
      const double beta = static_cast<double>(rng.uniform_index(21)) / 20.0;
      for (const NoiseSpec& noise : models) {
        ++report.cases;
        const QueryPlan plan = olas_select(std::span<const double>(entropies), panel, noise, beta);
        const SelectionVector choice = to_selection_vector(plan, u);
        const auto violations = model4_violations(entropies, panel, noise, beta, choice);
        const Model4Solution best = brute_force_model4(entropies, panel, noise, beta);
        if (!violations.empty()) {
          record_failure(report, "instance " + std::to_string(k) + ": OLAS plan infeasible: " +
                                     violations.front());
        } else if (std::abs(plan.objective - best.objective) > kTolerance) {
          char buf[160];
          std::snprintf(buf, sizeof buf, "instance %d (%s, beta %.2f): OLAS %.17g, search %.17g",
                        k, to_string(noise.kind).c_str(), beta, plan.objective, best.objective);
          record_failure(report, buf);
        }
      }
    }
  });
}

VerificationReport verify_noise_functions() {
  return timed("noise", [&](VerificationReport& report) {
    const std::pair<const char*, NoiseFunction> models[] = {{"model1", noise_model1},
                                                            {"model2", noise_model2}};
    for (const auto& [name, f] : models) {
      ++report.cases;
      const NoiseValidationReport r = validate_noise_function(f);
      if (!r.is_valid) {
        record_failure(report, std::string(name) + ": " +
                                   (r.violations.empty() ? "invalid" : r.violations.front()));
      }
    }
  });
}

}  // namespace olas
