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

#include "olas/assignment.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace olas {

namespace {

void check_capacity(std::size_t num_queries, const LabelerPanel& panel) {
  if (num_queries > static_cast<std::size_t>(panel.total_capacity())) {
    throw std::invalid_argument("query count " + std::to_string(num_queries) +
                                " exceeds total labeler capacity " +
                                std::to_string(panel.total_capacity()));
  }
}

}  // namespace

std::vector<int> AssignmentPlan::loads(std::size_t num_labelers) const {
  std::vector<int> out(num_labelers, 0);
  for (int i : labeler_for_position) ++out[static_cast<std::size_t>(i)];
  return out;
}

void score_plan(AssignmentPlan& plan, std::span<const double> entropies,
                const LabelerPanel& panel, const NoiseSpec& noise) {
  if (entropies.size() != plan.size()) {
    throw std::invalid_argument("plan and entropy list differ in length");
  }
  plan.pair_noise.resize(plan.size());
  plan.max_noise = 0.0;
  for (std::size_t j = 0; j < plan.size(); ++j) {
    const auto i = static_cast<std::size_t>(plan.labeler_for_position[j]);
    plan.pair_noise[j] = noise(panel[i].accuracy, entropies[j]);
    plan.max_noise = std::max(plan.max_noise, plan.pair_noise[j]);
  }
}

AssignmentPlan optimal_assignment(std::span<const double> entropies, const LabelerPanel& panel,
                                  const NoiseSpec& noise) {
  check_capacity(entropies.size(), panel);
  if (!is_non_increasing(entropies)) {
    throw std::invalid_argument("optimal_assignment: entropies must be sorted non-increasing");
  }
  AssignmentPlan plan;
  plan.labeler_for_position.reserve(entropies.size());
  std::size_t labeler = 0;
  int used = 0;
  for (std::size_t j = 0; j < entropies.size(); ++j) {
    if (used == panel[labeler].capacity) {
      ++labeler;
      used = 0;
    }
    plan.labeler_for_position.push_back(static_cast<int>(labeler));
    ++used;
  }
  score_plan(plan, entropies, panel, noise);
  return plan;
}

MinMaxSolution brute_force_minmax(std::span<const double> entropies, const LabelerPanel& panel,
                                  const NoiseSpec& noise) {
  const std::size_t n = entropies.size();
  const std::size_t m = panel.size();
  if (n > kMaxEnumerationPoints || m > kMaxEnumerationLabelers) {
    throw std::invalid_argument("brute_force_minmax: instance too large for enumeration");
  }
  check_capacity(n, panel);

  // Noise of every (labeler, point) pair, evaluated once.
  std::vector<std::vector<double>> table(m, std::vector<double>(n));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i][j] = noise(panel[i].accuracy, entropies[j]);
  }

  MinMaxSolution best;
  best.value = std::numeric_limits<double>::infinity();
  std::vector<int> choice(n, 0);
  std::vector<int> load(m, 0);
  // Odometer over m^n assignments; each point gets exactly one labeler.
  while (true) {
    std::fill(load.begin(), load.end(), 0);
    bool feasible = true;
    double worst = 0.0;
    for (std::size_t j = 0; j < n && feasible; ++j) {
      const auto i = static_cast<std::size_t>(choice[j]);
      feasible = ++load[i] <= panel[i].capacity;
      worst = std::max(worst, table[i][j]);
    }
    if (feasible && worst < best.value) {
      best.value = worst;
      best.plan.labeler_for_position = choice;
    }
    std::size_t pos = 0;
    while (pos < n && ++choice[pos] == static_cast<int>(m)) choice[pos++] = 0;
    if (pos == n) break;
  }
  if (n == 0) best.value = 0.0;
  score_plan(best.plan, entropies, panel, noise);
  return best;
}

AssignmentPlan random_assignment(std::size_t num_queries, const LabelerPanel& panel, Rng& rng) {
  check_capacity(num_queries, panel);
  std::vector<int> slots;
  slots.reserve(static_cast<std::size_t>(panel.total_capacity()));
  for (std::size_t i = 0; i < panel.size(); ++i) {
    slots.insert(slots.end(), static_cast<std::size_t>(panel[i].capacity), static_cast<int>(i));
  }
  rng.shuffle(std::span<int>(slots));
  slots.resize(num_queries);
  AssignmentPlan plan;
  plan.labeler_for_position = std::move(slots);
  return plan;
}

}  // namespace olas
