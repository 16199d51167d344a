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

#include "olas/sampling.hpp"

#include <cassert>
#include <stdexcept>

#include "olas/assignment.hpp"

namespace olas {

std::vector<SampleId> entropy_sampling(const EntropyTable& table, int budget) {
  if (budget < 1) throw std::invalid_argument("entropy_sampling: budget must be >= 1");
  if (table.empty()) throw std::invalid_argument("entropy_sampling: empty entropy table");
  const std::size_t k = std::min(static_cast<std::size_t>(budget), table.size());
  std::vector<SampleId> out;
  out.reserve(k);
  for (std::size_t r = 0; r < k; ++r) out.push_back(table[r].id);
  return out;
}

std::vector<SampleId> random_sampling(std::span<const SampleId> unlabeled, int budget, Rng& rng) {
  if (budget < 1) throw std::invalid_argument("random_sampling: budget must be >= 1");
  if (unlabeled.empty()) throw std::invalid_argument("random_sampling: empty pool");
  std::vector<SampleId> pool(unlabeled.begin(), unlabeled.end());
  const std::size_t k = std::min(static_cast<std::size_t>(budget), pool.size());
  // Partial Fisher-Yates from the front.
  for (std::size_t i = 0; i < k; ++i) {
    std::swap(pool[i], pool[i + rng.uniform_index(pool.size() - i)]);
  }
  pool.resize(k);
  return pool;
}

std::vector<SampleId> QueryPlan::ids() const {
  std::vector<SampleId> out;
  out.reserve(selections.size());
  for (const auto& s : selections) out.push_back(s.id);
  return out;
}

namespace {

QueryPlan olas_select_impl(std::span<const double> entropies, std::span<const SampleId> ids,
                           const LabelerPanel& panel, const NoiseSpec& noise, double beta) {
  if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("beta must lie in [0,1]");
  if (!is_non_increasing(entropies)) {
    throw std::invalid_argument("olas_select: entropies must be sorted non-increasing");
  }
  const std::size_t u = entropies.size();
  QueryPlan plan;
  plan.first_rank.assign(panel.size(), std::nullopt);
  plan.has_slack.assign(panel.size(), true);

  std::size_t next = 0;  // first rank not yet inspected
  for (std::size_t i = 0; i < panel.size(); ++i) {
    const double accuracy = panel[i].accuracy;
    while (next < u && noise(accuracy, entropies[next]) > beta) ++next;
    if (next >= u) break;  // no admissible rank; later labelers get nothing
    plan.first_rank[i] = next;
    const std::size_t end = std::min(next + static_cast<std::size_t>(panel[i].capacity), u);
    for (std::size_t r = next; r < end; ++r) {
      assert(noise(accuracy, entropies[r]) <= beta && "noise must be monotone in entropy");
      plan.selections.push_back({ids[r], r, static_cast<int>(i)});
      plan.objective += entropies[r];
    }
    plan.has_slack[i] = end - next < static_cast<std::size_t>(panel[i].capacity);
    next = end;
  }
  return plan;
}

}  // namespace

QueryPlan olas_select(const EntropyTable& table, const LabelerPanel& panel, const NoiseSpec& noise,
                      double beta) {
  std::vector<SampleId> ids;
  ids.reserve(table.size());
  for (const auto& e : table.entries()) ids.push_back(e.id);
  const std::vector<double> entropies = table.entropies();
  return olas_select_impl(entropies, ids, panel, noise, beta);
}

QueryPlan olas_select(std::span<const double> entropies, const LabelerPanel& panel,
                      const NoiseSpec& noise, double beta) {
  std::vector<SampleId> ids(entropies.size());
  for (std::size_t r = 0; r < ids.size(); ++r) ids[r] = static_cast<SampleId>(r);
  return olas_select_impl(entropies, ids, panel, noise, beta);
}

SelectionVector to_selection_vector(const QueryPlan& plan, std::size_t num_points) {
  SelectionVector choice(num_points, -1);
  for (const auto& s : plan.selections) choice.at(s.rank) = s.labeler;
  return choice;
}

std::vector<std::string> model4_violations(std::span<const double> entropies,
                                           const LabelerPanel& panel, const NoiseSpec& noise,
                                           double beta, const SelectionVector& choice) {
  std::vector<std::string> out;
  const std::size_t u = entropies.size();
  const std::size_t m = panel.size();
  if (choice.size() != u) {
    out.emplace_back("selection vector length differs from point count");
    return out;
  }
  // A choice vector holds one labeler per point, so single selection holds
  // by construction once every entry is a valid index.
  std::vector<int> load(m, 0);
  for (std::size_t j = 0; j < u; ++j) {
    if (choice[j] < -1 || choice[j] >= static_cast<int>(m)) {
      out.push_back("point " + std::to_string(j) + ": invalid labeler index");
      return out;
    }
    if (choice[j] >= 0) ++load[static_cast<std::size_t>(choice[j])];
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (load[i] > panel[i].capacity) {
      out.push_back("labeler " + std::to_string(i) + ": capacity exceeded");
    }
  }
  for (std::size_t j = 0; j < u; ++j) {
    if (choice[j] < 0) continue;
    const auto i = static_cast<std::size_t>(choice[j]);
    if (noise(panel[i].accuracy, entropies[j]) > beta) {
      out.push_back("point " + std::to_string(j) + ": noise bound exceeded");
    }
  }
  // y_kl <= 1 - y_ij for k < i, l > j.
  for (std::size_t j = 0; j < u; ++j) {
    if (choice[j] < 0) continue;
    for (std::size_t l = j + 1; l < u; ++l) {
      if (choice[l] >= 0 && choice[l] < choice[j]) {
        out.push_back("points " + std::to_string(j) + "," + std::to_string(l) +
                      ": ordering policy violated");
      }
    }
  }
  // z_i = 1 iff labeler i has unused capacity; then labeler i+1 is idle.
  for (std::size_t i = 0; i + 1 < m; ++i) {
    const bool slack = panel[i].capacity - load[i] > 0;
    if (slack && load[i + 1] > 0) {
      out.push_back("labeler " + std::to_string(i) + ": slack but labeler " +
                    std::to_string(i + 1) + " is used");
    }
  }
  return out;
}

Model4Solution brute_force_model4(std::span<const double> entropies, const LabelerPanel& panel,
                                  const NoiseSpec& noise, double beta) {
  const std::size_t u = entropies.size();
  const std::size_t m = panel.size();
  if (u > kMaxEnumerationPoints || m > kMaxEnumerationLabelers) {
    throw std::invalid_argument("brute_force_model4: instance too large for enumeration");
  }
  Model4Solution best;
  best.choice.assign(u, -1);  // the empty selection is always feasible
  SelectionVector choice(u, -1);
  while (true) {
    double objective = 0.0;
    for (std::size_t j = 0; j < u; ++j) {
      if (choice[j] >= 0) objective += entropies[j];
    }
    if (objective > best.objective &&
        model4_violations(entropies, panel, noise, beta, choice).empty()) {
      best.objective = objective;
      best.choice = choice;
    }
    std::size_t pos = 0;
    while (pos < u && ++choice[pos] == static_cast<int>(m)) choice[pos++] = -1;
    if (pos == u) break;
  }
  return best;
}

}  // namespace olas
