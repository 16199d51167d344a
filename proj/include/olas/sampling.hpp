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

#ifndef OLAS_SAMPLING_HPP_
#define OLAS_SAMPLING_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "olas/domain.hpp"
#include "olas/noise.hpp"
#include "olas/rng.hpp"

namespace olas {

// Ids of the top min(budget, |table|) entries, in table order.
std::vector<SampleId> entropy_sampling(const EntropyTable& table, int budget);

// Seeded uniform sample without replacement of min(budget, |pool|) ids, in
// draw order.
std::vector<SampleId> random_sampling(std::span<const SampleId> unlabeled, int budget, Rng& rng);

struct QueryPlan {
  struct Selection {
    SampleId id;
    std::size_t rank;  // 0-based position in the entropy table
    int labeler;       // sorted panel index
  };

  // In rank order.
  std::vector<Selection> selections;
  // First rank given to each labeler, absent if it receives nothing.
  std::vector<std::optional<std::size_t>> first_rank;
  // Labeler left with unused capacity.
  std::vector<bool> has_slack;
  double objective = 0.0;

  std::vector<SampleId> ids() const;
};

// Joint query selection and labeler assignment under the noise bound
// `beta`.  Walking labelers from most to least accurate, labeler i starts
// at the first rank r >= end of the previous run with noise(a_i, e_r) <=
// beta and takes up to c_i consecutive ranks.  Once a labeler finds no
// admissible rank, no later labeler receives anything.  The plan may hold
// fewer than C points and may be empty.
//
// Assumes `noise` is non-decreasing in entropy; consecutive ranks after the
// first admissible one are then admissible too.
QueryPlan olas_select(const EntropyTable& table, const LabelerPanel& panel, const NoiseSpec& noise,
                      double beta);

// Same, on a bare list of sorted entropies (ids are the positions).
QueryPlan olas_select(std::span<const double> entropies, const LabelerPanel& panel,
                      const NoiseSpec& noise, double beta);

// Labeler per position, or -1 when the point is not selected.
using SelectionVector = std::vector<int>;

// Every violated constraint of the joint selection/assignment integer
// program for `choice`: single selection, capacities, the noise bound,
// the ordering policy (a more accurate labeler never takes a point ranked
// after one given to a less accurate labeler) and the slack rule (a labeler
// with unused capacity forces all less accurate labelers to be idle).
std::vector<std::string> model4_violations(std::span<const double> entropies,
                                           const LabelerPanel& panel, const NoiseSpec& noise,
                                           double beta, const SelectionVector& choice);

SelectionVector to_selection_vector(const QueryPlan& plan, std::size_t num_points);

struct Model4Solution {
  double objective = 0.0;
  SelectionVector choice;
};

// Exhaustive search over all (M+1)^u selections; returns the largest
// selected-entropy sum among those with no violations.  Limited to 8
// points and 3 labelers.
Model4Solution brute_force_model4(std::span<const double> entropies, const LabelerPanel& panel,
                                  const NoiseSpec& noise, double beta);

}  // namespace olas

#endif  // OLAS_SAMPLING_HPP_
