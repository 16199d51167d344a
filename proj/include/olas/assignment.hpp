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

#ifndef OLAS_ASSIGNMENT_HPP_
#define OLAS_ASSIGNMENT_HPP_

#include <span>
#include <vector>

#include "olas/domain.hpp"
#include "olas/noise.hpp"
#include "olas/rng.hpp"

namespace olas {

// Labeler per query position.  Positions index the query list handed to
// the solver; labeler indices refer to the sorted panel.
struct AssignmentPlan {
  std::vector<int> labeler_for_position;
  std::vector<double> pair_noise;  // empty until scored
  double max_noise = 0.0;

  std::size_t size() const { return labeler_for_position.size(); }
  // Queries per labeler.
  std::vector<int> loads(std::size_t num_labelers) const;
};

// Fills pair_noise and max_noise for `plan` under `noise`.
void score_plan(AssignmentPlan& plan, std::span<const double> entropies,
                const LabelerPanel& panel, const NoiseSpec& noise);

// Min-max labeler assignment in closed form: with queries sorted by
// non-increasing entropy, the first c_1 go to the most accurate labeler,
// the next c_2 to the second, and so on.  The pairing depends only on the
// capacities and the query count; `noise` is used to score it.
//
// Throws std::invalid_argument if the entropies are unsorted or exceed the
// panel's total capacity.
AssignmentPlan optimal_assignment(std::span<const double> entropies, const LabelerPanel& panel,
                                  const NoiseSpec& noise);

struct MinMaxSolution {
  double value = 0.0;
  AssignmentPlan plan;
};

inline constexpr std::size_t kMaxEnumerationPoints = 8;
inline constexpr std::size_t kMaxEnumerationLabelers = 3;

// Exhaustive search over every capacity-feasible assignment, minimizing the
// largest pair noise.  Limited to 8 points and 3 labelers.
MinMaxSolution brute_force_minmax(std::span<const double> entropies, const LabelerPanel& panel,
                                  const NoiseSpec& noise);

// Uniformly random feasible assignment: shuffle the multiset holding
// labeler i c_i times and pair its first `num_queries` entries with the
// positions.  The plan is left unscored.
AssignmentPlan random_assignment(std::size_t num_queries, const LabelerPanel& panel, Rng& rng);

}  // namespace olas

#endif  // OLAS_ASSIGNMENT_HPP_
