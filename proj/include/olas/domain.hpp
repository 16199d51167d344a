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

#ifndef OLAS_DOMAIN_HPP_
#define OLAS_DOMAIN_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace olas {

// Problems with input data (files, datasets, golden sets).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Problems with user configuration (config files, flags, presets).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using SampleId = std::int64_t;

struct Sample {
  SampleId id = 0;
  std::vector<double> features;
  std::optional<int> label;
};

// Samples are addressed by id; ids equal their position, assigned at
// ingestion, so lookups are O(1) and plans never depend on reordering.
struct Dataset {
  std::vector<Sample> samples;
  int num_classes = 0;
  int feature_dim = 0;
  std::vector<std::string> class_names;

  const Sample& at(SampleId id) const;
  std::size_t size() const { return samples.size(); }
  bool fully_labeled() const;

  // Throws DataError on any broken invariant.
  void validate() const;
};

struct LabelerProfile {
  double accuracy = 0.0;
  int capacity = 1;

  bool operator==(const LabelerProfile&) const = default;
};

// Labelers sorted non-increasing by accuracy; equal accuracies keep input
// order.  Index i in this class always means "i-th most accurate".
class LabelerPanel {
 public:
  std::span<const LabelerProfile> labelers() const { return labelers_; }
  const LabelerProfile& operator[](std::size_t i) const { return labelers_[i]; }
  std::size_t size() const { return labelers_.size(); }
  int total_capacity() const { return total_capacity_; }
  // Position of the sorted labeler in the list handed to validate_panel.
  std::size_t original_index(std::size_t i) const { return original_index_[i]; }

  // Panel restricted to a per-cycle budget smaller than the total capacity:
  // the most accurate labelers participate until their cumulative capacity
  // reaches the budget, the last one possibly with a reduced capacity.
  LabelerPanel limited_to(int budget) const;

  bool operator==(const LabelerPanel&) const = default;

 private:
  friend LabelerPanel validate_panel(std::span<const LabelerProfile>);

  std::vector<LabelerProfile> labelers_;
  std::vector<std::size_t> original_index_;
  int total_capacity_ = 0;
};

// Throws std::invalid_argument for an empty list, an accuracy outside
// [0,1] or a capacity below one.
LabelerPanel validate_panel(std::span<const LabelerProfile> labelers);

struct PoolState {
  std::map<SampleId, int> labeled;  // id -> observed label
  std::set<SampleId> unlabeled;
  std::set<SampleId> test;
  int cycle = 0;

  bool disjoint() const;
};

// Per-sample normalized entropies sorted non-increasing, ties broken by
// ascending sample id.  Rank r in the table is the r-th most uncertain
// sample.
class EntropyTable {
 public:
  struct Entry {
    SampleId id;
    double entropy;
  };

  EntropyTable() = default;
  // Sorts `entries`; throws std::invalid_argument on entropies outside [0,1].
  explicit EntropyTable(std::vector<Entry> entries);

  std::span<const Entry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Entry& operator[](std::size_t rank) const { return entries_[rank]; }
  std::vector<double> entropies() const;

 private:
  std::vector<Entry> entries_;
};

// True iff `values` is sorted non-increasing.
bool is_non_increasing(std::span<const double> values);

}  // namespace olas

#endif  // OLAS_DOMAIN_HPP_
