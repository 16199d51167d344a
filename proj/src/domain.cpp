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

#include "olas/domain.hpp"

#include <algorithm>
#include <numeric>

namespace olas {

const Sample& Dataset::at(SampleId id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= samples.size()) {
    throw std::out_of_range("unknown sample id " + std::to_string(id));
  }
  return samples[static_cast<std::size_t>(id)];
}

bool Dataset::fully_labeled() const {
  return std::all_of(samples.begin(), samples.end(),
                     [](const Sample& s) { return s.label.has_value(); });
}

void Dataset::validate() const {
  if (num_classes < 2) {
    throw DataError("dataset needs at least 2 classes, got " +
                    std::to_string(num_classes));
  }
  if (feature_dim < 1) throw DataError("dataset feature dimension must be positive");
  if (!class_names.empty() &&
      class_names.size() != static_cast<std::size_t>(num_classes)) {
    throw DataError("class name count does not match number of classes");
  }
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Sample& s = samples[i];
    if (s.id != static_cast<SampleId>(i)) {
      throw DataError("sample at position " + std::to_string(i) + " has id " +
                      std::to_string(s.id));
    }
    if (s.features.size() != static_cast<std::size_t>(feature_dim)) {
      throw DataError("sample " + std::to_string(s.id) + " has " +
                      std::to_string(s.features.size()) + " features, expected " +
                      std::to_string(feature_dim));
    }
    if (s.label && (*s.label < 0 || *s.label >= num_classes)) {
      throw DataError("sample " + std::to_string(s.id) + " has label " +
                      std::to_string(*s.label) + " outside [0, " +
                      std::to_string(num_classes) + ")");
    }
  }
}

LabelerPanel validate_panel(std::span<const LabelerProfile> labelers) {
  if (labelers.empty()) throw std::invalid_argument("labeler panel is empty");
  for (std::size_t i = 0; i < labelers.size(); ++i) {
    const auto& l = labelers[i];
    if (!(l.accuracy >= 0.0 && l.accuracy <= 1.0)) {
      throw std::invalid_argument("labeler " + std::to_string(i) +
                                  ": accuracy must lie in [0,1]");
    }
    if (l.capacity < 1) {
      throw std::invalid_argument("labeler " + std::to_string(i) +
                                  ": capacity must be at least 1");
    }
  }
  std::vector<std::size_t> order(labelers.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return labelers[a].accuracy > labelers[b].accuracy;
  });

  LabelerPanel panel;
  for (std::size_t i : order) {
    panel.labelers_.push_back(labelers[i]);
    panel.original_index_.push_back(i);
    panel.total_capacity_ += labelers[i].capacity;
  }
  return panel;
}

LabelerPanel LabelerPanel::limited_to(int budget) const {
  if (budget < 1 || budget > total_capacity_) {
    throw std::invalid_argument("per-cycle budget must lie in [1, total capacity]");
  }
  LabelerPanel out;
  int remaining = budget;
  for (std::size_t i = 0; i < labelers_.size() && remaining > 0; ++i) {
    LabelerProfile l = labelers_[i];
    l.capacity = std::min(l.capacity, remaining);
    remaining -= l.capacity;
    out.labelers_.push_back(l);
    out.original_index_.push_back(original_index_[i]);
    out.total_capacity_ += l.capacity;
  }
  return out;
}

bool PoolState::disjoint() const {
  for (const auto& [id, label] : labeled) {
    if (unlabeled.contains(id) || test.contains(id)) return false;
  }
  for (SampleId id : unlabeled) {
    if (test.contains(id)) return false;
  }
  return true;
}

EntropyTable::EntropyTable(std::vector<Entry> entries) : entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    if (!(e.entropy >= 0.0 && e.entropy <= 1.0)) {
      throw std::invalid_argument("entropy of sample " + std::to_string(e.id) +
                                  " outside [0,1]");
    }
  }
  std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
    if (a.entropy != b.entropy) return a.entropy > b.entropy;
    return a.id < b.id;
  });
}

std::vector<double> EntropyTable::entropies() const {
  std::vector<double> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.entropy);
  return out;
}

bool is_non_increasing(std::span<const double> values) {
  return std::adjacent_find(values.begin(), values.end(),
                            [](double a, double b) { return a < b; }) == values.end();
}

}  // namespace olas
