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

#ifndef OLAS_BENCHMARK_HPP_
#define OLAS_BENCHMARK_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "olas/dataset_io.hpp"
#include "olas/engine.hpp"

namespace olas {

// Per-dataset budget / labeler settings of the public benchmark runs.
struct TablePreset {
  std::string name;
  int budget;
  int num_labelers;
  int capacity;
  std::string dataset_file;  // relative to the data directory; empty if not shipped
  CsvSchema schema;
};

const std::vector<TablePreset>& table_presets();
// Throws ConfigError for unknown names.
const TablePreset& find_preset(const std::string& name);
void apply_preset(ALConfig& config, const TablePreset& preset);

struct BenchmarkSettings {
  std::vector<Strategy> strategies{std::begin(kAllStrategies), std::end(kAllStrategies)};
  ALConfig base;
  int replications = 20;
  std::uint64_t master_seed = 0;
  unsigned threads = 0;  // 0: hardware concurrency
};

// Seed of replication r; every strategy runs on it, so strategies share
// splits, panels and corruption streams.
std::uint64_t replication_seed(std::uint64_t master_seed, int replication);

struct CycleMatrix {
  std::vector<Strategy> strategies;
  // f1[s][r][t]: test F1 of strategy s, replication r, after cycle t + 1.
  std::vector<std::vector<std::vector<double>>> f1;
  // Full-training-set, true-label F1 per replication.
  std::vector<double> upper_bound;

  std::size_t replications() const { return upper_bound.size(); }
  std::size_t cycles() const;
  bool operator==(const CycleMatrix&) const = default;
};

struct StrategySummary {
  Strategy strategy;
  double mean_final_f1;
  double std_final_f1;  // sample standard deviation
};

struct BenchmarkResult {
  CycleMatrix matrix;
  std::vector<StrategySummary> summary;
  double upper_bound_mean = 0.0;
};

// R seeded experiments per strategy, replications fanned out over threads
// and merged by index.
BenchmarkResult run_benchmark(const Dataset& dataset, const BenchmarkSettings& settings);

std::vector<StrategySummary> summarize(const CycleMatrix& matrix);

// Median over replications of strategy s's F1 after each cycle.
std::vector<double> median_by_cycle(const CycleMatrix& matrix, std::size_t strategy);

// Matrix files: cycle_f1.csv (strategy,replication,cycle,f1) and
// upper_bound.csv (replication,f1).  Values are written with 17
// significant digits so they re-parse exactly.
void write_cycle_matrix(const CycleMatrix& matrix, const std::filesystem::path& dir);
CycleMatrix read_cycle_matrix(const std::filesystem::path& dir);

// Figure files:
//   median_f1.csv  cycle,<strategy...>,upper_bound  (one row per cycle)
//   final_f1.csv   strategy,replication,f1          (R rows per strategy)
void emit_plot_data(const CycleMatrix& matrix, const std::filesystem::path& dir);

}  // namespace olas

#endif  // OLAS_BENCHMARK_HPP_
