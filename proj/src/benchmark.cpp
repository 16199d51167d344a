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

#include "olas/benchmark.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

namespace olas {

namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  return out;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

double parse_double(const std::string& s, const std::filesystem::path& file) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw DataError(file.string() + ": cannot parse '" + s + "' as a number");
}

}  // namespace

const std::vector<TablePreset>& table_presets() {
  static const std::vector<TablePreset> presets = [] {
    std::vector<TablePreset> p;
    CsvSchema heart;
    heart.class_map = {{"1", 0}, {"2", 1}};  // 2 = disease present
    heart.expected_rows = 270;
    heart.expected_features = 13;
    p.push_back({"statlog", 15, 5, 3, "statlog_heart.csv", heart});

    CsvSchema ionosphere;
    ionosphere.class_map = {{"b", 0}, {"g", 1}};
    ionosphere.expected_rows = 351;
    ionosphere.expected_features = 34;
    p.push_back({"ionosphere", 20, 5, 4, "ionosphere.csv", ionosphere});

    CsvSchema sonar;
    sonar.class_map = {{"R", 0}, {"M", 1}};
    sonar.expected_rows = 208;
    sonar.expected_features = 60;
    p.push_back({"connectionist", 12, 4, 3, "sonar.csv", sonar});

    CsvSchema spam;
    spam.has_header = false;
    spam.class_map = {{"0", 0}, {"1", 1}};
    spam.expected_rows = 4601;
    spam.expected_features = 57;
    p.push_back({"spambase", 258, 17, 16, "", spam});
    return p;
  }();
  return presets;
}

const TablePreset& find_preset(const std::string& name) {
  for (const auto& p : table_presets()) {
    if (p.name == name) return p;
  }
  throw ConfigError("unknown preset '" + name + "'");
}

void apply_preset(ALConfig& config, const TablePreset& preset) {
  config.num_labelers = preset.num_labelers;
  config.capacity = preset.capacity;
  config.budget = preset.budget;
  config.accuracies.clear();
}

std::uint64_t replication_seed(std::uint64_t master_seed, int replication) {
  return derive_seed(master_seed, 0xbe7c, static_cast<std::uint64_t>(replication));
}

std::size_t CycleMatrix::cycles() const {
  return f1.empty() || f1.front().empty() ? 0 : f1.front().front().size();
}

BenchmarkResult run_benchmark(const Dataset& dataset, const BenchmarkSettings& settings) {
  if (settings.strategies.empty()) throw ConfigError("no strategies to benchmark");
  if (settings.replications < 1) throw ConfigError("replications must be >= 1");
  settings.base.validate();

  const auto reps = static_cast<std::size_t>(settings.replications);
  CycleMatrix matrix;
  matrix.strategies = settings.strategies;
  matrix.f1.assign(settings.strategies.size(), std::vector<std::vector<double>>(reps));
  matrix.upper_bound.assign(reps, 0.0);

  auto run_replication = [&](std::size_t r) {
    ALConfig config = settings.base;
    config.seed = replication_seed(settings.master_seed, static_cast<int>(r));
    matrix.upper_bound[r] = upper_bound_f1(dataset, config);
    for (std::size_t s = 0; s < settings.strategies.size(); ++s) {
      config.strategy = settings.strategies[s];
      const ExperimentResult run = run_experiment(dataset, config);
      std::vector<double>& row = matrix.f1[s][r];
      for (const auto& c : run.cycles) row.push_back(c.f1);
    }
  };

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers =
      std::min<std::size_t>(reps, settings.threads == 0 ? hw : settings.threads);
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t r = w; r < reps; r += workers) run_replication(r);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  BenchmarkResult result;
  result.summary = summarize(matrix);
  double total = 0.0;
  for (double u : matrix.upper_bound) total += u;
  result.upper_bound_mean = total / static_cast<double>(reps);
  result.matrix = std::move(matrix);
  return result;
}

std::vector<StrategySummary> summarize(const CycleMatrix& matrix) {
  std::vector<StrategySummary> out;
  for (std::size_t s = 0; s < matrix.strategies.size(); ++s) {
    std::vector<double> finals;
    for (const auto& row : matrix.f1[s]) finals.push_back(row.empty() ? 0.0 : row.back());
    const double n = static_cast<double>(finals.size());
    double mean = 0.0;
    for (double v : finals) mean += v;
    mean /= n;
    double ss = 0.0;
    for (double v : finals) ss += (v - mean) * (v - mean);
    out.push_back({matrix.strategies[s], mean, finals.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0});
  }
  return out;
}

std::vector<double> median_by_cycle(const CycleMatrix& matrix, std::size_t strategy) {
  std::vector<double> out;
  for (std::size_t t = 0; t < matrix.cycles(); ++t) {
    std::vector<double> column;
    for (const auto& row : matrix.f1.at(strategy)) column.push_back(row.at(t));
    std::sort(column.begin(), column.end());
    const std::size_t n = column.size();
    out.push_back(n % 2 == 1 ? column[n / 2] : 0.5 * (column[n / 2 - 1] + column[n / 2]));
  }
  return out;
}

void write_cycle_matrix(const CycleMatrix& matrix, const std::filesystem::path& dir) {
  std::ofstream cycles = open_for_write(dir / "cycle_f1.csv");
  cycles << "strategy,replication,cycle,f1\n";
  for (std::size_t s = 0; s < matrix.strategies.size(); ++s) {
    for (std::size_t r = 0; r < matrix.f1[s].size(); ++r) {
      for (std::size_t t = 0; t < matrix.f1[s][r].size(); ++t) {
        cycles << to_string(matrix.strategies[s]) << ',' << r << ',' << t + 1 << ','
               << format_double(matrix.f1[s][r][t]) << '\n';
      }
    }
  }
  std::ofstream upper = open_for_write(dir / "upper_bound.csv");
  upper << "replication,f1\n";
  for (std::size_t r = 0; r < matrix.upper_bound.size(); ++r) {
    upper << r << ',' << format_double(matrix.upper_bound[r]) << '\n';
  }
}

CycleMatrix read_cycle_matrix(const std::filesystem::path& dir) {
  CycleMatrix matrix;
  const auto cycles_path = dir / "cycle_f1.csv";
  std::ifstream cycles(cycles_path);
  if (!cycles) throw DataError("cannot open " + cycles_path.string());
  std::string line;
  std::getline(cycles, line);
  if (line != "strategy,replication,cycle,f1") throw DataError(cycles_path.string() + ": bad header");
  std::size_t line_no = 1;
  while (std::getline(cycles, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto cells = split_csv(line);
    if (cells.size() != 4) {
      throw DataError(cycles_path.string() + ": line " + std::to_string(line_no) + " malformed");
    }
    const Strategy strategy = parse_strategy(cells[0]);
    auto it = std::find(matrix.strategies.begin(), matrix.strategies.end(), strategy);
    if (it == matrix.strategies.end()) {
      matrix.strategies.push_back(strategy);
      matrix.f1.emplace_back();
      it = matrix.strategies.end() - 1;
    }
    auto& reps = matrix.f1[static_cast<std::size_t>(it - matrix.strategies.begin())];
    const auto r = static_cast<std::size_t>(parse_double(cells[1], cycles_path));
    const auto t = static_cast<std::size_t>(parse_double(cells[2], cycles_path));
    if (r >= reps.size()) reps.resize(r + 1);
    if (t != reps[r].size() + 1) {
      throw DataError(cycles_path.string() + ": line " + std::to_string(line_no) + " out of order");
    }
    reps[r].push_back(parse_double(cells[3], cycles_path));
  }

  const auto upper_path = dir / "upper_bound.csv";
  std::ifstream upper(upper_path);
  if (!upper) throw DataError("cannot open " + upper_path.string());
  std::getline(upper, line);
  while (std::getline(upper, line)) {
    if (line.empty()) continue;
    const auto cells = split_csv(line);
    if (cells.size() != 2) throw DataError(upper_path.string() + ": malformed row");
    matrix.upper_bound.push_back(parse_double(cells[1], upper_path));
  }
  for (const auto& reps : matrix.f1) {
    if (reps.size() != matrix.upper_bound.size()) {
      throw DataError(dir.string() + ": replication counts disagree between matrix files");
    }
  }
  return matrix;
}

void emit_plot_data(const CycleMatrix& matrix, const std::filesystem::path& dir) {
  if (matrix.strategies.empty() || matrix.cycles() == 0) {
    throw std::invalid_argument("emit_plot_data: empty matrix");
  }
  double upper = 0.0;
  {
    std::vector<double> u = matrix.upper_bound;
    std::sort(u.begin(), u.end());
    const std::size_t n = u.size();
    upper = n == 0 ? 0.0 : (n % 2 == 1 ? u[n / 2] : 0.5 * (u[n / 2 - 1] + u[n / 2]));
  }

  std::ofstream median = open_for_write(dir / "median_f1.csv");
  median << "cycle";
  for (Strategy s : matrix.strategies) median << ',' << to_string(s);
  median << ",upper_bound\n";
  std::vector<std::vector<double>> medians;
  for (std::size_t s = 0; s < matrix.strategies.size(); ++s) medians.push_back(median_by_cycle(matrix, s));
  for (std::size_t t = 0; t < matrix.cycles(); ++t) {
    median << t + 1;
    for (const auto& m : medians) median << ',' << format_double(m[t]);
    median << ',' << format_double(upper) << '\n';
  }

  std::ofstream box = open_for_write(dir / "final_f1.csv");
  box << "strategy,replication,f1\n";
  for (std::size_t s = 0; s < matrix.strategies.size(); ++s) {
    for (std::size_t r = 0; r < matrix.f1[s].size(); ++r) {
      box << to_string(matrix.strategies[s]) << ',' << r << ','
          << format_double(matrix.f1[s][r].back()) << '\n';
    }
  }
}

}  // namespace olas
