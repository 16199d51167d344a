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

#ifndef OLAS_CONFIG_HPP_
#define OLAS_CONFIG_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "olas/benchmark.hpp"
#include "olas/dataset_io.hpp"
#include "olas/engine.hpp"

namespace olas {

// Everything a CLI run needs.  Serialized as one JSON object: ALConfig keys
// at the top level plus "preset", "dataset", "strategies", "replications",
// "beta_grid" and "calibration_replications".  Unknown keys are rejected.
struct ProjectConfig {
  ALConfig experiment;
  std::optional<std::string> preset;
  // Dataset source: a CSV path with its schema, or a synthetic spec.
  std::optional<std::filesystem::path> dataset_path;
  CsvSchema schema;
  std::optional<SyntheticSpec> synthetic;
  std::vector<Strategy> strategies{std::begin(kAllStrategies), std::end(kAllStrategies)};
  int replications = 20;
  std::vector<double> beta_grid{0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5};
  int calibration_replications = 5;

  bool operator==(const ProjectConfig&) const = default;
};

nlohmann::ordered_json to_json(const ALConfig& config);
nlohmann::ordered_json to_json(const CsvSchema& schema);
nlohmann::ordered_json to_json(const ProjectConfig& config);

// Throws ConfigError on unknown keys, wrong types or invalid values.  A
// "preset" is applied first; explicit keys override it.
ProjectConfig project_config_from_json(const nlohmann::json& j);

// Relative dataset paths are resolved against the file's directory.
ProjectConfig load_project_config(const std::filesystem::path& path);

// Dataset named by the config (CSV or synthetic).
Dataset load_dataset(const ProjectConfig& config);

}  // namespace olas

#endif  // OLAS_CONFIG_HPP_
