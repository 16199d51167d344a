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

#include "olas/config.hpp"

#include <fstream>
#include <set>

namespace olas {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + " must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!allowed.contains(key)) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

template <typename T>
T get(const json& j, const std::string& key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError("config key '" + key + "': " + e.what());
  }
}

ordered_json noise_to_json(const NoiseSpec& noise) {
  ordered_json j;
  j["model"] = to_string(noise.kind);
  if (noise.kind == NoiseKind::Estimated) {
    j["coefficients"] = {noise.coefficients.intercept, noise.coefficients.entropy,
                         noise.coefficients.accuracy};
  }
  return j;
}

NoiseSpec noise_from_json(const json& j, const std::string& where) {
  NoiseSpec spec;
  if (j.is_string()) {
    spec.kind = parse_noise_kind(j.get<std::string>());
  } else {
    reject_unknown(j, {"model", "coefficients"}, where);
    spec.kind = parse_noise_kind(get<std::string>(j, "model"));
    if (j.contains("coefficients")) {
      const auto c = get<std::vector<double>>(j, "coefficients");
      if (c.size() != 3) throw ConfigError(where + ".coefficients needs [w0, w_entropy, w_accuracy]");
      spec.coefficients = {c[0], c[1], c[2]};
    }
  }
  if (spec.kind == NoiseKind::Estimated &&
      !(std::isfinite(spec.coefficients.intercept) && std::isfinite(spec.coefficients.entropy) &&
        std::isfinite(spec.coefficients.accuracy))) {
    throw ConfigError(where + ": estimated noise coefficients must be finite");
  }
  return spec;
}

const std::set<std::string> kExperimentKeys = {
    "cycles",        "budget",         "beta",          "alpha",       "corruption",
    "noise",         "planning_noise", "strategy",      "seed",        "classifier",
    "num_labelers",  "capacity",       "accuracy_low",  "accuracy_high", "accuracies",
    "test_fraction", "initial_fraction"};

void apply_experiment_keys(ALConfig& c, const json& j) {
  if (j.contains("cycles")) c.cycles = get<int>(j, "cycles");
  if (j.contains("budget")) {
    c.budget = j.at("budget").is_null() ? std::nullopt : std::optional<int>(get<int>(j, "budget"));
  }
  if (j.contains("beta")) c.beta = get<double>(j, "beta");
  if (j.contains("alpha")) c.corruption.alpha = get<double>(j, "alpha");
  if (j.contains("corruption")) {
    try {
      c.corruption.mode = parse_corruption_mode(get<std::string>(j, "corruption"));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  try {
    if (j.contains("noise")) c.noise = noise_from_json(j.at("noise"), "noise");
    if (j.contains("planning_noise")) {
      c.planning_noise = j.at("planning_noise").is_null()
                             ? std::nullopt
                             : std::optional(noise_from_json(j.at("planning_noise"), "planning_noise"));
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (j.contains("strategy")) c.strategy = parse_strategy(get<std::string>(j, "strategy"));
  if (j.contains("seed")) c.seed = get<std::uint64_t>(j, "seed");
  if (j.contains("classifier")) {
    const json& k = j.at("classifier");
    reject_unknown(k, {"iterations", "learning_rate", "l2"}, "classifier");
    if (k.contains("iterations")) c.classifier.iterations = get<int>(k, "iterations");
    if (k.contains("learning_rate")) c.classifier.learning_rate = get<double>(k, "learning_rate");
    if (k.contains("l2")) c.classifier.l2 = get<double>(k, "l2");
  }
  if (j.contains("num_labelers")) c.num_labelers = get<int>(j, "num_labelers");
  if (j.contains("capacity")) c.capacity = get<int>(j, "capacity");
  if (j.contains("accuracy_low")) c.accuracy_low = get<double>(j, "accuracy_low");
  if (j.contains("accuracy_high")) c.accuracy_high = get<double>(j, "accuracy_high");
  if (j.contains("accuracies")) c.accuracies = get<std::vector<double>>(j, "accuracies");
  if (j.contains("test_fraction")) c.test_fraction = get<double>(j, "test_fraction");
  if (j.contains("initial_fraction")) c.initial_fraction = get<double>(j, "initial_fraction");
}

CsvSchema schema_from_json(const json& j, CsvSchema schema) {
  if (j.contains("label_column")) schema.label_column = get<int>(j, "label_column");
  if (j.contains("label_name")) schema.label_name = get<std::string>(j, "label_name");
  if (j.contains("delimiter")) {
    const auto d = get<std::string>(j, "delimiter");
    if (d.size() != 1) throw ConfigError("dataset.delimiter must be a single character");
    schema.delimiter = d[0];
  }
  if (j.contains("header")) schema.has_header = get<bool>(j, "header");
  if (j.contains("class_map")) schema.class_map = get<std::map<std::string, int>>(j, "class_map");
  if (j.contains("feature_columns")) schema.feature_columns = get<std::vector<int>>(j, "feature_columns");
  if (j.contains("expected_rows")) schema.expected_rows = get<std::size_t>(j, "expected_rows");
  if (j.contains("expected_features")) schema.expected_features = get<std::size_t>(j, "expected_features");
  return schema;
}

}  // namespace

ordered_json to_json(const ALConfig& c) {
  ordered_json j;
  j["cycles"] = c.cycles;
  j["budget"] = c.budget ? ordered_json(*c.budget) : ordered_json(nullptr);
  j["beta"] = c.beta;
  j["alpha"] = c.corruption.alpha;
  j["corruption"] = to_string(c.corruption.mode);
  j["noise"] = noise_to_json(c.noise);
  j["planning_noise"] = c.planning_noise ? noise_to_json(*c.planning_noise) : ordered_json(nullptr);
  j["strategy"] = to_string(c.strategy);
  j["seed"] = c.seed;
  j["classifier"] = {{"iterations", c.classifier.iterations},
                     {"learning_rate", c.classifier.learning_rate},
                     {"l2", c.classifier.l2}};
  j["num_labelers"] = c.num_labelers;
  j["capacity"] = c.capacity;
  j["accuracy_low"] = c.accuracy_low;
  j["accuracy_high"] = c.accuracy_high;
  j["accuracies"] = c.accuracies;
  j["test_fraction"] = c.test_fraction;
  j["initial_fraction"] = c.initial_fraction;
  return j;
}

ordered_json to_json(const CsvSchema& s) {
  ordered_json j;
  j["label_column"] = s.label_column;
  if (!s.label_name.empty()) j["label_name"] = s.label_name;
  j["delimiter"] = std::string(1, s.delimiter);
  j["header"] = s.has_header;
  j["class_map"] = s.class_map;
  j["feature_columns"] = s.feature_columns;
  if (s.expected_rows) j["expected_rows"] = *s.expected_rows;
  if (s.expected_features) j["expected_features"] = *s.expected_features;
  return j;
}

ordered_json to_json(const ProjectConfig& c) {
  ordered_json j;
  if (c.preset) j["preset"] = *c.preset;
  const ordered_json experiment = to_json(c.experiment);
  for (const auto& [key, value] : experiment.items()) j[key] = value;
  ordered_json dataset;
  if (c.synthetic) {
    dataset["synthetic"] = {{"num_classes", c.synthetic->num_classes},
                            {"per_class", c.synthetic->per_class},
                            {"feature_dim", c.synthetic->feature_dim},
                            {"spread", c.synthetic->spread},
                            {"seed", c.synthetic->seed}};
  } else {
    if (c.dataset_path) dataset["path"] = c.dataset_path->generic_string();
    const ordered_json schema = to_json(c.schema);
    for (const auto& [key, value] : schema.items()) dataset[key] = value;
  }
  j["dataset"] = dataset;
  std::vector<std::string> strategies;
  for (Strategy s : c.strategies) strategies.push_back(to_string(s));
  j["strategies"] = strategies;
  j["replications"] = c.replications;
  j["beta_grid"] = c.beta_grid;
  j["calibration_replications"] = c.calibration_replications;
  return j;
}

ProjectConfig project_config_from_json(const json& j) {
  std::set<std::string> allowed = kExperimentKeys;
  allowed.insert({"preset", "dataset", "strategies", "replications", "beta_grid",
                  "calibration_replications"});
  reject_unknown(j, allowed, "config");

  ProjectConfig c;
  if (j.contains("preset")) {
    c.preset = get<std::string>(j, "preset");
    const TablePreset& preset = find_preset(*c.preset);
    apply_preset(c.experiment, preset);
    c.schema = preset.schema;
  }
  apply_experiment_keys(c.experiment, j);

  if (j.contains("dataset")) {
    const json& d = j.at("dataset");
    reject_unknown(d, {"path", "synthetic", "label_column", "label_name", "delimiter", "header",
                       "class_map", "feature_columns", "expected_rows", "expected_features"},
                   "dataset");
    if (d.contains("synthetic")) {
      const json& s = d.at("synthetic");
      reject_unknown(s, {"num_classes", "per_class", "feature_dim", "spread", "seed"},
                     "dataset.synthetic");
      SyntheticSpec spec;
      if (s.contains("num_classes")) spec.num_classes = get<int>(s, "num_classes");
      if (s.contains("per_class")) spec.per_class = get<int>(s, "per_class");
      if (s.contains("feature_dim")) spec.feature_dim = get<int>(s, "feature_dim");
      if (s.contains("spread")) spec.spread = get<double>(s, "spread");
      if (s.contains("seed")) spec.seed = get<std::uint64_t>(s, "seed");
      c.synthetic = spec;
    }
    if (d.contains("path")) c.dataset_path = get<std::string>(d, "path");
    if (c.synthetic && c.dataset_path) throw ConfigError("dataset: give either path or synthetic");
    c.schema = schema_from_json(d, c.schema);
  }
  if (j.contains("strategies")) {
    c.strategies.clear();
    for (const auto& name : get<std::vector<std::string>>(j, "strategies")) {
      c.strategies.push_back(parse_strategy(name));
    }
    if (c.strategies.empty()) throw ConfigError("strategies must not be empty");
  }
  if (j.contains("replications")) c.replications = get<int>(j, "replications");
  if (j.contains("beta_grid")) c.beta_grid = get<std::vector<double>>(j, "beta_grid");
  if (j.contains("calibration_replications")) {
    c.calibration_replications = get<int>(j, "calibration_replications");
  }
  if (c.replications < 1 || c.calibration_replications < 1) {
    throw ConfigError("replication counts must be >= 1");
  }
  c.experiment.validate();
  return c;
}

ProjectConfig load_project_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  ProjectConfig c = project_config_from_json(j);
  if (c.dataset_path && c.dataset_path->is_relative()) {
    c.dataset_path = path.parent_path() / *c.dataset_path;
  }
  return c;
}

Dataset load_dataset(const ProjectConfig& config) {
  if (config.synthetic) return synth_dataset(*config.synthetic);
  if (!config.dataset_path) throw ConfigError("no dataset given (config 'dataset' or --dataset)");
  return load_csv_dataset(*config.dataset_path, config.schema);
}

}  // namespace olas
