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

#include "olas/dataset_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace olas {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n\"");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n\"");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_line(const std::string& line, char delimiter) {
  std::vector<std::string> out;
  std::string_view rest(line);
  while (true) {
    const auto pos = rest.find(delimiter);
    out.push_back(trim(rest.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    rest.remove_prefix(pos + 1);
  }
  return out;
}

std::string where(const std::string& source, std::size_t line, std::size_t column) {
  return source + ": line " + std::to_string(line) + ", column " + std::to_string(column + 1);
}

}  // namespace

Dataset parse_csv_dataset(std::istream& in, const CsvSchema& schema, const std::string& source) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  if (schema.has_header) {
    while (std::getline(in, line)) {
      ++line_no;
      if (!trim(line).empty()) break;
    }
    if (trim(line).empty()) throw DataError(source + ": empty file");
    header = split_line(line, schema.delimiter);
  }

  std::size_t width = header.size();
  int label_col = -1;
  std::vector<std::size_t> feature_cols;
  auto resolve_columns = [&](std::size_t columns) {
    width = columns;
    if (!schema.label_name.empty()) {
      if (header.empty()) throw DataError(source + ": label_name needs a header row");
      const auto it = std::find(header.begin(), header.end(), schema.label_name);
      if (it == header.end()) throw DataError(source + ": no column named '" + schema.label_name + "'");
      label_col = static_cast<int>(it - header.begin());
    } else {
      label_col = schema.label_column < 0 ? static_cast<int>(columns) + schema.label_column
                                          : schema.label_column;
    }
    if (label_col < 0 || static_cast<std::size_t>(label_col) >= columns) {
      throw DataError(source + ": label column out of range");
    }
    if (schema.feature_columns.empty()) {
      for (std::size_t c = 0; c < columns; ++c) {
        if (static_cast<int>(c) != label_col) feature_cols.push_back(c);
      }
    } else {
      for (int c : schema.feature_columns) {
        if (c < 0 || static_cast<std::size_t>(c) >= columns || c == label_col) {
          throw DataError(source + ": feature column " + std::to_string(c) + " invalid");
        }
        feature_cols.push_back(static_cast<std::size_t>(c));
      }
    }
  };
  if (!header.empty()) resolve_columns(header.size());

  Dataset ds;
  std::map<std::string, int> classes = schema.class_map;
  std::vector<std::string> names;
  if (!classes.empty()) {
    int top = 0;
    for (const auto& [raw, idx] : classes) top = std::max(top, idx + 1);
    names.assign(static_cast<std::size_t>(top), "");
    for (const auto& [raw, idx] : classes) {
      if (idx < 0) throw DataError(source + ": negative class index in class map");
      names[static_cast<std::size_t>(idx)] = raw;
    }
  }

  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const std::vector<std::string> cells = split_line(line, schema.delimiter);
    if (label_col < 0) resolve_columns(cells.size());
    if (cells.size() != width) {
      throw DataError(source + ": line " + std::to_string(line_no) + " has " +
                      std::to_string(cells.size()) + " fields, expected " + std::to_string(width));
    }
    Sample s;
    s.id = static_cast<SampleId>(ds.samples.size());
    s.features.reserve(feature_cols.size());
    for (std::size_t c : feature_cols) {
      const std::string& cell = cells[c];
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec != std::errc() || ptr != cell.data() + cell.size()) {
        throw DataError(where(source, line_no, c) + ": cannot parse '" + cell + "' as a number");
      }
      s.features.push_back(v);
    }
    const std::string& raw = cells[static_cast<std::size_t>(label_col)];
    auto it = classes.find(raw);
    if (it == classes.end()) {
      if (!schema.class_map.empty()) {
        throw DataError(where(source, line_no, static_cast<std::size_t>(label_col)) +
                        ": unknown class label '" + raw + "'");
      }
      it = classes.emplace(raw, static_cast<int>(names.size())).first;
      names.push_back(raw);
    }
    s.label = it->second;
    ds.samples.push_back(std::move(s));
  }

  if (ds.samples.empty()) throw DataError(source + ": no data rows");
  ds.num_classes = static_cast<int>(names.size());
  ds.feature_dim = static_cast<int>(feature_cols.size());
  ds.class_names = std::move(names);
  if (schema.expected_rows && *schema.expected_rows != ds.size()) {
    throw DataError(source + ": expected " + std::to_string(*schema.expected_rows) + " rows, got " +
                    std::to_string(ds.size()));
  }
  if (schema.expected_features &&
      *schema.expected_features != static_cast<std::size_t>(ds.feature_dim)) {
    throw DataError(source + ": expected " + std::to_string(*schema.expected_features) +
                    " features, got " + std::to_string(ds.feature_dim));
  }
  ds.validate();
  return ds;
}

Dataset load_csv_dataset(const std::filesystem::path& path, const CsvSchema& schema) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open dataset file " + path.string());
  return parse_csv_dataset(in, schema, path.string());
}

Dataset synth_dataset(int num_classes, int per_class, int feature_dim, double spread, Rng& rng) {
  if (num_classes < 2 || per_class < 1 || feature_dim < 1 || spread < 0.0) {
    throw std::invalid_argument("synth_dataset: need >= 2 classes, counts >= 1, spread >= 0");
  }
  std::vector<std::vector<double>> centers(static_cast<std::size_t>(num_classes));
  for (auto& c : centers) {
    for (int d = 0; d < feature_dim; ++d) c.push_back(rng.uniform(-2.0, 2.0));
  }
  Dataset ds;
  ds.num_classes = num_classes;
  ds.feature_dim = feature_dim;
  for (int k = 0; k < num_classes; ++k) {
    ds.class_names.push_back("class" + std::to_string(k));
    for (int n = 0; n < per_class; ++n) {
      Sample s;
      s.id = static_cast<SampleId>(ds.samples.size());
      for (int d = 0; d < feature_dim; ++d) {
        s.features.push_back(centers[static_cast<std::size_t>(k)][static_cast<std::size_t>(d)] +
                             spread * rng.normal());
      }
      s.label = k;
      ds.samples.push_back(std::move(s));
    }
  }
  return ds;
}

Dataset synth_dataset(const SyntheticSpec& spec) {
  Rng rng(spec.seed);
  return synth_dataset(spec.num_classes, spec.per_class, spec.feature_dim, spec.spread, rng);
}

}  // namespace olas
