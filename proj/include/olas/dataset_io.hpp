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

#ifndef OLAS_DATASET_IO_HPP_
#define OLAS_DATASET_IO_HPP_

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "olas/domain.hpp"
#include "olas/rng.hpp"

namespace olas {

struct CsvSchema {
  // Label column index; negative values count from the end (-1 = last).
  int label_column = -1;
  // Header name of the label column; overrides label_column when set.
  std::string label_name;
  char delimiter = ',';
  bool has_header = true;
  // Raw label -> class index.  Empty: indices in order of first appearance.
  std::map<std::string, int> class_map;
  // Feature column indices; empty means every non-label column.
  std::vector<int> feature_columns;
  std::optional<std::size_t> expected_rows;
  std::optional<std::size_t> expected_features;

  bool operator==(const CsvSchema&) const = default;
};

// Throws DataError with row/column diagnostics.
Dataset parse_csv_dataset(std::istream& in, const CsvSchema& schema,
                          const std::string& source = "<stream>");
Dataset load_csv_dataset(const std::filesystem::path& path, const CsvSchema& schema);

struct SyntheticSpec {
  int num_classes = 2;
  int per_class = 50;
  int feature_dim = 2;
  double spread = 1.0;  // blob standard deviation
  std::uint64_t seed = 0;

  bool operator==(const SyntheticSpec&) const = default;
};

// Isotropic Gaussian blobs around centers drawn uniformly from [-2,2]^dim;
// the label is the blob index.  Samples are class-major.
Dataset synth_dataset(int num_classes, int per_class, int feature_dim, double spread, Rng& rng);
Dataset synth_dataset(const SyntheticSpec& spec);

}  // namespace olas

#endif  // OLAS_DATASET_IO_HPP_
