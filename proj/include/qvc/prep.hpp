// Copyright 2026 The qvc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Tabular ingestion and preprocessing: CSV -> one-hot -> split -> PCA -> min-max.
//
// PCA and min-max models are fitted on training rows only and are immutable
// afterwards; transforms never touch the model.

#include <cstdint>
#include <filesystem>
#include <istream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qvc/dataset.hpp"

namespace qvc {

inline constexpr std::size_t kMaxCategories = 64;

/// Rectangular string table with a designated binary label column.
struct RawTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::string label_column;
  std::string positive_label;

  std::size_t label_index() const;
};

/// Comma-separated, header row required, '"' quoting with "" escapes.
/// Throws DataError naming the first defect (1-based data row for ragged
/// rows, the column name when the label column is missing).
RawTable parse_csv(std::istream& in, const std::string& label_column,
                   const std::string& positive_label);
RawTable load_csv(const std::filesystem::path& path, const std::string& label_column,
                  const std::string& positive_label);

/// Numeric columns pass through; any other column becomes one 0/1 indicator
/// per distinct value, named "column=value", values in lexicographic order.
/// Columns listed in `drop` are skipped. The label maps positive_label -> 1.
Dataset one_hot_encode(const RawTable& table, std::span<const std::string> drop = {});

struct PcaModel {
  Eigen::VectorXd mean;          // d
  RowMatrix components;          // k x d, orthonormal rows
  Eigen::VectorXd explained_variance;  // k, non-increasing
  double total_variance = 0.0;

  int k() const { return static_cast<int>(components.rows()); }
  int input_dim() const { return static_cast<int>(mean.size()); }
};

/// Top-k right singular directions of the centered training matrix. Each
/// component is signed so that its largest-magnitude entry is positive.
PcaModel pca_fit(const RowMatrix& train_features, int k);
RowMatrix pca_transform(const PcaModel& model, const RowMatrix& features);

struct MinMaxModel {
  Eigen::VectorXd min;
  Eigen::VectorXd max;
};

MinMaxModel minmax_fit(const RowMatrix& train_features);

/// (x - min) / (max - min), clipped into [0, 1]; constant features map to 0.
RowMatrix minmax_transform(const MinMaxModel& model, const RowMatrix& features);

/// Row positions (ascending) of a stratified split.
struct SplitIndices {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};

/// Per class: seeded shuffle, then max(1, round(count * test_fraction)) rows
/// go to test. Throws DataError if a class would be left without training rows.
SplitIndices stratified_split_indices(std::span<const int> labels, double test_fraction,
                                      std::uint64_t seed);

std::pair<Dataset, Dataset> stratified_split(const Dataset& data, double test_fraction,
                                             std::uint64_t seed);

}  // namespace qvc
