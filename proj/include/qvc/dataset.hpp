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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qvc {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline constexpr int kAd = 1;
inline constexpr int kNonAd = 0;

/// Numeric samples with binary labels (AD = 1, NON_AD = 0). Row i of
/// `features` belongs to sample_ids[i], the 0-based data-row index in the
/// source table.
struct Dataset {
  RowMatrix features;
  std::vector<int> labels;
  std::vector<std::string> feature_names;
  std::vector<std::size_t> sample_ids;

  std::size_t size() const { return labels.size(); }
  std::size_t dim() const { return static_cast<std::size_t>(features.cols()); }

  std::span<const double> row(std::size_t i) const {
    return {features.data() + i * static_cast<std::size_t>(features.cols()),
            static_cast<std::size_t>(features.cols())};
  }

  /// Rows at the given positions, in that order.
  Dataset subset(std::span<const std::size_t> positions) const;

  /// Throws DataError on shape mismatches or labels outside {0, 1}.
  void validate() const;
};

}  // namespace qvc
