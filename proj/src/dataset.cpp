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

#include "qvc/dataset.hpp"

#include <cmath>
#include <string>

#include "qvc/error.hpp"

namespace qvc {

Dataset Dataset::subset(std::span<const std::size_t> positions) const {
  Dataset out;
  out.feature_names = feature_names;
  out.features.resize(static_cast<Eigen::Index>(positions.size()), features.cols());
  out.labels.reserve(positions.size());
  out.sample_ids.reserve(positions.size());
  for (std::size_t r = 0; r < positions.size(); ++r) {
    const std::size_t p = positions[r];
    if (p >= size()) throw DataError("row position " + std::to_string(p) + " out of range");
    out.features.row(static_cast<Eigen::Index>(r)) = features.row(static_cast<Eigen::Index>(p));
    out.labels.push_back(labels[p]);
    out.sample_ids.push_back(sample_ids.empty() ? p : sample_ids[p]);
  }
  return out;
}

void Dataset::validate() const {
  if (static_cast<std::size_t>(features.rows()) != labels.size()) {
    throw DataError("dataset has " + std::to_string(features.rows()) + " feature rows but " +
                    std::to_string(labels.size()) + " labels");
  }
  if (!sample_ids.empty() && sample_ids.size() != labels.size()) {
    throw DataError("dataset sample id count does not match row count");
  }
  if (!feature_names.empty() && feature_names.size() != dim()) {
    throw DataError("dataset feature name count does not match column count");
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] != kAd && labels[i] != kNonAd) {
      throw DataError("label of row " + std::to_string(i) + " is not 0 or 1");
    }
  }
  if (!features.allFinite()) throw DataError("dataset contains non-finite feature values");
}

}  // namespace qvc
