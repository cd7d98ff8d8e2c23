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

// Fidelity kernel of the feature map: k(x, x') = |<phi(x')|phi(x)>|^2.

#include <cstddef>
#include <ostream>
#include <span>
#include <vector>

#include "qvc/dataset.hpp"
#include "qvc/featmap.hpp"

namespace qvc {

struct KernelMatrix {
  std::vector<std::size_t> row_ids;
  std::vector<std::size_t> col_ids;
  RowMatrix values;
};

double kernel_entry(std::span<const double> x, std::span<const double> x_prime,
                    const FeatureMapSpec& spec, const DataMap& data_map = default_data_map());

/// Entry (i, j) = kernel_entry(rows[i], cols[j]). Every sample is encoded
/// once; the pair loop only takes inner products.
KernelMatrix kernel_matrix(const Dataset& rows, const Dataset& cols, const FeatureMapSpec& spec,
                           const DataMap& data_map = default_data_map());

KernelMatrix kernel_matrix(const RowMatrix& rows, const RowMatrix& cols, const FeatureMapSpec& spec,
                           const DataMap& data_map = default_data_map());

/// Header "sample_id,<col ids...>", then one line per row id; values with 17
/// significant digits.
void write_kernel_csv(std::ostream& out, const KernelMatrix& kernel);

}  // namespace qvc
