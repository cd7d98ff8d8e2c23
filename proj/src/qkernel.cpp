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

#include "qvc/qkernel.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "qvc/error.hpp"
#include "qvc/format.hpp"

namespace qvc {

namespace {

std::vector<StateVector> encode_rows(const RowMatrix& m, const Circuit& feature_map) {
  std::vector<StateVector> states;
  states.reserve(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    states.push_back(encode({m.row(i).data(), static_cast<std::size_t>(m.cols())}, feature_map));
  }
  return states;
}

std::vector<std::size_t> default_ids(Eigen::Index n) {
  std::vector<std::size_t> ids(static_cast<std::size_t>(n));
  std::iota(ids.begin(), ids.end(), std::size_t{0});
  return ids;
}

}  // namespace

double kernel_entry(std::span<const double> x, std::span<const double> x_prime,
                    const FeatureMapSpec& spec, const DataMap& data_map) {
  if (x.size() != x_prime.size()) {
    throw EncodingError("kernel inputs have different lengths (" + std::to_string(x.size()) +
                        " vs " + std::to_string(x_prime.size()) + ")");
  }
  const Circuit fm = build_feature_map(spec, data_map);
  const double fidelity = std::norm(inner_product(encode(x_prime, fm), encode(x, fm)));
  return std::clamp(fidelity, 0.0, 1.0);
}

KernelMatrix kernel_matrix(const RowMatrix& rows, const RowMatrix& cols,
                           const FeatureMapSpec& spec, const DataMap& data_map) {
  const Circuit fm = build_feature_map(spec, data_map);
  const std::vector<StateVector> row_states = encode_rows(rows, fm);
  const std::vector<StateVector> col_states = encode_rows(cols, fm);

  KernelMatrix k;
  k.row_ids = default_ids(rows.rows());
  k.col_ids = default_ids(cols.rows());
  k.values.resize(rows.rows(), cols.rows());
  for (std::size_t i = 0; i < row_states.size(); ++i) {
    for (std::size_t j = 0; j < col_states.size(); ++j) {
      k.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          std::clamp(std::norm(inner_product(col_states[j], row_states[i])), 0.0, 1.0);
    }
  }
  return k;
}

KernelMatrix kernel_matrix(const Dataset& rows, const Dataset& cols, const FeatureMapSpec& spec,
                           const DataMap& data_map) {
  KernelMatrix k = kernel_matrix(rows.features, cols.features, spec, data_map);
  if (!rows.sample_ids.empty()) k.row_ids = rows.sample_ids;
  if (!cols.sample_ids.empty()) k.col_ids = cols.sample_ids;
  return k;
}

void write_kernel_csv(std::ostream& out, const KernelMatrix& kernel) {
  out << "sample_id";
  for (std::size_t id : kernel.col_ids) out << ',' << id;
  out << '\n';
  for (Eigen::Index i = 0; i < kernel.values.rows(); ++i) {
    out << kernel.row_ids[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < kernel.values.cols(); ++j) {
      out << ',' << format_double(kernel.values(i, j));
    }
    out << '\n';
  }
}

}  // namespace qvc
