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

#include <cmath>
#include <numbers>
#include <sstream>

#include "gtest/gtest.h"
#include "qvc/error.hpp"
#include "qvc/rng.hpp"

namespace qvc {
namespace {

RowMatrix random_unit_rows(Rng& rng, int rows, int cols) {
  RowMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rng.uniform01();
  return m;
}

std::span<const double> row(const RowMatrix& m, Eigen::Index i) {
  return {m.row(i).data(), static_cast<std::size_t>(m.cols())};
}

TEST(KernelEntry, SelfOverlapIsOne) {
  Rng rng(1);
  const FeatureMapSpec spec{5, 1, Entanglement::Full};
  const RowMatrix x = random_unit_rows(rng, 10, 5);
  for (Eigen::Index i = 0; i < 10; ++i) EXPECT_NEAR(kernel_entry(row(x, i), row(x, i), spec), 1.0, 1e-12);
}

TEST(KernelEntry, OrthogonalSingleQubitStates) {
  // Scale the single-feature map so x = 1 binds the slot to pi/2.
  DataMap map = default_data_map();
  map.single = [](double x) { return x * std::numbers::pi / 2; };
  const std::vector<double> a{0.0}, b{1.0};
  EXPECT_NEAR(kernel_entry(a, b, {1, 1, Entanglement::Full}, map), 0.0, 1e-15);
}

TEST(KernelEntry, Symmetric) {
  Rng rng(2);
  const FeatureMapSpec spec{4, 2, Entanglement::Linear};
  const RowMatrix x = random_unit_rows(rng, 20, 4);
  for (Eigen::Index i = 0; i + 1 < 20; i += 2) {
    EXPECT_NEAR(kernel_entry(row(x, i), row(x, i + 1), spec), kernel_entry(row(x, i + 1), row(x, i), spec), 1e-12);
  }
}

TEST(KernelEntry, DimensionMismatch) {
  const std::vector<double> a{0.1, 0.2}, b{0.1};
  EXPECT_THROW(kernel_entry(a, b, {2, 1, Entanglement::Full}), EncodingError);
}

TEST(KernelMatrix, GramProperties) {
  Rng rng(3);
  const FeatureMapSpec spec{5, 1, Entanglement::Full};
  const RowMatrix x = random_unit_rows(rng, 20, 5);
  const KernelMatrix k = kernel_matrix(x, x, spec);
  ASSERT_EQ(k.values.rows(), 20);
  EXPECT_LE((k.values - k.values.transpose()).cwiseAbs().maxCoeff(), 1e-10);
  for (Eigen::Index i = 0; i < 20; ++i) EXPECT_NEAR(k.values(i, i), 1.0, 1e-10);
  EXPECT_GE(k.values.minCoeff(), 0.0);
  EXPECT_LE(k.values.maxCoeff(), 1.0);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(Eigen::MatrixXd(k.values));
  EXPECT_GE(eig.eigenvalues().minCoeff(), -1e-8);
}

TEST(KernelMatrix, CachedEqualsPerPair) {
  Rng rng(4);
  const FeatureMapSpec spec{3, 2, Entanglement::Full};
  const RowMatrix a = random_unit_rows(rng, 6, 3);
  const RowMatrix b = random_unit_rows(rng, 4, 3);
  const KernelMatrix k = kernel_matrix(a, b, spec);
  for (Eigen::Index i = 0; i < 6; ++i)
    for (Eigen::Index j = 0; j < 4; ++j)
      EXPECT_NEAR(k.values(i, j), kernel_entry(row(a, i), row(b, j), spec), 1e-12);
}

TEST(KernelMatrix, Shapes) {
  Rng rng(5);
  const FeatureMapSpec spec{2, 1, Entanglement::Full};
  const RowMatrix one = random_unit_rows(rng, 1, 2);
  const KernelMatrix single = kernel_matrix(one, one, spec);
  ASSERT_EQ(single.values.size(), 1);
  EXPECT_NEAR(single.values(0, 0), 1.0, 1e-12);
  const KernelMatrix rect = kernel_matrix(random_unit_rows(rng, 3, 2), random_unit_rows(rng, 2, 2), spec);
  EXPECT_EQ(rect.values.rows(), 3);
  EXPECT_EQ(rect.values.cols(), 2);
}

TEST(KernelMatrix, CsvLayout) {
  Dataset rows;
  rows.features = RowMatrix::Constant(2, 1, 0.25);
  rows.labels = {1, 0};
  rows.sample_ids = {7, 3};
  const KernelMatrix k = kernel_matrix(rows, rows, {1, 1, Entanglement::Full});
  std::ostringstream out;
  write_kernel_csv(out, k);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "sample_id,7,3");
  for (const char* id : {"7,", "3,"}) {
    std::getline(in, line);
    ASSERT_EQ(line.rfind(id, 0), 0u) << line;
    std::istringstream cells(line.substr(2));
    std::string cell;
    int n = 0;
    while (std::getline(cells, cell, ',')) {
      EXPECT_NEAR(std::stod(cell), 1.0, 1e-12);
      ++n;
    }
    EXPECT_EQ(n, 2);
  }
  EXPECT_FALSE(std::getline(in, line));
}

}  // namespace
}  // namespace qvc
