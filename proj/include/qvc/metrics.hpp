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

// Confusion-matrix scores and AUROC for the binary AD / NON_AD task.

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "qvc/dataset.hpp"

namespace qvc {

struct ConfusionMatrix {
  std::uint64_t tp = 0;
  std::uint64_t tn = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;

  std::uint64_t total() const { return tp + tn + fp + fn; }

  /// The same predictions viewed with the other class as positive.
  ConfusionMatrix swapped() const { return {tn, tp, fn, fp}; }

  friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;
};

ConfusionMatrix confusion(std::span<const int> y_true, std::span<const int> y_pred,
                          int positive_class = kAd);

/// Accuracy, sensitivity, specificity and F1 from the four counts. A ratio
/// whose denominator is zero is reported as 0 with its `*_undefined` flag set.
struct Scores {
  double accuracy = 0.0;
  double sensitivity = 0.0;
  double specificity = 0.0;
  double f1 = 0.0;
  bool sensitivity_undefined = false;
  bool specificity_undefined = false;
  bool f1_undefined = false;
};

Scores scores_from_confusion(const ConfusionMatrix& cm);

/// Probability that a random positive outscores a random negative, ties
/// counted as 1/2 (Mann-Whitney U / (P * N)). Computed from midranks in
/// O(n log n). Throws DataError when only one class is present.
double auroc(std::span<const int> y_true, std::span<const double> scores, int positive_class = kAd);

struct CohortMetrics {
  ConfusionMatrix confusion;
  Scores scores;
  std::optional<double> auroc;  // empty when the labels hold a single class
};

/// Both views of one set of predictions: AD as positive class, and NON_AD as
/// positive class (confusion swapped, scores 1 - p_ad).
struct MetricsReport {
  CohortMetrics ad;
  CohortMetrics non_ad;
  std::string auroc_diagnostic;
};

/// Labels are thresholded at p_ad >= 0.5.
MetricsReport evaluate(std::span<const int> y_true, std::span<const double> p_ad);

}  // namespace qvc
