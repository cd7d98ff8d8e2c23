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

#include "qvc/metrics.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "qvc/error.hpp"

namespace qvc {

namespace {

double ratio(std::uint64_t num, std::uint64_t den, bool& undefined) {
  undefined = den == 0;
  return undefined ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

ConfusionMatrix confusion(std::span<const int> y_true, std::span<const int> y_pred,
                          int positive_class) {
  if (y_true.size() != y_pred.size()) {
    throw DataError("confusion: " + std::to_string(y_true.size()) + " true labels vs " +
                    std::to_string(y_pred.size()) + " predictions");
  }
  if (y_true.empty()) throw DataError("confusion: no samples");
  ConfusionMatrix cm;
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    const bool actual = y_true[i] == positive_class;
    const bool predicted = y_pred[i] == positive_class;
    if (actual && predicted) ++cm.tp;
    else if (!actual && !predicted) ++cm.tn;
    else if (predicted) ++cm.fp;
    else ++cm.fn;
  }
  return cm;
}

Scores scores_from_confusion(const ConfusionMatrix& cm) {
  Scores s;
  bool unused = false;
  s.accuracy = ratio(cm.tp + cm.tn, cm.total(), unused);
  s.sensitivity = ratio(cm.tp, cm.tp + cm.fn, s.sensitivity_undefined);
  s.specificity = ratio(cm.tn, cm.tn + cm.fp, s.specificity_undefined);
  s.f1 = ratio(2 * cm.tp, 2 * cm.tp + cm.fp + cm.fn, s.f1_undefined);
  return s;
}

double auroc(std::span<const int> y_true, std::span<const double> scores, int positive_class) {
  if (y_true.size() != scores.size()) throw DataError("auroc: label/score length mismatch");
  const std::size_t n = y_true.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

  // Sum of 1-based midranks of the positives.
  double positive_rank_sum = 0.0;
  std::uint64_t positives = 0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && scores[order[j]] == scores[order[i]]) ++j;
    const double midrank = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t t = i; t < j; ++t) {
      if (y_true[order[t]] == positive_class) {
        positive_rank_sum += midrank;
        ++positives;
      }
    }
    i = j;
  }
  const std::uint64_t negatives = n - positives;
  if (positives == 0 || negatives == 0) {
    throw DataError("auroc is undefined: only one class present among " + std::to_string(n) +
                    " samples");
  }
  const double p = static_cast<double>(positives);
  const double u = positive_rank_sum - p * (p + 1.0) / 2.0;
  return u / (p * static_cast<double>(negatives));
}

MetricsReport evaluate(std::span<const int> y_true, std::span<const double> p_ad) {
  if (y_true.size() != p_ad.size()) throw DataError("evaluate: label/score length mismatch");
  std::vector<int> y_pred(p_ad.size());
  std::vector<double> p_non_ad(p_ad.size());
  for (std::size_t i = 0; i < p_ad.size(); ++i) {
    y_pred[i] = p_ad[i] >= 0.5 ? kAd : kNonAd;
    p_non_ad[i] = 1.0 - p_ad[i];
  }

  MetricsReport report;
  report.ad.confusion = confusion(y_true, y_pred, kAd);
  report.ad.scores = scores_from_confusion(report.ad.confusion);
  report.non_ad.confusion = report.ad.confusion.swapped();
  report.non_ad.scores = scores_from_confusion(report.non_ad.confusion);
  try {
    report.ad.auroc = auroc(y_true, p_ad, kAd);
    report.non_ad.auroc = auroc(y_true, p_non_ad, kNonAd);
  } catch (const DataError& e) {
    report.ad.auroc.reset();
    report.non_ad.auroc.reset();
    report.auroc_diagnostic = e.what();
  }
  return report;
}

}  // namespace qvc
