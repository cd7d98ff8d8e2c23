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

#include <cmath>

#include "gtest/gtest.h"
#include "oracle.hpp"
#include "qvc/error.hpp"
#include "qvc/rng.hpp"

namespace qvc {
namespace {

TEST(Confusion, Counts) {
  const std::vector<int> y{1, 0};
  EXPECT_EQ(confusion(y, y), (ConfusionMatrix{1, 1, 0, 0}));
  const std::vector<int> t{1, 1, 1, 1, 0, 0, 0, 0}, p{1, 1, 1, 0, 0, 0, 0, 1};
  const ConfusionMatrix cm = confusion(t, p);
  EXPECT_EQ(cm, (ConfusionMatrix{3, 3, 1, 1}));
  EXPECT_EQ(confusion(t, p, kNonAd), (ConfusionMatrix{3, 3, 1, 1}));
  EXPECT_EQ(cm.total(), 8u);
}

TEST(Confusion, SwapIdentity) {
  Rng rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> t(20), p(20);
    for (int i = 0; i < 20; ++i) {
      t[i] = static_cast<int>(rng.below(2));
      p[i] = static_cast<int>(rng.below(2));
    }
    EXPECT_EQ(confusion(t, p, kNonAd), confusion(t, p, kAd).swapped());
  }
}

TEST(Confusion, LengthMismatch) {
  const std::vector<int> a{1, 0}, b{1};
  EXPECT_THROW(confusion(a, b), DataError);
}

TEST(Scores, HandArithmetic) {
  const Scores perfect = scores_from_confusion({1, 1, 0, 0});
  EXPECT_EQ(perfect.accuracy, 1.0);
  EXPECT_EQ(perfect.sensitivity, 1.0);
  EXPECT_EQ(perfect.specificity, 1.0);
  EXPECT_EQ(perfect.f1, 1.0);
  const Scores s = scores_from_confusion({3, 3, 1, 1});
  EXPECT_EQ(s.accuracy, 0.75);
  EXPECT_EQ(s.sensitivity, 0.75);
  EXPECT_EQ(s.specificity, 0.75);
  EXPECT_EQ(s.f1, 0.75);
  EXPECT_FALSE(s.sensitivity_undefined || s.specificity_undefined || s.f1_undefined);
}

TEST(Scores, NoPositivesFlagged) {
  const Scores s = scores_from_confusion({0, 4, 1, 0});
  EXPECT_EQ(s.sensitivity, 0.0);
  EXPECT_TRUE(s.sensitivity_undefined);
  EXPECT_FALSE(s.specificity_undefined);
  EXPECT_FALSE(s.f1_undefined);
  const Scores none = scores_from_confusion({0, 4, 0, 0});
  EXPECT_TRUE(none.f1_undefined);
}

TEST(Scores, ExactRationals) {
  for (std::uint64_t tp = 0; tp < 12; ++tp)
    for (std::uint64_t tn = 0; tn < 12; ++tn)
      for (std::uint64_t fp = 0; fp < 6; ++fp)
        for (std::uint64_t fn = 0; fn < 6; ++fn) {
          const ConfusionMatrix cm{tp, tn, fp, fn};
          if (cm.total() == 0) continue;
          const Scores s = scores_from_confusion(cm);
          EXPECT_EQ(s.accuracy, static_cast<double>(tp + tn) / static_cast<double>(cm.total()));
          if (tp + fn) EXPECT_EQ(s.sensitivity, static_cast<double>(tp) / static_cast<double>(tp + fn));
          if (tn + fp) EXPECT_EQ(s.specificity, static_cast<double>(tn) / static_cast<double>(tn + fp));
        }
}

TEST(Auroc, Examples) {
  const std::vector<int> y{1, 1, 0, 0};
  const std::vector<double> separated{0.9, 0.8, 0.2, 0.1};
  EXPECT_EQ(auroc(y, separated), 1.0);
  const std::vector<double> ties(4, 0.3);
  EXPECT_EQ(auroc(y, ties), 0.5);
  const std::vector<int> y2{1, 0, 1, 0};
  const std::vector<double> s2{0.9, 0.8, 0.3, 0.1};
  EXPECT_EQ(auroc(y2, s2), 0.75);
}

TEST(Auroc, MatchesPairwiseOracleWithTies) {
  Rng rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng.below(49);
    std::vector<int> y(n);
    std::vector<double> s(n);
    for (std::size_t i = 0; i < n; ++i) {
      y[i] = static_cast<int>(rng.below(2));
      s[i] = static_cast<double>(rng.below(8)) / 8.0;  // coarse grid forces ties
    }
    y[0] = 1;
    y[1] = 0;
    EXPECT_EQ(auroc(y, s), oracle::auroc_pairs(y, s)) << "trial " << trial;
  }
}

TEST(Auroc, InvariantUnderMonotoneTransform) {
  Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<int> y(25);
    std::vector<double> s(25), t(25), neg(25);
    for (int i = 0; i < 25; ++i) {
      y[i] = i % 2;
      s[i] = rng.uniform01();
      t[i] = std::exp(3.0 * s[i]) - 7.0;
      neg[i] = -s[i];
    }
    EXPECT_EQ(auroc(y, s), auroc(y, t));
    EXPECT_NEAR(auroc(y, s) + auroc(y, neg), 1.0, 1e-15);
  }
}

TEST(Auroc, SingleClassUndefined) {
  const std::vector<int> y{1, 1};
  const std::vector<double> s{0.2, 0.4};
  EXPECT_THROW(auroc(y, s), DataError);
}

TEST(Evaluate, CohortSymmetry) {
  const std::vector<int> y{1, 1, 1, 1, 0, 0, 0, 0, 0};
  const std::vector<double> p{0.9, 0.7, 0.6, 0.2, 0.1, 0.3, 0.55, 0.4, 0.45};
  const MetricsReport r = evaluate(y, p);
  EXPECT_EQ(r.ad.confusion, (ConfusionMatrix{3, 4, 1, 1}));
  EXPECT_EQ(r.non_ad.confusion, r.ad.confusion.swapped());
  EXPECT_EQ(r.ad.scores.accuracy, r.non_ad.scores.accuracy);
  EXPECT_EQ(r.non_ad.scores.sensitivity, r.ad.scores.specificity);
  ASSERT_TRUE(r.ad.auroc && r.non_ad.auroc);
  EXPECT_NEAR(*r.ad.auroc, *r.non_ad.auroc, 1e-15);
  EXPECT_NEAR(*r.ad.auroc, oracle::auroc_pairs(y, p), 1e-15);
}

TEST(Evaluate, SingleClassLeavesAurocEmpty) {
  const std::vector<int> y{0, 0, 0};
  const std::vector<double> p{0.1, 0.6, 0.2};
  const MetricsReport r = evaluate(y, p);
  EXPECT_FALSE(r.ad.auroc.has_value());
  EXPECT_FALSE(r.auroc_diagnostic.empty());
  EXPECT_EQ(r.ad.confusion.total(), 3u);
}

}  // namespace
}  // namespace qvc
