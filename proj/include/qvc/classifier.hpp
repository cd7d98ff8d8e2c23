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

// The variational classifier: feature map -> ansatz -> parity readout.
//
// A sample's AD probability is the probability mass of measured outcomes
// with an even number of ones (ParityRule::EvenIsAd). In exact mode it is read
// off the statevector; in shot mode it is the even-parity fraction of
// `shots` samples drawn with seed derive_seed(seed, sample_index,
// evaluation_counter), which makes every draw independent of evaluation order.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "qvc/ansatz.hpp"
#include "qvc/dataset.hpp"
#include "qvc/featmap.hpp"
#include "qvc/spsa.hpp"
#include "qvc/statevec.hpp"

namespace qvc {

enum class Label { NonAd = 0, Ad = 1 };

enum class ParityRule { EvenIsAd, OddIsAd };

std::string_view label_name(Label label);

/// AD for an even count of '1' characters (zero included), NON_AD for odd.
Label parity_decode(std::string_view bits, ParityRule rule = ParityRule::EvenIsAd);

struct VqcConfig {
  FeatureMapSpec feature_map;
  AnsatzSpec ansatz;
  std::vector<int> measured_qubits{0, 1};
  // 0 selects exact probabilities.
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::uint64_t init_seed = 0;
  double loss_clip_epsilon = 1e-9;
  ParityRule parity = ParityRule::EvenIsAd;

  bool exact() const { return shots == 0; }
  void validate() const;
};

struct Prediction {
  double p_ad = 0.0;
  Label label = Label::NonAd;
};

Prediction make_prediction(double p_ad);

class Classifier {
 public:
  explicit Classifier(VqcConfig cfg);

  const VqcConfig& config() const { return cfg_; }
  const Circuit& feature_map() const { return feature_map_; }
  const Circuit& ansatz() const { return ansatz_; }

  StateVector encode(std::span<const double> x) const;

  /// AD probability of an already-evolved state.
  double readout(const StateVector& state, std::uint64_t shot_seed) const;

  Prediction forward(std::span<const double> x, std::span<const double> params,
                     std::uint64_t sample_index = 0, std::uint64_t evaluation = 0) const;

  std::vector<Prediction> predict_batch(const Dataset& samples, std::span<const double> params,
                                        std::uint64_t evaluation = 0) const;

  /// Mean binary cross-entropy with p clipped to [eps, 1 - eps].
  double loss(const Dataset& data, std::span<const double> params,
              std::uint64_t evaluation = 0) const;

  /// SPSA from init_params(ansatz, init_seed). Feature-map states are
  /// encoded once up front; each objective call bumps the evaluation counter.
  TrainingRun train(const Dataset& train_set, const SpsaConfig& spsa,
                    const IterationCallback& on_iteration = {}) const;

 private:
  double loss_from_encoded(const std::vector<StateVector>& encoded, std::span<const int> labels,
                           std::span<const std::size_t> sample_index,
                           std::span<const double> params, std::uint64_t evaluation) const;

  VqcConfig cfg_;
  Circuit feature_map_;
  Circuit ansatz_;
};

/// Binary cross-entropy of probabilities against 0/1 labels.
double binary_cross_entropy(std::span<const int> labels, std::span<const double> p_ad,
                            double clip_epsilon);

Prediction forward(std::span<const double> x, std::span<const double> params,
                   const VqcConfig& cfg);
double loss(const Dataset& data, std::span<const double> params, const VqcConfig& cfg);
TrainingRun train(const Dataset& train_set, const VqcConfig& cfg, const SpsaConfig& spsa);
std::vector<Prediction> predict_batch(const Dataset& samples, std::span<const double> params,
                                      const VqcConfig& cfg);

}  // namespace qvc
