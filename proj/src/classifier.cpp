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

#include "qvc/classifier.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "qvc/error.hpp"
#include "qvc/rng.hpp"

namespace qvc {

namespace {

bool is_ad_outcome(std::size_t outcome, ParityRule rule) {
  const bool even = std::popcount(outcome) % 2 == 0;
  return rule == ParityRule::EvenIsAd ? even : !even;
}

std::uint64_t sample_key(const Dataset& data, std::size_t i) {
  return data.sample_ids.empty() ? i : data.sample_ids[i];
}

}  // namespace

std::string_view label_name(Label label) { return label == Label::Ad ? "AD" : "NON_AD"; }

Label parity_decode(std::string_view bits, ParityRule rule) {
  const auto ones = std::count(bits.begin(), bits.end(), '1');
  const bool even = ones % 2 == 0;
  const bool ad = rule == ParityRule::EvenIsAd ? even : !even;
  return ad ? Label::Ad : Label::NonAd;
}

void VqcConfig::validate() const {
  if (feature_map.n_qubits != ansatz.n_qubits) {
    throw ConfigError("feature map has " + std::to_string(feature_map.n_qubits) +
                      " qubits but the ansatz has " + std::to_string(ansatz.n_qubits));
  }
  if (measured_qubits.empty()) throw ConfigError("measured_qubits must not be empty");
  for (std::size_t i = 0; i < measured_qubits.size(); ++i) {
    const int q = measured_qubits[i];
    if (q < 0 || q >= ansatz.n_qubits) {
      throw ConfigError("measured qubit " + std::to_string(q) + " out of range");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (measured_qubits[j] == q) throw ConfigError("measured qubit " + std::to_string(q) + " repeated");
    }
  }
  if (!(loss_clip_epsilon > 0.0 && loss_clip_epsilon < 0.5)) {
    throw ConfigError("loss_clip_epsilon must lie in (0, 0.5)");
  }
}

Prediction make_prediction(double p_ad) {
  return {p_ad, p_ad >= 0.5 ? Label::Ad : Label::NonAd};
}

Classifier::Classifier(VqcConfig cfg)
    : cfg_(std::move(cfg)),
      feature_map_(build_feature_map(cfg_.feature_map)),
      ansatz_(build_ansatz(cfg_.ansatz)) {
  cfg_.validate();
}

StateVector Classifier::encode(std::span<const double> x) const {
  return qvc::encode(x, feature_map_);
}

double Classifier::readout(const StateVector& state, std::uint64_t shot_seed) const {
  if (cfg_.exact()) {
    const std::vector<double> marginal = marginal_probabilities(state, cfg_.measured_qubits);
    double p = 0.0;
    for (std::size_t m = 0; m < marginal.size(); ++m) {
      if (is_ad_outcome(m, cfg_.parity)) p += marginal[m];
    }
    return std::clamp(p, 0.0, 1.0);
  }
  const Counts counts = sample_counts(state, cfg_.shots, shot_seed, cfg_.measured_qubits);
  std::uint64_t ad = 0;
  for (const auto& [bits, n] : counts) {
    if (parity_decode(bits, cfg_.parity) == Label::Ad) ad += n;
  }
  return static_cast<double>(ad) / static_cast<double>(cfg_.shots);
}

Prediction Classifier::forward(std::span<const double> x, std::span<const double> params,
                               std::uint64_t sample_index, std::uint64_t evaluation) const {
  const StateVector state = apply_ansatz(encode(x), ansatz_, params);
  return make_prediction(readout(state, derive_seed(cfg_.seed, sample_index, evaluation)));
}

std::vector<Prediction> Classifier::predict_batch(const Dataset& samples,
                                                  std::span<const double> params,
                                                  std::uint64_t evaluation) const {
  const std::vector<GateOp> ops = ansatz_.bind({}, params);
  std::vector<Prediction> out;
  out.reserve(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    StateVector state = encode(samples.row(i));
    state.apply(ops);
    out.push_back(
        make_prediction(readout(state, derive_seed(cfg_.seed, sample_key(samples, i), evaluation))));
  }
  return out;
}

double binary_cross_entropy(std::span<const int> labels, std::span<const double> p_ad,
                            double clip_epsilon) {
  if (labels.empty()) throw ConfigError("loss of an empty dataset");
  if (labels.size() != p_ad.size()) throw ConfigError("label/probability length mismatch");
  double total = 0.0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const double p = std::clamp(p_ad[i], clip_epsilon, 1.0 - clip_epsilon);
    if (labels[i] == kAd) {
      total += std::log(p);
    } else if (labels[i] == kNonAd) {
      total += std::log1p(-p);
    } else {
      throw ConfigError("label " + std::to_string(labels[i]) + " is not 0 or 1");
    }
  }
  return -total / static_cast<double>(labels.size());
}

double Classifier::loss(const Dataset& data, std::span<const double> params,
                        std::uint64_t evaluation) const {
  if (data.size() == 0) throw ConfigError("loss of an empty dataset");
  const std::vector<Prediction> preds = predict_batch(data, params, evaluation);
  std::vector<double> p(preds.size());
  for (std::size_t i = 0; i < preds.size(); ++i) p[i] = preds[i].p_ad;
  return binary_cross_entropy(data.labels, p, cfg_.loss_clip_epsilon);
}

double Classifier::loss_from_encoded(const std::vector<StateVector>& encoded,
                                     std::span<const int> labels,
                                     std::span<const std::size_t> sample_index,
                                     std::span<const double> params,
                                     std::uint64_t evaluation) const {
  const std::vector<GateOp> ops = ansatz_.bind({}, params);
  std::vector<double> p(encoded.size());
  for (std::size_t i = 0; i < encoded.size(); ++i) {
    StateVector state = encoded[i];
    state.apply(ops);
    p[i] = readout(state, derive_seed(cfg_.seed, sample_index[i], evaluation));
  }
  return binary_cross_entropy(labels, p, cfg_.loss_clip_epsilon);
}

TrainingRun Classifier::train(const Dataset& train_set, const SpsaConfig& spsa,
                              const IterationCallback& on_iteration) const {
  if (train_set.size() == 0) throw ConfigError("training set is empty");
  train_set.validate();

  std::vector<StateVector> encoded;
  std::vector<std::size_t> keys;
  encoded.reserve(train_set.size());
  for (std::size_t i = 0; i < train_set.size(); ++i) {
    encoded.push_back(encode(train_set.row(i)));
    keys.push_back(sample_key(train_set, i));
  }

  std::uint64_t evaluation = 0;
  const Objective objective = [&](std::span<const double> params) {
    return loss_from_encoded(encoded, train_set.labels, keys, params, evaluation++);
  };

  const std::vector<double> theta0 = init_params(cfg_.ansatz, cfg_.init_seed);
  TrainingRun run = spsa_minimize(objective, theta0, spsa, on_iteration);
  run.seeds_used.init = cfg_.init_seed;
  run.seeds_used.shots = cfg_.seed;
  return run;
}

Prediction forward(std::span<const double> x, std::span<const double> params,
                   const VqcConfig& cfg) {
  return Classifier(cfg).forward(x, params);
}

double loss(const Dataset& data, std::span<const double> params, const VqcConfig& cfg) {
  return Classifier(cfg).loss(data, params);
}

TrainingRun train(const Dataset& train_set, const VqcConfig& cfg, const SpsaConfig& spsa) {
  return Classifier(cfg).train(train_set, spsa);
}

std::vector<Prediction> predict_batch(const Dataset& samples, std::span<const double> params,
                                      const VqcConfig& cfg) {
  return Classifier(cfg).predict_batch(samples, params);
}

}  // namespace qvc
