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

#include "qvc/featmap.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qvc/error.hpp"

namespace qvc {

std::string_view entanglement_name(Entanglement e) {
  return e == Entanglement::Full ? "full" : "linear";
}

Entanglement parse_entanglement(std::string_view name) {
  if (name == "full") return Entanglement::Full;
  if (name == "linear") return Entanglement::Linear;
  throw ConfigError("unknown entanglement '" + std::string(name) + "' (expected full or linear)");
}

std::vector<std::pair<int, int>> entangled_pairs(int n_qubits, Entanglement e) {
  std::vector<std::pair<int, int>> pairs;
  if (e == Entanglement::Linear) {
    for (int j = 0; j + 1 < n_qubits; ++j) pairs.emplace_back(j, j + 1);
    return pairs;
  }
  for (int j = 0; j < n_qubits; ++j) {
    for (int k = j + 1; k < n_qubits; ++k) pairs.emplace_back(j, k);
  }
  return pairs;
}

DataMap default_data_map() {
  return DataMap{
      [](double x) { return x; },
      [](double xj, double xk) { return (std::numbers::pi - xj) * (std::numbers::pi - xk); },
  };
}

Circuit build_feature_map(const FeatureMapSpec& spec, DataMap data_map) {
  if (spec.reps < 1) throw ConfigError("feature map reps must be at least 1");
  Circuit circuit(spec.n_qubits);
  circuit.set_data_map(std::move(data_map));
  const auto pairs = entangled_pairs(spec.n_qubits, spec.entanglement);
  for (int r = 0; r < spec.reps; ++r) {
    for (int q = 0; q < spec.n_qubits; ++q) circuit.add(GateOp::h(q));
    for (int q = 0; q < spec.n_qubits; ++q) circuit.add(GateOp::p(q, Angle::feature(q, 2.0)));
    for (const auto& [j, k] : pairs) {
      circuit.add(GateOp::cx(j, k));
      circuit.add(GateOp::p(k, Angle::feature_pair(j, k, 2.0)));
      circuit.add(GateOp::cx(j, k));
    }
  }
  return circuit;
}

StateVector encode(std::span<const double> x, const Circuit& feature_map) {
  if (x.size() != static_cast<std::size_t>(feature_map.n_qubits())) {
    throw EncodingError("feature vector has " + std::to_string(x.size()) + " entries, expected " +
                        std::to_string(feature_map.n_qubits()));
  }
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (!(x[j] >= 0.0 && x[j] <= 1.0)) {
      throw EncodingError("feature " + std::to_string(j) + " = " + std::to_string(x[j]) +
                          " is outside [0, 1]; normalize before encoding");
    }
  }
  return run_circuit(feature_map, x, {});
}

StateVector encode(std::span<const double> x, const FeatureMapSpec& spec,
                   const DataMap& data_map) {
  return encode(x, build_feature_map(spec, data_map));
}

}  // namespace qvc
