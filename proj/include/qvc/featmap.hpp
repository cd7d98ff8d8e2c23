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

// Second-order Z/ZZ feature map.
//
// One repetition on n qubits is
//
//   H on every qubit
//   P(2 * phi(x_j)) on every qubit j
//   for each entangled pair (j, k):  CX(j, k)  P(2 * phi(x_j, x_k)) on k  CX(j, k)
//
// The CX-P-CX sandwich realizes exp(i * phi * Z_j Z_k) up to a global phase.

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "qvc/statevec.hpp"

namespace qvc {

enum class Entanglement { Full, Linear };

std::string_view entanglement_name(Entanglement e);
Entanglement parse_entanglement(std::string_view name);

/// Qubit pairs (j < k) coupled by an entangling layer. Full: every pair in
/// lexicographic order. Linear: (0,1), (1,2), ...
std::vector<std::pair<int, int>> entangled_pairs(int n_qubits, Entanglement e);

struct FeatureMapSpec {
  int n_qubits = 5;
  int reps = 1;
  Entanglement entanglement = Entanglement::Full;
};

/// phi(x_j) = x_j,  phi(x_j, x_k) = (pi - x_j)(pi - x_k).
DataMap default_data_map();

/// Circuit with symbolic feature slots; feature j feeds slot j.
Circuit build_feature_map(const FeatureMapSpec& spec, DataMap data_map = default_data_map());

/// |phi(x)>. Features must be min-max normalized: length n_qubits, entries in
/// [0, 1]. Throws EncodingError otherwise.
StateVector encode(std::span<const double> x, const FeatureMapSpec& spec,
                   const DataMap& data_map = default_data_map());

/// encode() against a prebuilt feature-map circuit.
StateVector encode(std::span<const double> x, const Circuit& feature_map);

}  // namespace qvc
