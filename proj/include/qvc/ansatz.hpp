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

// Trainable Ry/Rz circuit with alternating CY/CZ entanglers.
//
// Layout for reps = R on n qubits:
//
//   repeat R times:  RY on every qubit, RZ on every qubit, entangling block
//   final layer:     RY on every qubit, RZ on every qubit
//
// Parameters are indexed layer-major, qubit-minor: layer l uses slots
// [2nl, 2nl + n) for RY and [2nl + n, 2nl + 2n) for RZ, so the count is
// 2 * n * (R + 1). Entangler i of the block (pairs from entangled_pairs())
// is CY when i is even and CZ when i is odd; EntanglerOrder::CzFirst swaps
// the roles.

#include <cstdint>
#include <span>
#include <vector>

#include "qvc/featmap.hpp"
#include "qvc/statevec.hpp"

namespace qvc {

enum class EntanglerOrder { CyFirst, CzFirst };

struct AnsatzSpec {
  int n_qubits = 5;
  int reps = 2;
  Entanglement entanglement = Entanglement::Linear;
  EntanglerOrder order = EntanglerOrder::CyFirst;

  int param_count() const { return 2 * n_qubits * (reps + 1); }
};

Circuit build_ansatz(const AnsatzSpec& spec);

/// i.i.d. uniform on (-pi, pi].
std::vector<double> init_params(const AnsatzSpec& spec, std::uint64_t seed);

StateVector apply_ansatz(StateVector state, const AnsatzSpec& spec, std::span<const double> params);

/// Same as above with a prebuilt ansatz circuit.
StateVector apply_ansatz(StateVector state, const Circuit& ansatz, std::span<const double> params);

}  // namespace qvc
