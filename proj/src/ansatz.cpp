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

#include "qvc/ansatz.hpp"

#include <numbers>
#include <string>

#include "qvc/error.hpp"
#include "qvc/rng.hpp"

namespace qvc {

namespace {

void add_rotation_layer(Circuit& circuit, int n, int layer) {
  const int base = 2 * n * layer;
  for (int q = 0; q < n; ++q) circuit.add(GateOp::ry(q, Angle::param(base + q)));
  for (int q = 0; q < n; ++q) circuit.add(GateOp::rz(q, Angle::param(base + n + q)));
}

}  // namespace

Circuit build_ansatz(const AnsatzSpec& spec) {
  if (spec.reps < 1) throw ConfigError("ansatz reps must be at least 1");
  Circuit circuit(spec.n_qubits);
  const auto pairs = entangled_pairs(spec.n_qubits, spec.entanglement);
  const std::size_t cy_parity = spec.order == EntanglerOrder::CyFirst ? 0 : 1;
  for (int r = 0; r < spec.reps; ++r) {
    add_rotation_layer(circuit, spec.n_qubits, r);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto [control, target] = pairs[i];
      circuit.add(i % 2 == cy_parity ? GateOp::cy(control, target) : GateOp::cz(control, target));
    }
  }
  add_rotation_layer(circuit, spec.n_qubits, spec.reps);
  return circuit;
}

std::vector<double> init_params(const AnsatzSpec& spec, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> params(static_cast<std::size_t>(spec.param_count()));
  // pi - 2pi*u with u in [0, 1) lands in (-pi, pi].
  for (double& p : params) p = std::numbers::pi - 2.0 * std::numbers::pi * rng.uniform01();
  return params;
}

StateVector apply_ansatz(StateVector state, const Circuit& ansatz, std::span<const double> params) {
  if (state.n_qubits() != ansatz.n_qubits()) {
    throw BindingError("state has " + std::to_string(state.n_qubits()) + " qubits, ansatz has " +
                       std::to_string(ansatz.n_qubits()));
  }
  state.apply(ansatz.bind({}, params));
  return state;
}

StateVector apply_ansatz(StateVector state, const AnsatzSpec& spec,
                         std::span<const double> params) {
  return apply_ansatz(std::move(state), build_ansatz(spec), params);
}

}  // namespace qvc
