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

#include "qvc/statevec.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qvc/error.hpp"
#include "qvc/rng.hpp"

namespace qvc {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_register(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw ConfigError("qubit count " + std::to_string(n_qubits) + " outside [1, " +
                      std::to_string(kMaxQubits) + "]");
  }
}

void check_qubit(int q, int n_qubits) {
  if (q < 0 || q >= n_qubits) {
    throw ConfigError("qubit index " + std::to_string(q) + " out of range for " +
                      std::to_string(n_qubits) + " qubits");
  }
}

// Inserts a zero bit at position `bit` of `k`.
constexpr std::size_t insert_zero(std::size_t k, int bit) {
  const std::size_t low = k & ((std::size_t{1} << bit) - 1);
  return ((k >> bit) << (bit + 1)) | low;
}

// 2x2 matrix applied to every (|..0..>, |..1..>) amplitude pair of one qubit.
template <typename Kernel>
void for_each_pair(std::vector<Complex>& amps, std::size_t mask, Kernel&& kernel) {
  const std::size_t dim = amps.size();
  for (std::size_t block = 0; block < dim; block += 2 * mask) {
    for (std::size_t j = block; j < block + mask; ++j) {
      kernel(amps[j], amps[j + mask]);
    }
  }
}

// Same, restricted to the subspace where the control bit is set.
template <typename Kernel>
void for_each_controlled_pair(std::vector<Complex>& amps, int control_bit, int target_bit,
                              Kernel&& kernel) {
  const std::size_t quarter = amps.size() >> 2;
  const int lo = std::min(control_bit, target_bit);
  const int hi = std::max(control_bit, target_bit);
  const std::size_t cmask = std::size_t{1} << control_bit;
  const std::size_t tmask = std::size_t{1} << target_bit;
  for (std::size_t k = 0; k < quarter; ++k) {
    const std::size_t base = insert_zero(insert_zero(k, lo), hi) | cmask;
    kernel(amps[base], amps[base | tmask]);
  }
}

}  // namespace

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "H";
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::P: return "P";
    case GateKind::CX: return "CX";
    case GateKind::CY: return "CY";
    case GateKind::CZ: return "CZ";
  }
  return "?";
}

bool is_two_qubit(GateKind kind) {
  return kind == GateKind::CX || kind == GateKind::CY || kind == GateKind::CZ;
}

bool takes_angle(GateKind kind) {
  return kind == GateKind::RY || kind == GateKind::RZ || kind == GateKind::P;
}

// ---------------------------------------------------------------------------
// Circuit

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) { check_register(n_qubits); }

void Circuit::add(const GateOp& op) {
  check_qubit(op.qubits[0], n_qubits_);
  if (is_two_qubit(op.kind)) {
    check_qubit(op.qubits[1], n_qubits_);
    if (op.qubits[0] == op.qubits[1]) {
      throw ConfigError(std::string(gate_name(op.kind)) + " needs two distinct qubits");
    }
  }
  if (takes_angle(op.kind)) {
    const Angle& a = op.angle;
    switch (a.source) {
      case Angle::Source::Bound:
        break;
      case Angle::Source::Param:
        if (a.index < 0) throw ConfigError("negative parameter slot");
        n_params_ = std::max(n_params_, a.index + 1);
        break;
      case Angle::Source::Feature:
        if (a.index < 0) throw ConfigError("negative feature slot");
        n_features_ = std::max(n_features_, a.index + 1);
        break;
      case Angle::Source::FeaturePair:
        if (a.index < 0 || a.index2 < 0) throw ConfigError("negative feature slot");
        n_features_ = std::max({n_features_, a.index + 1, a.index2 + 1});
        break;
    }
  }
  ops_.push_back(op);
}

void Circuit::append(const Circuit& other) {
  if (other.n_qubits_ != n_qubits_) {
    throw ConfigError("cannot append a " + std::to_string(other.n_qubits_) +
                      "-qubit circuit to a " + std::to_string(n_qubits_) + "-qubit circuit");
  }
  for (const GateOp& op : other.ops_) add(op);
  if (!data_map_.single && other.data_map_.single) data_map_ = other.data_map_;
}

std::vector<GateOp> Circuit::bind(std::span<const double> features,
                                  std::span<const double> params) const {
  if (features.size() != static_cast<std::size_t>(n_features_)) {
    throw BindingError("circuit expects " + std::to_string(n_features_) + " feature values, got " +
                       std::to_string(features.size()));
  }
  if (params.size() != static_cast<std::size_t>(n_params_)) {
    throw BindingError("circuit expects " + std::to_string(n_params_) + " parameter values, got " +
                       std::to_string(params.size()));
  }
  std::vector<GateOp> bound;
  bound.reserve(ops_.size());
  for (GateOp op : ops_) {
    if (takes_angle(op.kind)) {
      Angle& a = op.angle;
      switch (a.source) {
        case Angle::Source::Bound:
          break;
        case Angle::Source::Param:
          a = Angle::bound(a.scale * params[a.index]);
          break;
        case Angle::Source::Feature:
          if (!data_map_.single) throw BindingError("feature slot without a data map");
          a = Angle::bound(a.scale * data_map_.single(features[a.index]));
          break;
        case Angle::Source::FeaturePair:
          if (!data_map_.pair) throw BindingError("feature-pair slot without a data map");
          a = Angle::bound(a.scale * data_map_.pair(features[a.index], features[a.index2]));
          break;
      }
    }
    bound.push_back(op);
  }
  return bound;
}

Circuit adjoint(const Circuit& circuit) {
  Circuit inv(circuit.n_qubits());
  inv.set_data_map(circuit.data_map());
  const auto& ops = circuit.ops();
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    GateOp op = *it;
    op.angle.value = -op.angle.value;
    op.angle.scale = -op.angle.scale;
    inv.add(op);
  }
  return inv;
}

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  check_register(n_qubits);
  amps_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
  amps_[0] = Complex{1.0, 0.0};
}

StateVector StateVector::from_amplitudes(int n_qubits, std::vector<Complex> amplitudes) {
  check_register(n_qubits);
  if (amplitudes.size() != (std::size_t{1} << n_qubits)) {
    throw ConfigError("expected " + std::to_string(std::size_t{1} << n_qubits) +
                      " amplitudes, got " + std::to_string(amplitudes.size()));
  }
  StateVector s;
  s.n_qubits_ = n_qubits;
  s.amps_ = std::move(amplitudes);
  return s;
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const Complex& a : amps_) total += std::norm(a);
  return total;
}

void StateVector::apply(const GateOp& op) {
  if (!op.is_bound()) {
    throw BindingError(std::string(gate_name(op.kind)) + " applied with an unbound angle slot");
  }
  check_qubit(op.qubits[0], n_qubits_);
  const int bit0 = n_qubits_ - 1 - op.qubits[0];
  const std::size_t mask = std::size_t{1} << bit0;

  if (is_two_qubit(op.kind)) {
    check_qubit(op.qubits[1], n_qubits_);
    if (op.qubits[0] == op.qubits[1]) {
      throw ConfigError(std::string(gate_name(op.kind)) + " needs two distinct qubits");
    }
    const int bit1 = n_qubits_ - 1 - op.qubits[1];
    switch (op.kind) {
      case GateKind::CX:
        for_each_controlled_pair(amps_, bit0, bit1, [](Complex& a, Complex& b) { std::swap(a, b); });
        break;
      case GateKind::CY:
        for_each_controlled_pair(amps_, bit0, bit1, [](Complex& a, Complex& b) {
          const Complex a0 = a;
          a = -kI * b;
          b = kI * a0;
        });
        break;
      case GateKind::CZ:
        for_each_controlled_pair(amps_, bit0, bit1, [](Complex&, Complex& b) { b = -b; });
        break;
      default:
        break;
    }
    return;
  }

  const double theta = op.angle.value;
  switch (op.kind) {
    case GateKind::H: {
      const double r = 1.0 / std::numbers::sqrt2;
      for_each_pair(amps_, mask, [r](Complex& a, Complex& b) {
        const Complex a0 = a;
        a = r * (a0 + b);
        b = r * (a0 - b);
      });
      break;
    }
    case GateKind::RY: {
      const double c = std::cos(theta / 2.0);
      const double s = std::sin(theta / 2.0);
      for_each_pair(amps_, mask, [c, s](Complex& a, Complex& b) {
        const Complex a0 = a;
        a = c * a0 - s * b;
        b = s * a0 + c * b;
      });
      break;
    }
    case GateKind::RZ: {
      const Complex lo = std::polar(1.0, -theta / 2.0);
      const Complex hi = std::polar(1.0, theta / 2.0);
      for_each_pair(amps_, mask, [lo, hi](Complex& a, Complex& b) {
        a *= lo;
        b *= hi;
      });
      break;
    }
    case GateKind::P: {
      const Complex phase = std::polar(1.0, theta);
      for_each_pair(amps_, mask, [phase](Complex&, Complex& b) { b *= phase; });
      break;
    }
    default:
      break;
  }
}

void StateVector::apply(std::span<const GateOp> ops) {
  for (const GateOp& op : ops) apply(op);
}

// ---------------------------------------------------------------------------
// Free functions

StateVector zero_state(int n_qubits) { return StateVector(n_qubits); }

StateVector apply_gate(StateVector state, const GateOp& op) {
  state.apply(op);
  return state;
}

StateVector run_circuit(const Circuit& circuit, std::span<const double> features,
                        std::span<const double> params) {
  const std::vector<GateOp> ops = circuit.bind(features, params);
  StateVector state(circuit.n_qubits());
  state.apply(ops);
  return state;
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw ConfigError("inner product of states with different qubit counts");
  }
  Complex total{0.0, 0.0};
  for (std::size_t i = 0; i < a.dim(); ++i) total += std::conj(a[i]) * b[i];
  return total;
}

std::vector<double> probabilities(const StateVector& state) {
  std::vector<double> probs(state.dim());
  for (std::size_t i = 0; i < state.dim(); ++i) probs[i] = std::norm(state[i]);
  return probs;
}

std::vector<double> marginal_probabilities(const StateVector& state,
                                           std::span<const int> measured) {
  const int n = state.n_qubits();
  if (measured.empty()) throw ConfigError("no qubits to measure");
  std::vector<int> bits;
  bits.reserve(measured.size());
  for (int q : measured) {
    check_qubit(q, n);
    if (std::find(bits.begin(), bits.end(), n - 1 - q) != bits.end()) {
      throw ConfigError("measured qubit " + std::to_string(q) + " listed twice");
    }
    bits.push_back(n - 1 - q);
  }
  const std::size_t m = bits.size();
  std::vector<double> marginal(std::size_t{1} << m, 0.0);
  for (std::size_t i = 0; i < state.dim(); ++i) {
    std::size_t outcome = 0;
    for (std::size_t b = 0; b < m; ++b) {
      outcome = (outcome << 1) | ((i >> bits[b]) & 1U);
    }
    marginal[outcome] += std::norm(state[i]);
  }
  return marginal;
}

Counts sample_counts(const StateVector& state, std::uint64_t shots, std::uint64_t seed,
                     std::span<const int> measured) {
  if (shots == 0) throw ConfigError("shots must be at least 1");
  const std::vector<double> marginal = marginal_probabilities(state, measured);

  std::vector<double> cdf(marginal.size());
  double running = 0.0;
  for (std::size_t i = 0; i < marginal.size(); ++i) {
    running += marginal[i];
    cdf[i] = running;
  }

  std::vector<std::uint64_t> tally(marginal.size(), 0);
  Rng rng(seed);
  for (std::uint64_t s = 0; s < shots; ++s) {
    // Scale by the accumulated total so rounding in the norm cannot push a
    // draw past the last bucket.
    const double u = rng.uniform01() * running;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    std::size_t outcome = static_cast<std::size_t>(it - cdf.begin());
    if (outcome >= cdf.size()) outcome = cdf.size() - 1;
    ++tally[outcome];
  }

  const std::size_t m = measured.size();
  Counts counts;
  for (std::size_t outcome = 0; outcome < tally.size(); ++outcome) {
    if (tally[outcome] == 0) continue;
    std::string key(m, '0');
    for (std::size_t b = 0; b < m; ++b) {
      if ((outcome >> (m - 1 - b)) & 1U) key[b] = '1';
    }
    counts.emplace(std::move(key), tally[outcome]);
  }
  return counts;
}

}  // namespace qvc
