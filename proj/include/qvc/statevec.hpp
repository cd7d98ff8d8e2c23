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

// Dense statevector simulation.
//
// Basis convention: for an n-qubit register, qubit q is stored in bit
// (n - 1 - q) of the amplitude index, so the binary spelling of an index read
// left to right lists qubit 0, qubit 1, ... . Bit strings returned by
// sample_counts() follow the same convention (leftmost character = first
// measured qubit). Two-qubit gate matrices are written in the |control target>
// basis.

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qvc {

using Complex = std::complex<double>;

inline constexpr int kMaxQubits = 24;

enum class GateKind { H, RY, RZ, P, CX, CY, CZ };

std::string_view gate_name(GateKind kind);
bool is_two_qubit(GateKind kind);
bool takes_angle(GateKind kind);

/// Where a gate's rotation angle comes from.
///
/// Symbolic angles are resolved at bind time: a parameter slot reads
/// params[index]; a feature slot evaluates the circuit's data map on one
/// feature (index) or a feature pair (index, index2). The resolved value is
/// multiplied by `scale`.
struct Angle {
  enum class Source { Bound, Param, Feature, FeaturePair };

  Source source = Source::Bound;
  double value = 0.0;
  double scale = 1.0;
  int index = -1;
  int index2 = -1;

  static Angle bound(double radians) { return {Source::Bound, radians, 1.0, -1, -1}; }
  static Angle param(int slot) { return {Source::Param, 0.0, 1.0, slot, -1}; }
  static Angle feature(int j, double scale = 1.0) { return {Source::Feature, 0.0, scale, j, -1}; }
  static Angle feature_pair(int j, int k, double scale = 1.0) {
    return {Source::FeaturePair, 0.0, scale, j, k};
  }

  bool is_bound() const { return source == Source::Bound; }
};

struct GateOp {
  GateKind kind = GateKind::H;
  // Single-qubit gates use qubits[0]; two-qubit gates are (control, target).
  std::array<int, 2> qubits{-1, -1};
  Angle angle{};

  static GateOp h(int q) { return {GateKind::H, {q, -1}, {}}; }
  static GateOp ry(int q, Angle a) { return {GateKind::RY, {q, -1}, a}; }
  static GateOp rz(int q, Angle a) { return {GateKind::RZ, {q, -1}, a}; }
  static GateOp p(int q, Angle a) { return {GateKind::P, {q, -1}, a}; }
  static GateOp cx(int control, int target) { return {GateKind::CX, {control, target}, {}}; }
  static GateOp cy(int control, int target) { return {GateKind::CY, {control, target}, {}}; }
  static GateOp cz(int control, int target) { return {GateKind::CZ, {control, target}, {}}; }

  bool is_bound() const { return !takes_angle(kind) || angle.is_bound(); }
};

/// Classical data to rotation angle maps used by feature slots.
struct DataMap {
  std::function<double(double)> single;
  std::function<double(double, double)> pair;
};

/// An ordered gate list over a fixed register plus the slot table sizes.
class Circuit {
 public:
  explicit Circuit(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  int n_features() const { return n_features_; }
  int n_params() const { return n_params_; }
  const std::vector<GateOp>& ops() const { return ops_; }
  const DataMap& data_map() const { return data_map_; }

  void set_data_map(DataMap map) { data_map_ = std::move(map); }

  /// Appends a gate. Throws ConfigError on invalid or repeated qubit indices.
  /// Symbolic slots grow the feature/parameter tables as needed.
  void add(const GateOp& op);

  /// Appends all ops of `other` (same register size required).
  void append(const Circuit& other);

  /// Resolves every symbolic angle. Throws BindingError when the value
  /// vectors do not match the slot table or a feature slot has no data map.
  std::vector<GateOp> bind(std::span<const double> features, std::span<const double> params) const;

 private:
  int n_qubits_;
  int n_features_ = 0;
  int n_params_ = 0;
  std::vector<GateOp> ops_;
  DataMap data_map_;
};

class StateVector {
 public:
  /// |0...0> on n qubits. Throws ConfigError outside [1, kMaxQubits].
  explicit StateVector(int n_qubits);

  /// Wraps explicit amplitudes; length must be 2^n_qubits.
  static StateVector from_amplitudes(int n_qubits, std::vector<Complex> amplitudes);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  std::span<const Complex> amplitudes() const { return amps_; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }

  double norm_squared() const;

  /// Applies a bound gate in place with O(2^n) strided updates.
  void apply(const GateOp& op);

  /// Applies a bound op list in order.
  void apply(std::span<const GateOp> ops);

 private:
  StateVector() = default;

  int n_qubits_ = 0;
  std::vector<Complex> amps_;
};

/// Reversed op order with every angle negated. All gate kinds here are
/// either self-inverse (H, CX, CY, CZ) or inverted by negating the angle.
Circuit adjoint(const Circuit& circuit);

StateVector zero_state(int n_qubits);

/// Returns a copy of `state` advanced by `op`.
StateVector apply_gate(StateVector state, const GateOp& op);

/// Binds the circuit and evolves |0...0> through it.
StateVector run_circuit(const Circuit& circuit, std::span<const double> features,
                        std::span<const double> params);

/// <a|b>
Complex inner_product(const StateVector& a, const StateVector& b);

std::vector<double> probabilities(const StateVector& state);

/// Outcome distribution of the listed qubits. Entry m has measured[0] in
/// its most significant bit, matching the bit string spelling.
std::vector<double> marginal_probabilities(const StateVector& state, std::span<const int> measured);

using Counts = std::map<std::string, std::uint64_t>;

/// Draws `shots` i.i.d. outcomes of the measured qubits. Deterministic in
/// `seed`. Throws ConfigError if shots == 0 or the qubit list is invalid.
Counts sample_counts(const StateVector& state, std::uint64_t shots, std::uint64_t seed,
                     std::span<const int> measured);

}  // namespace qvc
