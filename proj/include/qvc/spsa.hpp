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

// Simultaneous perturbation stochastic approximation.
//
// Iteration k (0-based):
//   a_k = a / (k + 1 + A)^alpha,   c_k = c / (k + 1)^gamma
//   delta ~ Rademacher(+-1)^dim
//   g_k[i] = (f(theta + c_k delta) - f(theta - c_k delta)) / (2 c_k delta[i])
//   theta <- theta - a_k g_k
//   history[k] = f(theta)
//
// Three objective evaluations per iteration. The perturbation stream is an
// Rng seeded with SpsaConfig::seed.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace qvc {

struct SpsaConfig {
  int maxiter = 500;
  double a = 0.15;
  double c = 0.2;
  double alpha = 0.602;
  double gamma = 0.101;
  // Stability constant; unset means 0.1 * maxiter.
  std::optional<double> stability;
  std::uint64_t seed = 0;

  double stability_constant() const { return stability.value_or(0.1 * maxiter); }

  /// Throws ConfigError unless maxiter >= 0, a, c > 0, 0 < gamma < alpha <= 1, A >= 0.
  void validate() const;
};

struct Gains {
  double a;
  double c;
};

Gains gain_sequences(const SpsaConfig& cfg, int k);

struct SeedRecord {
  std::uint64_t init = 0;
  std::uint64_t perturbation = 0;
  std::uint64_t shots = 0;
};

struct TrainingRun {
  std::vector<double> final_params;
  std::vector<double> loss_history;
  SeedRecord seeds_used;
  std::uint64_t evaluations = 0;
};

using Objective = std::function<double(std::span<const double>)>;
using IterationCallback = std::function<void(int iteration, double loss)>;

/// Minimizes `objective` from theta0. Throws NumericError naming the
/// iteration if the objective returns a non-finite value.
TrainingRun spsa_minimize(const Objective& objective, std::span<const double> theta0,
                          const SpsaConfig& cfg, const IterationCallback& on_iteration = {});

}  // namespace qvc
