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

#include "qvc/spsa.hpp"

#include <cmath>
#include <string>

#include "qvc/error.hpp"
#include "qvc/rng.hpp"

namespace qvc {

void SpsaConfig::validate() const {
  if (maxiter < 0) throw ConfigError("spsa maxiter must be >= 0");
  if (!(a > 0.0)) throw ConfigError("spsa a must be > 0");
  if (!(c > 0.0)) throw ConfigError("spsa c must be > 0");
  if (!(gamma > 0.0 && gamma < alpha && alpha <= 1.0)) {
    throw ConfigError("spsa exponents must satisfy 0 < gamma < alpha <= 1");
  }
  if (!(stability_constant() >= 0.0)) throw ConfigError("spsa stability constant must be >= 0");
}

Gains gain_sequences(const SpsaConfig& cfg, int k) {
  if (k < 0) throw ConfigError("spsa iteration index must be >= 0");
  const double kk = static_cast<double>(k);
  return {cfg.a / std::pow(kk + 1.0 + cfg.stability_constant(), cfg.alpha),
          cfg.c / std::pow(kk + 1.0, cfg.gamma)};
}

TrainingRun spsa_minimize(const Objective& objective, std::span<const double> theta0,
                          const SpsaConfig& cfg, const IterationCallback& on_iteration) {
  cfg.validate();
  TrainingRun run;
  run.final_params.assign(theta0.begin(), theta0.end());
  run.seeds_used.perturbation = cfg.seed;
  run.loss_history.reserve(static_cast<std::size_t>(cfg.maxiter));

  const std::size_t dim = theta0.size();
  std::vector<double>& theta = run.final_params;
  std::vector<double> delta(dim), plus(dim), minus(dim);
  Rng rng(cfg.seed);

  auto evaluate = [&](std::span<const double> point, int k, const char* what) {
    const double value = objective(point);
    ++run.evaluations;
    if (!std::isfinite(value)) {
      throw NumericError("objective returned a non-finite value at iteration " +
                         std::to_string(k) + " (" + what + ")");
    }
    return value;
  };

  for (int k = 0; k < cfg.maxiter; ++k) {
    const Gains g = gain_sequences(cfg, k);
    for (std::size_t i = 0; i < dim; ++i) {
      delta[i] = rng.rademacher();
      plus[i] = theta[i] + g.c * delta[i];
      minus[i] = theta[i] - g.c * delta[i];
    }
    const double f_plus = evaluate(plus, k, "theta + c_k delta");
    const double f_minus = evaluate(minus, k, "theta - c_k delta");
    const double slope = (f_plus - f_minus) / (2.0 * g.c);
    for (std::size_t i = 0; i < dim; ++i) theta[i] -= g.a * slope / delta[i];

    const double loss = evaluate(theta, k, "post-update");
    run.loss_history.push_back(loss);
    if (on_iteration) on_iteration(k, loss);
  }
  return run;
}

}  // namespace qvc
