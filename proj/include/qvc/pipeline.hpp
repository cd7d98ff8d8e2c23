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

// File-based experiment pipeline behind the qvc command-line tool.
//
// Each command reads the run config and the artifacts of earlier commands
// from the output directory and writes its own artifacts there:
//
//   prep    prep_model.json, split_manifest.json
//   train   model.json, loss_history.csv
//   eval    metrics.json, predictions.csv, scatter2d.csv
//   kernel  kernel_train.csv, kernel_test.csv
//   report  all of the above plus config.json (the resolved config)
//
// Artifacts are write-once: a command refuses to replace an existing file
// unless CommandOptions::overwrite is set.

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "qvc/ansatz.hpp"
#include "qvc/classifier.hpp"
#include "qvc/dataset.hpp"
#include "qvc/featmap.hpp"
#include "qvc/prep.hpp"
#include "qvc/serialize.hpp"
#include "qvc/spsa.hpp"

namespace qvc {

struct RunConfig {
  std::filesystem::path data_path;
  std::string label_column = "class";
  std::string positive_label = "P";
  std::vector<std::string> drop_columns;

  int pca_k = 5;
  double test_fraction = 0.25;
  std::uint64_t split_seed = 0;

  FeatureMapSpec feature_map;
  AnsatzSpec ansatz;
  std::vector<int> measured_qubits{0, 1};
  std::uint64_t train_shots = 0;  // 0 = exact
  std::uint64_t eval_shots = 1024;
  std::uint64_t shot_seed = 0;
  std::uint64_t init_seed = 0;
  double loss_clip_epsilon = 1e-9;

  SpsaConfig spsa;
  std::filesystem::path output_dir = "qvc_run";

  /// Throws ConfigError on any inconsistency (pca_k != qubit counts, ...).
  void validate() const;

  VqcConfig vqc_config(std::uint64_t shots, std::uint64_t shot_seed) const;

  /// Unknown keys are rejected. Relative data/output paths resolve against
  /// `base_dir`.
  static RunConfig from_json(const Json& j, const std::filesystem::path& base_dir = {});
  Json to_json() const;
};

RunConfig load_run_config(const std::filesystem::path& path);

struct CommandOptions {
  bool overwrite = false;
  std::ostream* log = nullptr;
};

/// Training and test rows after the fitted PCA, and after min-max scaling.
struct PreparedData {
  Dataset train_pca;
  Dataset test_pca;
  Dataset train;  // normalized to [0, 1]
  Dataset test;
};

/// Re-reads the CSV and applies the persisted prep artifacts.
PreparedData load_prepared(const RunConfig& cfg);

void cmd_prep(const RunConfig& cfg, const CommandOptions& opts = {});
void cmd_train(const RunConfig& cfg, const CommandOptions& opts = {});
void cmd_eval(const RunConfig& cfg, const CommandOptions& opts = {});
void cmd_kernel(const RunConfig& cfg, const CommandOptions& opts = {});
void cmd_report(const RunConfig& cfg, const CommandOptions& opts = {});

}  // namespace qvc
