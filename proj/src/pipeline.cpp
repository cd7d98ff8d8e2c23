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

#include "qvc/pipeline.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "qvc/error.hpp"
#include "qvc/format.hpp"
#include "qvc/metrics.hpp"
#include "qvc/qkernel.hpp"
#include "qvc/rng.hpp"

namespace qvc {

namespace fs = std::filesystem;

namespace {

constexpr const char* kPrepModel = "prep_model.json";
constexpr const char* kSplitManifest = "split_manifest.json";
constexpr const char* kModel = "model.json";
constexpr const char* kLossHistory = "loss_history.csv";
constexpr const char* kMetrics = "metrics.json";
constexpr const char* kPredictions = "predictions.csv";
constexpr const char* kScatter = "scatter2d.csv";
constexpr const char* kKernelTrain = "kernel_train.csv";
constexpr const char* kKernelTest = "kernel_test.csv";
constexpr const char* kConfigEcho = "config.json";

// Evaluation-time shot draws use their own stream so they never reuse a
// training seed.
constexpr std::uint64_t kEvalStream = 1;

void check_keys(const Json& j, const char* section, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw ConfigError(std::string("config section '") + section + "' must be an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : j.items()) {
    if (!ok.contains(key)) {
      throw ConfigError(std::string("unknown key '") + key + "' in config section '" + section + "'");
    }
  }
}

const Json& section(const Json& j, const char* name) {
  static const Json empty = Json::object();
  return j.contains(name) ? j.at(name) : empty;
}

void log_line(const CommandOptions& opts, const std::string& line) {
  if (opts.log) *opts.log << line << '\n';
}

fs::path artifact(const RunConfig& cfg, const char* name) { return cfg.output_dir / name; }

void ensure_writable(const RunConfig& cfg, const CommandOptions& opts,
                     std::initializer_list<const char*> names) {
  if (opts.overwrite) return;
  for (const char* name : names) {
    const fs::path p = artifact(cfg, name);
    if (fs::exists(p)) {
      throw ConfigError("refusing to overwrite existing artifact '" + p.string() +
                        "' (pass --force to replace it)");
    }
  }
}

void write_text(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw ConfigError("failed while writing '" + path.string() + "'");
}

void write_json(const fs::path& path, const Json& j) { write_text(path, j.dump(2) + "\n"); }

Json read_json(const fs::path& path, const char* producer) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("missing artifact '" + path.string() + "'; run `qvc " + producer + "` first");
  }
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw DataError("malformed JSON in '" + path.string() + "': " + e.what());
  }
}

Dataset with_features(const Dataset& like, RowMatrix features, std::vector<std::string> names) {
  Dataset out;
  out.features = std::move(features);
  out.labels = like.labels;
  out.sample_ids = like.sample_ids;
  out.feature_names = std::move(names);
  return out;
}

std::vector<std::string> component_names(int k) {
  std::vector<std::string> names;
  for (int i = 1; i <= k; ++i) names.push_back("pc" + std::to_string(i));
  return names;
}

Dataset load_encoded(const RunConfig& cfg) {
  const RawTable table = load_csv(cfg.data_path, cfg.label_column, cfg.positive_label);
  Dataset data = one_hot_encode(table, cfg.drop_columns);
  data.validate();
  return data;
}

std::vector<double> load_params(const RunConfig& cfg) {
  const Json model = read_json(artifact(cfg, kModel), "train");
  auto params = model.at("params").get<std::vector<double>>();
  if (static_cast<int>(params.size()) != cfg.ansatz.param_count()) {
    throw ConfigError("model.json holds " + std::to_string(params.size()) +
                      " parameters but the configured ansatz needs " +
                      std::to_string(cfg.ansatz.param_count()));
  }
  return params;
}

}  // namespace

// ---------------------------------------------------------------------------
// RunConfig

void RunConfig::validate() const {
  if (data_path.empty()) throw ConfigError("config: data.path is required");
  if (pca_k < 1) throw ConfigError("config: prep.pca_k must be >= 1");
  if (feature_map.n_qubits != pca_k || ansatz.n_qubits != pca_k) {
    throw ConfigError("config: prep.pca_k (" + std::to_string(pca_k) +
                      ") must equal the feature map and ansatz qubit counts (" +
                      std::to_string(feature_map.n_qubits) + ", " +
                      std::to_string(ansatz.n_qubits) + ")");
  }
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw ConfigError("config: prep.test_fraction must lie strictly between 0 and 1");
  }
  if (std::find(drop_columns.begin(), drop_columns.end(), label_column) != drop_columns.end()) {
    throw ConfigError("config: the label column cannot be dropped");
  }
  spsa.validate();
  vqc_config(train_shots, shot_seed).validate();
}

VqcConfig RunConfig::vqc_config(std::uint64_t shots, std::uint64_t seed) const {
  VqcConfig v;
  v.feature_map = feature_map;
  v.ansatz = ansatz;
  v.measured_qubits = measured_qubits;
  v.shots = shots;
  v.seed = seed;
  v.init_seed = init_seed;
  v.loss_clip_epsilon = loss_clip_epsilon;
  return v;
}

RunConfig RunConfig::from_json(const Json& j, const fs::path& base_dir) {
  try {
    check_keys(j, "<root>", {"data", "prep", "feature_map", "ansatz", "vqc", "spsa", "output_dir"});
    RunConfig cfg;
    const auto resolve = [&](const std::string& p) {
      const fs::path path(p);
      return path.is_absolute() || base_dir.empty() ? path : base_dir / path;
    };

    const Json& data = section(j, "data");
    check_keys(data, "data", {"path", "label_column", "positive_label", "drop_columns"});
    if (data.contains("path")) cfg.data_path = resolve(data.at("path").get<std::string>());
    cfg.label_column = data.value("label_column", cfg.label_column);
    cfg.positive_label = data.value("positive_label", cfg.positive_label);
    cfg.drop_columns = data.value("drop_columns", cfg.drop_columns);

    const Json& prep = section(j, "prep");
    check_keys(prep, "prep", {"pca_k", "test_fraction", "split_seed"});
    cfg.pca_k = prep.value("pca_k", cfg.pca_k);
    cfg.test_fraction = prep.value("test_fraction", cfg.test_fraction);
    cfg.split_seed = prep.value("split_seed", cfg.split_seed);

    const Json& fm = section(j, "feature_map");
    check_keys(fm, "feature_map", {"n_qubits", "reps", "entanglement"});
    cfg.feature_map = feature_map_from_json(fm, cfg.pca_k);

    const Json& an = section(j, "ansatz");
    check_keys(an, "ansatz", {"n_qubits", "reps", "entanglement", "entangler_order"});
    cfg.ansatz = ansatz_from_json(an, cfg.pca_k);

    const Json& vqc = section(j, "vqc");
    check_keys(vqc, "vqc",
               {"measured_qubits", "train_shots", "eval_shots", "shot_seed", "init_seed",
                "loss_clip_epsilon"});
    cfg.measured_qubits = vqc.value("measured_qubits", cfg.measured_qubits);
    cfg.train_shots = vqc.value("train_shots", cfg.train_shots);
    cfg.eval_shots = vqc.value("eval_shots", cfg.eval_shots);
    cfg.shot_seed = vqc.value("shot_seed", cfg.shot_seed);
    cfg.init_seed = vqc.value("init_seed", cfg.init_seed);
    cfg.loss_clip_epsilon = vqc.value("loss_clip_epsilon", cfg.loss_clip_epsilon);

    const Json& spsa = section(j, "spsa");
    check_keys(spsa, "spsa", {"maxiter", "a", "c", "alpha", "gamma", "A", "seed"});
    cfg.spsa = spsa_from_json(spsa);

    if (j.contains("output_dir")) cfg.output_dir = resolve(j.at("output_dir").get<std::string>());
    cfg.validate();
    return cfg;
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

Json RunConfig::to_json() const {
  return Json{
      {"data",
       {{"path", data_path.string()},
        {"label_column", label_column},
        {"positive_label", positive_label},
        {"drop_columns", drop_columns}}},
      {"prep", {{"pca_k", pca_k}, {"test_fraction", test_fraction}, {"split_seed", split_seed}}},
      {"feature_map", qvc::to_json(feature_map)},
      {"ansatz", qvc::to_json(ansatz)},
      {"vqc",
       {{"measured_qubits", measured_qubits},
        {"train_shots", train_shots},
        {"eval_shots", eval_shots},
        {"shot_seed", shot_seed},
        {"init_seed", init_seed},
        {"loss_clip_epsilon", loss_clip_epsilon}}},
      {"spsa", qvc::to_json(spsa)},
      {"output_dir", output_dir.string()},
  };
}

RunConfig load_run_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw ConfigError("config file '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return RunConfig::from_json(j, path.parent_path());
}

// ---------------------------------------------------------------------------
// Commands

PreparedData load_prepared(const RunConfig& cfg) {
  const Json prep = read_json(artifact(cfg, kPrepModel), "prep");
  const Json manifest = read_json(artifact(cfg, kSplitManifest), "prep");

  const Dataset data = load_encoded(cfg);
  if (data.feature_names != prep.at("feature_names").get<std::vector<std::string>>()) {
    throw DataError("columns of '" + cfg.data_path.string() +
                    "' no longer match prep_model.json; rerun `qvc prep`");
  }
  const auto train_rows = manifest.at("train").get<std::vector<std::size_t>>();
  const auto test_rows = manifest.at("test").get<std::vector<std::size_t>>();

  const PcaModel pca = pca_from_json(prep.at("pca"));
  const MinMaxModel minmax = minmax_from_json(prep.at("minmax"));
  if (pca.k() != cfg.pca_k) {
    throw ConfigError("prep_model.json was fitted with pca_k = " + std::to_string(pca.k()) +
                      ", config says " + std::to_string(cfg.pca_k));
  }

  const Dataset train_raw = data.subset(train_rows);
  const Dataset test_raw = data.subset(test_rows);
  const auto names = component_names(pca.k());

  PreparedData out;
  out.train_pca = with_features(train_raw, pca_transform(pca, train_raw.features), names);
  out.test_pca = with_features(test_raw, pca_transform(pca, test_raw.features), names);
  out.train = with_features(train_raw, minmax_transform(minmax, out.train_pca.features), names);
  out.test = with_features(test_raw, minmax_transform(minmax, out.test_pca.features), names);
  return out;
}

void cmd_prep(const RunConfig& cfg, const CommandOptions& opts) {
  cfg.validate();
  ensure_writable(cfg, opts, {kPrepModel, kSplitManifest});

  const Dataset data = load_encoded(cfg);
  if (static_cast<std::size_t>(cfg.pca_k) > data.dim()) {
    throw ConfigError("prep.pca_k = " + std::to_string(cfg.pca_k) +
                      " exceeds the number of feature columns (" + std::to_string(data.dim()) + ")");
  }
  const SplitIndices split = stratified_split_indices(data.labels, cfg.test_fraction, cfg.split_seed);
  const Dataset train = data.subset(split.train);
  const PcaModel pca = pca_fit(train.features, cfg.pca_k);
  const MinMaxModel minmax = minmax_fit(pca_transform(pca, train.features));

  log_line(opts, "[prep] " + std::to_string(data.size()) + " rows, " +
                     std::to_string(data.dim()) + " encoded columns -> " +
                     std::to_string(cfg.pca_k) + " components; train " +
                     std::to_string(split.train.size()) + ", test " +
                     std::to_string(split.test.size()));

  write_json(artifact(cfg, kPrepModel),
             Json{{"feature_names", data.feature_names},
                  {"label_column", cfg.label_column},
                  {"positive_label", cfg.positive_label},
                  {"drop_columns", cfg.drop_columns},
                  {"n_rows", data.size()},
                  {"pca", to_json(pca)},
                  {"minmax", to_json(minmax)}});
  write_json(artifact(cfg, kSplitManifest),
             Json{{"n_rows", data.size()},
                  {"test_fraction", cfg.test_fraction},
                  {"split_seed", cfg.split_seed},
                  {"train", split.train},
                  {"test", split.test}});
}

void cmd_train(const RunConfig& cfg, const CommandOptions& opts) {
  cfg.validate();
  ensure_writable(cfg, opts, {kModel, kLossHistory});
  const PreparedData prepared = load_prepared(cfg);
  const Classifier clf(cfg.vqc_config(cfg.train_shots, cfg.shot_seed));

  const int every = std::max(1, cfg.spsa.maxiter / 10);
  const TrainingRun run = clf.train(prepared.train, cfg.spsa, [&](int k, double loss) {
    if ((k + 1) % every == 0 || k + 1 == cfg.spsa.maxiter) {
      log_line(opts, "[train] iteration " + std::to_string(k + 1) + "/" +
                         std::to_string(cfg.spsa.maxiter) + " loss " + format_double(loss));
    }
  });

  std::ostringstream history;
  history << "iteration,loss\n";
  for (std::size_t k = 0; k < run.loss_history.size(); ++k) {
    history << (k + 1) << ',' << format_double(run.loss_history[k]) << '\n';
  }

  write_json(artifact(cfg, kModel),
             Json{{"prep", read_json(artifact(cfg, kPrepModel), "prep")},
                  {"feature_map", to_json(cfg.feature_map)},
                  {"ansatz", to_json(cfg.ansatz)},
                  {"measured_qubits", cfg.measured_qubits},
                  {"train_shots", cfg.train_shots},
                  {"spsa", to_json(cfg.spsa)},
                  {"seeds",
                   {{"init", run.seeds_used.init},
                    {"perturbation", run.seeds_used.perturbation},
                    {"shots", run.seeds_used.shots}}},
                  {"objective_evaluations", run.evaluations},
                  {"final_loss", run.loss_history.empty() ? Json(nullptr) : Json(run.loss_history.back())},
                  {"params", run.final_params}});
  write_text(artifact(cfg, kLossHistory), history.str());
}

void cmd_eval(const RunConfig& cfg, const CommandOptions& opts) {
  cfg.validate();
  ensure_writable(cfg, opts, {kMetrics, kPredictions, kScatter});
  const PreparedData prepared = load_prepared(cfg);
  const std::vector<double> params = load_params(cfg);
  const Classifier clf(cfg.vqc_config(cfg.eval_shots, derive_seed(cfg.shot_seed, kEvalStream)));

  const std::vector<Prediction> test_pred = clf.predict_batch(prepared.test, params);
  const std::vector<Prediction> train_pred = clf.predict_batch(prepared.train, params);

  std::vector<double> p_test;
  for (const Prediction& p : test_pred) p_test.push_back(p.p_ad);
  const MetricsReport report = evaluate(prepared.test.labels, p_test);
  if (!report.auroc_diagnostic.empty()) {
    log_line(opts, "[eval] AUROC not reported: " + report.auroc_diagnostic);
  }

  std::uint64_t train_correct = 0;
  for (std::size_t i = 0; i < train_pred.size(); ++i) {
    train_correct += static_cast<int>(train_pred[i].label) == prepared.train.labels[i];
  }

  Json metrics = to_json(report);
  metrics["split"] = "test";
  metrics["n_samples"] = prepared.test.size();
  metrics["shots"] = cfg.eval_shots == 0 ? Json("exact") : Json(cfg.eval_shots);
  metrics["train_accuracy"] =
      static_cast<double>(train_correct) / static_cast<double>(prepared.train.size());

  const auto label_text = [](int y) { return std::string(label_name(static_cast<Label>(y))); };

  std::ostringstream preds;
  preds << "sample_id,p_ad,predicted,true\n";
  for (std::size_t i = 0; i < test_pred.size(); ++i) {
    preds << prepared.test.sample_ids[i] << ',' << format_double(test_pred[i].p_ad) << ','
          << label_name(test_pred[i].label) << ',' << label_text(prepared.test.labels[i]) << '\n';
  }

  std::ostringstream scatter;
  scatter << "sample_id,split,pc1,pc2,true,predicted\n";
  const auto emit = [&](const Dataset& pcs, const std::vector<Prediction>& pred, const char* split) {
    for (std::size_t i = 0; i < pcs.size(); ++i) {
      const auto r = static_cast<Eigen::Index>(i);
      scatter << pcs.sample_ids[i] << ',' << split << ',' << format_double(pcs.features(r, 0)) << ','
              << (pcs.dim() > 1 ? format_double(pcs.features(r, 1)) : std::string()) << ','
              << label_text(pcs.labels[i]) << ',' << label_name(pred[i].label) << '\n';
    }
  };
  emit(prepared.train_pca, train_pred, "train");
  emit(prepared.test_pca, test_pred, "test");

  log_line(opts, "[eval] test accuracy " + format_double(report.ad.scores.accuracy) + " on " +
                     std::to_string(prepared.test.size()) + " samples");

  write_json(artifact(cfg, kMetrics), metrics);
  write_text(artifact(cfg, kPredictions), preds.str());
  write_text(artifact(cfg, kScatter), scatter.str());
}

void cmd_kernel(const RunConfig& cfg, const CommandOptions& opts) {
  cfg.validate();
  ensure_writable(cfg, opts, {kKernelTrain, kKernelTest});
  const PreparedData prepared = load_prepared(cfg);

  const KernelMatrix k_train = kernel_matrix(prepared.train, prepared.train, cfg.feature_map);
  const KernelMatrix k_test = kernel_matrix(prepared.test, prepared.train, cfg.feature_map);

  std::ostringstream train_csv, test_csv;
  write_kernel_csv(train_csv, k_train);
  write_kernel_csv(test_csv, k_test);
  write_text(artifact(cfg, kKernelTrain), train_csv.str());
  write_text(artifact(cfg, kKernelTest), test_csv.str());
  log_line(opts, "[kernel] " + std::to_string(k_train.values.rows()) + "x" +
                     std::to_string(k_train.values.cols()) + " train, " +
                     std::to_string(k_test.values.rows()) + "x" +
                     std::to_string(k_test.values.cols()) + " test");
}

void cmd_report(const RunConfig& cfg, const CommandOptions& opts) {
  cfg.validate();
  ensure_writable(cfg, opts,
                  {kPrepModel, kSplitManifest, kModel, kLossHistory, kMetrics, kPredictions,
                   kScatter, kKernelTrain, kKernelTest, kConfigEcho});
  write_json(artifact(cfg, kConfigEcho), cfg.to_json());
  CommandOptions inner = opts;
  inner.overwrite = true;
  cmd_prep(cfg, inner);
  cmd_train(cfg, inner);
  cmd_eval(cfg, inner);
  cmd_kernel(cfg, inner);
}

}  // namespace qvc
