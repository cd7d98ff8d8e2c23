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

#include "qvc/serialize.hpp"

#include <string>
#include <vector>

#include "qvc/error.hpp"

namespace qvc {

namespace {

std::vector<double> to_vector(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

Eigen::VectorXd vector_from(const Json& j) {
  const auto values = j.get<std::vector<double>>();
  return Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
}

Json cohort_json(const CohortMetrics& c) {
  Json undefined = Json::array();
  if (c.scores.sensitivity_undefined) undefined.push_back("sensitivity");
  if (c.scores.specificity_undefined) undefined.push_back("specificity");
  if (c.scores.f1_undefined) undefined.push_back("f1");
  return Json{
      {"accuracy", c.scores.accuracy},
      {"sensitivity", c.scores.sensitivity},
      {"specificity", c.scores.specificity},
      {"f1", c.scores.f1},
      {"auroc", c.auroc ? Json(*c.auroc) : Json(nullptr)},
      {"confusion", {{"tp", c.confusion.tp}, {"tn", c.confusion.tn},
                     {"fp", c.confusion.fp}, {"fn", c.confusion.fn}}},
      {"undefined", undefined},
  };
}

std::string_view order_name(EntanglerOrder o) {
  return o == EntanglerOrder::CyFirst ? "cy_first" : "cz_first";
}

EntanglerOrder parse_order(const std::string& s) {
  if (s == "cy_first") return EntanglerOrder::CyFirst;
  if (s == "cz_first") return EntanglerOrder::CzFirst;
  throw ConfigError("unknown entangler_order '" + s + "' (expected cy_first or cz_first)");
}

}  // namespace

Json to_json(const PcaModel& model) {
  const std::vector<double> flat(model.components.data(),
                                 model.components.data() + model.components.size());
  return Json{
      {"k", model.k()},
      {"input_dim", model.input_dim()},
      {"mean", to_vector(model.mean)},
      {"components", flat},
      {"explained_variance", to_vector(model.explained_variance)},
      {"total_variance", model.total_variance},
  };
}

PcaModel pca_from_json(const Json& j) {
  PcaModel m;
  const int k = j.at("k").get<int>();
  const int d = j.at("input_dim").get<int>();
  m.mean = vector_from(j.at("mean"));
  const auto flat = j.at("components").get<std::vector<double>>();
  if (static_cast<int>(m.mean.size()) != d || flat.size() != static_cast<std::size_t>(k) * d) {
    throw DataError("pca model JSON has inconsistent dimensions");
  }
  m.components = Eigen::Map<const RowMatrix>(flat.data(), k, d);
  m.explained_variance = vector_from(j.at("explained_variance"));
  m.total_variance = j.at("total_variance").get<double>();
  return m;
}

Json to_json(const MinMaxModel& model) {
  return Json{{"min", to_vector(model.min)}, {"max", to_vector(model.max)}};
}

MinMaxModel minmax_from_json(const Json& j) {
  MinMaxModel m{vector_from(j.at("min")), vector_from(j.at("max"))};
  if (m.min.size() != m.max.size()) throw DataError("min-max model JSON has mismatched lengths");
  return m;
}

Json to_json(const MetricsReport& report) {
  Json j{{"ad", cohort_json(report.ad)}, {"non_ad", cohort_json(report.non_ad)}};
  if (!report.auroc_diagnostic.empty()) j["auroc_diagnostic"] = report.auroc_diagnostic;
  return j;
}

Json to_json(const FeatureMapSpec& spec) {
  return Json{{"n_qubits", spec.n_qubits},
              {"reps", spec.reps},
              {"entanglement", std::string(entanglement_name(spec.entanglement))}};
}

FeatureMapSpec feature_map_from_json(const Json& j, int default_qubits) {
  FeatureMapSpec spec;
  spec.n_qubits = j.value("n_qubits", default_qubits);
  spec.reps = j.value("reps", spec.reps);
  spec.entanglement = parse_entanglement(j.value("entanglement", std::string("full")));
  return spec;
}

Json to_json(const AnsatzSpec& spec) {
  return Json{{"n_qubits", spec.n_qubits},
              {"reps", spec.reps},
              {"entanglement", std::string(entanglement_name(spec.entanglement))},
              {"entangler_order", std::string(order_name(spec.order))}};
}

AnsatzSpec ansatz_from_json(const Json& j, int default_qubits) {
  AnsatzSpec spec;
  spec.n_qubits = j.value("n_qubits", default_qubits);
  spec.reps = j.value("reps", spec.reps);
  spec.entanglement = parse_entanglement(j.value("entanglement", std::string("linear")));
  spec.order = parse_order(j.value("entangler_order", std::string("cy_first")));
  return spec;
}

Json to_json(const SpsaConfig& cfg) {
  return Json{{"maxiter", cfg.maxiter}, {"a", cfg.a},         {"c", cfg.c},
              {"alpha", cfg.alpha},     {"gamma", cfg.gamma}, {"A", cfg.stability_constant()},
              {"seed", cfg.seed}};
}

SpsaConfig spsa_from_json(const Json& j) {
  SpsaConfig cfg;
  cfg.maxiter = j.value("maxiter", cfg.maxiter);
  cfg.a = j.value("a", cfg.a);
  cfg.c = j.value("c", cfg.c);
  cfg.alpha = j.value("alpha", cfg.alpha);
  cfg.gamma = j.value("gamma", cfg.gamma);
  if (j.contains("A") && !j.at("A").is_null()) cfg.stability = j.at("A").get<double>();
  cfg.seed = j.value("seed", cfg.seed);
  cfg.validate();
  return cfg;
}

}  // namespace qvc
