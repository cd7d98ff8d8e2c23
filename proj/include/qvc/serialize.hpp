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

// JSON forms of the fitted models and evaluation reports.

#include "json.hpp"

#include "qvc/ansatz.hpp"
#include "qvc/featmap.hpp"
#include "qvc/metrics.hpp"
#include "qvc/prep.hpp"
#include "qvc/spsa.hpp"

namespace qvc {

using Json = nlohmann::json;

Json to_json(const PcaModel& model);
PcaModel pca_from_json(const Json& j);

Json to_json(const MinMaxModel& model);
MinMaxModel minmax_from_json(const Json& j);

/// {"ad": {...}, "non_ad": {...}}; each cohort carries accuracy, sensitivity,
/// specificity, f1, auroc (null when undefined), confusion {tp, tn, fp, fn}
/// and the list of undefined ratios.
Json to_json(const MetricsReport& report);

Json to_json(const FeatureMapSpec& spec);
FeatureMapSpec feature_map_from_json(const Json& j, int default_qubits);

Json to_json(const AnsatzSpec& spec);
AnsatzSpec ansatz_from_json(const Json& j, int default_qubits);

Json to_json(const SpsaConfig& cfg);
SpsaConfig spsa_from_json(const Json& j);

}  // namespace qvc
