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

#include "qvc/prep.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>

#include "qvc/error.hpp"
#include "qvc/rng.hpp"

namespace qvc {

namespace {

std::vector<std::string> split_record(const std::string& line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(ch);
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field.push_back(ch);
    }
  }
  if (quoted) throw DataError("unterminated quote on line " + std::to_string(line_no));
  fields.push_back(std::move(field));
  return fields;
}

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

bool parse_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

}  // namespace

std::size_t RawTable::label_index() const {
  const auto it = std::find(columns.begin(), columns.end(), label_column);
  if (it == columns.end()) throw DataError("label column '" + label_column + "' not found");
  return static_cast<std::size_t>(it - columns.begin());
}

RawTable parse_csv(std::istream& in, const std::string& label_column,
                   const std::string& positive_label) {
  RawTable table;
  table.label_column = label_column;
  table.positive_label = positive_label;

  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (line.empty()) continue;
    std::vector<std::string> fields = split_record(line, line_no);
    for (auto& f : fields) f = trim(std::move(f));
    if (!have_header) {
      table.columns = std::move(fields);
      have_header = true;
      continue;
    }
    if (fields.size() != table.columns.size()) {
      throw DataError("ragged row " + std::to_string(table.rows.size() + 1) + " (line " +
                      std::to_string(line_no) + "): " + std::to_string(fields.size()) +
                      " fields, header has " + std::to_string(table.columns.size()));
    }
    table.rows.push_back(std::move(fields));
  }
  if (!have_header) throw DataError("empty CSV input: no header row");
  if (table.rows.empty()) throw DataError("CSV has a header but no data rows");

  const std::size_t label = table.label_index();
  std::set<std::string> values;
  for (const auto& row : table.rows) values.insert(row[label]);
  if (values.size() != 2) {
    throw DataError("label column '" + label_column + "' must have exactly 2 distinct values, found " +
                    std::to_string(values.size()));
  }
  if (!values.contains(positive_label)) {
    throw DataError("positive label '" + positive_label + "' does not occur in column '" +
                    label_column + "'");
  }
  return table;
}

RawTable load_csv(const std::filesystem::path& path, const std::string& label_column,
                  const std::string& positive_label) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open data file '" + path.string() + "'");
  return parse_csv(in, label_column, positive_label);
}

Dataset one_hot_encode(const RawTable& table, std::span<const std::string> drop) {
  const std::size_t label = table.label_index();
  const std::size_t n = table.rows.size();

  // Each output column is a list of values per row.
  std::vector<std::string> names;
  std::vector<std::vector<double>> cols;

  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    const std::string& name = table.columns[c];
    if (c == label || std::find(drop.begin(), drop.end(), name) != drop.end()) continue;

    std::vector<double> numeric(n);
    bool is_numeric = true;
    for (std::size_t r = 0; r < n && is_numeric; ++r) {
      is_numeric = parse_double(table.rows[r][c], numeric[r]);
    }
    if (is_numeric) {
      for (std::size_t r = 0; r < n; ++r) {
        if (!std::isfinite(numeric[r])) {
          throw DataError("non-finite value in column '" + name + "', row " + std::to_string(r + 1));
        }
      }
      names.push_back(name);
      cols.push_back(std::move(numeric));
      continue;
    }

    std::set<std::string> categories;
    for (std::size_t r = 0; r < n; ++r) {
      if (table.rows[r][c].empty()) {
        throw DataError("missing value in column '" + name + "', row " + std::to_string(r + 1));
      }
      categories.insert(table.rows[r][c]);
    }
    if (categories.size() > kMaxCategories) {
      throw DataError("column '" + name + "' has " + std::to_string(categories.size()) +
                      " distinct non-numeric values (limit " + std::to_string(kMaxCategories) +
                      "); drop it or fix its numeric format");
    }
    for (const std::string& value : categories) {
      std::vector<double> indicator(n);
      for (std::size_t r = 0; r < n; ++r) indicator[r] = table.rows[r][c] == value ? 1.0 : 0.0;
      names.push_back(name + "=" + value);
      cols.push_back(std::move(indicator));
    }
  }
  if (cols.empty()) throw DataError("no feature columns left after dropping the label");

  Dataset data;
  data.feature_names = std::move(names);
  data.features.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t r = 0; r < n; ++r) {
      data.features(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j)) = cols[j][r];
    }
  }
  data.labels.resize(n);
  data.sample_ids.resize(n);
  for (std::size_t r = 0; r < n; ++r) {
    data.labels[r] = table.rows[r][label] == table.positive_label ? kAd : kNonAd;
    data.sample_ids[r] = r;
  }
  return data;
}

PcaModel pca_fit(const RowMatrix& train_features, int k) {
  const Eigen::Index n = train_features.rows();
  const Eigen::Index d = train_features.cols();
  if (k < 1 || k > std::min(n, d)) {
    throw DataError("pca k = " + std::to_string(k) + " must lie in [1, min(rows, columns)] = [1, " +
                    std::to_string(std::min(n, d)) + "]");
  }
  PcaModel model;
  model.mean = train_features.colwise().mean().transpose();
  const Eigen::MatrixXd centered = train_features.rowwise() - model.mean.transpose();
  const double denom = static_cast<double>(std::max<Eigen::Index>(n - 1, 1));
  model.total_variance = centered.squaredNorm() / denom;
  if (!(model.total_variance > 0.0)) {
    throw DataError("pca input has zero variance: every training column is constant");
  }

  Eigen::BDCSVD<Eigen::MatrixXd> svd(centered, Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const Eigen::MatrixXd& v = svd.matrixV();

  model.components.resize(k, d);
  model.explained_variance.resize(k);
  for (int i = 0; i < k; ++i) {
    Eigen::VectorXd axis = v.col(i);
    Eigen::Index arg = 0;
    axis.cwiseAbs().maxCoeff(&arg);
    if (axis(arg) < 0.0) axis = -axis;
    model.components.row(i) = axis.transpose();
    model.explained_variance(i) = sv(i) * sv(i) / denom;
  }
  return model;
}

RowMatrix pca_transform(const PcaModel& model, const RowMatrix& features) {
  if (features.cols() != model.mean.size()) {
    throw DataError("pca model expects " + std::to_string(model.mean.size()) + " columns, got " +
                    std::to_string(features.cols()));
  }
  return (features.rowwise() - model.mean.transpose()) * model.components.transpose();
}

MinMaxModel minmax_fit(const RowMatrix& train_features) {
  if (train_features.rows() == 0) throw DataError("min-max fit on an empty matrix");
  return {train_features.colwise().minCoeff().transpose(),
          train_features.colwise().maxCoeff().transpose()};
}

RowMatrix minmax_transform(const MinMaxModel& model, const RowMatrix& features) {
  if (features.cols() != model.min.size()) {
    throw DataError("min-max model expects " + std::to_string(model.min.size()) +
                    " columns, got " + std::to_string(features.cols()));
  }
  RowMatrix out(features.rows(), features.cols());
  for (Eigen::Index j = 0; j < features.cols(); ++j) {
    const double lo = model.min(j);
    const double span = model.max(j) - lo;
    for (Eigen::Index i = 0; i < features.rows(); ++i) {
      out(i, j) = span > 0.0 ? std::clamp((features(i, j) - lo) / span, 0.0, 1.0) : 0.0;
    }
  }
  return out;
}

SplitIndices stratified_split_indices(std::span<const int> labels, double test_fraction,
                                      std::uint64_t seed) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw ConfigError("test_fraction must lie strictly between 0 and 1");
  }
  SplitIndices split;
  for (const int cls : {kNonAd, kAd}) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == cls) members.push_back(i);
    }
    if (members.empty()) {
      throw DataError(std::string("class ") + (cls == kAd ? "AD" : "NON_AD") + " has no samples");
    }
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(cls)));
    for (std::size_t i = members.size(); i > 1; --i) {
      std::swap(members[i - 1], members[rng.below(i)]);
    }
    const auto count = static_cast<double>(members.size());
    const std::size_t n_test =
        std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(count * test_fraction)));
    if (n_test >= members.size()) {
      throw DataError(std::string("class ") + (cls == kAd ? "AD" : "NON_AD") + " has " +
                      std::to_string(members.size()) +
                      " sample(s); cannot hold out a test sample and keep a training sample");
    }
    split.test.insert(split.test.end(), members.begin(), members.begin() + n_test);
    split.train.insert(split.train.end(), members.begin() + n_test, members.end());
  }
  std::sort(split.train.begin(), split.train.end());
  std::sort(split.test.begin(), split.test.end());
  return split;
}

std::pair<Dataset, Dataset> stratified_split(const Dataset& data, double test_fraction,
                                             std::uint64_t seed) {
  const SplitIndices idx = stratified_split_indices(data.labels, test_fraction, seed);
  return {data.subset(idx.train), data.subset(idx.test)};
}

}  // namespace qvc
