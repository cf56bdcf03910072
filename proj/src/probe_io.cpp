// Copyright 2026 The holevo-gauss Authors
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

#include "holevo/probe_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "holevo/errors.hpp"

namespace holevo {

namespace {

using nlohmann::json;

MatrixXd read_matrix(const json& doc, const char* key, Eigen::Index rows,
                     Eigen::Index cols) {
  if (!doc.contains(key)) throw InputError(std::string("probe: missing \"") + key + "\"");
  const json& m = doc.at(key);
  if (!m.is_array() || static_cast<Eigen::Index>(m.size()) != rows) {
    throw InputError(std::string("probe: \"") + key + "\" must have " +
                     std::to_string(rows) + " rows");
  }
  MatrixXd out(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = m[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw InputError(std::string("probe: row ") + std::to_string(i) + " of \"" +
                       key + "\" must have " + std::to_string(cols) + " entries");
    }
    for (Eigen::Index j = 0; j < cols; ++j) {
      const json& x = row[static_cast<size_t>(j)];
      if (!x.is_number()) {
        throw InputError(std::string("probe: entry (") + std::to_string(i) + ", " +
                         std::to_string(j) + ") of \"" + key + "\" is not a number");
      }
      out(i, j) = x.get<double>();
    }
  }
  return out;
}

int read_count(const json& doc, const char* key) {
  if (!doc.contains(key)) throw InputError(std::string("probe: missing \"") + key + "\"");
  const json& x = doc.at(key);
  if (!x.is_number_integer() || x.get<long long>() < 1) {
    throw InputError(std::string("probe: \"") + key + "\" must be a positive integer");
  }
  return x.get<int>();
}

}  // namespace

ProbeModel parse_probe(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("probe: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("probe: top level must be an object");
  const int n = read_count(doc, "modes");
  const int l = read_count(doc, "params");
  if (doc.contains("ordering")) {
    const json& o = doc.at("ordering");
    if (!o.is_string() || o.get<std::string>() != kProbeOrdering) {
      throw InputError(std::string("probe: unsupported ordering; expected \"") +
                       kProbeOrdering + "\"");
    }
  }
  MatrixXd cov = read_matrix(doc, "covariance", 2 * n, 2 * n);
  MatrixXd coeffs = read_matrix(doc, "mean_coeffs", l, 2 * n);
  return ProbeModel::create(std::move(cov), std::move(coeffs));
}

ProbeModel load_probe(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("probe: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_probe(buf.str());
}

std::string probe_to_json(const ProbeModel& model) {
  auto rows = [](const MatrixXd& m) {
    json out = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
      out.push_back(std::move(row));
    }
    return out;
  };
  json doc;
  doc["modes"] = model.n_modes();
  doc["params"] = model.n_params();
  doc["ordering"] = kProbeOrdering;
  doc["covariance"] = rows(model.covariance());
  doc["mean_coeffs"] = rows(model.mean_coeffs());
  return doc.dump(2);
}

}  // namespace holevo
