// Copyright 2026 The ncdepth Authors
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

#include "ncdepth/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace ncdepth::io {

using nlohmann::json;

namespace {

double finite_number(const json& v, const std::string& where) {
  if (!v.is_number()) throw ParseError(where + ": expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ParseError(where + ": non-finite number");
  return x;
}

int mode_count(const json& doc) {
  if (!doc.is_object()) throw ParseError("top-level value must be an object");
  if (!doc.contains("n")) throw ParseError("missing key \"n\"");
  const json& n = doc.at("n");
  if (!n.is_number_integer() || n.get<long long>() < 1 ||
      n.get<long long>() > 64) {
    throw ParseError("\"n\" must be an integer mode count in [1, 64]");
  }
  return static_cast<int>(n.get<long long>());
}

bool qqpp_ordering(const json& doc) {
  if (!doc.contains("ordering")) return false;
  const json& o = doc.at("ordering");
  if (o == "qpqp") return false;
  if (o == "qqpp") return true;
  throw ParseError("\"ordering\" must be \"qpqp\" or \"qqpp\"");
}

RealMatrix2n matrix_field(const json& doc, const std::string& key, int modes) {
  if (!doc.contains(key)) throw ParseError("missing key \"" + key + "\"");
  const json& rows = doc.at(key);
  const std::size_t d = 2 * static_cast<std::size_t>(modes);
  if (!rows.is_array() || rows.size() != d) {
    throw ParseError("\"" + key + "\" must have " + std::to_string(d) + " rows");
  }
  Eigen::MatrixXd m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || row.size() != d) {
      throw ParseError("\"" + key + "\" row " + std::to_string(i) + " must have " +
                       std::to_string(d) + " entries");
    }
    for (std::size_t j = 0; j < d; ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = finite_number(
          row[j], key + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    }
  }
  RealMatrix2n out(std::move(m));
  return qqpp_ordering(doc) ? qqpp_to_qpqp(out) : out;
}

}  // namespace

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

RealMatrix2n read_matrix(const json& doc) {
  return matrix_field(doc, "matrix", mode_count(doc));
}

GaussianState read_state(const json& doc) {
  const int modes = mode_count(doc);
  RealMatrix2n v = matrix_field(doc, "V", modes);
  if (!is_symmetric(v.mat())) throw ParseError("\"V\" is not symmetric");
  std::optional<Eigen::VectorXd> mean;
  if (doc.contains("mean")) {
    const json& m = doc.at("mean");
    const std::size_t d = 2 * static_cast<std::size_t>(modes);
    if (!m.is_array() || m.size() != d) {
      throw ParseError("\"mean\" must have " + std::to_string(d) + " entries");
    }
    Eigen::VectorXd vec(static_cast<Eigen::Index>(d));
    for (std::size_t i = 0; i < d; ++i) {
      vec(static_cast<Eigen::Index>(i)) =
          finite_number(m[i], "mean[" + std::to_string(i) + "]");
    }
    mean = qqpp_ordering(doc) ? qqpp_to_qpqp(vec) : vec;
  }
  return GaussianState(std::move(v), std::move(mean));
}

GaussianChannel read_channel(const json& doc) {
  const int modes = mode_count(doc);
  RealMatrix2n x = matrix_field(doc, "X", modes);
  RealMatrix2n y = matrix_field(doc, "Y", modes);
  if (!is_symmetric(y.mat())) throw ParseError("\"Y\" is not symmetric");
  return GaussianChannel::unchecked(std::move(x), std::move(y));
}

FockDiagonalState read_fock(const json& doc) {
  if (!doc.is_object() || !doc.contains("probs") || !doc.at("probs").is_array()) {
    throw ParseError("expected {\"probs\": [...]}");
  }
  std::vector<double> p;
  for (std::size_t i = 0; i < doc.at("probs").size(); ++i) {
    p.push_back(finite_number(doc.at("probs")[i], "probs[" + std::to_string(i) + "]"));
  }
  try {
    return FockDiagonalState(std::move(p));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

FockDiagonalState parse_probs(const std::string& csv) {
  std::vector<double> p;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      throw ParseError("bad probability '" + item + "'");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos) {
      throw ParseError("bad probability '" + item + "'");
    }
    p.push_back(x);
  }
  try {
    return FockDiagonalState(std::move(p));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

json matrix_json(const RealMatrix2n& m) { return m.rows(); }

json channel_json(const GaussianChannel& ch) {
  return json{{"n", ch.modes()}, {"X", matrix_json(ch.x())},
              {"Y", matrix_json(ch.y())}};
}

json verdict_json(const ChannelVerdict& v) {
  json out{{"cp", v.cp}, {"cp_min_eigenvalue", v.cp_min_eigenvalue}};
  out["nb"] = v.nb ? json(*v.nb) : json(nullptr);
  out["qpn_classical"] = v.qpn_classical ? json(*v.qpn_classical) : json(nullptr);
  out["depth"] = v.depth ? json(*v.depth) : json(nullptr);
  return out;
}

}  // namespace ncdepth::io
