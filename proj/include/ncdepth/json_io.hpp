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

#ifndef NCDEPTH_JSON_IO_HPP
#define NCDEPTH_JSON_IO_HPP

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ncdepth/gaussian_channels.hpp"
#include "ncdepth/gaussian_states.hpp"
#include "ncdepth/phase_space_oracle.hpp"

namespace ncdepth::io {

// File schemas (all numbers finite, matrices 2n x 2n):
//   matrix  {"n": 1, "matrix": [[...], ...]}
//   state   {"n": 1, "V": [[...], ...], "mean": [...]}       mean optional
//   channel {"n": 1, "X": [[...], ...], "Y": [[...], ...]}
//   fock    {"probs": [p0, p1, ...]}
// Matrix files may carry "ordering": "qqpp" to give quadratures as
// (q1..qn, p1..pn); the default is "qpqp".

/// Malformed input: bad JSON, missing keys, wrong shapes, non-finite numbers.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json load_json_file(const std::string& path);

RealMatrix2n read_matrix(const nlohmann::json& doc);
/// Throws PhysicalityError for covariances violating the uncertainty
/// relation.
GaussianState read_state(const nlohmann::json& doc);
/// Builds an unchecked channel; callers decide how to treat non-CP pairs.
GaussianChannel read_channel(const nlohmann::json& doc);
FockDiagonalState read_fock(const nlohmann::json& doc);
/// Parses "p0,p1,..." as given on the command line.
FockDiagonalState parse_probs(const std::string& csv);

nlohmann::json matrix_json(const RealMatrix2n& m);
nlohmann::json channel_json(const GaussianChannel& ch);
nlohmann::json verdict_json(const ChannelVerdict& v);

}  // namespace ncdepth::io

#endif  // NCDEPTH_JSON_IO_HPP
