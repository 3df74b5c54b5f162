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

#ifndef NCDEPTH_CLI_HPP
#define NCDEPTH_CLI_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace ncdepth::cli {

inline constexpr std::string_view kVersion = "0.1.0";

enum ExitCode : int {
  kSuccess = 0,       // also: classical verdict
  kNonclassical = 1,  // also: table mismatch
  kParseError = 2,
  kPhysicsError = 3,  // invalid covariance, non-CP channel
  kShapeError = 4,    // mode counts disagree across inputs
};

struct Table1Row {
  std::string channel;
  double kappa;  // NaN for the singular channel
  double computed;
  double expected;
};

/// Depth of each single-mode quantum-limited canonical channel on the
/// reference kappa grid, next to its closed-form value.
std::vector<Table1Row> compute_table1();

/// Runs the command line `args` (args[0] is the program name). Reports go to
/// `out`, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace ncdepth::cli

#endif  // NCDEPTH_CLI_HPP
