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

// The holevo command-line tool, callable in-process for testing.

#ifndef HOLEVO_TOOLS_CLI_HPP_
#define HOLEVO_TOOLS_CLI_HPP_

#include <ostream>

namespace holevo::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kNumericalFailure = 3,
  kInvariantViolation = 4,
};

/// Runs one command line. Reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace holevo::cli

#endif  // HOLEVO_TOOLS_CLI_HPP_
