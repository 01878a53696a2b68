// Copyright 2026 The nlco Authors.
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

#ifndef NLCO_CLI_HPP_
#define NLCO_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

#include "nlco/error.hpp"

namespace nlco {

// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,  // bad flags, unsupported combination, internal error
  kExitParse = 2,  // malformed input or violated invariant/precondition
  kExitInfeasible = 3,
  kExitCapExceeded = 4,
  kExitVerifyMismatch = 5,
  kExitCutBudget = 6,  // includes oracle contract breaches
  kExitRandomizedFailure = 7,
};

int ExitCodeFor(ErrorKind kind);

// Runs `nlco <args...>` (args excludes the program name). Reports go to
// `out` unless --out is given; diagnostics go to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace nlco

#endif  // NLCO_CLI_HPP_
