// Copyright 2026 The tlsfit Authors.
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

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "tlsfit/error.hpp"

namespace tlsfit::io {

/// Process exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitInput = 3,       // unreadable, unparsable or invalid input data
  kExitDegenerate = 4,  // points do not determine the requested flat
  kExitNumerical = 5,
};

int ExitCodeFor(ErrorKind kind);

/// Environment variable naming the directory plots and scene files go to;
/// --output-dir overrides it.
inline constexpr std::string_view kOutputDirEnv = "TLSFIT_OUTPUT_DIR";

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`; returns the exit status.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace tlsfit::io
