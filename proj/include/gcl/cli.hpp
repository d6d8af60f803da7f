// Copyright 2026 The gcl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end, callable in-process.

#ifndef GCL_CLI_HPP_
#define GCL_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace gcl::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInput = 2,
  kCap = 3,
  kLawFailure = 4,
};

/// Runs one invocation. `args` excludes the program name. Artifacts go to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gcl::cli

#endif  // GCL_CLI_HPP_
