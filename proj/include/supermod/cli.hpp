// Copyright 2026 The supermod Authors
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

#ifndef SUPERMOD_CLI_HPP
#define SUPERMOD_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace supermod {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,        // success, or the predicate holds
  kExitNegative = 1,  // well-formed negative answer (not extreme, ...)
  kExitError = 2,     // bad input, size cap exceeded
};

/// Runs the `supermod` command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace supermod

#endif  // SUPERMOD_CLI_HPP
