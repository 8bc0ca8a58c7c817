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

#ifndef SUPERMOD_REPRODUCE_HPP
#define SUPERMOD_REPRODUCE_HPP

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "supermod/json_io.hpp"

namespace supermod {

struct Check {
  std::string claim;
  Json expected;
  Json got;
  bool pass = false;
};

struct RunReport {
  std::string command;
  std::map<std::string, std::string> inputs;  // file name -> digest
  Json results = Json::object();
  std::vector<Check> checks;

  bool all_pass() const;
  /// First failing check, or nullptr.
  const Check* first_failure() const;
  Json to_json() const;
};

/// Data directory of the source tree (golden example files).
std::filesystem::path default_data_dir();

/// Runs the worked examples end to end: the 4-player example poset (p1/)
/// with its six golden generators v1..v6, and the Boolean lattice on four
/// players (b4/).
RunReport reproduce_paper(const std::filesystem::path& data_dir);

}  // namespace supermod

#endif  // SUPERMOD_REPRODUCE_HPP
