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

#ifndef SUPERMOD_JSON_IO_HPP
#define SUPERMOD_JSON_IO_HPP

#include <filesystem>
#include <string>

#include "json.hpp"
#include "supermod/cone.hpp"
#include "supermod/game.hpp"
#include "supermod/lattice.hpp"
#include "supermod/marginals.hpp"
#include "supermod/poset.hpp"

namespace supermod {

using Json = nlohmann::json;

// Rationals travel as reduced "p/q" (or "p") strings; integers given as JSON
// numbers are accepted on input. Coalitions are sorted player arrays.

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(Coalition a);
Coalition coalition_from_json(const Json& j);
/// Parses "[2,3,4]" (or "[]").
Coalition parse_coalition(const std::string& text);

/// {"n": 4, "covers": [[2,1],[3,1]]}; covers listed as the transitive
/// reduction.
Json to_json(const Poset& p);
Poset poset_from_json(const Json& j);

Json to_json(const PayoffVector& x);
Json to_json(const PointConfiguration& y);
PointConfiguration configuration_from_json(const Json& j, int n);

/// {"poset": {...}, "values": {"[2,4]": "1", ...}}; zero values omitted.
Json to_json(const Game& v);
/// Values for a game on `lattice`; absent coalitions are 0.
Game game_values_from_json(const Json& values, LatticePtr lattice);

Json to_json(const FacetTriple& t, int n);

Json read_json_file(const std::filesystem::path& path);

/// Reads a poset file. Throws ParseError on malformed content.
Poset load_poset(const std::filesystem::path& path);

/// Lattice cap from SUPERMOD_MAX_LATTICE when set, else the default.
LatticeOptions lattice_options_from_env();

/// Reads a game file. The "poset" entry is either inline or a path
/// relative to the game file. When `share` is given and has the same
/// poset, the game is bound to that lattice object.
Game load_game(const std::filesystem::path& path, LatticePtr share = nullptr);

/// 64-bit FNV-1a digest of a file's bytes, as 16 hex digits.
std::string file_digest(const std::filesystem::path& path);

}  // namespace supermod

#endif  // SUPERMOD_JSON_IO_HPP
