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

#include "supermod/json_io.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <sstream>

#include "supermod/errors.hpp"

namespace supermod {

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  throw ParseError("expected a rational string, got " + j.dump());
}

Json to_json(Coalition a) { return a.players(); }

Coalition coalition_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a player array, got " + j.dump());
  std::vector<int> players;
  for (const auto& p : j) {
    if (!p.is_number_integer()) {
      throw ParseError("expected integer players in " + j.dump());
    }
    players.push_back(p.get<int>());
  }
  return Coalition::of(players);
}

Coalition parse_coalition(const std::string& text) {
  try {
    return coalition_from_json(Json::parse(text));
  } catch (const Json::exception& e) {
    throw ParseError("bad coalition \"" + text + "\": " + e.what());
  }
}

Json to_json(const Poset& p) {
  Json covers = Json::array();
  for (auto [i, j] : p.covers()) covers.push_back({i, j});
  return {{"n", p.size()}, {"covers", covers}};
}

Poset poset_from_json(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> covers;
    for (const auto& c : j.value("covers", Json::array())) {
      if (!c.is_array() || c.size() != 2) {
        throw ParseError("cover must be a pair, got " + c.dump());
      }
      covers.emplace_back(c[0].get<int>(), c[1].get<int>());
    }
    return Poset::from_covers(n, covers);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad poset: ") + e.what());
  }
}

Json to_json(const PayoffVector& x) {
  Json out = Json::array();
  for (const auto& q : x) out.push_back(to_json(q));
  return out;
}

Json to_json(const PointConfiguration& y) {
  Json out = Json::object();
  for (const auto& [perm, x] : y.entries) {
    out[permutation_string(perm)] = to_json(x);
  }
  return out;
}

PointConfiguration configuration_from_json(const Json& j, int n) {
  if (!j.is_object()) throw ParseError("point configuration must be an object");
  PointConfiguration y;
  for (const auto& [key, value] : j.items()) {
    PayoffVector x;
    for (const auto& q : value) x.push_back(rational_from_json(q));
    y.entries.emplace(parse_permutation(key, n), std::move(x));
  }
  return y;
}

Json to_json(const Game& v) {
  const auto& l = v.lattice();
  Json values = Json::object();
  for (std::size_t k = 0; k < l.size(); ++k) {
    if (v.at(k) != 0) values[l.element(k).to_key()] = to_json(v.at(k));
  }
  return {{"poset", to_json(l.poset())}, {"values", values}};
}

Game game_values_from_json(const Json& values, LatticePtr lattice) {
  if (!values.is_object()) throw ParseError("game values must be an object");
  std::vector<Rational> out(lattice->size());
  for (const auto& [key, value] : values.items()) {
    const Coalition a = parse_coalition(key);
    const auto idx = lattice->find(a);
    if (!idx) throw ParseError(key + " is not a down-set of the poset");
    out[*idx] = rational_from_json(value);
  }
  if (out[lattice->bottom()] != 0) {
    throw ParseError("a game must vanish on the empty coalition");
  }
  return Game(std::move(lattice), std::move(out));
}

Json to_json(const FacetTriple& t, int n) {
  return {{"base", to_json(t.base)},
          {"i", t.i},
          {"j", t.j},
          {"inequality", render_inequality(t, n)}};
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

Poset load_poset(const std::filesystem::path& path) {
  return poset_from_json(read_json_file(path));
}

LatticeOptions lattice_options_from_env() {
  LatticeOptions options;
  if (const char* cap = std::getenv("SUPERMOD_MAX_LATTICE")) {
    char* end = nullptr;
    const auto value = std::strtoull(cap, &end, 10);
    if (end == cap || *end != '\0' || value == 0) {
      throw ParseError(std::string("bad SUPERMOD_MAX_LATTICE value \"") + cap +
                       "\"");
    }
    options.max_elements = value;
  }
  return options;
}

Game load_game(const std::filesystem::path& path, LatticePtr share) {
  const Json j = read_json_file(path);
  if (!j.is_object() || !j.contains("poset") || !j.contains("values")) {
    throw ParseError(path.string() + ": game needs \"poset\" and \"values\"");
  }
  const Json& p = j.at("poset");
  Poset poset = p.is_string()
                    ? load_poset(path.parent_path() / p.get<std::string>())
                    : poset_from_json(p);
  LatticePtr lattice = share && share->poset() == poset
                           ? share
                           : make_lattice(std::move(poset),
                                          lattice_options_from_env());
  return game_values_from_json(j.at("values"), std::move(lattice));
}

std::string file_digest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::istreambuf_iterator<char> it(in), end; it != end; ++it) {
    h ^= static_cast<unsigned char>(*it);
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace supermod
