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

#include "supermod/reproduce.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

#include "supermod/errors.hpp"

#ifndef SUPERMOD_DATA_DIR
#define SUPERMOD_DATA_DIR "data"
#endif

namespace supermod {

bool RunReport::all_pass() const { return first_failure() == nullptr; }

const Check* RunReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.pass) return &c;
  }
  return nullptr;
}

Json RunReport::to_json() const {
  Json checks_json = Json::array();
  for (const auto& c : checks) {
    checks_json.push_back({{"claim", c.claim},
                           {"expected", c.expected},
                           {"got", c.got},
                           {"pass", c.pass}});
  }
  return {{"command", command},
          {"inputs", inputs},
          {"results", results},
          {"checks", checks_json},
          {"pass", all_pass()}};
}

std::filesystem::path default_data_dir() { return SUPERMOD_DATA_DIR; }

namespace {

class Checker {
 public:
  explicit Checker(RunReport& report) : report_(report) {}

  // Runs `compute` and compares with `expected`; any library error becomes
  // a failed check carrying the message.
  void check(const std::string& claim, const Json& expected,
             const std::function<Json()>& compute) {
    Check c{claim, expected, nullptr, false};
    try {
      c.got = compute();
      c.pass = c.got == expected;
    } catch (const std::exception& e) {
      c.got = std::string("error: ") + e.what();
    }
    report_.checks.push_back(std::move(c));
  }

 private:
  RunReport& report_;
};

Json coalition_list(const std::vector<Coalition>& sets) {
  Json out = Json::array();
  for (auto a : sets) out.push_back(to_json(a));
  return out;
}

Json shorthand_set(const DownSetLattice& l, const std::vector<std::size_t>& ks) {
  Json out = Json::array();
  for (auto k : ks) out.push_back(l.element(k).shorthand(l.players()));
  return out;
}

Json sorted(Json arr) {
  std::sort(arr.begin(), arr.end());
  return arr;
}

}  // namespace

RunReport reproduce_paper(const std::filesystem::path& data_dir) {
  RunReport report;
  report.command = "reproduce-paper";
  Checker checker(report);

  const auto p1_path = data_dir / "p1" / "poset.json";
  const auto b4_path = data_dir / "b4" / "poset.json";
  report.inputs["p1/poset.json"] = file_digest(p1_path);
  report.inputs["b4/poset.json"] = file_digest(b4_path);

  const auto p1 = make_lattice(load_poset(p1_path), lattice_options_from_env());
  const auto& l = *p1;
  const int n = l.players();

  checker.check("P1 lattice has 10 elements", 10, [&] { return l.size(); });
  checker.check(
      "P1 down-sets are those of the example lattice",
      Json::parse("[[],[2],[3],[4],[2,3],[2,4],[3,4],[1,2,3],[2,3,4],"
                  "[1,2,3,4]]"),
      [&] { return coalition_list(l.elements()); });
  checker.check("P1 join-irreducibles are 2, 3, 4, 123",
                Json::parse("[[2],[3],[4],[1,2,3]]"), [&] {
                  std::vector<Coalition> ji;
                  for (auto k : l.join_irreducibles()) ji.push_back(l.element(k));
                  return coalition_list(ji);
                });

  const auto chains = maximal_chains(l);
  checker.check("P1 has 8 compatible permutations", 8,
                [&] { return chains.size(); });
  checker.check("P1 compatible permutations",
                Json{"2314", "2341", "2431", "3214", "3241", "3421", "4231",
                     "4321"},
                [&] {
                  Json out = Json::array();
                  for (const auto& c : chains) {
                    out.push_back(permutation_string(c.perm));
                  }
                  return out;
                });

  // Golden generators.
  std::vector<std::optional<Game>> golden(6);
  for (int k = 1; k <= 6; ++k) {
    const std::string name = "v" + std::to_string(k);
    const auto path = data_dir / "p1" / (name + ".json");
    try {
      report.inputs["p1/" + name + ".json"] = file_digest(path);
      golden[k - 1] = load_game(path, p1);
    } catch (const std::exception& e) {
      report.checks.push_back(
          {name + " golden file loads", true, std::string("error: ") + e.what(),
           false});
    }
  }
  auto golden_game = [&](int k) -> const Game& {
    if (!golden[k - 1]) {
      throw Error("golden game v" + std::to_string(k) + " unavailable");
    }
    return *golden[k - 1];
  };

  checker.check(
      "v1 has marginal vector (0,0,0,1) on 5 chains and (0,1,0,0) on 3",
      Json{{"[\"0\",\"0\",\"0\",\"1\"]", 5}, {"[\"0\",\"1\",\"0\",\"0\"]", 3}},
      [&] {
        Json out = Json::object();
        for (const auto& c : chains) {
          const std::string key = to_json(marginal_vector(golden_game(1), c)).dump();
          out[key] = out.value(key, 0) + 1;
        }
        return out;
      });
  checker.check(
      "v1 tight families",
      Json{{"[\"0\",\"0\",\"0\",\"1\"]",
            sorted({"∅", "2", "3", "23", "24", "123", "234", "N"})},
           {"[\"0\",\"1\",\"0\",\"0\"]",
            sorted({"∅", "3", "4", "24", "34", "234", "N"})}},
      [&] {
        Json out = Json::object();
        for (const auto& c : chains) {
          const Game& v1 = golden_game(1);
          const std::string key = to_json(marginal_vector(v1, c)).dump();
          Json family = sorted(shorthand_set(l, tight_sets(v1, c)));
          if (out.contains(key) && out[key] != family) {
            throw Error("chains with equal marginal vectors disagree on "
                        "tight sets");
          }
          out[key] = family;
        }
        return out;
      });

  for (int k = 1; k <= 6; ++k) {
    const std::string name = "v" + std::to_string(k);
    checker.check(name + " is extreme (point-configuration system)", true,
                  [&] { return is_extreme(golden_game(k)); });
    checker.check(name + " is extreme (game equalities)", true,
                  [&] { return is_extreme_via_games(golden_game(k)); });
  }

  std::vector<Game> rays;
  checker.check("P1 extreme rays pass both extremality criteria", true, [&] {
    rays = extreme_rays(p1, {.verify = true});
    return true;
  });
  checker.check("P1 cone has 6 extreme rays", 6, [&] { return rays.size(); });
  checker.check("P1 extreme rays are the generators v1..v6", true, [&] {
    std::set<std::string> got, want;
    for (const auto& g : rays) got.insert(to_json(g).dump());
    for (int k = 1; k <= 6; ++k) want.insert(to_json(golden_game(k)).dump());
    return got == want;
  });
  checker.check("P1 ambient dimension is 9", 9, [&] { return l.size() - 1; });
  checker.check("P1 cone dimension is 5", 5,
                [&] { return cone_dimension(rays); });

  const auto facets = facet_triples(l);
  checker.check("P1 has 7 facets", 7, [&] { return facets.size(); });
  checker.check("P1 facet inequalities",
                sorted({"v(23) >= v(2) + v(3)", "v(24) >= v(2) + v(4)",
                        "v(34) >= v(3) + v(4)", "v(234) + v(2) >= v(23) + v(24)",
                        "v(234) + v(3) >= v(23) + v(34)",
                        "v(234) + v(4) >= v(24) + v(34)",
                        "v(N) + v(23) >= v(123) + v(234)"}),
                [&] {
                  Json out = Json::array();
                  for (const auto& t : facets) {
                    out.push_back(render_inequality(t, n));
                  }
                  return sorted(out);
                });

  const auto b4 = make_lattice(load_poset(b4_path), lattice_options_from_env());
  checker.check("B4 has 24 facets", 24,
                [&] { return facet_triples(*b4).size(); });
  std::size_t b4_rays = 0;
  checker.check("B4 cone has 37 extreme rays", 37, [&] {
    b4_rays = extreme_rays(b4).size();
    return b4_rays;
  });

  report.results = {
      {"p1", {{"lattice_size", l.size()},
              {"join_irreducibles", l.join_irreducibles().size()},
              {"compatible_permutations", chains.size()},
              {"extreme_rays", rays.size()},
              {"cone_dimension", cone_dimension(rays)},
              {"facets", facets.size()}}},
      {"b4", {{"lattice_size", b4->size()},
              {"facets", facet_triples(*b4).size()},
              {"extreme_rays", b4_rays}}}};
  return report;
}

}  // namespace supermod
