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

#include "supermod/cli.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "supermod/cone.hpp"
#include "supermod/errors.hpp"
#include "supermod/json_io.hpp"
#include "supermod/marginals.hpp"
#include "supermod/reproduce.hpp"

namespace supermod {

namespace {

struct Outcome {
  Json result;
  std::string table;
  int code = kExitOk;
};

LatticePtr load_lattice(const std::string& path) {
  return make_lattice(load_poset(path), lattice_options_from_env());
}

std::string values_table(const Game& v) {
  std::ostringstream os;
  const auto& l = v.lattice();
  for (std::size_t k = 1; k < l.size(); ++k) {
    os << l.element(k).shorthand(l.players()) << '\t' << to_string(v.at(k))
       << '\n';
  }
  return os.str();
}

std::string vector_text(const PayoffVector& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i > 0) out += ',';
    out += to_string(x[i]);
  }
  return out + ")";
}

Outcome poset_show(const std::string& file) {
  const Poset p = load_poset(file);
  Json closure = Json::array();
  Json down = Json::object();
  Json strict = Json::object();
  std::ostringstream t;
  for (int i = 1; i <= p.size(); ++i) {
    for (int j = 1; j <= p.size(); ++j) {
      if (p.less(i, j)) closure.push_back({i, j});
    }
    down[std::to_string(i)] = to_json(p.principal_down_set(i));
    strict[std::to_string(i)] = to_json(p.strict_down_set(i));
    t << "down(" << i << ") = " << p.principal_down_set(i).shorthand(p.size())
      << "\tstrict(" << i << ") = " << p.strict_down_set(i).shorthand(p.size())
      << '\n';
  }
  Json result = to_json(p);
  result["closure"] = closure;
  result["principal_down_sets"] = down;
  result["strict_down_sets"] = strict;
  return {result, t.str()};
}

Outcome lattice_downsets(const std::string& file) {
  const auto l = load_lattice(file);
  const int n = l->players();
  Json elements = Json::array();
  std::ostringstream t;
  for (auto a : l->elements()) {
    elements.push_back(to_json(a));
    t << a.shorthand(n) << (l->is_join_irreducible(*l->find(a)) ? "\t(J)" : "")
      << '\n';
  }
  Json ji = Json::array();
  for (auto k : l->join_irreducibles()) {
    ji.push_back({{"element", to_json(l->element(k))},
                  {"lower_cover", to_json(l->element(l->unique_lower_cover(k)))}});
  }
  return {{{"size", l->size()}, {"elements", elements}, {"join_irreducibles", ji}},
          t.str()};
}

Outcome lattice_chains(const std::string& file) {
  const auto l = load_lattice(file);
  Json chains = Json::array();
  std::ostringstream t;
  for (const auto& c : maximal_chains(*l)) {
    Json sets = Json::array();
    t << permutation_string(c.perm) << '\t';
    for (std::size_t k = 0; k < c.sets.size(); ++k) {
      sets.push_back(to_json(c.sets[k]));
      t << (k ? " < " : "") << c.sets[k].shorthand(l->players());
    }
    t << '\n';
    chains.push_back({{"perm", permutation_string(c.perm)}, {"sets", sets}});
  }
  return {{{"count", chains.size()}, {"chains", chains}}, t.str()};
}

Outcome lattice_moebius(const std::string& file, const std::string& from,
                        const std::string& to) {
  const auto l = load_lattice(file);
  const Coalition x = parse_coalition(from);
  const Coalition y = parse_coalition(to);
  const Rational mu = l->mobius(x, y);
  return {{{"from", to_json(x)}, {"to", to_json(y)}, {"mobius", to_json(mu)}},
          "mu(" + x.shorthand(l->players()) + ", " + y.shorthand(l->players()) +
              ") = " + to_string(mu) + "\n"};
}

Outcome game_check(const std::string& file, const std::string& cls) {
  const Game v = load_game(file);
  static const std::map<std::string, std::function<bool(const Game&)>> kClasses{
      {"supermodular", is_supermodular},
      {"modular", is_modular},
      {"monotone", is_monotone},
      {"nonnegative", is_nonnegative},
      {"zero-normalized", is_zero_normalized}};
  const bool holds = kClasses.at(cls)(v);
  return {{{"class", cls}, {"holds", holds}},
          cls + ": " + (holds ? "yes" : "no") + "\n",
          holds ? kExitOk : kExitNegative};
}

Outcome game_moebius(const std::string& file) {
  const Game hat = mobius_transform(load_game(file));
  return {{{"moebius", to_json(hat).at("values")}}, values_table(hat)};
}

Outcome game_normalize(const std::string& file) {
  const auto d = zero_normalize(load_game(file));
  return {{{"normalized", to_json(d.normalized).at("values")},
           {"modular", to_json(d.modular).at("values")}},
          "normalized\n" + values_table(d.normalized) + "modular\n" +
              values_table(d.modular)};
}

Outcome core_vertices_cmd(const std::string& file) {
  const auto verts = core_vertices(load_game(file));
  Json out = Json::array();
  std::string t;
  for (const auto& x : verts) {
    out.push_back(to_json(x));
    t += vector_text(x) + "\n";
  }
  return {{{"vertices", out}}, t};
}

Outcome core_tight(const std::string& file, const std::string& perm_text) {
  const Game v = load_game(file);
  const auto& l = v.lattice();
  const Permutation perm = parse_permutation(perm_text, l.players());
  for (const auto& c : maximal_chains(l)) {
    if (c.perm != perm) continue;
    const auto x = marginal_vector(v, c);
    Json tight = Json::array();
    std::string t = "marginal " + vector_text(x) + "\ntight";
    for (auto k : tight_sets(v, c)) {
      tight.push_back(to_json(l.element(k)));
      t += " " + l.element(k).shorthand(l.players());
    }
    const Coalition zeros = zero_coords(v, c);
    t += "\nzero players " + zeros.shorthand(l.players()) + "\n";
    return {{{"perm", permutation_string(perm)},
             {"marginal", to_json(x)},
             {"tight", tight},
             {"zero_coords", to_json(zeros)}},
            t};
  }
  throw ParseError(perm_text + " is not a compatible permutation");
}

Outcome core_envelope(const std::string& file, const std::string& coalition) {
  const Game v = load_game(file);
  const Coalition a = parse_coalition(coalition);
  const Rational env = lower_envelope(v, a);
  return {{{"coalition", to_json(a)},
           {"envelope", to_json(env)},
           {"value", to_json(v(a))},
           {"equal", env == v(a)}},
          "min_pi x(" + a.shorthand(v.lattice().players()) +
              ") = " + to_string(env) + ", v = " + to_string(v(a)) + "\n"};
}

Outcome core_witness(const std::string& file) {
  const auto l = load_lattice(file);
  const auto x = unboundedness_witness(*l);
  if (!x) return {{{"bounded", true}, {"witness", nullptr}}, "bounded\n"};
  return {{{"bounded", false}, {"witness", to_json(*x)}},
          "unbounded, direction " + vector_text(*x) + "\n"};
}

Outcome cone_is_extreme(const std::string& file, const std::string& method) {
  const Game v = load_game(file);
  Json result{{"method", method}};
  bool extreme = false;
  std::string t;
  auto run = [&](ExtremalityMethod m, const std::string& name) {
    const auto r = extremality(v, m);
    result[name] = {{"extreme", r.extreme},
                    {"unknowns", r.unknowns},
                    {"equations", r.equations},
                    {"solution_dimension", r.solution_dimension}};
    t += name + ": " + (r.extreme ? "extreme" : "not extreme") +
         " (solution dimension " + std::to_string(r.solution_dimension) + ")\n";
    return r.extreme;
  };
  if (method == "system") {
    extreme = run(ExtremalityMethod::kSystem, "system");
  } else if (method == "games") {
    extreme = run(ExtremalityMethod::kGames, "games");
  } else {
    const bool a = run(ExtremalityMethod::kSystem, "system");
    const bool b = run(ExtremalityMethod::kGames, "games");
    if (a != b) throw Error("extremality criteria disagree");
    extreme = a;
  }
  if (zero_normalize(v).normalized.is_zero()) {
    result["note"] = "0-normalization is zero; reported as not extreme";
    t += "note: 0-normalization is zero; reported as not extreme\n";
  }
  result["extreme"] = extreme;
  return {result, t, extreme ? kExitOk : kExitNegative};
}

Outcome cone_rays(const std::string& file) {
  const auto rays = extreme_rays(load_lattice(file));
  Json out = Json::array();
  std::string t;
  for (std::size_t k = 0; k < rays.size(); ++k) {
    out.push_back(to_json(rays[k]).at("values"));
    t += "ray " + std::to_string(k + 1) + ":";
    const auto& l = rays[k].lattice();
    for (std::size_t e = 1; e < l.size(); ++e) {
      if (rays[k].at(e) != 0) {
        t += " v(" + l.element(e).shorthand(l.players()) +
             ")=" + to_string(rays[k].at(e));
      }
    }
    t += "\n";
  }
  return {{{"count", rays.size()}, {"rays", out}}, t};
}

Outcome cone_facets(const std::string& file) {
  const auto l = load_lattice(file);
  Json out = Json::array();
  std::string t;
  for (const auto& f : facet_triples(*l)) {
    out.push_back(to_json(f, l->players()));
    t += render_inequality(f, l->players()) + "\n";
  }
  return {{{"count", out.size()}, {"facets", out}}, t};
}

Outcome cone_face_compare(const std::string& first, const std::string& second) {
  const Game v = load_game(first);
  const Game w = load_game(second, v.lattice_ptr());
  const auto r = to_string(face_compare(v, w));
  return {{{"relation", r}}, r + "\n"};
}

Outcome cone_dim(const std::string& file) {
  const auto l = load_lattice(file);
  const auto dim = cone_dimension(l);
  return {{{"dimension", dim}, {"ambient", l->size() - 1}},
          "dimension " + std::to_string(dim) + " in ambient dimension " +
              std::to_string(l->size() - 1) + "\n"};
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(
      std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Outcome reproduce(const std::string& data_dir, std::ostream& err) {
  const RunReport report = reproduce_paper(data_dir);
  Json result = report.to_json();
  result["generated_at"] = utc_timestamp();
  std::string t;
  for (const auto& c : report.checks) {
    t += std::string(c.pass ? "PASS  " : "FAIL  ") + c.claim + "\n";
  }
  if (const Check* bad = report.first_failure()) {
    err << "check failed: " << bad->claim << " (expected "
        << bad->expected.dump() << ", got " << bad->got.dump() << ")\n";
    return {result, t, kExitNegative};
  }
  return {result, t};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Supermodular games on distributive lattices"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "table"}));

  std::function<Outcome()> action;
  std::string file, file2, from, to, cls, perm, coalition, method = "both";
  std::string data_dir = default_data_dir().string();

  auto leaf = [&](CLI::App* parent, const std::string& name,
                  const std::string& help, const std::string& what) {
    auto* cmd = parent->add_subcommand(name, help);
    cmd->add_option(what, file, what + " file")->required();
    return cmd;
  };

  auto* poset = app.add_subcommand("poset", "Posets")->require_subcommand(1);
  leaf(poset, "show", "Closure and principal down-sets", "poset")
      ->callback([&] { action = [&] { return poset_show(file); }; });

  auto* lattice =
      app.add_subcommand("lattice", "Down-set lattices")->require_subcommand(1);
  leaf(lattice, "downsets", "All down-sets and join-irreducibles", "poset")
      ->callback([&] { action = [&] { return lattice_downsets(file); }; });
  leaf(lattice, "chains", "Maximal chains and compatible permutations",
       "poset")
      ->callback([&] { action = [&] { return lattice_chains(file); }; });
  auto* moeb = leaf(lattice, "moebius", "Moebius function value", "poset");
  moeb->add_option("--from", from, "Lower coalition, e.g. [2]")->required();
  moeb->add_option("--to", to, "Upper coalition, e.g. [2,3]")->required();
  moeb->callback([&] { action = [&] { return lattice_moebius(file, from, to); }; });

  auto* game = app.add_subcommand("game", "Games")->require_subcommand(1);
  auto* check = leaf(game, "check", "Test a class predicate", "game");
  check->add_option("--class", cls, "Class")
      ->required()
      ->check(CLI::IsMember({"supermodular", "modular", "monotone",
                             "nonnegative", "zero-normalized"}));
  check->callback([&] { action = [&] { return game_check(file, cls); }; });
  leaf(game, "moebius", "Moebius transform", "game")
      ->callback([&] { action = [&] { return game_moebius(file); }; });
  leaf(game, "normalize", "0-normalized plus modular decomposition", "game")
      ->callback([&] { action = [&] { return game_normalize(file); }; });

  auto* core = app.add_subcommand("core", "Cores and marginal vectors")
                   ->require_subcommand(1);
  leaf(core, "vertices", "Core vertices of a supermodular game", "game")
      ->callback([&] { action = [&] { return core_vertices_cmd(file); }; });
  auto* tight = leaf(core, "tight", "Marginal vector and tight sets", "game");
  tight->add_option("--perm", perm, "Permutation, e.g. 2314")->required();
  tight->callback([&] { action = [&] { return core_tight(file, perm); }; });
  auto* env = leaf(core, "envelope", "Minimum of x(A) over marginal vectors",
                   "game");
  env->add_option("--coalition", coalition, "Coalition, e.g. [3,4]")
      ->required();
  env->callback([&] { action = [&] { return core_envelope(file, coalition); }; });
  leaf(core, "witness", "Recession direction of unbounded cores", "poset")
      ->callback([&] { action = [&] { return core_witness(file); }; });

  auto* cone = app.add_subcommand("cone", "The supermodular cone")
                   ->require_subcommand(1);
  auto* ext = leaf(cone, "is-extreme", "Extremality test", "game");
  ext->add_option("--method", method, "system, games or both")
      ->check(CLI::IsMember({"system", "games", "both"}));
  ext->callback([&] { action = [&] { return cone_is_extreme(file, method); }; });
  leaf(cone, "rays", "Extreme rays of the 0-normalized cone", "poset")
      ->callback([&] { action = [&] { return cone_rays(file); }; });
  leaf(cone, "facets", "Facet-defining inequalities", "poset")
      ->callback([&] { action = [&] { return cone_facets(file); }; });
  auto* cmp = leaf(cone, "face-compare", "Compare smallest faces", "game1");
  cmp->add_option("game2", file2, "game2 file")->required();
  cmp->callback([&] { action = [&] { return cone_face_compare(file, file2); }; });
  leaf(cone, "dim", "Dimension of the 0-normalized cone", "poset")
      ->callback([&] { action = [&] { return cone_dim(file); }; });

  auto* repro = app.add_subcommand(
      "reproduce-paper", "Recompute the worked examples and check them");
  repro->add_option("--data-dir", data_dir, "Directory with p1/ and b4/");
  repro->callback([&] { action = [&] { return reproduce(data_dir, err); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    const Outcome o = action();
    if (format == "table") {
      out << o.table;
    } else {
      out << o.result.dump(2) << '\n';
    }
    return o.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitError;
}

}  // namespace supermod
