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

#include "supermod/cone.hpp"

#include <algorithm>
#include <string>

#include "supermod/double_description.hpp"
#include "supermod/errors.hpp"

namespace supermod {

std::vector<EqualityPair> equality_pairs(const Game& v) {
  const auto& l = v.lattice();
  std::vector<EqualityPair> out;
  for (std::size_t a = 0; a < l.size(); ++a) {
    for (std::size_t b = a + 1; b < l.size(); ++b) {
      const Coalition ca = l.element(a);
      const Coalition cb = l.element(b);
      if (!ca.incomparable(cb)) continue;
      if (v(ca | cb) + v(ca & cb) == v.at(a) + v.at(b)) {
        out.push_back({ca, cb});
      }
    }
  }
  return out;
}

std::vector<FacetTriple> facet_triples(const DownSetLattice& lattice) {
  const auto& p = lattice.poset();
  const int n = p.size();
  std::vector<FacetTriple> out;
  for (Coalition a : lattice.elements()) {
    for (int i = 1; i <= n; ++i) {
      if (a.contains(i) || !p.strict_down_set(i).subset_of(a)) continue;
      for (int j = i + 1; j <= n; ++j) {
        if (a.contains(j) || !p.strict_down_set(j).subset_of(a)) continue;
        out.push_back({a, i, j});
      }
    }
  }
  return out;
}

Rational facet_slack(const Game& v, const FacetTriple& t) {
  const Coalition a = t.base;
  return v(a.with(t.i).with(t.j)) - v(a.with(t.i)) - v(a.with(t.j)) + v(a);
}

std::string render_inequality(const FacetTriple& t, int n) {
  const Coalition a = t.base;
  std::string lhs = "v(" + a.with(t.i).with(t.j).shorthand(n) + ")";
  if (!a.empty()) lhs += " + v(" + a.shorthand(n) + ")";
  return lhs + " >= v(" + a.with(t.i).shorthand(n) + ") + v(" +
         a.with(t.j).shorthand(n) + ")";
}

Game facet_witness(LatticePtr lattice, const FacetTriple& t,
                   const Rational& eps) {
  const Coalition peak = t.base.with(t.i);
  const Coalition side = t.base.with(t.j);
  std::vector<Rational> values(lattice->size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    const Coalition b = lattice->element(k);
    if (b == peak) {
      values[k] = eps;
    } else if (b.proper_subset_of(peak) || b == side ||
               peak.proper_subset_of(b)) {
      values[k] = 0;
    } else {
      values[k] = -eps;
    }
  }
  return Game(std::move(lattice), std::move(values));
}

namespace {

void require_supermodular(const Game& v) {
  if (!is_supermodular(v)) {
    throw NotSupermodularError("game is not supermodular");
  }
}

ExtremalityResult solve(RatMatrix m) {
  ExtremalityResult r;
  r.unknowns = m.cols();
  r.equations = m.rows();
  r.basis = nullspace(m);
  r.solution_dimension = r.basis.size();
  r.extreme = r.solution_dimension == 1;
  return r;
}

ExtremalityResult system_method(const Game& w, bool reduced) {
  const auto& l = w.lattice();
  const std::size_t n = static_cast<std::size_t>(l.players());
  const auto chains = maximal_chains(l);
  const std::size_t cols = n * chains.size();

  // holders[A] = permutations (by position) for which A is tight.
  std::vector<std::vector<std::size_t>> holders(l.size());
  RatMatrix m(0, cols);
  for (std::size_t c = 0; c < chains.size(); ++c) {
    for (std::size_t k : tight_sets(w, chains[c])) holders[k].push_back(c);
    for (int i : zero_coords(w, chains[c]).players()) {
      const auto row = m.add_row();
      m(row, c * n + (i - 1)) = 1;
    }
  }
  auto add_equal = [&](Coalition a, std::size_t c1, std::size_t c2) {
    const auto row = m.add_row();
    for (int i : a.players()) {
      m(row, c1 * n + (i - 1)) += 1;
      m(row, c2 * n + (i - 1)) -= 1;
    }
  };
  for (std::size_t k = 1; k < l.size(); ++k) {
    const auto& h = holders[k];
    for (std::size_t s = 0; s < h.size(); ++s) {
      if (reduced) {
        if (s > 0) add_equal(l.element(k), h[0], h[s]);
        continue;
      }
      for (std::size_t t = s + 1; t < h.size(); ++t) {
        add_equal(l.element(k), h[s], h[t]);
      }
    }
  }
  return solve(std::move(m));
}

ExtremalityResult games_method(const Game& w) {
  const auto& l = w.lattice();
  const std::size_t cols = l.size() - 1;  // element k lives in column k-1
  RatMatrix m(0, cols);
  auto add = [&](std::size_t row, std::size_t k, int coeff) {
    if (k != l.bottom()) m(row, k - 1) += coeff;
  };
  for (std::size_t j : l.join_irreducibles()) {
    const auto row = m.add_row();
    add(row, j, 1);
    add(row, l.unique_lower_cover(j), -1);
  }
  for (const auto& pair : equality_pairs(w)) {
    const auto row = m.add_row();
    add(row, l.index(pair.a | pair.b), 1);
    add(row, l.index(pair.a & pair.b), 1);
    add(row, l.index(pair.a), -1);
    add(row, l.index(pair.b), -1);
  }
  return solve(std::move(m));
}

}  // namespace

ExtremalityResult extremality(const Game& v, ExtremalityMethod method,
                              bool reduced) {
  require_supermodular(v);
  const Game w = zero_normalize(v).normalized;
  if (w.is_zero()) return {};
  return method == ExtremalityMethod::kSystem ? system_method(w, reduced)
                                              : games_method(w);
}

bool is_extreme(const Game& v) {
  return extremality(v, ExtremalityMethod::kSystem).extreme;
}

bool is_extreme_via_games(const Game& v) {
  return extremality(v, ExtremalityMethod::kGames).extreme;
}

namespace {

// Coordinates of 0-normalized games: their values on the nonempty elements
// that are not join-irreducible. A join-irreducible copies the value of its
// unique lower cover, recursively down to a free element or the bottom.
struct NormalizedCoordinates {
  explicit NormalizedCoordinates(const DownSetLattice& l)
      : coordinate(l.size(), kNone), source(l.size()) {
    for (std::size_t k = 1; k < l.size(); ++k) {
      if (!l.is_join_irreducible(k)) {
        coordinate[k] = free.size();
        free.push_back(k);
      }
    }
    for (std::size_t k = 0; k < l.size(); ++k) {
      std::size_t at = k;
      while (at != l.bottom() && l.is_join_irreducible(at)) {
        at = l.unique_lower_cover(at);
      }
      source[k] = coordinate[at];
    }
  }

  void add(IntVector& row, std::size_t element, int coeff) const {
    if (source[element] != kNone) row[source[element]] += coeff;
  }

  std::vector<Rational> expand(const IntVector& x) const {
    std::vector<Rational> values(source.size());
    for (std::size_t k = 0; k < source.size(); ++k) {
      if (source[k] != kNone) values[k] = x[source[k]];
    }
    return values;
  }

  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> coordinate;
  std::vector<std::size_t> source;
  std::vector<std::size_t> free;
};

}  // namespace

std::vector<Game> extreme_rays(LatticePtr lattice, RayOptions options) {
  const auto& l = *lattice;
  const NormalizedCoordinates coords(l);
  const std::size_t dim = coords.free.size();

  std::vector<IntVector> rows;
  for (const auto& t : facet_triples(l)) {
    IntVector row(dim);
    coords.add(row, l.index(t.base.with(t.i).with(t.j)), 1);
    coords.add(row, l.index(t.base.with(t.i)), -1);
    coords.add(row, l.index(t.base.with(t.j)), -1);
    coords.add(row, l.index(t.base), 1);
    rows.push_back(std::move(row));
  }
  const auto generators =
      double_description(rows, dim, {.max_rays = options.max_rays});
  if (!generators.lineality.empty()) {
    throw Error("cone of 0-normalized supermodular games is not pointed");
  }

  std::vector<Game> out;
  for (const auto& ray : generators.rays) {
    const auto values = coords.expand(ray);
    out.emplace_back(lattice, to_rational(normalize_ray(values)));
  }
  std::sort(out.begin(), out.end(), [](const Game& a, const Game& b) {
    return a.values() < b.values();
  });
  if (options.verify) {
    for (const auto& g : out) {
      if (!is_extreme(g) || !is_extreme_via_games(g)) {
        throw Error("enumerated ray fails the extremality criteria");
      }
    }
  }
  return out;
}

std::size_t cone_dimension(const std::vector<Game>& rays) {
  if (rays.empty()) return 0;
  RatMatrix m(0, rays.front().values().size());
  for (const auto& g : rays) m.append_row(g.values());
  return rank(m);
}

std::size_t cone_dimension(LatticePtr lattice) {
  return cone_dimension(extreme_rays(std::move(lattice)));
}

CoreStructure core_structure(const Game& v) {
  require_supermodular(v);
  CoreStructure s;
  for (const auto& c : maximal_chains(v.lattice())) {
    s.perms.push_back(c.perm);
    s.tight.push_back(tight_sets(v, c));
  }
  return s;
}

std::string to_string(FaceRelation r) {
  switch (r) {
    case FaceRelation::kEqual:
      return "equal";
    case FaceRelation::kBelow:
      return "below";
    case FaceRelation::kAbove:
      return "above";
    case FaceRelation::kIncomparable:
      return "incomparable";
  }
  return "incomparable";
}

FaceRelation face_compare(const Game& v, const Game& w) {
  require_same_lattice(v, w);
  const auto tv = core_structure(v);
  const auto tw = core_structure(w);
  bool w_in_v = true;
  bool v_in_w = true;
  for (std::size_t c = 0; c < tv.tight.size(); ++c) {
    const auto& a = tv.tight[c];
    const auto& b = tw.tight[c];
    w_in_v = w_in_v && std::includes(a.begin(), a.end(), b.begin(), b.end());
    v_in_w = v_in_w && std::includes(b.begin(), b.end(), a.begin(), a.end());
  }
  if (w_in_v && v_in_w) return FaceRelation::kEqual;
  if (w_in_v) return FaceRelation::kBelow;
  if (v_in_w) return FaceRelation::kAbove;
  return FaceRelation::kIncomparable;
}

}  // namespace supermod
