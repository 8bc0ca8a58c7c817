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

#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "supermod/errors.hpp"

namespace supermod {
namespace {

using namespace supermod::testing;

std::vector<LatticePtr> test_lattices() {
  return {p1(), boolean(1), boolean(2), boolean(3), chain(3), chain(4),
          two_chains(), n_poset()};
}

/// Linear form of a facet inequality on the values of nonempty elements.
RatVector facet_row(const DownSetLattice& l, const FacetTriple& t) {
  RatVector row(l.size() - 1);
  auto add = [&](Coalition a, int c) {
    const auto k = l.index(a);
    if (k != 0) row[k - 1] += c;
  };
  add(t.base.with(t.i).with(t.j), 1);
  add(t.base, 1);
  add(t.base.with(t.i), -1);
  add(t.base.with(t.j), -1);
  return row;
}

/// w(A) = w(A-) on join-irreducibles, same coordinates as facet_row.
RatMatrix normalization_rows(const DownSetLattice& l) {
  RatMatrix m(0, l.size() - 1);
  for (auto j : l.join_irreducibles()) {
    const auto r = m.add_row();
    m(r, j - 1) += 1;
    if (const auto lo = l.unique_lower_cover(j); lo != 0) m(r, lo - 1) -= 1;
  }
  return m;
}

TEST_CASE("equality pairs") {
  const auto l = p1();
  const auto card = cardinality_game(l);
  std::size_t incomparable = 0;
  for (auto a : l->elements()) {
    for (auto b : l->elements()) incomparable += a.incomparable(b);
  }
  CHECK(equality_pairs(card).size() * 2 == incomparable);

  std::vector<Rational> sq(l->size());
  for (std::size_t k = 0; k < l->size(); ++k) {
    sq[k] = l->element(k).size() * l->element(k).size();
  }
  CHECK(equality_pairs(Game(l, sq)).empty());

  const auto v1 = p1_generators(l)[0];
  const auto pairs = equality_pairs(v1);
  for (const auto& p : pairs) {
    CHECK(p.a.incomparable(p.b));
    CHECK(v1(p.a | p.b) + v1(p.a & p.b) == v1(p.a) + v1(p.b));
  }
  // {2} and {4} are incomparable and not in F for the first generator.
  CHECK(std::find(pairs.begin(), pairs.end(),
                  EqualityPair{Coalition::of({2}), Coalition::of({4})}) ==
        pairs.end());
  CHECK(std::find(pairs.begin(), pairs.end(),
                  EqualityPair{Coalition::of({2}), Coalition::of({3})}) !=
        pairs.end());
}

TEST_CASE("tight incomparable pairs lie in the equality family") {
  std::mt19937 rng(59);
  const auto l = p1();
  const auto rays = extreme_rays(l);
  const auto chains = maximal_chains(*l);
  for (int trial = 0; trial < 60; ++trial) {
    const auto v = random_conic(l, rays, rng, 1, trial % 2 == 1);
    std::set<std::pair<std::uint64_t, std::uint64_t>> f;
    for (const auto& p : equality_pairs(v)) {
      f.insert({p.a.bits(), p.b.bits()});
      f.insert({p.b.bits(), p.a.bits()});
    }
    for (const auto& c : chains) {
      const auto tight = tight_sets(v, c);
      for (auto x : tight) {
        for (auto y : tight) {
          const auto a = l->element(x);
          const auto b = l->element(y);
          if (a.incomparable(b)) CHECK(f.contains({a.bits(), b.bits()}));
        }
      }
      for (const auto& [abits, bbits] : f) {
        const Coalition a(abits), b(bbits);
        if (c.contains(b) && c.contains(a | b) && c.contains(a & b)) {
          CHECK_FALSE(c.contains(a));
          CHECK(std::find(tight.begin(), tight.end(), l->index(a)) !=
                tight.end());
        }
      }
    }
  }
}

TEST_CASE("first generator is extreme with the expected solution line") {
  const auto l = p1();
  const auto v1 = p1_generators(l)[0];
  const auto sys = extremality(v1, ExtremalityMethod::kSystem);
  CHECK(sys.extreme);
  REQUIRE(sys.basis.size() == 1);
  RatVector flat;
  for (const auto& [perm, x] : payoff_array(v1).entries) {
    flat.insert(flat.end(), x.begin(), x.end());
  }
  CHECK(sys.basis[0] == normalize_ray(flat));
  CHECK(sys.unknowns == 32);

  const auto games = extremality(v1, ExtremalityMethod::kGames);
  CHECK(games.extreme);
  REQUIRE(games.basis.size() == 1);
  CHECK(games.basis[0] ==
        normalize_ray(RatVector(v1.values().begin() + 1, v1.values().end())));
}

TEST_CASE("sums, modular games and the zero game are not extreme") {
  const auto l = p1();
  const auto g = p1_generators(l);
  for (const auto& v : g) {
    CHECK(is_extreme(v));
    CHECK(is_extreme_via_games(v));
    CHECK(is_extreme(v + cardinality_game(l)));
    CHECK(is_extreme(Rational(3, 2) * v));
  }
  CHECK_FALSE(is_extreme(g[0] + g[1]));
  CHECK_FALSE(is_extreme_via_games(g[0] + g[1]));
  CHECK_FALSE(is_extreme_via_games(g[3] + g[5]));
  CHECK_FALSE(is_extreme(cardinality_game(l)));
  CHECK_FALSE(is_extreme(Game::zero(l)));
  CHECK_FALSE(is_extreme_via_games(Game::zero(l)));
  CHECK(extremality(Game::zero(l), ExtremalityMethod::kSystem)
            .solution_dimension == 0);
  CHECK_THROWS_AS(is_extreme(game_of(l, {{{2}, 1}, {{3}, 1}})),
                  NotSupermodularError);
  CHECK_THROWS_AS(is_extreme_via_games(game_of(l, {{{2}, 1}, {{3}, 1}})),
                  NotSupermodularError);
}

TEST_CASE("both extremality criteria agree; reduced system keeps the rank") {
  std::mt19937 rng(61);
  for (const auto& l : {p1(), boolean(3), boolean(4), chain(3), chain(4),
                        two_chains(), n_poset()}) {
    const auto rays = extreme_rays(l);
    std::vector<Game> games = rays;
    for (std::size_t a = 0; a < rays.size(); ++a) {
      for (std::size_t b = a + 1; b < rays.size(); ++b) {
        games.push_back(rays[a] + rays[b]);
      }
    }
    for (int trial = 0; trial < 20; ++trial) {
      games.push_back(random_conic(l, rays, rng, 1, true));
    }
    const std::size_t limit = l->size() > 10 ? 60 : games.size();
    for (std::size_t k = 0; k < games.size() && k < limit; ++k) {
      const auto& v = games[k];
      const auto red = extremality(v, ExtremalityMethod::kSystem, true);
      const auto full = extremality(v, ExtremalityMethod::kSystem, false);
      CHECK(red.solution_dimension == full.solution_dimension);
      CHECK(red.equations <= full.equations);
      CHECK(red.extreme == is_extreme_via_games(v));
      if (k < rays.size()) CHECK(red.extreme);
      if (k >= rays.size() && k < rays.size() * (rays.size() + 1) / 2) {
        CHECK_FALSE(red.extreme);
      }
    }
  }
}

TEST_CASE("facet triples") {
  CHECK(facet_triples(*p1()).size() == 7);
  CHECK(facet_triples(*boolean(4)).size() == 24);
  CHECK(facet_triples(*boolean(2)).size() == 1);
  CHECK(facet_triples(*boolean(3)).size() == 6);
  CHECK(facet_triples(*boolean(5)).size() == 80);
  CHECK(facet_triples(*chain(4)).empty());
  CHECK(facet_triples(*boolean(1)).empty());

  const auto l = p1();
  std::vector<std::string> rendered;
  for (const auto& t : facet_triples(*l)) {
    CHECK(t.i < t.j);
    CHECK_FALSE(t.base.contains(t.i));
    CHECK_FALSE(t.base.contains(t.j));
    CHECK(l->contains(t.base.with(t.i)));
    CHECK(l->contains(t.base.with(t.j)));
    rendered.push_back(render_inequality(t, 4));
  }
  CHECK(rendered == std::vector<std::string>{
                        "v(23) >= v(2) + v(3)",
                        "v(24) >= v(2) + v(4)",
                        "v(34) >= v(3) + v(4)",
                        "v(234) + v(2) >= v(23) + v(24)",
                        "v(234) + v(3) >= v(23) + v(34)",
                        "v(234) + v(4) >= v(24) + v(34)",
                        "v(N) + v(23) >= v(123) + v(234)",
                    });
}

TEST_CASE("facet inequalities give the supermodular cone") {
  std::mt19937 rng(67);
  for (const auto& l : {p1(), boolean(3), two_chains(), n_poset()}) {
    const auto facets = facet_triples(*l);
    for (int trial = 0; trial < 100; ++trial) {
      const auto v = random_game(l, rng, -2, 2);
      bool all = true;
      for (const auto& t : facets) all = all && facet_slack(v, t) >= 0;
      CHECK(all == brute_supermodular(v));
    }
  }
}

TEST_CASE("extreme rays") {
  const auto l = p1();
  const auto rays = extreme_rays(l, {.verify = true});
  auto expected = p1_generators(l);
  std::sort(expected.begin(), expected.end(), [](const Game& a, const Game& b) {
    return a.values() < b.values();
  });
  CHECK(rays == expected);
  CHECK(extreme_rays(boolean(3), {.verify = true}).size() == 5);
  CHECK(extreme_rays(chain(4)).empty());
  CHECK(extreme_rays(boolean(1)).empty());
  for (const auto& lat : {two_chains(), n_poset()}) {
    const auto r = extreme_rays(lat, {.verify = true});
    CHECK_FALSE(r.empty());
    for (const auto& g : r) {
      CHECK(is_extreme(g));
      CHECK(is_extreme_via_games(g));
      CHECK(is_zero_normalized(g));
    }
  }
  CHECK_THROWS_AS(extreme_rays(l, {.max_rays = 2}), SizeError);
}

TEST_CASE("cone dimension") {
  for (const auto& l : test_lattices()) {
    const std::size_t expect = l->size() - 1 - l->players();
    CHECK(cone_dimension(l) == expect);
    CHECK(cone_dimension(extreme_rays(l)) == expect);
  }
  CHECK(cone_dimension(p1()) == 5);
  CHECK(cone_dimension(boolean(1)) == 0);
}

TEST_CASE("rays are tight on a corank-one set of facets") {
  for (const auto& l : {p1(), boolean(3), boolean(4), two_chains(), n_poset()}) {
    const auto facets = facet_triples(*l);
    const auto base = normalization_rows(*l);
    for (const auto& g : extreme_rays(l)) {
      RatMatrix m = base;
      for (const auto& t : facets) {
        const auto s = facet_slack(g, t);
        CHECK(s >= 0);
        if (s == 0) m.append_row(facet_row(*l, t));
      }
      CHECK(rank(m) == l->size() - 2);
    }
  }
}

TEST_CASE("every facet triple defines a facet") {
  for (const auto& l : {p1(), boolean(3), boolean(4), two_chains(), n_poset()}) {
    const auto rays = extreme_rays(l);
    const std::size_t d = l->size() - 1 - l->players();
    for (const auto& t : facet_triples(*l)) {
      RatMatrix m(0, l->size());
      for (const auto& g : rays) {
        if (facet_slack(g, t) == 0) m.append_row(g.values());
      }
      CHECK(rank(m) == d - 1);
    }
  }
}

std::vector<FacetTriple> violated(const Game& w,
                                  const std::vector<FacetTriple>& facets) {
  std::vector<FacetTriple> out;
  for (const auto& s : facets) {
    if (facet_slack(w, s) < 0) out.push_back(s);
  }
  return out;
}

TEST_CASE("facet witnesses on B3 violate only their own inequality") {
  const auto l = boolean(3);
  const auto facets = facet_triples(*l);
  for (const auto& t : facets) {
    CHECK(violated(facet_witness(l, t), facets) == std::vector<FacetTriple>{t});
    CHECK(facet_slack(facet_witness(l, t, 5), t) == -5);
  }
}

TEST_CASE("facet witnesses on B4 also break a second inequality when |A| = 1") {
  const auto l = boolean(4);
  const auto facets = facet_triples(*l);
  std::size_t exact = 0;
  for (const auto& t : facets) {
    const auto bad = violated(facet_witness(l, t), facets);
    REQUIRE_FALSE(bad.empty());
    CHECK(std::find(bad.begin(), bad.end(), t) != bad.end());
    if (bad.size() == 1) {
      ++exact;
      CHECK(t.base.size() != 1);
    } else {
      CHECK(t.base.size() == 1);
      CHECK(bad.size() == 2);
    }
  }
  CHECK(exact == 12);
  // A = {1}, i = 2, j = 3: w(134) - w(13) - w(34) + w(3) = -1 - 0 + 1 - 1.
  const FacetTriple t{Coalition::of({1}), 2, 3};
  const FacetTriple other{Coalition::of({3}), 1, 4};
  CHECK(violated(facet_witness(l, t), facets) ==
        std::vector<FacetTriple>{t, other});
}

TEST_CASE("face comparison") {
  const auto l = p1();
  const auto g = p1_generators(l);
  CHECK(face_compare(g[0], Rational(2) * g[0]) == FaceRelation::kEqual);
  CHECK(face_compare(g[0], g[0] + g[1]) == FaceRelation::kBelow);
  CHECK(face_compare(g[0] + g[1], g[0]) == FaceRelation::kAbove);
  CHECK(face_compare(g[0], g[1]) == FaceRelation::kIncomparable);
  CHECK(face_compare(g[0], g[0] + cardinality_game(l)) == FaceRelation::kEqual);
  CHECK(to_string(FaceRelation::kBelow) == "below");
  CHECK_THROWS_AS(face_compare(g[0], game_of(l, {{{2}, 1}, {{3}, 1}})),
                  NotSupermodularError);
  CHECK_THROWS_AS(face_compare(g[0], Game::zero(p1())), LatticeMismatchError);
}

TEST_CASE("same tight sets iff same equality family") {
  std::mt19937 rng(71);
  for (const auto& l : {p1(), boolean(3), two_chains()}) {
    const auto rays = extreme_rays(l);
    std::vector<Game> games = rays;
    for (int trial = 0; trial < 10; ++trial) {
      games.push_back(random_conic(l, rays, rng, 2));
    }
    for (const auto& v : games) {
      CHECK(core_structure(v) == core_structure(v + Rational(1, 3) * v));
      CHECK(equality_pairs(v) == equality_pairs(v + Rational(1, 3) * v));
      for (const auto& w : games) {
        CHECK((core_structure(v) == core_structure(w)) ==
              (equality_pairs(v) == equality_pairs(w)));
      }
    }
  }
}

}  // namespace
}  // namespace supermod
