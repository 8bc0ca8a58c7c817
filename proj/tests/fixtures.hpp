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

#ifndef SUPERMOD_TESTS_FIXTURES_HPP
#define SUPERMOD_TESTS_FIXTURES_HPP

// Shared test data and brute-force oracles. Nothing here calls the code
// path it is used to check.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "supermod/cone.hpp"
#include "supermod/game.hpp"
#include "supermod/lattice.hpp"
#include "supermod/marginals.hpp"
#include "supermod/poset.hpp"
#include "supermod/qlin.hpp"

namespace supermod::testing {

/// 2 < 1, 3 < 1, 4 isolated.
inline Poset p1_poset() { return Poset::from_covers(4, {{2, 1}, {3, 1}}); }
inline LatticePtr p1() { return make_lattice(p1_poset()); }
inline LatticePtr boolean(int n) { return make_lattice(Poset::antichain(n)); }
inline LatticePtr chain(int n) { return make_lattice(Poset::chain(n)); }
/// 1 < 2 and 3 < 4: a 3x3 grid of down-sets.
inline LatticePtr two_chains() {
  return make_lattice(Poset::from_covers(4, {{1, 2}, {3, 4}}));
}
/// 1 < 3, 2 < 3, 2 < 4 (an "N").
inline LatticePtr n_poset() {
  return make_lattice(Poset::from_covers(4, {{1, 3}, {2, 3}, {2, 4}}));
}

inline Game game_of(const LatticePtr& l,
                    std::initializer_list<std::pair<std::vector<int>, int>> vs) {
  std::vector<Rational> values(l->size());
  for (const auto& [players, value] : vs) {
    values[l->index(Coalition::of(players))] = value;
  }
  return Game(l, std::move(values));
}

/// The six generators of the example cone on P1.
inline std::vector<Game> p1_generators(const LatticePtr& l) {
  return {
      game_of(l, {{{2, 4}, 1}, {{2, 3, 4}, 1}, {{1, 2, 3, 4}, 1}}),
      game_of(l, {{{3, 4}, 1}, {{2, 3, 4}, 1}, {{1, 2, 3, 4}, 1}}),
      game_of(l, {{{2, 3}, 1}, {{1, 2, 3}, 1}, {{2, 3, 4}, 1},
                  {{1, 2, 3, 4}, 1}}),
      game_of(l, {{{2, 3, 4}, 1}, {{1, 2, 3, 4}, 1}}),
      game_of(l, {{{2, 3}, 1}, {{2, 4}, 1}, {{3, 4}, 1}, {{1, 2, 3}, 1},
                  {{2, 3, 4}, 2}, {{1, 2, 3, 4}, 2}}),
      game_of(l, {{{1, 2, 3, 4}, 1}}),
  };
}

/// Integer values in [lo, hi] on every nonempty element.
inline Game random_game(const LatticePtr& l, std::mt19937& rng, int lo = -5,
                        int hi = 5) {
  std::uniform_int_distribution<int> dist(lo, hi);
  std::vector<Rational> values(l->size());
  for (std::size_t k = 1; k < values.size(); ++k) values[k] = dist(rng);
  return Game(l, std::move(values));
}

/// Random nonnegative integer combination of `rays` with at least `min_terms`
/// nonzero coefficients, plus an optional random modular part.
inline Game random_conic(const LatticePtr& l, const std::vector<Game>& rays,
                         std::mt19937& rng, std::size_t min_terms = 1,
                         bool add_modular = false) {
  std::uniform_int_distribution<int> coeff(0, 4);
  min_terms = std::min(min_terms, rays.size());
  for (;;) {
    Game g = Game::zero(l);
    std::size_t terms = 0;
    for (const auto& r : rays) {
      const int c = coeff(rng);
      if (c != 0) {
        g = g + Rational(c) * r;
        ++terms;
      }
    }
    if (terms < min_terms) continue;
    if (add_modular) {
      std::uniform_int_distribution<int> m(-5, 5);
      std::vector<Rational> js(l->join_irreducibles().size());
      for (auto& q : js) q = m(rng);
      g = g + modular_from_join_irreducibles(l, js);
    }
    return g;
  }
}

// ---- Oracles ---------------------------------------------------------------

/// All subsets closed downward, straight from the order relation.
inline std::set<std::uint64_t> brute_down_sets(const Poset& p) {
  std::set<std::uint64_t> out;
  const int n = p.size();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i) {
      if (!((s >> (i - 1)) & 1U)) continue;
      for (int j = 1; j <= n; ++j) {
        if (p.leq(j, i) && !((s >> (j - 1)) & 1U)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.insert(s);
  }
  return out;
}

/// Permutations (pi(1), ..., pi(n)) with i <= j implying i appears first.
inline std::vector<Permutation> brute_linear_extensions(const Poset& p) {
  Permutation perm(p.size());
  for (int k = 0; k < p.size(); ++k) perm[k] = k + 1;
  std::vector<Permutation> out;
  do {
    std::vector<int> rank(p.size() + 1);
    for (int k = 0; k < p.size(); ++k) rank[perm[k]] = k;
    bool ok = true;
    for (int i = 1; i <= p.size() && ok; ++i) {
      for (int j = 1; j <= p.size(); ++j) {
        if (p.less(i, j) && rank[i] > rank[j]) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// All-pairs supermodularity straight from a value table keyed by bits.
inline bool brute_supermodular(const Game& v) {
  std::map<std::uint64_t, Rational> table;
  const auto& els = v.lattice().elements();
  for (std::size_t k = 0; k < els.size(); ++k) table[els[k].bits()] = v.at(k);
  for (auto [a, va] : table) {
    for (auto [b, vb] : table) {
      if (table.at(a | b) + table.at(a & b) < va + vb) return false;
    }
  }
  return true;
}

/// Moebius function by inverting the zeta matrix of the lattice.
inline std::vector<std::vector<Rational>> zeta_inverse(const DownSetLattice& l) {
  const std::size_t m = l.size();
  // Canonical order is a linear extension, so zeta is unitriangular.
  std::vector<std::vector<Rational>> mu(m, std::vector<Rational>(m));
  for (std::size_t x = 0; x < m; ++x) {
    mu[x][x] = 1;
    for (std::size_t y = x + 1; y < m; ++y) {
      if (!l.element(x).subset_of(l.element(y))) continue;
      Rational acc = 0;
      for (std::size_t z = x; z < y; ++z) {
        if (l.element(x).subset_of(l.element(z)) &&
            l.element(z).subset_of(l.element(y))) {
          acc += mu[x][z];
        }
      }
      mu[x][y] = -acc;
    }
  }
  return mu;
}

/// Vertices of the core as basic feasible solutions: x(N) = v(N) together
/// with n-1 further tight constraints whose rows are independent.
inline std::vector<PayoffVector> brute_core_vertices(const Game& v) {
  const auto& l = v.lattice();
  const int n = l.players();
  std::vector<std::size_t> proper;
  for (std::size_t k = 1; k + 1 < l.size(); ++k) proper.push_back(k);
  std::set<PayoffVector> out;
  std::vector<bool> pick(proper.size(), false);
  if (static_cast<int>(proper.size()) < n - 1) return {};
  std::fill(pick.begin(), pick.begin() + (n - 1), true);
  auto row_of = [&](Coalition a) {
    RatVector r(n);
    for (int p : a.players()) r[p - 1] = 1;
    return r;
  };
  do {
    RatMatrix m(0, n);
    RatVector rhs;
    m.append_row(row_of(l.element(l.top())));
    rhs.push_back(v.at(l.top()));
    for (std::size_t t = 0; t < proper.size(); ++t) {
      if (!pick[t]) continue;
      m.append_row(row_of(l.element(proper[t])));
      rhs.push_back(v.at(proper[t]));
    }
    auto x = solve_unique(m, rhs);
    if (!x) continue;
    bool feasible = true;
    for (std::size_t k = 0; k < l.size() && feasible; ++k) {
      if (coalition_sum(*x, l.element(k)) < v.at(k)) feasible = false;
    }
    if (feasible) out.insert(*x);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return {out.begin(), out.end()};
}

}  // namespace supermod::testing

#endif  // SUPERMOD_TESTS_FIXTURES_HPP
