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

#include "supermod/marginals.hpp"

#include <algorithm>
#include <string>

#include "supermod/errors.hpp"

namespace supermod {

Rational coalition_sum(const PayoffVector& x, Coalition a) {
  Rational sum = 0;
  for (int p : a.players()) sum += x.at(p - 1);
  return sum;
}

PayoffVector marginal_vector(const Game& v, const MaximalChain& chain) {
  const int n = v.lattice().players();
  if (static_cast<int>(chain.perm.size()) != n) {
    throw IndexError("chain does not belong to the game's lattice");
  }
  PayoffVector x(n);
  for (int k = 1; k <= n; ++k) {
    x[chain.perm[k - 1] - 1] = v(chain.sets[k]) - v(chain.sets[k - 1]);
  }
  return x;
}

PointConfiguration payoff_array(const Game& v,
                                const std::vector<MaximalChain>& chains) {
  PointConfiguration y;
  for (const auto& c : chains) y.entries.emplace(c.perm, marginal_vector(v, c));
  return y;
}

PointConfiguration payoff_array(const Game& v) {
  return payoff_array(v, maximal_chains(v.lattice()));
}

std::vector<std::size_t> tight_sets(const Game& v, const MaximalChain& chain) {
  const auto x = marginal_vector(v, chain);
  const auto& l = v.lattice();
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < l.size(); ++k) {
    if (coalition_sum(x, l.element(k)) == v.at(k)) out.push_back(k);
  }
  return out;
}

Coalition zero_coords(const Game& v, const MaximalChain& chain) {
  const auto x = marginal_vector(v, chain);
  Coalition out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) out = out.with(static_cast<int>(i) + 1);
  }
  return out;
}

bool core_contains(const Game& v, const PayoffVector& x) {
  const auto& l = v.lattice();
  if (static_cast<int>(x.size()) != l.players()) {
    throw IndexError("payoff vector has wrong length");
  }
  if (coalition_sum(x, l.element(l.top())) != v.at(l.top())) return false;
  for (std::size_t k = 0; k < l.size(); ++k) {
    if (coalition_sum(x, l.element(k)) < v.at(k)) return false;
  }
  return true;
}

std::vector<CoreConstraint> core_inequalities(const Game& v) {
  const auto& l = v.lattice();
  std::vector<CoreConstraint> out;
  for (std::size_t k = 1; k < l.size(); ++k) {
    out.push_back({l.element(k), v.at(k), k == l.top()});
  }
  return out;
}

std::vector<PayoffVector> core_vertices(const Game& v) {
  if (!is_supermodular(v)) {
    throw NotSupermodularError(
        "core vertices are the marginal vectors only for supermodular games");
  }
  std::vector<PayoffVector> out;
  for (const auto& c : maximal_chains(v.lattice())) {
    out.push_back(marginal_vector(v, c));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rational lower_envelope(const Game& v, Coalition a) {
  return lower_envelope(v, a, maximal_chains(v.lattice()));
}

Rational lower_envelope(const Game& v, Coalition a,
                        const std::vector<MaximalChain>& chains) {
  (void)v.lattice().index(a);
  std::optional<Rational> best;
  for (const auto& c : chains) {
    Rational s = coalition_sum(marginal_vector(v, c), a);
    if (!best || s < *best) best = s;
  }
  return *best;
}

Game game_from_configuration(LatticePtr lattice, const PointConfiguration& y) {
  const auto chains = maximal_chains(*lattice);
  const int n = lattice->players();
  if (y.entries.size() != chains.size()) {
    throw ConsistencyError("configuration has " +
                           std::to_string(y.entries.size()) +
                           " entries but there are " +
                           std::to_string(chains.size()) +
                           " compatible permutations");
  }
  std::vector<std::optional<Rational>> values(lattice->size());
  std::vector<const Permutation*> witness(lattice->size(), nullptr);
  for (const auto& c : chains) {
    auto it = y.entries.find(c.perm);
    if (it == y.entries.end()) {
      throw ConsistencyError("configuration lacks permutation " +
                             permutation_string(c.perm));
    }
    const PayoffVector& x = it->second;
    if (static_cast<int>(x.size()) != n) {
      throw ConsistencyError("payoff vector of " + permutation_string(c.perm) +
                             " has wrong length");
    }
    // Values along a chain agree wherever chains meet.
    for (std::size_t k = 0; k < c.sets.size(); ++k) {
      const Rational s = coalition_sum(x, c.sets[k]);
      auto& slot = values[c.indices[k]];
      if (!slot) {
        slot = s;
        witness[c.indices[k]] = &c.perm;
      } else if (*slot != s) {
        throw ConsistencyError(
            "(dagger) fails: y^" + permutation_string(*witness[c.indices[k]]) +
            "(" + c.sets[k].shorthand(n) + ") != y^" +
            permutation_string(c.perm) + "(" + c.sets[k].shorthand(n) + ")");
      }
    }
    // A player entering its own principal down-set contributes nothing.
    for (int k = 1; k <= n; ++k) {
      const int i = c.perm[k - 1];
      if (c.sets[k] == lattice->poset().principal_down_set(i) && x[i - 1] != 0) {
        throw ConsistencyError("(double dagger) fails: y^" +
                               permutation_string(c.perm) + "_" +
                               std::to_string(i) + " != 0");
      }
    }
  }
  std::vector<Rational> out(lattice->size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = *values[k];
  return Game(std::move(lattice), std::move(out));
}

std::optional<PayoffVector> unboundedness_witness(
    const DownSetLattice& lattice) {
  const auto& p = lattice.poset();
  const int n = p.size();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (!p.less(i, j)) continue;
      PayoffVector x(n);
      x[i - 1] = 1;
      x[j - 1] = -1;
      return x;
    }
  }
  return std::nullopt;
}

}  // namespace supermod
