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

#ifndef SUPERMOD_MARGINALS_HPP
#define SUPERMOD_MARGINALS_HPP

#include <map>
#include <optional>
#include <vector>

#include "supermod/game.hpp"
#include "supermod/lattice.hpp"

namespace supermod {

/// x = (x_1, ..., x_n); entry k-1 belongs to player k.
using PayoffVector = std::vector<Rational>;

/// x(A) = sum of x_i over i in A.
Rational coalition_sum(const PayoffVector& x, Coalition a);

/// One payoff vector per compatible permutation.
struct PointConfiguration {
  std::map<Permutation, PayoffVector> entries;

  friend bool operator==(const PointConfiguration&,
                         const PointConfiguration&) = default;
};

/// x_{pi(k)} = v(A_k) - v(A_{k-1}) along the chain.
PayoffVector marginal_vector(const Game& v, const MaximalChain& chain);

/// The payoff array: the marginal vector of every compatible permutation.
PointConfiguration payoff_array(const Game& v,
                                const std::vector<MaximalChain>& chains);
PointConfiguration payoff_array(const Game& v);

/// Lattice elements A with v(A) = x^{v,pi}(A), as lattice indices in
/// canonical order.
std::vector<std::size_t> tight_sets(const Game& v, const MaximalChain& chain);
/// Players whose marginal contribution along the chain is zero.
Coalition zero_coords(const Game& v, const MaximalChain& chain);

/// x(N) = v(N) and x(A) >= v(A) on every lattice element.
bool core_contains(const Game& v, const PayoffVector& x);

/// One row of the core's H-representation: x(coalition) >= rhs, or
/// x(coalition) = rhs when `equality` is set.
struct CoreConstraint {
  Coalition coalition;
  Rational rhs;
  bool equality = false;
};
std::vector<CoreConstraint> core_inequalities(const Game& v);

/// Vertices of the core of a supermodular game: its distinct marginal
/// vectors, sorted lexicographically. Throws NotSupermodularError.
std::vector<PayoffVector> core_vertices(const Game& v);

/// min over compatible permutations of x^{v,pi}(A).
Rational lower_envelope(const Game& v, Coalition a);
Rational lower_envelope(const Game& v, Coalition a,
                        const std::vector<MaximalChain>& chains);

/// The unique 0-normalized game whose payoff array is `y`.
/// Throws ConsistencyError naming the violated condition when `y` is not
/// such an array (or its domain is not the set of compatible permutations).
Game game_from_configuration(LatticePtr lattice, const PointConfiguration& y);

/// A nonzero direction of recession of every core on this lattice,
/// e_i - e_j for the first strict relation i < j; nullopt when the lattice
/// is Boolean.
std::optional<PayoffVector> unboundedness_witness(const DownSetLattice& lattice);

}  // namespace supermod

#endif  // SUPERMOD_MARGINALS_HPP
