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

#ifndef SUPERMOD_GAME_HPP
#define SUPERMOD_GAME_HPP

#include <memory>
#include <vector>

#include "supermod/lattice.hpp"
#include "supermod/qlin.hpp"

namespace supermod {

using LatticePtr = std::shared_ptr<const DownSetLattice>;

inline LatticePtr make_lattice(Poset poset, LatticeOptions options = {}) {
  return std::make_shared<const DownSetLattice>(std::move(poset), options);
}

/// A coalitional game: a rational value on every element of one lattice,
/// zero on the empty coalition.
///
/// Games are bound to the lattice object they were created with; combining
/// games over different lattice objects throws LatticeMismatchError.
class Game {
 public:
  /// `values` is indexed like lattice->elements(); values[0] must be 0.
  Game(LatticePtr lattice, std::vector<Rational> values);

  static Game zero(LatticePtr lattice);

  const DownSetLattice& lattice() const { return *lattice_; }
  const LatticePtr& lattice_ptr() const { return lattice_; }
  const std::vector<Rational>& values() const { return values_; }

  const Rational& at(std::size_t idx) const { return values_.at(idx); }
  /// Value of a lattice element; throws IndexError for non-down-sets.
  const Rational& operator()(Coalition a) const {
    return values_[lattice_->index(a)];
  }

  bool is_zero() const;

  Game operator-() const;
  friend Game operator+(const Game& a, const Game& b);
  friend Game operator-(const Game& a, const Game& b);
  friend Game operator*(const Rational& alpha, const Game& g);
  friend bool operator==(const Game& a, const Game& b);

 private:
  LatticePtr lattice_;
  std::vector<Rational> values_;
};

/// Throws LatticeMismatchError unless both games share a lattice.
void require_same_lattice(const Game& a, const Game& b);

/// u_A(B) = 1 if A is a subset of B, else 0. Throws EmptyCoalitionError
/// for the empty coalition.
Game unanimity(LatticePtr lattice, Coalition a);

/// v(A) = |A|; a modular game.
Game cardinality_game(LatticePtr lattice);

/// The modular game with prescribed values on the join-irreducibles
/// (given in lattice->join_irreducibles() order).
Game modular_from_join_irreducibles(LatticePtr lattice,
                                    const std::vector<Rational>& values);

/// Coordinates in the unanimity basis: sum over C <= B of v(C) mu(C, B),
/// with mu from the closed form on Boolean intervals.
Game mobius_transform(const Game& v);
/// The same transform through the recursive Moebius function.
Game mobius_transform_recursive(const Game& v);
/// v(A) = sum over B <= A of m(B).
Game mobius_inverse(const Game& m);

/// v(A u B) + v(A n B) >= v(A) + v(B) for all pairs.
bool is_supermodular(const Game& v);
/// Supermodularity checked only on the local triples (A, i, j) that
/// define the facets; agrees with is_supermodular.
bool is_supermodular_local(const Game& v);
bool is_modular(const Game& v);
bool is_monotone(const Game& v);
bool is_nonnegative(const Game& v);
/// The Moebius transform vanishes on all join-irreducibles.
bool is_zero_normalized(const Game& v);
/// v(A) = v(A^-) for every join-irreducible A.
bool is_zero_normalized_by_covers(const Game& v);

struct Decomposition {
  Game normalized;  // v*, 0-normalized
  Game modular;     // m, modular
};

/// v = v* + m with v* 0-normalized and m modular.
Decomposition zero_normalize(const Game& v);

}  // namespace supermod

#endif  // SUPERMOD_GAME_HPP
