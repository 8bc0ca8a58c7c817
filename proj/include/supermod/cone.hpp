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

#ifndef SUPERMOD_CONE_HPP
#define SUPERMOD_CONE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "supermod/game.hpp"
#include "supermod/lattice.hpp"
#include "supermod/marginals.hpp"
#include "supermod/qlin.hpp"

namespace supermod {

/// An unordered pair of incomparable lattice elements on which the
/// supermodular inequality of a game is tight. Stored with a before b in
/// canonical order.
struct EqualityPair {
  Coalition a;
  Coalition b;

  friend bool operator==(const EqualityPair&, const EqualityPair&) = default;
};

/// Incomparable pairs {A, B} with v(A u B) + v(A n B) = v(A) + v(B),
/// in canonical order of (A, B).
std::vector<EqualityPair> equality_pairs(const Game& v);

/// Local supermodular inequality
///   v(A u {i,j}) - v(A u {i}) - v(A u {j}) + v(A) >= 0
/// for A a lattice element and players i < j outside A whose strict
/// down-sets lie in A. These are exactly the facets of the cone.
struct FacetTriple {
  Coalition base;
  int i = 0;
  int j = 0;

  friend bool operator==(const FacetTriple&, const FacetTriple&) = default;
};

/// All facet triples, ordered by base (canonical) then (i, j).
std::vector<FacetTriple> facet_triples(const DownSetLattice& lattice);

/// Left-hand side of the triple's inequality at v.
Rational facet_slack(const Game& v, const FacetTriple& t);

/// "v(A u ij) + v(A) >= v(A u i) + v(A u j)" in coalition shorthand; the
/// v(empty) term is omitted.
std::string render_inequality(const FacetTriple& t, int n);

/// Game that breaks exactly the inequality of `t` on a Boolean lattice:
/// eps at A u {i}; 0 below A u {i}, above it, and at A u {j}; -eps
/// elsewhere.
Game facet_witness(LatticePtr lattice, const FacetTriple& t,
                   const Rational& eps = 1);

/// Which constraint system decides extremality.
enum class ExtremalityMethod {
  kSystem,  // point-configuration system over payoff arrays
  kGames,   // 0-normalized games satisfying the equality pairs
};

struct ExtremalityResult {
  bool extreme = false;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t solution_dimension = 0;
  /// Normalized basis of the solution space.
  std::vector<IntVector> basis;
};

/// Solves the extremality system for v* (the 0-normalization of v).
///
/// kSystem: unknowns y^pi in Q^n for every compatible permutation, with
///   y^pi(A) = y^sigma(A) whenever A is tight for pi and sigma, and
///   y^pi_i = 0 whenever player i has zero marginal along pi.
/// kGames: unknowns w(A) on nonempty elements, with w(A) = w(A^-) on
///   join-irreducibles and the modular equality on every equality pair.
/// v is extreme iff the solution space is a line. When `reduced` is set
/// the kSystem equalities for a set A are chained through the first
/// permutation instead of listed for every pair.
///
/// The zero game (and so every modular game) is reported as not extreme.
/// Throws NotSupermodularError.
ExtremalityResult extremality(const Game& v, ExtremalityMethod method,
                              bool reduced = true);

bool is_extreme(const Game& v);
bool is_extreme_via_games(const Game& v);

struct RayOptions {
  std::size_t max_rays = 1'000'000;
  /// Check every ray with both extremality criteria; throws Error on a
  /// failure.
  bool verify = false;
};

/// Minimal integer generators of the extreme rays of the cone of
/// 0-normalized supermodular games, sorted by value table.
std::vector<Game> extreme_rays(LatticePtr lattice, RayOptions options = {});

/// Dimension of the cone of 0-normalized supermodular games, as the rank
/// of its extreme-ray generators.
std::size_t cone_dimension(LatticePtr lattice);
std::size_t cone_dimension(const std::vector<Game>& rays);

/// Tight sets of v for every compatible permutation.
struct CoreStructure {
  std::vector<Permutation> perms;
  std::vector<std::vector<std::size_t>> tight;  // lattice indices

  friend bool operator==(const CoreStructure&, const CoreStructure&) = default;
};

/// Throws NotSupermodularError.
CoreStructure core_structure(const Game& v);

enum class FaceRelation { kEqual, kBelow, kAbove, kIncomparable };
std::string to_string(FaceRelation r);

/// Compares the smallest faces containing v and w through their core
/// structures. kBelow: T(w) is componentwise inside T(v) with at least one
/// strict inclusion, i.e. the face of v lies strictly inside the face of w.
/// Throws NotSupermodularError or LatticeMismatchError.
FaceRelation face_compare(const Game& v, const Game& w);

}  // namespace supermod

#endif  // SUPERMOD_CONE_HPP
