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

#ifndef SUPERMOD_LATTICE_HPP
#define SUPERMOD_LATTICE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "supermod/poset.hpp"
#include "supermod/qlin.hpp"

namespace supermod {

/// Caps for lattice materialization. Exceeding one raises SizeError.
struct LatticeOptions {
  std::size_t max_elements = std::size_t{1} << 20;
  std::size_t max_chains = 10'000'000;
  /// Lattices up to this size are cross-checked against Birkhoff's
  /// representation while being built.
  std::size_t verify_up_to = 1024;
};

/// A compatible permutation, written as the player sequence
/// (pi(1), ..., pi(n)): player pi(k) has rank k.
using Permutation = std::vector<int>;

/// "2314" when every player is a single digit, "2,3,1,4" otherwise.
std::string permutation_string(const Permutation& perm);
/// Accepts both forms produced by permutation_string.
Permutation parse_permutation(const std::string& text, int n);

/// A maximal chain {} = A_0 < A_1 < ... < A_n = N and its compatible
/// permutation, A_k = {pi(1), ..., pi(k)}.
struct MaximalChain {
  std::vector<Coalition> sets;
  std::vector<std::size_t> indices;  // positions of `sets` in the lattice
  Permutation perm;

  bool contains(Coalition a) const;
};

/// The distributive lattice of down-sets of a poset.
///
/// Elements are stored in canonical order (cardinality, then bit value), so
/// index 0 is the empty set and the last index is the full player set.
class DownSetLattice {
 public:
  explicit DownSetLattice(Poset poset, LatticeOptions options = {});

  const Poset& poset() const { return poset_; }
  const LatticeOptions& options() const { return options_; }
  int players() const { return poset_.size(); }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Coalition>& elements() const { return elements_; }
  Coalition element(std::size_t idx) const { return elements_.at(idx); }
  std::size_t bottom() const { return 0; }
  std::size_t top() const { return elements_.size() - 1; }

  bool contains(Coalition a) const { return index_.contains(a.bits()); }
  std::optional<std::size_t> find(Coalition a) const;
  /// Throws IndexError when `a` is not a down-set.
  std::size_t index(Coalition a) const;

  /// Join-irreducible elements (as lattice indices) in canonical order.
  const std::vector<std::size_t>& join_irreducibles() const {
    return join_irreducibles_;
  }
  bool is_join_irreducible(std::size_t idx) const {
    return lower_cover_of_ji_[idx].has_value();
  }
  /// The unique lower cover A^- of a join-irreducible A.
  std::size_t unique_lower_cover(std::size_t idx) const;

  const std::vector<std::size_t>& upper_covers(std::size_t idx) const {
    return upper_covers_.at(idx);
  }
  const std::vector<std::size_t>& lower_covers(std::size_t idx) const {
    return lower_covers_.at(idx);
  }

  /// True when the lattice is the full power set 2^N.
  bool is_boolean() const;

  /// |[a, b]| == 2^{|b \ a|}. Throws NotComparableError unless a <= b.
  bool is_boolean_interval(Coalition a, Coalition b) const;
  /// All lattice elements c with a <= c <= b.
  std::vector<std::size_t> interval(Coalition a, Coalition b) const;

  /// Moebius function. Uses the closed form for distributive lattices:
  /// (-1)^{|y \ x|} on Boolean intervals, 0 elsewhere.
  Rational mobius(Coalition x, Coalition y) const;
  /// The same value from the defining recursion
  /// mu(x, y) = -sum_{x <= z < y} mu(x, z).
  Rational mobius_recursive(Coalition x, Coalition y) const;

  /// Join-irreducibles below `a`, as lattice elements.
  std::vector<Coalition> birkhoff_map(Coalition a) const;

  /// Re-runs the structural self-checks (closure under union and
  /// intersection, Birkhoff isomorphism, i -> principal down-set is an
  /// order isomorphism onto the join-irreducibles). Throws Error on failure.
  void verify() const;

 private:
  void enumerate();
  void compute_covers();
  void check_index(Coalition a) const;

  Poset poset_;
  LatticeOptions options_;
  std::vector<Coalition> elements_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::vector<std::vector<std::size_t>> upper_covers_;
  std::vector<std::vector<std::size_t>> lower_covers_;
  std::vector<std::size_t> join_irreducibles_;
  std::vector<std::optional<std::size_t>> lower_cover_of_ji_;
};

/// All maximal chains, sorted lexicographically by permutation.
/// Throws SizeError when their number exceeds options().max_chains.
std::vector<MaximalChain> maximal_chains(const DownSetLattice& lattice);

}  // namespace supermod

#endif  // SUPERMOD_LATTICE_HPP
