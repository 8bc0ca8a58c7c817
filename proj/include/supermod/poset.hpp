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

#ifndef SUPERMOD_POSET_HPP
#define SUPERMOD_POSET_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace supermod {

/// Largest supported number of players.
inline constexpr int kMaxPlayers = 64;

/// A set of players stored as a bit vector.
///
/// Players are numbered 1..n everywhere in the public interface. Player k
/// occupies bit k-1; this is the only place where the offset appears.
class Coalition {
 public:
  constexpr Coalition() = default;
  constexpr explicit Coalition(std::uint64_t bits) : bits_(bits) {}

  static Coalition of(std::initializer_list<int> players);
  static Coalition of(std::span<const int> players);
  static constexpr Coalition singleton(int player) {
    return Coalition(std::uint64_t{1} << (player - 1));
  }
  /// {1, ..., n}
  static constexpr Coalition full(int n) {
    return Coalition(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int player) const {
    return (bits_ >> (player - 1)) & 1U;
  }
  constexpr bool subset_of(Coalition other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool proper_subset_of(Coalition other) const {
    return subset_of(other) && bits_ != other.bits_;
  }
  /// Neither is a subset of the other.
  constexpr bool incomparable(Coalition other) const {
    return !subset_of(other) && !other.subset_of(*this);
  }

  constexpr Coalition with(int player) const {
    return Coalition(bits_ | (std::uint64_t{1} << (player - 1)));
  }
  constexpr Coalition without(int player) const {
    return Coalition(bits_ & ~(std::uint64_t{1} << (player - 1)));
  }

  /// Members in increasing order.
  std::vector<int> players() const;

  /// "[2,3,4]" form used in JSON keys.
  std::string to_key() const;
  /// Compact form: "∅", "N" for the full set, "234" when n <= 9.
  std::string shorthand(int n) const;

  friend constexpr Coalition operator|(Coalition a, Coalition b) {
    return Coalition(a.bits_ | b.bits_);
  }
  friend constexpr Coalition operator&(Coalition a, Coalition b) {
    return Coalition(a.bits_ & b.bits_);
  }
  /// Set difference.
  friend constexpr Coalition operator-(Coalition a, Coalition b) {
    return Coalition(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(Coalition, Coalition) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Canonical order: cardinality first, then numeric value of the bit vector.
struct CanonicalLess {
  constexpr bool operator()(Coalition a, Coalition b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
  }
};

/// A finite partial order on players 1..n.
///
/// The full reflexive-transitive closure is stored as one bit row per
/// player (its principal down-set), so order queries are O(1).
class Poset {
 public:
  /// Builds the closure of `covers`, where (i, j) means i < j.
  /// Throws IndexError for players outside 1..n or i == j, CycleError when
  /// the closure is not antisymmetric.
  static Poset from_covers(int n, std::span<const std::pair<int, int>> covers);
  static Poset from_covers(int n,
                           std::initializer_list<std::pair<int, int>> covers);
  static Poset antichain(int n) { return from_covers(n, {}); }
  /// 1 < 2 < ... < n
  static Poset chain(int n);

  int size() const { return n_; }
  Coalition ground_set() const { return Coalition::full(n_); }

  /// i <= j in the partial order.
  bool leq(int i, int j) const;
  bool less(int i, int j) const { return i != j && leq(i, j); }

  bool is_down_set(Coalition s) const;
  /// {j | j <= i}
  Coalition principal_down_set(int i) const;
  /// principal_down_set(i) without i itself.
  Coalition strict_down_set(int i) const;
  /// {j | i <= j}
  Coalition principal_up_set(int i) const;

  /// The transitive reduction (Hasse diagram edges), sorted.
  std::vector<std::pair<int, int>> covers() const;
  /// True when no two distinct players are comparable.
  bool is_antichain() const;

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  Poset(int n, std::vector<Coalition> down) : n_(n), down_(std::move(down)) {}
  void check_player(int i) const;

  int n_ = 0;
  std::vector<Coalition> down_;  // down_[i-1] = principal down-set of i
};

}  // namespace supermod

#endif  // SUPERMOD_POSET_HPP
