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

#include "supermod/poset.hpp"

#include <string>

#include "supermod/errors.hpp"

namespace supermod {

Coalition Coalition::of(std::initializer_list<int> players) {
  return of(std::span<const int>(players.begin(), players.size()));
}

Coalition Coalition::of(std::span<const int> players) {
  std::uint64_t bits = 0;
  for (int p : players) {
    if (p < 1 || p > kMaxPlayers) {
      throw IndexError("player " + std::to_string(p) + " out of range");
    }
    bits |= std::uint64_t{1} << (p - 1);
  }
  return Coalition(bits);
}

std::vector<int> Coalition::players() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b) + 1);
  }
  return out;
}

std::string Coalition::to_key() const {
  std::string out = "[";
  bool first = true;
  for (int p : players()) {
    if (!first) out += ',';
    out += std::to_string(p);
    first = false;
  }
  out += ']';
  return out;
}

std::string Coalition::shorthand(int n) const {
  if (empty()) return "∅";
  if (*this == full(n)) return "N";
  std::string out;
  if (n <= 9) {
    for (int p : players()) out += static_cast<char>('0' + p);
    return out;
  }
  return to_key();
}

Poset Poset::from_covers(int n,
                         std::initializer_list<std::pair<int, int>> covers) {
  return from_covers(
      n, std::span<const std::pair<int, int>>(covers.begin(), covers.size()));
}

Poset Poset::from_covers(int n, std::span<const std::pair<int, int>> covers) {
  if (n < 1 || n > kMaxPlayers) {
    throw IndexError("number of players must be in 1.." +
                     std::to_string(kMaxPlayers) + ", got " +
                     std::to_string(n));
  }
  std::vector<Coalition> down(n);
  for (int i = 1; i <= n; ++i) down[i - 1] = Coalition::singleton(i);
  for (auto [i, j] : covers) {
    if (i < 1 || i > n || j < 1 || j > n) {
      throw IndexError("cover (" + std::to_string(i) + "," +
                       std::to_string(j) + ") names a player outside 1.." +
                       std::to_string(n));
    }
    if (i == j) {
      throw IndexError("cover (" + std::to_string(i) + "," +
                       std::to_string(j) + ") is a loop");
    }
    down[j - 1] = down[j - 1].with(i);
  }
  // Warshall closure over bit rows.
  for (int k = 1; k <= n; ++k) {
    for (int j = 1; j <= n; ++j) {
      if (down[j - 1].contains(k)) down[j - 1] = down[j - 1] | down[k - 1];
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (down[j - 1].contains(i) && down[i - 1].contains(j)) {
        throw CycleError("players " + std::to_string(i) + " and " +
                         std::to_string(j) + " lie on a cycle of covers");
      }
    }
  }
  return Poset(n, std::move(down));
}

Poset Poset::chain(int n) {
  std::vector<std::pair<int, int>> covers;
  for (int i = 1; i < n; ++i) covers.emplace_back(i, i + 1);
  return from_covers(n, covers);
}

void Poset::check_player(int i) const {
  if (i < 1 || i > n_) {
    throw IndexError("player " + std::to_string(i) + " outside 1.." +
                     std::to_string(n_));
  }
}

bool Poset::leq(int i, int j) const {
  check_player(i);
  check_player(j);
  return down_[j - 1].contains(i);
}

bool Poset::is_down_set(Coalition s) const {
  if (!s.subset_of(ground_set())) return false;
  for (int i : s.players()) {
    if (!down_[i - 1].subset_of(s)) return false;
  }
  return true;
}

Coalition Poset::principal_down_set(int i) const {
  check_player(i);
  return down_[i - 1];
}

Coalition Poset::strict_down_set(int i) const {
  check_player(i);
  return down_[i - 1].without(i);
}

Coalition Poset::principal_up_set(int i) const {
  check_player(i);
  Coalition up;
  for (int j = 1; j <= n_; ++j) {
    if (down_[j - 1].contains(i)) up = up.with(j);
  }
  return up;
}

std::vector<std::pair<int, int>> Poset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      if (!less(i, j)) continue;
      // i < j is a cover unless some k sits strictly between.
      Coalition between = strict_down_set(j) - down_[i - 1];
      bool is_cover = true;
      for (int k : between.players()) {
        if (less(i, k)) {
          is_cover = false;
          break;
        }
      }
      if (is_cover) out.emplace_back(i, j);
    }
  }
  return out;
}

bool Poset::is_antichain() const {
  for (int i = 1; i <= n_; ++i) {
    if (down_[i - 1].size() != 1) return false;
  }
  return true;
}

}  // namespace supermod
