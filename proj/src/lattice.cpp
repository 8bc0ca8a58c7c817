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

#include "supermod/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include "supermod/errors.hpp"

namespace supermod {

std::string permutation_string(const Permutation& perm) {
  const bool digits = std::all_of(perm.begin(), perm.end(),
                                  [](int p) { return p >= 1 && p <= 9; });
  std::string out;
  for (std::size_t k = 0; k < perm.size(); ++k) {
    if (!digits && k > 0) out += ',';
    out += std::to_string(perm[k]);
  }
  return out;
}

Permutation parse_permutation(const std::string& text, int n) {
  Permutation perm;
  if (text.find(',') == std::string::npos) {
    for (char ch : text) {
      if (ch < '1' || ch > '9') {
        throw ParseError("bad permutation \"" + text + "\"");
      }
      perm.push_back(ch - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto next = text.find(',', pos);
      if (next == std::string::npos) next = text.size();
      try {
        perm.push_back(std::stoi(text.substr(pos, next - pos)));
      } catch (const std::exception&) {
        throw ParseError("bad permutation \"" + text + "\"");
      }
      pos = next + 1;
    }
  }
  std::vector<bool> seen(n + 1, false);
  if (static_cast<int>(perm.size()) != n) {
    throw ParseError("permutation \"" + text + "\" does not have " +
                     std::to_string(n) + " entries");
  }
  for (int p : perm) {
    if (p < 1 || p > n || seen[p]) {
      throw ParseError("\"" + text + "\" is not a permutation of 1.." +
                       std::to_string(n));
    }
    seen[p] = true;
  }
  return perm;
}

bool MaximalChain::contains(Coalition a) const {
  return a.size() < static_cast<int>(sets.size()) && sets[a.size()] == a;
}

DownSetLattice::DownSetLattice(Poset poset, LatticeOptions options)
    : poset_(std::move(poset)), options_(options) {
  enumerate();
  compute_covers();
  if (size() <= options_.verify_up_to) verify();
}

void DownSetLattice::enumerate() {
  // Breadth-first: every down-set of size k+1 is a down-set of size k plus a
  // player whose strict down-set is already present.
  const int n = poset_.size();
  std::vector<Coalition> strict(n);
  for (int i = 1; i <= n; ++i) strict[i - 1] = poset_.strict_down_set(i);

  std::vector<Coalition> level{Coalition{}};
  elements_.push_back(Coalition{});
  index_.emplace(0, 0);
  while (!level.empty()) {
    std::vector<Coalition> next;
    for (Coalition a : level) {
      for (int i = 1; i <= n; ++i) {
        if (a.contains(i) || !strict[i - 1].subset_of(a)) continue;
        Coalition b = a.with(i);
        if (index_.contains(b.bits())) continue;
        if (elements_.size() >= options_.max_elements) {
          throw SizeError("lattice has more than " +
                          std::to_string(options_.max_elements) + " elements");
        }
        index_.emplace(b.bits(), elements_.size());
        elements_.push_back(b);
        next.push_back(b);
      }
    }
    level = std::move(next);
  }
  std::sort(elements_.begin(), elements_.end(), CanonicalLess{});
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    index_[elements_[k].bits()] = k;
  }
}

void DownSetLattice::compute_covers() {
  const int n = poset_.size();
  upper_covers_.assign(size(), {});
  lower_covers_.assign(size(), {});
  lower_cover_of_ji_.assign(size(), std::nullopt);
  for (std::size_t k = 0; k < size(); ++k) {
    const Coalition a = elements_[k];
    for (int i = 1; i <= n; ++i) {
      if (a.contains(i)) continue;
      if (auto up = find(a.with(i))) upper_covers_[k].push_back(*up);
    }
    std::sort(upper_covers_[k].begin(), upper_covers_[k].end());
    for (int i : a.players()) {
      if (auto low = find(a.without(i))) lower_covers_[k].push_back(*low);
    }
    std::sort(lower_covers_[k].begin(), lower_covers_[k].end());
    if (lower_covers_[k].size() == 1) {
      lower_cover_of_ji_[k] = lower_covers_[k].front();
      join_irreducibles_.push_back(k);
    }
  }
}

std::optional<std::size_t> DownSetLattice::find(Coalition a) const {
  auto it = index_.find(a.bits());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t DownSetLattice::index(Coalition a) const {
  auto it = index_.find(a.bits());
  if (it == index_.end()) {
    throw IndexError(a.to_key() + " is not an element of the lattice");
  }
  return it->second;
}

void DownSetLattice::check_index(Coalition a) const { (void)index(a); }

std::size_t DownSetLattice::unique_lower_cover(std::size_t idx) const {
  const auto& low = lower_cover_of_ji_.at(idx);
  if (!low) {
    throw IndexError(elements_[idx].to_key() + " is not join-irreducible");
  }
  return *low;
}

bool DownSetLattice::is_boolean() const {
  const int n = poset_.size();
  return n < 63 && size() == (std::size_t{1} << n);
}

std::vector<std::size_t> DownSetLattice::interval(Coalition a,
                                                  Coalition b) const {
  check_index(a);
  check_index(b);
  if (!a.subset_of(b)) {
    throw NotComparableError(a.to_key() + " is not a subset of " +
                             b.to_key());
  }
  std::vector<std::size_t> out;
  const std::size_t lo = index(a);
  const std::size_t hi = index(b);
  for (std::size_t k = lo; k <= hi; ++k) {
    if (a.subset_of(elements_[k]) && elements_[k].subset_of(b)) {
      out.push_back(k);
    }
  }
  return out;
}

bool DownSetLattice::is_boolean_interval(Coalition a, Coalition b) const {
  const auto members = interval(a, b);
  const int gap = (b - a).size();
  return gap < 63 && members.size() == (std::size_t{1} << gap);
}

Rational DownSetLattice::mobius(Coalition x, Coalition y) const {
  check_index(x);
  check_index(y);
  if (!x.subset_of(y)) return 0;
  // [x, y] is isomorphic to the down-sets of the subposet y \ x, which is
  // Boolean exactly when y \ x is an antichain.
  const Coalition gap = y - x;
  for (int i : gap.players()) {
    if (!(poset_.strict_down_set(i) & gap).empty()) return 0;
  }
  return gap.size() % 2 == 0 ? 1 : -1;
}

Rational DownSetLattice::mobius_recursive(Coalition x, Coalition y) const {
  check_index(x);
  check_index(y);
  if (!x.subset_of(y)) return 0;
  const auto members = interval(x, y);  // canonical order is a linear extension
  std::map<std::size_t, Rational> mu;
  for (std::size_t z : members) {
    if (elements_[z] == x) {
      mu[z] = 1;
      continue;
    }
    Rational acc = 0;
    for (const auto& [w, value] : mu) {
      if (elements_[w].proper_subset_of(elements_[z])) acc += value;
    }
    mu[z] = -acc;
  }
  return mu.at(index(y));
}

std::vector<Coalition> DownSetLattice::birkhoff_map(Coalition a) const {
  check_index(a);
  std::vector<Coalition> out;
  for (std::size_t j : join_irreducibles_) {
    if (elements_[j].subset_of(a)) out.push_back(elements_[j]);
  }
  return out;
}

void DownSetLattice::verify() const {
  const int n = poset_.size();
  if (elements_.front() != Coalition{} ||
      elements_.back() != poset_.ground_set()) {
    throw Error("lattice does not span the empty set to N");
  }
  if (static_cast<int>(join_irreducibles_.size()) != n) {
    throw Error("expected " + std::to_string(n) +
                " join-irreducibles, found " +
                std::to_string(join_irreducibles_.size()));
  }
  // i -> principal down-set of i is an order isomorphism onto J.
  for (int i = 1; i <= n; ++i) {
    const auto idx = find(poset_.principal_down_set(i));
    if (!idx || !is_join_irreducible(*idx)) {
      throw Error("principal down-set of player " + std::to_string(i) +
                  " is not join-irreducible");
    }
    if (elements_[unique_lower_cover(*idx)] != poset_.strict_down_set(i)) {
      throw Error("unique lower cover of principal down-set of player " +
                  std::to_string(i) + " is not its strict down-set");
    }
    for (int j = 1; j <= n; ++j) {
      const bool below = poset_.principal_down_set(i).subset_of(
          poset_.principal_down_set(j));
      if (below != poset_.leq(i, j)) {
        throw Error("principal down-set map is not an order isomorphism");
      }
    }
  }
  // Birkhoff: a -> {j in J | j <= a} is injective and preserves joins and
  // meets. Images are encoded as bit masks over positions in J.
  std::vector<std::uint64_t> image(size(), 0);
  for (std::size_t k = 0; k < size(); ++k) {
    for (std::size_t t = 0; t < join_irreducibles_.size(); ++t) {
      if (elements_[join_irreducibles_[t]].subset_of(elements_[k])) {
        image[k] |= std::uint64_t{1} << t;
      }
    }
  }
  std::unordered_map<std::uint64_t, std::size_t> seen;
  for (std::size_t k = 0; k < size(); ++k) {
    if (!seen.emplace(image[k], k).second) {
      throw Error("Birkhoff map is not injective");
    }
  }
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = a + 1; b < size(); ++b) {
      const auto join = find(elements_[a] | elements_[b]);
      const auto meet = find(elements_[a] & elements_[b]);
      if (!join || !meet) {
        throw Error("down-sets are not closed under union and intersection");
      }
      if (image[*join] != (image[a] | image[b]) ||
          image[*meet] != (image[a] & image[b])) {
        throw Error("Birkhoff map does not preserve joins and meets");
      }
    }
  }
}

std::vector<MaximalChain> maximal_chains(const DownSetLattice& lattice) {
  const std::size_t cap = lattice.options().max_chains;
  const std::size_t n = static_cast<std::size_t>(lattice.players());
  std::vector<MaximalChain> out;
  MaximalChain current;
  current.sets.push_back(lattice.element(lattice.bottom()));
  current.indices.push_back(lattice.bottom());

  // Upper covers are visited in canonical order, i.e. by increasing added
  // player, so chains come out sorted by permutation.
  std::function<void(std::size_t)> descend = [&](std::size_t at) {
    if (current.sets.size() == n + 1) {
      if (out.size() >= cap) {
        throw SizeError("more than " + std::to_string(cap) +
                        " maximal chains");
      }
      out.push_back(current);
      return;
    }
    for (std::size_t up : lattice.upper_covers(at)) {
      const Coalition added = lattice.element(up) - lattice.element(at);
      current.sets.push_back(lattice.element(up));
      current.indices.push_back(up);
      current.perm.push_back(added.players().front());
      descend(up);
      current.sets.pop_back();
      current.indices.pop_back();
      current.perm.pop_back();
    }
  };
  descend(lattice.bottom());
  return out;
}

}  // namespace supermod
