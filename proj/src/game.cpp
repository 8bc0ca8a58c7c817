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

#include "supermod/game.hpp"

#include <string>

#include "supermod/errors.hpp"

namespace supermod {

Game::Game(LatticePtr lattice, std::vector<Rational> values)
    : lattice_(std::move(lattice)), values_(std::move(values)) {
  if (!lattice_) throw Error("game needs a lattice");
  if (values_.size() != lattice_->size()) {
    throw IndexError("game has " + std::to_string(values_.size()) +
                     " values for a lattice of " +
                     std::to_string(lattice_->size()) + " elements");
  }
  if (values_[lattice_->bottom()] != 0) {
    throw Error("a game must vanish on the empty coalition");
  }
}

Game Game::zero(LatticePtr lattice) {
  const auto size = lattice->size();
  return Game(std::move(lattice), std::vector<Rational>(size));
}

bool Game::is_zero() const {
  for (const auto& q : values_) {
    if (q != 0) return false;
  }
  return true;
}

void require_same_lattice(const Game& a, const Game& b) {
  if (a.lattice_ptr() != b.lattice_ptr()) {
    throw LatticeMismatchError("games are defined on different lattices");
  }
}

Game Game::operator-() const {
  std::vector<Rational> out(values_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = -values_[k];
  return Game(lattice_, std::move(out));
}

Game operator+(const Game& a, const Game& b) {
  require_same_lattice(a, b);
  std::vector<Rational> out(a.values_.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = a.values_[k] + b.values_[k];
  }
  return Game(a.lattice_, std::move(out));
}

Game operator-(const Game& a, const Game& b) { return a + (-b); }

Game operator*(const Rational& alpha, const Game& g) {
  std::vector<Rational> out(g.values_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = alpha * g.values_[k];
  return Game(g.lattice_, std::move(out));
}

bool operator==(const Game& a, const Game& b) {
  return a.lattice_ == b.lattice_ && a.values_ == b.values_;
}

Game unanimity(LatticePtr lattice, Coalition a) {
  if (a.empty()) {
    throw EmptyCoalitionError("unanimity game of the empty coalition");
  }
  (void)lattice->index(a);
  std::vector<Rational> values(lattice->size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (a.subset_of(lattice->element(k))) values[k] = 1;
  }
  return Game(std::move(lattice), std::move(values));
}

Game cardinality_game(LatticePtr lattice) {
  std::vector<Rational> values(lattice->size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    values[k] = lattice->element(k).size();
  }
  return Game(std::move(lattice), std::move(values));
}

Game modular_from_join_irreducibles(LatticePtr lattice,
                                    const std::vector<Rational>& values) {
  const auto& ji = lattice->join_irreducibles();
  if (values.size() != ji.size()) {
    throw IndexError("expected one value per join-irreducible");
  }
  // A valuation is a combination of the unanimity games u_J, J in J. The
  // coefficients come from value(J_t) = sum of coefficients of J_s <= J_t,
  // solved in canonical (hence topological) order.
  std::vector<Rational> out(lattice->size());
  std::vector<Rational> increments(ji.size());
  for (std::size_t t = 0; t < ji.size(); ++t) {
    Rational below = 0;
    for (std::size_t s = 0; s < t; ++s) {
      if (lattice->element(ji[s]).proper_subset_of(lattice->element(ji[t]))) {
        below += increments[s];
      }
    }
    increments[t] = values[t] - below;
  }
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (std::size_t t = 0; t < ji.size(); ++t) {
      if (lattice->element(ji[t]).subset_of(lattice->element(k))) {
        out[k] += increments[t];
      }
    }
  }
  return Game(std::move(lattice), std::move(out));
}

namespace {

template <typename Mu>
Game transform_with(const Game& v, Mu mu) {
  const auto& l = v.lattice();
  std::vector<Rational> out(l.size());
  for (std::size_t b = 0; b < l.size(); ++b) {
    for (std::size_t c = 0; c <= b; ++c) {
      if (v.at(c) == 0 || !l.element(c).subset_of(l.element(b))) continue;
      out[b] += v.at(c) * mu(l.element(c), l.element(b));
    }
  }
  return Game(v.lattice_ptr(), std::move(out));
}

Rational supermodular_gap(const Game& v, std::size_t a, std::size_t b) {
  const auto& l = v.lattice();
  const Coalition ca = l.element(a);
  const Coalition cb = l.element(b);
  return v(ca | cb) + v(ca & cb) - v.at(a) - v.at(b);
}

}  // namespace

Game mobius_transform(const Game& v) {
  const auto& l = v.lattice();
  return transform_with(
      v, [&](Coalition c, Coalition b) { return l.mobius(c, b); });
}

Game mobius_transform_recursive(const Game& v) {
  const auto& l = v.lattice();
  return transform_with(
      v, [&](Coalition c, Coalition b) { return l.mobius_recursive(c, b); });
}

Game mobius_inverse(const Game& m) {
  const auto& l = m.lattice();
  std::vector<Rational> out(l.size());
  for (std::size_t a = 0; a < l.size(); ++a) {
    for (std::size_t b = 0; b <= a; ++b) {
      if (m.at(b) != 0 && l.element(b).subset_of(l.element(a))) {
        out[a] += m.at(b);
      }
    }
  }
  return Game(m.lattice_ptr(), std::move(out));
}

bool is_supermodular(const Game& v) {
  const auto& l = v.lattice();
  for (std::size_t a = 0; a < l.size(); ++a) {
    for (std::size_t b = a + 1; b < l.size(); ++b) {
      if (!l.element(a).incomparable(l.element(b))) continue;
      if (supermodular_gap(v, a, b) < 0) return false;
    }
  }
  return true;
}

bool is_supermodular_local(const Game& v) {
  const auto& l = v.lattice();
  const auto& p = l.poset();
  const int n = p.size();
  for (std::size_t k = 0; k < l.size(); ++k) {
    const Coalition a = l.element(k);
    for (int i = 1; i <= n; ++i) {
      if (a.contains(i) || !p.strict_down_set(i).subset_of(a)) continue;
      for (int j = i + 1; j <= n; ++j) {
        if (a.contains(j) || !p.strict_down_set(j).subset_of(a)) continue;
        if (v(a.with(i).with(j)) - v(a.with(i)) - v(a.with(j)) + v.at(k) < 0) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_modular(const Game& v) {
  const auto& l = v.lattice();
  for (std::size_t a = 0; a < l.size(); ++a) {
    for (std::size_t b = a + 1; b < l.size(); ++b) {
      if (supermodular_gap(v, a, b) != 0) return false;
    }
  }
  return true;
}

bool is_monotone(const Game& v) {
  // Checking cover pairs suffices: every inclusion is a chain of covers.
  const auto& l = v.lattice();
  for (std::size_t a = 0; a < l.size(); ++a) {
    for (std::size_t up : l.upper_covers(a)) {
      if (v.at(a) > v.at(up)) return false;
    }
  }
  return true;
}

bool is_nonnegative(const Game& v) {
  for (const auto& q : v.values()) {
    if (q < 0) return false;
  }
  return true;
}

bool is_zero_normalized(const Game& v) {
  const auto hat = mobius_transform(v);
  for (std::size_t j : v.lattice().join_irreducibles()) {
    if (hat.at(j) != 0) return false;
  }
  return true;
}

bool is_zero_normalized_by_covers(const Game& v) {
  const auto& l = v.lattice();
  for (std::size_t j : l.join_irreducibles()) {
    if (v.at(j) != v.at(l.unique_lower_cover(j))) return false;
  }
  return true;
}

Decomposition zero_normalize(const Game& v) {
  const auto& l = v.lattice();
  // For join-irreducible A the only Boolean intervals ending at A are
  // [A, A] and [A^-, A], so the Moebius coefficient is v(A) - v(A^-).
  Game modular = Game::zero(v.lattice_ptr());
  for (std::size_t j : l.join_irreducibles()) {
    const Rational coeff = v.at(j) - v.at(l.unique_lower_cover(j));
    if (coeff != 0) {
      modular = modular + coeff * unanimity(v.lattice_ptr(), l.element(j));
    }
  }
  return {v - modular, modular};
}

}  // namespace supermod
