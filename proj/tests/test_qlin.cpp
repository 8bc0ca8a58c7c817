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

#include <random>

#include "doctest.h"
#include "supermod/errors.hpp"
#include "supermod/qlin.hpp"

namespace supermod {
namespace {

RatMatrix mat(const std::vector<RatVector>& rows, std::size_t cols) {
  return RatMatrix::from_rows(rows, cols);
}

Rational q(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

IntVector ints(std::initializer_list<long> xs) {
  IntVector out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

TEST_CASE("rational text") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(to_string(q(4, 6)) == "2/3");
  CHECK(to_string(Rational(-5)) == "-5");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("rank examples") {
  CHECK(rank(RatMatrix::identity(2)) == 2);
  CHECK(rank(RatMatrix(3, 4)) == 0);
  CHECK(rank(mat({{1, 1, 0}, {0, 1, 1}, {1, 2, 1}}, 3)) == 2);
  CHECK(rank(mat({{Rational(1, 2), Rational(1, 3)}, {3, 2}}, 2)) == 1);
  CHECK(rank(RatMatrix(0, 3)) == 0);
}

TEST_CASE("nullspace examples") {
  const auto ns = nullspace(mat({{1, -1}}, 2));
  REQUIRE(ns.size() == 1);
  CHECK(ns[0] == ints({1, 1}));
  CHECK(nullspace(RatMatrix::identity(4)).empty());
  CHECK(nullspace(RatMatrix(0, 3)).size() == 3);
}

TEST_CASE("nullspace properties on random matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> shape(1, 7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = shape(rng);
    const std::size_t c = shape(rng);
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        m(i, j) = trial % 3 == 0 && j % 2 == 1 ? m(i, j - 1) * 2
                                               : q(entry(rng), 1 + trial % 4);
      }
    }
    const auto basis = nullspace(m);
    CHECK(rank(m) + basis.size() == c);
    for (const auto& b : basis) {
      const auto q = to_rational(b);
      for (const auto& y : m * q) CHECK(y == 0);
      CHECK(normalize_ray(std::span<const Integer>(b)) == b);
    }
    RatMatrix stacked(0, c);
    for (const auto& b : basis) stacked.append_row(to_rational(b));
    CHECK(rank(stacked) == basis.size());
  }
}

TEST_CASE("solve_unique") {
  const auto m = mat({{1, 1}, {1, -1}}, 2);
  const RatVector b{3, 1};
  const auto x = solve_unique(m, b);
  REQUIRE(x);
  CHECK(*x == RatVector{2, 1});
  CHECK_FALSE(solve_unique(mat({{1, 1}, {2, 2}}, 2), RatVector{1, 2}));
  CHECK_FALSE(solve_unique(mat({{1, 1}, {1, 1}, {1, -1}}, 2), RatVector{1, 2, 0}));
}

TEST_CASE("normalize_ray examples") {
  CHECK(normalize_ray(RatVector{Rational(1, 2), Rational(1, 3), 0}) ==
        ints({3, 2, 0}));
  CHECK(normalize_ray(RatVector{2, 4}) == ints({1, 2}));
  CHECK(normalize_ray(RatVector{-1, -2}) == ints({1, 2}));
  CHECK(normalize_ray(RatVector{5}) == ints({1}));
  CHECK(normalize_ray(RatVector{0, -3, 6}) == ints({0, 1, -2}));
  CHECK_THROWS_AS(normalize_ray(RatVector{0, 0}), ZeroVectorError);
  CHECK_THROWS_AS(normalize_ray(RatVector{}), ZeroVectorError);
}

TEST_CASE("normalize_ray is idempotent and scale invariant") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  for (int trial = 0; trial < 300; ++trial) {
    RatVector x(1 + trial % 6);
    for (auto& e : x) e = q(num(rng), den(rng));
    x[trial % x.size()] = q(den(rng), den(rng));
    const auto y = normalize_ray(x);
    CHECK(normalize_ray(std::span<const Integer>(y)) == y);
    const Rational alpha = q(den(rng), den(rng));
    RatVector scaled = x;
    for (auto& e : scaled) e *= alpha;
    CHECK(normalize_ray(scaled) == y);
  }
}

}  // namespace
}  // namespace supermod
