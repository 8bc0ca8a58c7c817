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

#ifndef SUPERMOD_QLIN_HPP
#define SUPERMOD_QLIN_HPP

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace supermod {

/// Arbitrary-precision integers and reduced fractions (GMP).
using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Parses "p", "-p" or "p/q" and returns the reduced value.
/// Throws ParseError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);
/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Dense row-major rational matrix.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVector>& rows,
                             std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  /// Appends a zero row and returns its index.
  std::size_t add_row();
  void append_row(std::span<const Rational> values);

  RatVector operator*(std::span<const Rational> x) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank over Q, by fraction-free elimination.
std::size_t rank(const RatMatrix& m);

/// Basis of {x : m x = 0}; each vector is in normalize_ray form.
/// The basis has cols - rank vectors, one per free column.
std::vector<IntVector> nullspace(const RatMatrix& m);

/// The unique solution of m x = b, or nullopt if there is none or it is
/// not unique.
std::optional<RatVector> solve_unique(const RatMatrix& m,
                                      std::span<const Rational> b);

/// Smallest integer vector on the ray through x: clears denominators,
/// divides by the gcd and makes the first nonzero entry positive.
/// Throws ZeroVectorError for the zero vector.
IntVector normalize_ray(std::span<const Rational> x);
IntVector normalize_ray(std::span<const Integer> x);

RatVector to_rational(std::span<const Integer> x);

}  // namespace supermod

#endif  // SUPERMOD_QLIN_HPP
