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

#include "supermod/qlin.hpp"

#include <algorithm>
#include <utility>

#include "supermod/errors.hpp"

namespace supermod {

namespace {

using IntRows = std::vector<IntVector>;

IntVector scale_to_integers(std::span<const Rational> row) {
  Integer denom_lcm = 1;
  for (const auto& q : row) {
    mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(),
            q.get_den_mpz_t());
  }
  IntVector out(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) {
    out[i] = row[i].get_num() * (denom_lcm / row[i].get_den());
  }
  return out;
}

struct Echelon {
  IntRows rows;                     // reduced rows, only the first `rank` kept
  std::vector<std::size_t> pivots;  // pivot column of each kept row
};

// Fraction-free Gauss-Jordan (Bareiss). Every division is exact; after the
// sweep all pivots share the same value and each pivot column is zero
// outside its pivot row.
Echelon reduce(IntRows rows, std::size_t cols) {
  Echelon e;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Integer pivot = rows[r][c];
    const IntVector& prow = rows[r];
    Integer t;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      IntVector& row = rows[i];
      const Integer factor = row[c];
      for (std::size_t j = 0; j < cols; ++j) {
        const bool own = sgn(row[j]) != 0;
        const bool other = sgn(factor) != 0 && sgn(prow[j]) != 0;
        if (!own && !other) continue;
        mpz_mul(t.get_mpz_t(), pivot.get_mpz_t(), row[j].get_mpz_t());
        if (other) {
          mpz_submul(t.get_mpz_t(), factor.get_mpz_t(), prow[j].get_mpz_t());
        }
        mpz_divexact(row[j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = pivot;
    e.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  e.rows = std::move(rows);
  return e;
}

Echelon reduce(const RatMatrix& m) {
  IntRows rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    rows.push_back(scale_to_integers(m.row(r)));
  }
  return reduce(std::move(rows), m.cols());
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return ParseError("not a rational number: \"" + s + "\""); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  auto valid_int = [](std::string_view t) {
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
    return !t.empty() && std::all_of(t.begin(), t.end(), [](char ch) {
      return ch >= '0' && ch <= '9';
    });
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' ||
      den.front() == '+') {
    throw bad();
  }
  if (num.front() == '+') num.erase(0, 1);
  Rational q;
  q.get_num() = Integer(num, 10);
  q.get_den() = Integer(den, 10);
  if (q.get_den() == 0) throw bad();
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows,
                               std::size_t cols) {
  RatMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

std::size_t RatMatrix::add_row() {
  data_.resize(data_.size() + cols_);
  return rows_++;
}

void RatMatrix::append_row(std::span<const Rational> values) {
  if (values.size() != cols_) {
    throw IndexError("row length " + std::to_string(values.size()) +
                     " does not match column count " + std::to_string(cols_));
  }
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

RatVector RatMatrix::operator*(std::span<const Rational> x) const {
  if (x.size() != cols_) {
    throw IndexError("vector length does not match column count");
  }
  RatVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (x[c] != 0) acc += (*this)(r, c) * x[c];
    }
    out[r] = acc;
  }
  return out;
}

std::size_t rank(const RatMatrix& m) { return reduce(m).pivots.size(); }

std::vector<IntVector> nullspace(const RatMatrix& m) {
  const Echelon e = reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;

  std::vector<IntVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector x(m.cols());
    x[f] = 1;
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
      const auto pc = e.pivots[r];
      x[pc] = Rational(-e.rows[r][f], e.rows[r][pc]);
      x[pc].canonicalize();
    }
    basis.push_back(normalize_ray(x));
  }
  return basis;
}

std::optional<RatVector> solve_unique(const RatMatrix& m,
                                      std::span<const Rational> b) {
  if (b.size() != m.rows()) {
    throw IndexError("right-hand side length does not match row count");
  }
  IntRows rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    RatVector aug(m.row(r).begin(), m.row(r).end());
    aug.push_back(b[r]);
    rows.push_back(scale_to_integers(aug));
  }
  const Echelon e = reduce(std::move(rows), m.cols() + 1);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  if (e.pivots.size() != m.cols()) return std::nullopt;
  RatVector x(m.cols());
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    x[e.pivots[r]] = Rational(e.rows[r][m.cols()], e.rows[r][e.pivots[r]]);
    x[e.pivots[r]].canonicalize();
  }
  return x;
}

IntVector normalize_ray(std::span<const Rational> x) {
  return normalize_ray(scale_to_integers(x));
}

IntVector normalize_ray(std::span<const Integer> x) {
  Integer g = 0;
  for (const auto& v : x) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g == 0) throw ZeroVectorError("cannot normalize the zero vector");
  auto first = std::find_if(x.begin(), x.end(), [](const Integer& v) {
    return v != 0;
  });
  if (*first < 0) g = -g;
  IntVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    mpz_divexact(out[i].get_mpz_t(), x[i].get_mpz_t(), g.get_mpz_t());
  }
  return out;
}

RatVector to_rational(std::span<const Integer> x) {
  return RatVector(x.begin(), x.end());
}

}  // namespace supermod
