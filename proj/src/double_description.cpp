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

#include "supermod/double_description.hpp"

#include <string>
#include <utility>

#include "supermod/errors.hpp"

namespace supermod {

namespace {

Integer dot(const IntVector& a, const IntVector& x) {
  Integer s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != 0 && x[k] != 0) s += a[k] * x[k];
  }
  return s;
}

int sign(const Integer& z) { return sgn(z); }

// alpha * x + beta * y
IntVector combine(const Integer& alpha, const IntVector& x, const Integer& beta,
                  const IntVector& y) {
  IntVector out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = alpha * x[k] + beta * y[k];
  return out;
}

struct Ray {
  IntVector x;
  std::vector<bool> tight;  // over inequality positions inserted so far
};

std::size_t rank_of_rows(const std::vector<IntVector>& inequalities,
                         const std::vector<std::size_t>& rows,
                         std::size_t dim) {
  RatMatrix m(0, dim);
  for (auto r : rows) m.append_row(to_rational(inequalities[r]));
  return rank(m);
}

}  // namespace

IntVector primitive(IntVector x) {
  Integer g = 0;
  for (const auto& v : x) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g == 0) throw ZeroVectorError("zero vector has no primitive form");
  if (g != 1) {
    for (auto& v : x) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
  return x;
}

ConeGenerators double_description(const std::vector<IntVector>& inequalities,
                                  std::size_t dim,
                                  DoubleDescriptionOptions options) {
  const std::size_t m = inequalities.size();
  for (const auto& a : inequalities) {
    if (a.size() != dim) throw IndexError("inequality has wrong dimension");
  }

  std::vector<IntVector> lineality;
  for (std::size_t k = 0; k < dim; ++k) {
    IntVector e(dim);
    e[k] = 1;
    lineality.push_back(std::move(e));
  }
  std::vector<Ray> rays;

  for (std::size_t h = 0; h < m; ++h) {
    const IntVector& a = inequalities[h];

    // Case 1: the hyperplane cuts the lineality space. Project everything
    // onto a . x = 0 along one lineality direction, which becomes a ray.
    std::size_t pick = lineality.size();
    Integer s;
    for (std::size_t t = 0; t < lineality.size(); ++t) {
      s = dot(a, lineality[t]);
      if (s != 0) {
        pick = t;
        break;
      }
    }
    if (pick < lineality.size()) {
      const IntVector l = lineality[pick];
      const Integer abs_s = abs(s);
      const Integer sg = sign(s);
      std::vector<IntVector> rest;
      for (std::size_t t = 0; t < lineality.size(); ++t) {
        if (t == pick) continue;
        const Integer c = dot(a, lineality[t]);
        rest.push_back(c == 0 ? lineality[t]
                              : primitive(combine(abs_s, lineality[t],
                                                  -sg * c, l)));
      }
      lineality = std::move(rest);
      for (auto& r : rays) {
        const Integer c = dot(a, r.x);
        if (c != 0) r.x = primitive(combine(abs_s, r.x, -sg * c, l));
        r.tight[h] = true;
      }
      Ray fresh{sg < 0 ? combine(-1, l, 0, l) : l, std::vector<bool>(m, false)};
      // The new ray is tight on every earlier inequality, since those all
      // vanish on the lineality space.
      for (std::size_t g = 0; g < h; ++g) fresh.tight[g] = true;
      rays.push_back(std::move(fresh));
      continue;
    }

    // Case 2: standard double description step.
    std::vector<std::size_t> pos, neg;
    std::vector<Integer> value(rays.size());
    for (std::size_t r = 0; r < rays.size(); ++r) {
      value[r] = dot(a, rays[r].x);
      const int sg = sign(value[r]);
      if (sg > 0) {
        pos.push_back(r);
      } else if (sg < 0) {
        neg.push_back(r);
      } else {
        rays[r].tight[h] = true;
      }
    }
    if (neg.empty()) continue;

    const std::size_t effective_dim = dim - lineality.size();
    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (sign(value[r]) >= 0) next.push_back(rays[r]);
    }
    for (auto p : pos) {
      for (auto q : neg) {
        std::vector<std::size_t> common;
        for (std::size_t g = 0; g < h; ++g) {
          if (rays[p].tight[g] && rays[q].tight[g]) common.push_back(g);
        }
        if (effective_dim < 2 || common.size() + 2 < effective_dim) continue;
        if (rank_of_rows(inequalities, common, dim) != effective_dim - 2) {
          continue;
        }
        Ray fresh{primitive(combine(value[p], rays[q].x, -value[q], rays[p].x)),
                  std::vector<bool>(m, false)};
        for (auto g : common) fresh.tight[g] = true;
        fresh.tight[h] = true;
        next.push_back(std::move(fresh));
        if (next.size() > options.max_rays) {
          throw SizeError("double description exceeded " +
                          std::to_string(options.max_rays) + " rays");
        }
      }
    }
    rays = std::move(next);
  }

  ConeGenerators out;
  out.lineality = std::move(lineality);
  for (auto& r : rays) out.rays.push_back(std::move(r.x));
  return out;
}

}  // namespace supermod
