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

#ifndef SUPERMOD_DOUBLE_DESCRIPTION_HPP
#define SUPERMOD_DOUBLE_DESCRIPTION_HPP

#include <cstddef>
#include <vector>

#include "supermod/qlin.hpp"

namespace supermod {

/// Generators of {x in Q^d : a . x >= 0 for every row a}.
struct ConeGenerators {
  std::vector<IntVector> rays;       // primitive, one per extreme ray
  std::vector<IntVector> lineality;  // basis of the lineality space
};

struct DoubleDescriptionOptions {
  /// Intermediate ray count cap; exceeding it throws SizeError.
  std::size_t max_rays = 1'000'000;
};

/// Incremental double description method. Inequalities are inserted in
/// the given order, starting from the whole space; two rays are combined
/// only when they are adjacent, which is decided by the rank of the
/// inserted inequalities tight at both.
ConeGenerators double_description(const std::vector<IntVector>& inequalities,
                                  std::size_t dim,
                                  DoubleDescriptionOptions options = {});

/// Divides by the positive gcd of the entries (direction is kept).
IntVector primitive(IntVector x);

}  // namespace supermod

#endif  // SUPERMOD_DOUBLE_DESCRIPTION_HPP
