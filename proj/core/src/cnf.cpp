// Copyright 2026 The argcl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <bit>

#include "argcl/relation.hpp"
#include "detail.hpp"

namespace argcl::detail {

// Prime implicates by exhaustive clause enumeration in order of increasing
// width. A clause over the positions in `care` is implied iff the cube of
// assignments falsifying it misses R; it is prime iff implied and no
// narrower implicate subsumes it.
std::vector<PositionalClause> compute_prime_implicates(const Relation& r) {
  const TupleCode full = r.full();
  const auto ts = r.tuples();

  std::vector<TupleCode> cares;
  for (TupleCode c = 1; c <= full; ++c) cares.push_back(c);
  std::stable_sort(cares.begin(), cares.end(), [](TupleCode a, TupleCode b) {
    return std::popcount(a) < std::popcount(b);
  });

  std::vector<PositionalClause> primes;
  std::vector<TupleCode> projected;
  for (TupleCode care : cares) {
    projected.clear();
    for (TupleCode m : ts) projected.push_back(m & care);
    std::sort(projected.begin(), projected.end());
    projected.erase(std::unique(projected.begin(), projected.end()),
                    projected.end());
    if (projected.size() == (std::size_t{1} << std::popcount(care))) continue;

    // Enumerate value patterns on `care` in ascending order.
    std::vector<TupleCode> values;
    for (TupleCode v = care;; v = (v - 1) & care) {
      values.push_back(v);
      if (v == 0) break;
    }
    std::reverse(values.begin(), values.end());
    for (TupleCode v : values) {
      if (std::binary_search(projected.begin(), projected.end(), v)) continue;
      PositionalClause clause{care & ~v, v};
      bool subsumed = std::any_of(
          primes.begin(), primes.end(), [&](const PositionalClause& p) {
            return (p.positive & ~clause.positive) == 0 &&
                   (p.negative & ~clause.negative) == 0;
          });
      if (!subsumed) primes.push_back(clause);
    }
  }
  return primes;
}

}  // namespace argcl::detail
