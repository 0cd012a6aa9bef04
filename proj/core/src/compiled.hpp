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

// Index-based view of a set of formulas, shared by the engines.
#ifndef ARGCL_SRC_COMPILED_HPP_
#define ARGCL_SRC_COMPILED_HPP_

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "argcl/formula.hpp"

namespace argcl::detail {

struct CompiledConstraint {
  Relation relation;
  std::vector<int> args;
};

struct Compiled {
  std::vector<Variable> vars;  // sorted
  std::vector<CompiledConstraint> constraints;

  int index_of(const Variable& v) const {
    auto it = std::lower_bound(vars.begin(), vars.end(), v);
    return (it != vars.end() && *it == v) ? static_cast<int>(it - vars.begin())
                                          : -1;
  }
};

// Variables are the union of the formulas' variables and `extra`.
Compiled compile(std::span<const GammaFormula> formulas,
                 std::span<const Variable> extra = {});

// Unassigned marker for partial assignments.
inline constexpr std::int8_t kFree = -1;

inline TupleCode encode(const CompiledConstraint& c,
                        const std::vector<std::int8_t>& values) {
  TupleCode code = 0;
  for (int a : c.args) {
    code = (code << 1) | static_cast<TupleCode>(values[static_cast<std::size_t>(a)] == 1);
  }
  return code;
}

// Depth-first enumeration of all total assignments extending `fixed` that
// satisfy every constraint, in lexicographic order of the variable vector.
// `visit(values)` returns false to stop; the function returns false iff
// stopped early.
template <typename Visit>
bool for_each_model(const Compiled& compiled, std::vector<std::int8_t> fixed,
                    Visit&& visit) {
  const int n = static_cast<int>(compiled.vars.size());
  // Each constraint is checked once its highest-indexed variable is set.
  std::vector<std::vector<const CompiledConstraint*>> due(static_cast<std::size_t>(n + 1));
  for (const auto& c : compiled.constraints) {
    int last = -1;
    for (int a : c.args) last = std::max(last, a);
    due[static_cast<std::size_t>(last + 1)].push_back(&c);
  }
  std::vector<std::int8_t> values = fixed;
  for (const auto* c : due[0]) {
    if (!c->relation.contains(encode(*c, values))) return true;
  }

  auto level_ok = [&](int depth) {
    for (const auto* c : due[static_cast<std::size_t>(depth + 1)]) {
      if (!c->relation.contains(encode(*c, values))) return false;
    }
    return true;
  };

  // Iterative DFS; `next` holds the next value to try at each depth.
  std::vector<std::int8_t> next(static_cast<std::size_t>(n), 0);
  int depth = 0;
  if (n == 0) return visit(values);
  while (depth >= 0) {
    auto d = static_cast<std::size_t>(depth);
    if (next[d] > 1 || (fixed[d] != kFree && next[d] > fixed[d])) {
      next[d] = 0;
      values[d] = fixed[d];
      --depth;
      continue;
    }
    if (fixed[d] != kFree && next[d] < fixed[d]) next[d] = fixed[d];
    values[d] = next[d]++;
    if (!level_ok(depth)) continue;
    if (depth + 1 == n) {
      if (!visit(values)) return false;
      continue;
    }
    ++depth;
  }
  return true;
}

}  // namespace argcl::detail

#endif  // ARGCL_SRC_COMPILED_HPP_
