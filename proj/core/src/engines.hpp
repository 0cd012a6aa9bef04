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

// Satisfiability engines over compiled formulas.
#ifndef ARGCL_SRC_ENGINES_HPP_
#define ARGCL_SRC_ENGINES_HPP_

#include <cstdint>
#include <vector>

#include "argcl/logic.hpp"
#include "compiled.hpp"

namespace argcl::detail {

SatEngine pick_engine(const Compiled& compiled, bool with_units, Engine engine);

// Satisfiability of the compiled conjunction under the partial assignment
// `fixed` (kFree for unassigned variables).
bool solve_sat(const Compiled& compiled, const std::vector<std::int8_t>& fixed,
               SatEngine engine, std::uint64_t max_models);

// Throws BudgetExceeded when 2^free_vars exceeds max_models.
void check_budget(std::size_t free_vars, std::uint64_t max_models);

}  // namespace argcl::detail

#endif  // ARGCL_SRC_ENGINES_HPP_
