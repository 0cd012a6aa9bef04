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

// Internal helpers shared between translation units of argcl_core.
#ifndef ARGCL_SRC_DETAIL_HPP_
#define ARGCL_SRC_DETAIL_HPP_

#include <vector>

#include "argcl/relation.hpp"

namespace argcl::detail {

PropertyReport compute_properties(const Relation& r);
std::vector<PositionalClause> compute_prime_implicates(const Relation& r);
std::vector<PositionalEquation> compute_affine_equations(const Relation& r);

}  // namespace argcl::detail

#endif  // ARGCL_SRC_DETAIL_HPP_
