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

#ifndef ARGCL_EXPRESSIBILITY_HPP_
#define ARGCL_EXPRESSIBILITY_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "argcl/formula.hpp"
#include "argcl/relation.hpp"

namespace argcl {

enum class GadgetTarget {
  kNeq,       // x != y
  kImpl,      // x -> y
  kAndNot,    // x & !y
  kTConst,    // x
  kFConst,    // !x
  kEq,        // x = y
  kEqAndT,    // x = y & z
  kEqAndF,    // x = y & !z
  kEqExists,  // x = y, allowing existential variables
};

// CLI spelling: neq, impl, and_not, t, f, eq, eq_and_t, eq_and_f, eq_exists.
std::string_view to_string(GadgetTarget t);
std::optional<GadgetTarget> parse_gadget_target(std::string_view s);

// Extensional relation the target denotes over its free variables in
// sorted order (x, y, z).
Relation target_relation(GadgetTarget t);

// Whether language_properties(language) meets the target's precondition.
bool expressible(GadgetTarget t, const ConstraintLanguage& language);

// Builds a formula over `language` equivalent to the target. Free
// variables are named x, y, z; only kEqExists quantifies (over z, and f, t
// in the non-complementive case). Throws PreconditionViolation if the
// language does not qualify, InvalidArgument if the relations' total arity
// exceeds kMaxArity, InternalError if a construction fails its check.
QuantifiedFormula express(GadgetTarget t, const ConstraintLanguage& language);

// The set of free-variable assignments (sorted order) that extend to a model
// equals `target`. Throws PreconditionViolation on an arity mismatch.
bool verify_expresses(const QuantifiedFormula& f, const Relation& target,
                      std::uint64_t max_models = kDefaultModelBudget);
bool verify_expresses(const GammaFormula& f, const Relation& target,
                      std::uint64_t max_models = kDefaultModelBudget);

// Body with the quantifiers removed. Throws PreconditionViolation if `f`
// carries equalities.
GammaFormula drop_quantifiers(const QuantifiedFormula& f);

// "exists f,t,z" line (empty when unquantified) followed by the body.
std::string to_string(const QuantifiedFormula& f);

}  // namespace argcl

#endif  // ARGCL_EXPRESSIBILITY_HPP_
