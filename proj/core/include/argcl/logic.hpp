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

#ifndef ARGCL_LOGIC_HPP_
#define ARGCL_LOGIC_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "argcl/formula.hpp"
#include "argcl/relation.hpp"

namespace argcl {

enum class Engine {
  kAuto,     // fragment-specific polynomial engines where the language allows
  kGeneric,  // enumeration oracle only
};

struct SolverOptions {
  Engine engine = Engine::kAuto;
  std::uint64_t max_models = kDefaultModelBudget;
  // Largest knowledge base searched exhaustively by subset enumeration.
  std::size_t max_kb = 20;
};

struct Literal {
  Variable var;
  bool positive = true;
  friend bool operator==(const Literal&, const Literal&) = default;
};

// Disjunction of literals over named variables.
using Clause = std::vector<Literal>;

// Decision procedure picked for a satisfiability query.
enum class SatEngine {
  kTrivial,       // no constraints
  kConstant,      // all relations 0-valid, or all 1-valid
  kHorn,          // unit propagation
  kDualHorn,      // unit propagation on the complemented formula
  kTwoSat,        // implication graph + SCC
  kGaussian,      // GF(2) elimination
  kBacktracking,  // exhaustive search with early constraint checks
};

std::string_view to_string(SatEngine e);

// Engine the solver would use for `formulas`, optionally conjoined with unit
// literals.
SatEngine select_sat_engine(std::span<const GammaFormula> formulas,
                            bool with_units, const SolverOptions& options = {});

// Whether the conjunction of all formulas (and `units`) has a model over the
// union of their variables. The empty set is consistent.
bool is_consistent(std::span<const GammaFormula> formulas,
                   const SolverOptions& options = {});
bool is_consistent(std::span<const GammaFormula> formulas,
                   std::span<const Literal> units,
                   const SolverOptions& options = {});

// Every assignment over var(premises) ∪ var(claim) satisfying all premises
// satisfies the claim.
bool entails(std::span<const GammaFormula> premises, const GammaFormula& claim,
             const SolverOptions& options = {});
bool entails(std::span<const GammaFormula> premises, const Clause& claim,
             const SolverOptions& options = {});

// Prime-implicate CNF of R over positions x_1..x_k, shortest clauses first.
std::vector<PositionalClause> cnf_of(const Relation& r);

// For upward-closed R: one all-positive clause {x_i : m_i = 0} per maximal
// non-member m. Throws PreconditionViolation if R is not positive.
std::vector<PositionalClause> positive_cnf_of(const Relation& r);

// Clause of `c`'s relation rewritten over c's arguments; duplicate literals
// merged. Returns an empty clause flagged via `tautology` when repetition
// makes it contain x and ¬x.
Clause instantiate(const PositionalClause& clause, const Constraint& c,
                   bool* tautology = nullptr);

}  // namespace argcl

#endif  // ARGCL_LOGIC_HPP_
