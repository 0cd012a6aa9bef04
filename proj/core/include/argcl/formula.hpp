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

#ifndef ARGCL_FORMULA_HPP_
#define ARGCL_FORMULA_HPP_

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "argcl/relation.hpp"

namespace argcl {

// Variables are named; the canonical order is lexicographic by name.
using Variable = std::string;

// R(x_1, ..., x_k); arguments may repeat.
struct Constraint {
  Relation relation;
  std::vector<Variable> args;

  // Throws InvalidArgument on an arity mismatch or a malformed variable name.
  Constraint(Relation relation, std::vector<Variable> args);

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

// Conjunction of constraints. Parsed formulas are never empty; the empty
// conjunction only appears as an intermediate inside the solvers.
struct GammaFormula {
  std::vector<Constraint> constraints;

  GammaFormula() = default;
  explicit GammaFormula(std::vector<Constraint> cs) : constraints(std::move(cs)) {}
  GammaFormula(std::initializer_list<Constraint> cs) : constraints(cs) {}

  // var(φ), sorted and deduplicated.
  std::vector<Variable> variables() const;
  bool empty() const { return constraints.empty(); }

  friend bool operator==(const GammaFormula&, const GammaFormula&) = default;
};

// ∃ existential . body ∧ (equalities). Equality is a built-in here and only
// here; a plain GammaFormula uses equality only through a declared relation.
struct QuantifiedFormula {
  std::vector<Variable> existential;
  GammaFormula body;
  std::vector<std::pair<Variable, Variable>> equalities;

  // All variables of body and equalities, sorted.
  std::vector<Variable> variables() const;
  // variables() minus the existential ones, sorted.
  std::vector<Variable> free_variables() const;

  friend bool operator==(const QuantifiedFormula&,
                         const QuantifiedFormula&) = default;
};

GammaFormula conjoin(std::span<const GammaFormula> formulas);
std::vector<Variable> variables_of(std::span<const GammaFormula> formulas);

// C[V/u]: every occurrence of a variable in `from` becomes `to`.
Constraint substitute(const Constraint& c, const std::set<Variable>& from,
                      const Variable& to);
GammaFormula substitute(const GammaFormula& f, const std::set<Variable>& from,
                        const Variable& to);

inline constexpr std::uint64_t kDefaultModelBudget = std::uint64_t{1} << 22;

// One truth value per variable of the (sorted) enumeration domain.
using Assignment = std::vector<bool>;

// Models of the conjunction of `formulas` over `over` (which must cover all
// their variables). Positions follow the sorted order of `over`; models come
// in lexicographic order. Throws BudgetExceeded when 2^|over| exceeds
// `max_models`, PreconditionViolation when `over` misses a variable.
std::vector<Assignment> enumerate_models(std::span<const GammaFormula> formulas,
                                         std::span<const Variable> over,
                                         std::uint64_t max_models = kDefaultModelBudget);
std::vector<Assignment> enumerate_models(const GammaFormula& formula,
                                         std::span<const Variable> over,
                                         std::uint64_t max_models = kDefaultModelBudget);

// Instance-file syntax: "R(x,y) & S(y)".
std::string to_string(const Constraint& c);
std::string to_string(const GammaFormula& f);

}  // namespace argcl

#endif  // ARGCL_FORMULA_HPP_
