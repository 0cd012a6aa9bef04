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

#ifndef ARGCL_REDUCTIONS_HPP_
#define ARGCL_REDUCTIONS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "argcl/formula.hpp"
#include "argcl/instance.hpp"
#include "argcl/logic.hpp"
#include "argcl/relation.hpp"

namespace argcl {

// CNF over variables 1..num_vars; literal ±j refers to variable x<j>.
struct CnfInput {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;

  // Throws InvalidArgument on an out-of-range literal or a clause holding a
  // literal and its negation.
  void validate() const;
  friend bool operator==(const CnfInput&, const CnfInput&) = default;
};

// DIMACS CNF: `c` comments, `p cnf <n> <k>`, zero-terminated clauses.
// Duplicate literals inside a clause are merged.
CnfInput parse_dimacs(std::string_view text);
CnfInput load_dimacs(const std::string& path);
std::string serialize_dimacs(const CnfInput& cnf);

// Name of CNF variable j in generated instances.
Variable cnf_variable(int j);

// Abduction (φ, H, q).
struct AbdInstance {
  ConstraintLanguage language;
  GammaFormula phi;
  std::vector<Variable> hypotheses;
  Variable observation;

  // Throws InvalidArgument if q ∈ H, H repeats a variable, or φ uses a
  // relation outside the language.
  void validate() const;
  friend bool operator==(const AbdInstance&, const AbdInstance&) = default;
};

// Instance grammar with `hypotheses <v> ...` and `observation <v>` in place
// of `claim`/`relevant`; φ is the conjunction of the `kb` formulas.
AbdInstance parse_abduction(std::string_view text, const RelationResolver& resolve);
AbdInstance load_abduction(const std::string& path);
std::string serialize_abduction(const AbdInstance& abd,
                                const std::string& relation_path);

enum class SourceProblem {
  kThreeSat,
  kPos1In3,
  kCriticalSat,
  kAbd,
  kAbdP,
  kArg,       // ARG on an instance, decided by the enumeration oracle
  kArgCheck,  // ARGCHECK likewise; the instance's delta is the support
};

enum class TargetProblem { kArg, kArgCheck, kArgRel };

std::string_view to_string(SourceProblem p);
std::optional<SourceProblem> parse_source_problem(std::string_view s);
std::string_view to_string(TargetProblem p);

using Source = std::variant<CnfInput, AbdInstance, ArgInstance>;

// Exact brute-force answer. CNF sources need num_vars <= 20, abduction
// |H| <= 12; otherwise BudgetExceeded.
bool solve_source(SourceProblem problem, const Source& source,
                  const SolverOptions& options = {});

enum class ReductionKind {
  kThreeSatArgNeq,         // 3SAT -> ARG({!=})
  kPos1In3ArgAndNot,       // POS-1-IN-3-SAT -> ARG({x & !y})
  kAbdPArgNeq,             // ABD_P(Γ) -> ARG(Γ ∪ {!=}), Γ complementive
  kAbdPArgAndNot,          // ABD_P(Γ) -> ARG(Γ ∪ {x & !y})
  kCritSatArgCheckImpl,    // CRITICAL SAT -> ARGCHECK(Γ', x -> y)
  kCritSatArgCheckT,       // CRITICAL SAT -> ARGCHECK(Γ', T)
  kCritSatArgCheckAndNot,  // CRITICAL SAT -> ARGCHECK(Γ', x & !y)
  kThreeSatArgRelEq,       // 3SAT -> ARGREL({=})
  kThreeSatArgRelEqT,      // 3SAT -> ARGREL({(x = y) & z})
  kThreeSatArgRelEqF,      // 3SAT -> ARGREL({(x = y) & !z})
  kArgArgRel,              // ARG -> ARGREL with a fresh padding formula
  kAbdArgRelBothValid1,    // ABD -> ARGREL(Γ1, x v !y v z), Γ 0- and 1-valid
  kAbdArgRelBothValid2,    // ... extended by an RDELTA7 formula, claim (x=y)&(z=w)
  kAbdArgRelOneValid1,     // ABD -> ARGREL(Γ1, x v y), Γ 1-valid
  kAbdArgRelOneValid2,     // ... extended by an RDELTA4 formula, claim x & y
  kTElimEq,                // ARGCHECK(Γ ∪ {T}) -> ARGCHECK(Γ ∪ {=})
  kTElimNeq,               // ARGCHECK(Γ ∪ {T}) -> ARGCHECK(Γ ∪ {!=})
};

std::vector<ReductionKind> all_reduction_kinds();
std::string_view to_string(ReductionKind k);
std::optional<ReductionKind> parse_reduction_kind(std::string_view s);
SourceProblem source_problem(ReductionKind k);
TargetProblem target_problem(ReductionKind k);

struct ReducedInstance {
  ArgInstance instance;  // `relevant` set for ARGREL targets
  TargetProblem target;
};

// Throws InvalidArgument when the source has the wrong shape (e.g. a clause
// width the construction does not support) and PreconditionViolation when
// the source language misses the construction's requirement.
ReducedInstance reduce(ReductionKind kind, const Source& source);

// Answer of the argumentation problem on a reduced instance.
bool solve_target(const ReducedInstance& reduced,
                  const SolverOptions& options = {});

// Small enumerated source family used by the soundness sweep. CNF kinds
// share all CNFs with n <= 3 variables and 1..3 distinct clauses (filtered
// to the kind's clause shape); abduction and argument kinds use families up
// to renaming of variables over fixed two-relation languages.
std::vector<Source> sweep_family(ReductionKind kind);

// The 3-CNF family above.
std::vector<CnfInput> small_cnf_family();

// Relation x = y & z = w, the claim relation of the both-valid second step.
Relation double_equality();
// ((x1 v !x2 v x3) <-> (x4 = x5)) & (x6 = x7).
Relation r_delta_both_valid();
// ((x1 v x2) <-> x3) & x4.
Relation r_delta_one_valid();

}  // namespace argcl

#endif  // ARGCL_REDUCTIONS_HPP_
