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

#include "argcl/logic.hpp"

#include <algorithm>
#include <set>

#include "argcl/errors.hpp"
#include "compiled.hpp"
#include "engines.hpp"

namespace argcl {

namespace {

// Fixed values for `units`; false on a clash such as {x, ¬x}.
bool apply_units(const detail::Compiled& compiled,
                 std::span<const Literal> units,
                 std::vector<std::int8_t>& fixed) {
  for (const auto& u : units) {
    auto idx = static_cast<std::size_t>(compiled.index_of(u.var));
    std::int8_t value = u.positive ? 1 : 0;
    if (fixed[idx] != detail::kFree && fixed[idx] != value) return false;
    fixed[idx] = value;
  }
  return true;
}

std::vector<Variable> unit_variables(std::span<const Literal> units) {
  std::vector<Variable> vars;
  for (const auto& u : units) vars.push_back(u.var);
  return vars;
}

std::vector<int> indices_of(const detail::Compiled& compiled,
                            const Constraint& c) {
  std::vector<int> idx;
  for (const auto& a : c.args) idx.push_back(compiled.index_of(a));
  return idx;
}

}  // namespace

std::string_view to_string(SatEngine e) {
  switch (e) {
    case SatEngine::kTrivial: return "trivial";
    case SatEngine::kConstant: return "constant";
    case SatEngine::kHorn: return "horn";
    case SatEngine::kDualHorn: return "dual-horn";
    case SatEngine::kTwoSat: return "2-sat";
    case SatEngine::kGaussian: return "gaussian";
    case SatEngine::kBacktracking: return "backtracking";
  }
  return "?";
}

SatEngine select_sat_engine(std::span<const GammaFormula> formulas,
                            bool with_units, const SolverOptions& options) {
  return detail::pick_engine(detail::compile(formulas), with_units,
                             options.engine);
}

bool is_consistent(std::span<const GammaFormula> formulas,
                   const SolverOptions& options) {
  return is_consistent(formulas, std::span<const Literal>{}, options);
}

bool is_consistent(std::span<const GammaFormula> formulas,
                   std::span<const Literal> units,
                   const SolverOptions& options) {
  const auto extra = unit_variables(units);
  const auto compiled = detail::compile(formulas, extra);
  std::vector<std::int8_t> fixed(compiled.vars.size(), detail::kFree);
  if (!apply_units(compiled, units, fixed)) return false;
  const auto engine =
      detail::pick_engine(compiled, !units.empty(), options.engine);
  return detail::solve_sat(compiled, fixed, engine, options.max_models);
}

bool entails(std::span<const GammaFormula> premises, const GammaFormula& claim,
             const SolverOptions& options) {
  if (claim.empty()) return true;
  const auto claim_vars = claim.variables();
  const auto compiled = detail::compile(premises, claim_vars);
  const std::size_t n = compiled.vars.size();

  std::vector<detail::CompiledConstraint> claim_cc;
  for (const auto& c : claim.constraints) {
    claim_cc.push_back({c.relation, indices_of(compiled, c)});
  }

  if (options.engine == Engine::kGeneric) {
    detail::check_budget(n, options.max_models);
    return detail::for_each_model(
        compiled, std::vector<std::int8_t>(n, detail::kFree),
        [&](const std::vector<std::int8_t>& values) {
          return std::all_of(claim_cc.begin(), claim_cc.end(),
                             [&](const detail::CompiledConstraint& cc) {
                               return cc.relation.contains(
                                   detail::encode(cc, values));
                             });
        });
  }

  // Φ ⊨ c iff Φ has no model agreeing with a non-tuple of c.
  const auto engine = detail::pick_engine(compiled, true, options.engine);
  std::set<std::vector<std::int8_t>> tried;
  for (const auto& cc : claim_cc) {
    const Relation& r = cc.relation;
    const int k = r.arity();
    for (TupleCode t = 0; t <= r.full(); ++t) {
      if (r.contains(t)) continue;
      std::vector<std::int8_t> fixed(n, detail::kFree);
      bool clash = false;
      for (int p = 0; p < k && !clash; ++p) {
        auto v = static_cast<std::size_t>(cc.args[static_cast<std::size_t>(p)]);
        std::int8_t value = (t & position_bit(k, p)) ? 1 : 0;
        if (fixed[v] != detail::kFree && fixed[v] != value) clash = true;
        fixed[v] = value;
      }
      if (clash || !tried.insert(fixed).second) continue;
      if (detail::solve_sat(compiled, fixed, engine, options.max_models)) {
        return false;
      }
    }
  }
  return true;
}

bool entails(std::span<const GammaFormula> premises, const Clause& claim,
             const SolverOptions& options) {
  const auto compiled = detail::compile(premises, unit_variables(claim));
  const std::size_t n = compiled.vars.size();
  std::vector<std::int8_t> fixed(n, detail::kFree);
  // Falsifying assignment of the clause; a clash means it is a tautology.
  for (const auto& l : claim) {
    auto v = static_cast<std::size_t>(compiled.index_of(l.var));
    std::int8_t value = l.positive ? 0 : 1;
    if (fixed[v] != detail::kFree && fixed[v] != value) return true;
    fixed[v] = value;
  }
  if (options.engine == Engine::kGeneric) {
    detail::check_budget(n, options.max_models);
    return detail::for_each_model(
        compiled, std::vector<std::int8_t>(n, detail::kFree),
        [&](const std::vector<std::int8_t>& values) {
          for (std::size_t v = 0; v < n; ++v) {
            if (fixed[v] != detail::kFree && values[v] != fixed[v]) return true;
          }
          return false;
        });
  }
  const auto engine = detail::pick_engine(compiled, !claim.empty(), options.engine);
  return !detail::solve_sat(compiled, fixed, engine, options.max_models);
}

std::vector<PositionalClause> cnf_of(const Relation& r) {
  return r.prime_implicates();
}

std::vector<PositionalClause> positive_cnf_of(const Relation& r) {
  if (!r.properties().positive) {
    throw PreconditionViolation("relation " + r.name() + " is not positive");
  }
  std::vector<PositionalClause> out;
  const TupleCode full = r.full();
  for (TupleCode m = full + 1; m-- > 0;) {
    if (r.contains(m)) continue;
    bool maximal = true;
    for (int p = 0; p < r.arity() && maximal; ++p) {
      TupleCode bit = position_bit(r.arity(), p);
      if ((m & bit) == 0 && !r.contains(m | bit)) maximal = false;
    }
    if (maximal) out.push_back(PositionalClause{full & ~m, 0});
  }
  return out;
}

Clause instantiate(const PositionalClause& clause, const Constraint& c,
                   bool* tautology) {
  const int k = c.relation.arity();
  Clause out;
  if (tautology) *tautology = false;
  for (int p = 0; p < k; ++p) {
    const TupleCode bit = position_bit(k, p);
    if (((clause.positive | clause.negative) & bit) == 0) continue;
    Literal lit{c.args[static_cast<std::size_t>(p)], (clause.positive & bit) != 0};
    auto same = std::find_if(out.begin(), out.end(),
                             [&](const Literal& l) { return l.var == lit.var; });
    if (same == out.end()) {
      out.push_back(lit);
    } else if (same->positive != lit.positive) {
      if (tautology) *tautology = true;
      return {};
    }
  }
  return out;
}

}  // namespace argcl
