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

// Brute-force reference implementations used by the test suites. Nothing
// here calls into the solver layer: formulas are evaluated tuple by tuple.

#ifndef ARGCL_TESTS_ORACLES_HPP_
#define ARGCL_TESTS_ORACLES_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "argcl/formula.hpp"
#include "argcl/relation.hpp"

namespace oracle {

using argcl::Constraint;
using argcl::GammaFormula;
using argcl::Relation;
using argcl::TupleCode;
using argcl::Variable;

using Env = std::map<Variable, bool>;

inline bool holds(const Constraint& c, const Env& env) {
  TupleCode m = 0;
  for (const auto& v : c.args) m = (m << 1) | (env.at(v) ? 1U : 0U);
  return c.relation.contains(m);
}

inline bool holds(const GammaFormula& f, const Env& env) {
  for (const auto& c : f.constraints) {
    if (!holds(c, env)) return false;
  }
  return true;
}

inline std::vector<Variable> vars_of(const std::vector<GammaFormula>& fs) {
  std::set<Variable> s;
  for (const auto& f : fs) {
    for (const auto& c : f.constraints) s.insert(c.args.begin(), c.args.end());
  }
  return {s.begin(), s.end()};
}

// Calls visit(env) for every assignment of `vars`.
template <typename Visit>
void for_each_env(const std::vector<Variable>& vars, Visit&& visit) {
  Env env;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << vars.size()); ++m) {
    for (std::size_t i = 0; i < vars.size(); ++i) env[vars[i]] = (m >> i) & 1U;
    visit(env);
  }
}

inline bool consistent(const std::vector<GammaFormula>& fs) {
  bool found = false;
  for_each_env(vars_of(fs), [&](const Env& env) {
    if (found) return;
    bool all = true;
    for (const auto& f : fs) all = all && holds(f, env);
    found = all;
  });
  return found;
}

inline bool entails(const std::vector<GammaFormula>& premises, const GammaFormula& claim) {
  auto all = premises;
  all.push_back(claim);
  bool ok = true;
  for_each_env(vars_of(all), [&](const Env& env) {
    if (!ok) return;
    for (const auto& f : premises) {
      if (!holds(f, env)) return;
    }
    ok = holds(claim, env);
  });
  return ok;
}

inline std::vector<GammaFormula> pick(const std::vector<GammaFormula>& delta,
                                      std::uint32_t mask) {
  std::vector<GammaFormula> out;
  for (std::size_t i = 0; i < delta.size(); ++i) {
    if (mask >> i & 1U) out.push_back(delta[i]);
  }
  return out;
}

inline bool is_support(const std::vector<GammaFormula>& delta, std::uint32_t mask,
                       const GammaFormula& alpha) {
  auto s = pick(delta, mask);
  return consistent(s) && entails(s, alpha);
}

// Minimality against every proper subset, not just single removals.
inline bool is_minimal_support(const std::vector<GammaFormula>& delta, std::uint32_t mask,
                               const GammaFormula& alpha) {
  if (!is_support(delta, mask, alpha)) return false;
  for (std::uint32_t sub = (mask - 1) & mask;; sub = (sub - 1) & mask) {
    if (sub != mask && entails(pick(delta, sub), alpha)) return false;
    if (sub == 0) break;
  }
  return true;
}

inline std::vector<std::uint32_t> minimal_supports(const std::vector<GammaFormula>& delta,
                                                   const GammaFormula& alpha) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (1U << delta.size()); ++m) {
    if (is_minimal_support(delta, m, alpha)) out.push_back(m);
  }
  return out;
}

inline bool arg(const std::vector<GammaFormula>& delta, const GammaFormula& alpha) {
  for (std::uint32_t m = 0; m < (1U << delta.size()); ++m) {
    if (is_support(delta, m, alpha)) return true;
  }
  return false;
}

inline bool argcheck(const std::vector<GammaFormula>& phi, const GammaFormula& alpha) {
  return is_minimal_support(phi, (1U << phi.size()) - 1, alpha);
}

inline bool argrel(const std::vector<GammaFormula>& delta, const GammaFormula& alpha,
                   std::size_t psi) {
  for (auto m : minimal_supports(delta, alpha)) {
    if (m >> psi & 1U) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Closure tests straight from the definitions.

inline std::vector<TupleCode> members(const Relation& r) {
  std::vector<TupleCode> out;
  for (TupleCode m = 0; m <= r.full(); ++m) {
    if (r.contains(m)) out.push_back(m);
  }
  return out;
}

template <typename Op>
bool closed2(const Relation& r, Op op) {
  for (auto a : members(r)) {
    for (auto b : members(r)) {
      if (!r.contains(op(a, b) & r.full())) return false;
    }
  }
  return true;
}

template <typename Op>
bool closed3(const Relation& r, Op op) {
  for (auto a : members(r)) {
    for (auto b : members(r)) {
      for (auto c : members(r)) {
        if (!r.contains(op(a, b, c) & r.full())) return false;
      }
    }
  }
  return true;
}

inline argcl::PropertyReport properties(const Relation& r) {
  argcl::PropertyReport p;
  const TupleCode full = r.full();
  p.horn = closed2(r, [](TupleCode a, TupleCode b) { return a & b; });
  p.dual_horn = closed2(r, [](TupleCode a, TupleCode b) { return a | b; });
  p.bijunctive = closed3(r, [](TupleCode a, TupleCode b, TupleCode c) {
    return (a & b) | (a & c) | (b & c);
  });
  p.affine = closed3(r, [](TupleCode a, TupleCode b, TupleCode c) { return a ^ b ^ c; });
  p.zero_valid = r.contains(0);
  p.one_valid = r.contains(full);
  p.eps_valid = p.zero_valid || p.one_valid;
  p.complementive = true;
  for (auto m : members(r)) p.complementive = p.complementive && r.contains(full & ~m);
  p.positive = p.negative = true;
  for (TupleCode a = 0; a <= full; ++a) {
    for (TupleCode b = 0; b <= full; ++b) {
      if ((a & b) != a) continue;  // a <= b
      if (r.contains(a) && !r.contains(b)) p.positive = false;
      if (r.contains(b) && !r.contains(a)) p.negative = false;
    }
  }
  p.in_is0 = closed2(r, [](TupleCode a, TupleCode b) { return ~a | b; });
  p.in_is1 = closed2(r, [](TupleCode a, TupleCode b) { return a & ~b; });
  p.schaefer = p.horn || p.dual_horn || p.bijunctive || p.affine;
  return p;
}

// ---------------------------------------------------------------------------
// Random instances.

inline Relation random_relation(std::mt19937& rng, const std::string& name, int arity) {
  const TupleCode size = TupleCode{1} << arity;
  std::uniform_int_distribution<std::uint32_t> bits(1, (1U << size) - 2);
  const std::uint32_t mask = bits(rng);
  return Relation::from_predicate(name, arity,
                                  [mask](TupleCode m) { return (mask >> m & 1U) != 0; });
}

inline Constraint random_atom(std::mt19937& rng, const std::vector<Relation>& lang,
                              int num_vars) {
  const Relation& r = lang[std::uniform_int_distribution<std::size_t>(0, lang.size() - 1)(rng)];
  std::uniform_int_distribution<int> var(0, num_vars - 1);
  std::vector<Variable> args;
  for (int i = 0; i < r.arity(); ++i) args.push_back("v" + std::to_string(var(rng)));
  return Constraint(r, args);
}

inline GammaFormula random_formula(std::mt19937& rng, const std::vector<Relation>& lang,
                                   int num_vars, int max_atoms) {
  GammaFormula f;
  const int n = std::uniform_int_distribution<int>(1, max_atoms)(rng);
  for (int i = 0; i < n; ++i) f.constraints.push_back(random_atom(rng, lang, num_vars));
  return f;
}

struct RandomInstance {
  std::vector<Relation> language;
  std::vector<GammaFormula> delta;
  GammaFormula alpha;
  std::size_t psi = 0;
};

inline RandomInstance random_instance(std::mt19937& rng, std::vector<Relation> lang,
                                      std::size_t max_delta, int num_vars,
                                      int max_atoms = 2) {
  RandomInstance inst;
  inst.language = std::move(lang);
  const std::size_t k = std::uniform_int_distribution<std::size_t>(1, max_delta)(rng);
  for (std::size_t i = 0; i < k; ++i) {
    inst.delta.push_back(random_formula(rng, inst.language, num_vars, max_atoms));
  }
  inst.alpha = random_formula(rng, inst.language, num_vars, max_atoms);
  inst.psi = std::uniform_int_distribution<std::size_t>(0, k - 1)(rng);
  return inst;
}

}  // namespace oracle

#endif  // ARGCL_TESTS_ORACLES_HPP_
