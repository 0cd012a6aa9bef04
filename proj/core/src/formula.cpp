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

#include "argcl/formula.hpp"

#include <algorithm>
#include <sstream>

#include "argcl/errors.hpp"
#include "compiled.hpp"

namespace argcl {

Constraint::Constraint(Relation r, std::vector<Variable> a)
    : relation(std::move(r)), args(std::move(a)) {
  if (static_cast<int>(args.size()) != relation.arity()) {
    throw InvalidArgument("constraint " + relation.name() + " expects " +
                          std::to_string(relation.arity()) +
                          " arguments, got " + std::to_string(args.size()));
  }
  for (const auto& v : args) {
    if (!is_identifier(v)) {
      throw InvalidArgument("invalid variable name '" + v + "'");
    }
  }
}

namespace {

void sort_unique(std::vector<Variable>& vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

}  // namespace

std::vector<Variable> GammaFormula::variables() const {
  std::vector<Variable> vs;
  for (const auto& c : constraints) vs.insert(vs.end(), c.args.begin(), c.args.end());
  sort_unique(vs);
  return vs;
}

std::vector<Variable> QuantifiedFormula::variables() const {
  std::vector<Variable> vs = body.variables();
  for (const auto& [a, b] : equalities) {
    vs.push_back(a);
    vs.push_back(b);
  }
  sort_unique(vs);
  return vs;
}

std::vector<Variable> QuantifiedFormula::free_variables() const {
  std::vector<Variable> vs = variables();
  std::erase_if(vs, [&](const Variable& v) {
    return std::find(existential.begin(), existential.end(), v) !=
           existential.end();
  });
  return vs;
}

GammaFormula conjoin(std::span<const GammaFormula> formulas) {
  GammaFormula out;
  for (const auto& f : formulas) {
    out.constraints.insert(out.constraints.end(), f.constraints.begin(),
                           f.constraints.end());
  }
  return out;
}

std::vector<Variable> variables_of(std::span<const GammaFormula> formulas) {
  std::vector<Variable> vs;
  for (const auto& f : formulas) {
    for (const auto& c : f.constraints) vs.insert(vs.end(), c.args.begin(), c.args.end());
  }
  sort_unique(vs);
  return vs;
}

Constraint substitute(const Constraint& c, const std::set<Variable>& from,
                      const Variable& to) {
  std::vector<Variable> args = c.args;
  for (auto& a : args) {
    if (from.contains(a)) a = to;
  }
  return Constraint(c.relation, std::move(args));
}

GammaFormula substitute(const GammaFormula& f, const std::set<Variable>& from,
                        const Variable& to) {
  GammaFormula out;
  out.constraints.reserve(f.constraints.size());
  for (const auto& c : f.constraints) out.constraints.push_back(substitute(c, from, to));
  return out;
}

namespace detail {

Compiled compile(std::span<const GammaFormula> formulas,
                 std::span<const Variable> extra) {
  Compiled out;
  out.vars = variables_of(formulas);
  out.vars.insert(out.vars.end(), extra.begin(), extra.end());
  sort_unique(out.vars);
  for (const auto& f : formulas) {
    for (const auto& c : f.constraints) {
      CompiledConstraint cc{c.relation, {}};
      cc.args.reserve(c.args.size());
      for (const auto& a : c.args) cc.args.push_back(out.index_of(a));
      out.constraints.push_back(std::move(cc));
    }
  }
  return out;
}

}  // namespace detail

std::vector<Assignment> enumerate_models(std::span<const GammaFormula> formulas,
                                         std::span<const Variable> over,
                                         std::uint64_t max_models) {
  std::vector<Variable> domain(over.begin(), over.end());
  sort_unique(domain);
  for (const auto& v : variables_of(formulas)) {
    if (!std::binary_search(domain.begin(), domain.end(), v)) {
      throw PreconditionViolation("enumeration domain misses variable '" + v + "'");
    }
  }
  if (domain.size() >= 63 || (std::uint64_t{1} << domain.size()) > max_models) {
    throw BudgetExceeded("model enumeration over " + std::to_string(domain.size()) +
                         " variables exceeds the budget of " +
                         std::to_string(max_models) + " assignments");
  }
  auto compiled = detail::compile(formulas, domain);
  std::vector<Assignment> models;
  detail::for_each_model(
      compiled, std::vector<std::int8_t>(compiled.vars.size(), detail::kFree),
      [&](const std::vector<std::int8_t>& values) {
        models.emplace_back(values.begin(), values.end());
        return true;
      });
  return models;
}

std::vector<Assignment> enumerate_models(const GammaFormula& formula,
                                         std::span<const Variable> over,
                                         std::uint64_t max_models) {
  return enumerate_models(std::span<const GammaFormula>(&formula, 1), over,
                          max_models);
}

std::string to_string(const Constraint& c) {
  std::string s = c.relation.name() + "(";
  for (std::size_t i = 0; i < c.args.size(); ++i) {
    if (i) s += ',';
    s += c.args[i];
  }
  return s + ")";
}

std::string to_string(const GammaFormula& f) {
  std::string s;
  for (std::size_t i = 0; i < f.constraints.size(); ++i) {
    if (i) s += " & ";
    s += to_string(f.constraints[i]);
  }
  return s;
}

}  // namespace argcl
