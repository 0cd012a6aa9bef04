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

#include <gtest/gtest.h>

#include <random>

#include "argcl/errors.hpp"
#include "argcl/formula.hpp"
#include "argcl/instance.hpp"
#include "argcl/reductions.hpp"
#include "oracles.hpp"

using namespace argcl;

namespace {

std::vector<std::string> as_strings(const std::vector<Assignment>& models) {
  std::vector<std::string> out;
  for (const auto& m : models) {
    std::string s;
    for (bool b : m) s += b ? '1' : '0';
    out.push_back(s);
  }
  return out;
}

RelationResolver fixed(ConstraintLanguage lang) {
  return [lang](const std::string&) { return lang; };
}

TEST(Substitute, Examples) {
  EXPECT_EQ(substitute(Constraint(rel::NEQ(), {"x", "y"}), {"y"}, "x"),
            Constraint(rel::NEQ(), {"x", "x"}));
  auto r = Relation::from_strings("R", 3, {"101"});
  EXPECT_EQ(substitute(Constraint(r, {"x1", "x2", "x3"}), {"x1", "x3"}, "z"),
            Constraint(r, {"z", "x2", "z"}));
  // IMPL(x,y) sectioned along m = 10: V0 = {y}, V1 = {x}.
  auto c = Constraint(rel::IMPL(), {"x", "y"});
  EXPECT_EQ(substitute(substitute(c, {"y"}, "a"), {"x"}, "b"),
            Constraint(rel::IMPL(), {"b", "a"}));
}

TEST(Constraint, ArityChecked) {
  EXPECT_THROW(Constraint(rel::NEQ(), {"x"}), InvalidArgument);
  EXPECT_THROW(Constraint(rel::T(), {"9x"}), InvalidArgument);
}

TEST(EnumerateModels, Examples) {
  std::vector<Variable> xy{"x", "y"}, xyz{"x", "y", "z"}, x{"x"};
  EXPECT_EQ(as_strings(enumerate_models(GammaFormula{Constraint(rel::OR2(), {"x", "y"})}, xy)),
            (std::vector<std::string>{"01", "10", "11"}));
  GammaFormula chain{Constraint(rel::NEQ(), {"x", "y"}), Constraint(rel::NEQ(), {"y", "z"})};
  EXPECT_EQ(as_strings(enumerate_models(chain, xyz)),
            (std::vector<std::string>{"010", "101"}));
  EXPECT_TRUE(enumerate_models(GammaFormula{Constraint(rel::NEQ(), {"x", "x"})}, x).empty());
}

TEST(EnumerateModels, DomainAndBudget) {
  std::vector<Variable> x{"x"};
  GammaFormula f{Constraint(rel::NEQ(), {"x", "y"})};
  EXPECT_THROW(enumerate_models(f, x), PreconditionViolation);
  std::vector<Variable> many;
  for (int i = 0; i < 10; ++i) many.push_back("v" + std::to_string(i));
  EXPECT_THROW(enumerate_models(GammaFormula{Constraint(rel::T(), {"v0"})}, many, 512),
               BudgetExceeded);
}

TEST(EnumerateModels, MatchesNaiveAndCountsMultiply) {
  std::mt19937 rng(3);
  std::vector<Relation> lang{rel::NEQ(), rel::OR3(), rel::IMPL(), rel::NAE3()};
  for (int i = 0; i < 200; ++i) {
    auto a = oracle::random_formula(rng, lang, 4, 3);
    auto vars = oracle::vars_of({a});
    std::size_t naive = 0;
    oracle::for_each_env(vars, [&](const oracle::Env& e) { naive += oracle::holds(a, e); });
    auto models = enumerate_models(a, vars);
    ASSERT_EQ(models.size(), naive);
    EXPECT_TRUE(std::is_sorted(models.begin(), models.end()));

    // A disjoint copy over renamed variables multiplies the count.
    GammaFormula b;
    for (const auto& c : a.constraints) {
      std::vector<Variable> args;
      for (const auto& v : c.args) args.push_back("w_" + v);
      b.constraints.push_back(Constraint(c.relation, args));
    }
    std::vector<GammaFormula> both{a, b};
    auto all = variables_of(both);
    EXPECT_EQ(enumerate_models(both, all).size(), naive * naive);

    // Padding the domain with free variables.
    auto padded = vars;
    padded.push_back("zz1");
    padded.push_back("zz2");
    EXPECT_EQ(enumerate_models(a, padded).size(), naive * 4);
  }
}

TEST(Substitute, CommutesWithEvaluation) {
  std::mt19937 rng(5);
  std::vector<Relation> lang{rel::NAE3(), rel::IMPL()};
  for (int i = 0; i < 200; ++i) {
    auto f = oracle::random_formula(rng, lang, 4, 3);
    const std::set<Variable> from{"v0", "v1"};
    auto g = substitute(f, from, "u");
    auto vars = oracle::vars_of({f});
    vars.push_back("u");
    oracle::for_each_env(vars, [&](const oracle::Env& env) {
      oracle::Env mapped = env;
      for (const auto& v : from) mapped[v] = env.at("u");
      EXPECT_EQ(oracle::holds(g, env), oracle::holds(f, mapped));
    });
  }
}

TEST(InstanceFile, ParsesAndRoundTrips) {
  const auto lang = ConstraintLanguage({rel::T(), rel::OR2()});
  const char* text =
      "use lang.rel\n"
      "formula a = T(x)   # unit\n"
      "formula b = OR2(x,y) & T(y)\n"
      "kb b a\n"
      "claim OR2(x,y)\n"
      "relevant a\n";
  auto inst = parse_instance(text, fixed(lang));
  ASSERT_EQ(inst.delta.size(), 2U);
  EXPECT_EQ(inst.names, (std::vector<std::string>{"b", "a"}));
  EXPECT_EQ(inst.relevant, 1U);
  EXPECT_EQ(inst.delta[0].constraints.size(), 2U);
  EXPECT_EQ(parse_instance(serialize_instance(inst, "lang.rel"), fixed(lang)), inst);
}

TEST(InstanceFile, MinimalRoundTrip) {
  ArgInstance inst;
  inst.language = ConstraintLanguage({rel::NEQ()});
  inst.alpha = GammaFormula{Constraint(rel::NEQ(), {"x", "y"})};
  inst.delta.push_back(inst.alpha);
  EXPECT_EQ(parse_instance(serialize_instance(inst, "n.rel"), fixed(inst.language)), inst);
}

TEST(InstanceFile, GeneratedInstanceRoundTrips) {
  CnfInput cnf{3, {{1, 2, -3}}};
  auto reduced = reduce(ReductionKind::kThreeSatArgNeq, cnf);
  const auto& inst = reduced.instance;
  EXPECT_EQ(parse_instance(serialize_instance(inst, "g.rel"), fixed(inst.language)), inst);
}

TEST(InstanceFile, Errors) {
  const auto lang = ConstraintLanguage({rel::T(), rel::NEQ()});
  auto bad = [&](const char* text) { EXPECT_THROW(parse_instance(text, fixed(lang)), ParseError) << text; };
  bad("use l\nkb f1\nclaim T(x)\n");
  bad("use l\nformula a = T(x)\nkb a\n");
  bad("use l\nformula a = Q(x)\nkb a\nclaim T(x)\n");
  bad("use l\nformula a = NEQ(x)\nkb a\nclaim T(x)\n");
  bad("use l\nformula a = T(x)\nformula b = T(y)\nkb a\nclaim T(x)\nrelevant b\n");
  bad("use l\nformula a = T(x)\nformula a = T(y)\nkb a\nclaim T(x)\n");
  bad("use l\nformula a = T(x)\nkb a a\nclaim T(x)\n");
  bad("use l\nformula a = T(x)\nkb a\nclaim T(x)\nhypotheses x\n");
  bad("use l\nfoo bar\n");
  try {
    parse_instance("use l\nformula a = T(x)\nkb f1\nclaim T(x)\n", fixed(lang));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3U);
    EXPECT_NE(std::string(e.what()).find("unknown formula"), std::string::npos);
  }
}

}  // namespace
