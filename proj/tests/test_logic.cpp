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

#include <bit>
#include <random>

#include "argcl/errors.hpp"
#include "argcl/logic.hpp"
#include "oracles.hpp"

using namespace argcl;

namespace {

Constraint C(const Relation& r, std::vector<Variable> args) { return Constraint(r, std::move(args)); }

const SolverOptions kGeneric{Engine::kGeneric};

TEST(Consistency, Examples) {
  std::vector<GammaFormula> tf{{C(rel::T(), {"x"})}, {C(rel::F(), {"x"})}};
  EXPECT_FALSE(is_consistent(tf));
  EXPECT_TRUE(is_consistent(std::vector<GammaFormula>{}));
  std::vector<GammaFormula> nae{{C(rel::NAE3(), {"x", "y", "z"})},
                                {C(rel::T(), {"x"})},
                                {C(rel::T(), {"y"})},
                                {C(rel::T(), {"z"})}};
  EXPECT_FALSE(is_consistent(nae));
  EXPECT_FALSE(is_consistent(nae, kGeneric));
}

TEST(Entailment, Examples) {
  std::vector<GammaFormula> chain{{C(rel::IMPL(), {"a", "b"})}, {C(rel::IMPL(), {"b", "c"})}};
  EXPECT_TRUE(entails(chain, GammaFormula{C(rel::IMPL(), {"a", "c"})}));
  EXPECT_FALSE(entails(std::vector<GammaFormula>{}, GammaFormula{C(rel::T(), {"x"})}));
  std::vector<GammaFormula> f{{C(rel::F(), {"x"})}};
  EXPECT_TRUE(entails(f, GammaFormula{C(rel::IMPL(), {"x", "y"})}));
  for (const auto& opts : {SolverOptions{}, kGeneric}) {
    EXPECT_TRUE(entails(chain, GammaFormula{C(rel::IMPL(), {"a", "c"})}, opts));
    EXPECT_FALSE(entails(chain, GammaFormula{C(rel::IMPL(), {"c", "a"})}, opts));
  }
}

TEST(Entailment, ClauseClaims) {
  std::vector<GammaFormula> phi{{C(rel::OR2(), {"a", "b"})}};
  EXPECT_TRUE(entails(phi, Clause{{"a", true}, {"b", true}}));
  EXPECT_FALSE(entails(phi, Clause{{"a", true}}));
  EXPECT_TRUE(entails(phi, Clause{{"c", true}, {"c", false}}));
  EXPECT_TRUE(entails(phi, Clause{{"a", true}, {"b", true}}, kGeneric));
}

TEST(EngineSelection, FollowsLanguage) {
  auto pick = [](const Relation& r, bool units = false) {
    std::vector<GammaFormula> f{{C(r, std::vector<Variable>(r.arity(), "x"))}};
    return select_sat_engine(f, units);
  };
  EXPECT_EQ(select_sat_engine(std::vector<GammaFormula>{}, false), SatEngine::kTrivial);
  EXPECT_EQ(pick(rel::IMPL()), SatEngine::kConstant);
  EXPECT_EQ(pick(rel::IMPL(), true), SatEngine::kHorn);
  EXPECT_EQ(pick(rel::NEQ()), SatEngine::kTwoSat);
  EXPECT_EQ(pick(Relation::from_predicate("X4", 4, [](TupleCode m) { return std::popcount(m) % 2 == 1; })),
            SatEngine::kGaussian);
  EXPECT_EQ(pick(rel::ONE_IN_THREE()), SatEngine::kBacktracking);
  std::vector<GammaFormula> f{{C(rel::NEQ(), {"x", "y"})}};
  EXPECT_EQ(select_sat_engine(f, false, kGeneric), SatEngine::kBacktracking);
}

// Random formulas over languages aimed at each engine; every engine must agree
// with brute force.
TEST(Engines, MatchBruteForce) {
  const std::vector<std::vector<Relation>> langs = {
      {rel::IMPL(), rel::T(), Relation::from_strings("H3", 3, {"000", "001", "010", "011", "100", "101", "111"})},
      {rel::OR2(), rel::F(), rel::OR3()},
      {rel::NEQ(), rel::OR2(), rel::IMPL()},
      {Relation::from_predicate("X4", 4, [](TupleCode m) { return std::popcount(m) % 2 == 1; }), rel::NEQ(), rel::EQ()},
      {rel::NAE3(), rel::ONE_IN_THREE()},
      {rel::NEQ(), rel::T()},
  };
  std::mt19937 rng(17);
  for (const auto& lang : langs) {
    for (int i = 0; i < 150; ++i) {
      std::vector<GammaFormula> fs;
      const int k = 1 + i % 5;
      for (int j = 0; j < k; ++j) fs.push_back(oracle::random_formula(rng, lang, 6, 3));
      const bool expected = oracle::consistent(fs);
      EXPECT_EQ(is_consistent(fs), expected);
      EXPECT_EQ(is_consistent(fs, kGeneric), expected);
      auto claim = oracle::random_formula(rng, lang, 6, 2);
      const bool ent = oracle::entails(fs, claim);
      EXPECT_EQ(entails(fs, claim), ent);
      EXPECT_EQ(entails(fs, claim, kGeneric), ent);
    }
  }
}

TEST(Entailment, Monotone) {
  std::mt19937 rng(19);
  std::vector<Relation> lang{rel::NAE3(), rel::IMPL(), rel::NEQ()};
  for (int i = 0; i < 300; ++i) {
    std::vector<GammaFormula> fs{oracle::random_formula(rng, lang, 5, 2)};
    auto claim = oracle::random_formula(rng, lang, 5, 1);
    if (!entails(fs, claim)) continue;
    fs.push_back(oracle::random_formula(rng, lang, 5, 2));
    EXPECT_TRUE(entails(fs, claim));
  }
}

TEST(Entailment, BudgetOnGenericPath) {
  std::vector<GammaFormula> fs;
  for (int i = 0; i < 12; ++i) {
    fs.push_back({C(rel::NAE3(), {"a" + std::to_string(i), "b" + std::to_string(i), "c"})});
  }
  SolverOptions tight{Engine::kGeneric, 1024};
  EXPECT_THROW(entails(fs, GammaFormula{C(rel::T(), {"c"})}, tight), BudgetExceeded);
}

std::string show(const std::vector<PositionalClause>& cs) {
  std::string s;
  for (auto c : cs) s += "[" + std::to_string(c.positive) + "/" + std::to_string(c.negative) + "]";
  return s;
}

TEST(Cnf, Examples) {
  EXPECT_EQ(show(cnf_of(rel::T())), "[1/0]");
  EXPECT_EQ(show(cnf_of(rel::NEQ())), "[3/0][0/3]");
  EXPECT_EQ(show(cnf_of(rel::IMPL())), "[1/2]");
  EXPECT_EQ(show(positive_cnf_of(rel::OR2())), "[3/0]");
  EXPECT_EQ(show(positive_cnf_of(rel::T())), "[1/0]");
  auto up = Relation::from_strings("U", 3, {"110", "111", "011", "101", "001"});
  auto pos = positive_cnf_of(up);
  std::set<TupleCode> clauses;
  for (auto c : pos) {
    EXPECT_EQ(c.negative, 0U);
    clauses.insert(c.positive);
  }
  EXPECT_EQ(clauses, (std::set<TupleCode>{0b011, 0b101}));
  EXPECT_THROW(positive_cnf_of(rel::NEQ()), PreconditionViolation);
}

bool cnf_accepts(const std::vector<PositionalClause>& cs, TupleCode m) {
  for (auto c : cs) {
    if (c.falsified_by(m)) return false;
  }
  return true;
}

TEST(Cnf, RoundTripAndShape) {
  std::mt19937 rng(23);
  for (int i = 0; i < 400; ++i) {
    auto r = oracle::random_relation(rng, "R", 1 + i % 5);
    auto cs = cnf_of(r);
    for (TupleCode m = 0; m <= r.full(); ++m) ASSERT_EQ(cnf_accepts(cs, m), r.contains(m)) << r;
    const auto& p = r.properties();
    for (auto c : cs) {
      if (p.horn) EXPECT_LE(std::popcount(c.positive), 1);
      if (p.dual_horn) EXPECT_LE(std::popcount(c.negative), 1);
      if (p.bijunctive) EXPECT_LE(c.width(), 2);
    }
    if (p.positive) {
      auto pc = positive_cnf_of(r);
      for (TupleCode m = 0; m <= r.full(); ++m) ASSERT_EQ(cnf_accepts(pc, m), r.contains(m));
    }
  }
}

TEST(Cnf, Instantiate) {
  bool taut = false;
  auto cl = instantiate(cnf_of(rel::IMPL()).front(), C(rel::IMPL(), {"a", "b"}), &taut);
  EXPECT_FALSE(taut);
  EXPECT_EQ(cl.size(), 2U);
  instantiate(cnf_of(rel::IMPL()).front(), C(rel::IMPL(), {"a", "a"}), &taut);
  EXPECT_TRUE(taut);
}

// If neither of two positive formulas entails a positive clause, neither does
// their conjunction.
TEST(PositiveClauses, NonEntailmentSurvivesConjunction) {
  std::mt19937 rng(29);
  std::vector<Relation> lang{rel::T(), rel::OR2(), rel::OR3()};
  for (int i = 0; i < 300; ++i) {
    auto a = oracle::random_formula(rng, lang, 5, 3);
    auto b = oracle::random_formula(rng, lang, 5, 3);
    Clause gamma;
    for (int v = 0; v < 5; ++v) {
      if (rng() % 3 == 0) gamma.push_back({"v" + std::to_string(v), true});
    }
    if (gamma.empty()) gamma.push_back({"v0", true});
    std::vector<GammaFormula> fa{a}, fb{b}, fab{a, b};
    if (!entails(fa, gamma) && !entails(fb, gamma)) EXPECT_FALSE(entails(fab, gamma));
  }
}

}  // namespace
