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
#include <set>

#include "argcl/errors.hpp"
#include "argcl/expressibility.hpp"
#include "oracles.hpp"

using namespace argcl;

namespace {

Constraint C(const Relation& r, std::vector<Variable> args) { return Constraint(r, std::move(args)); }

const GadgetTarget kAllTargets[] = {
    GadgetTarget::kNeq,   GadgetTarget::kImpl,   GadgetTarget::kAndNot,
    GadgetTarget::kTConst, GadgetTarget::kFConst, GadgetTarget::kEq,
    GadgetTarget::kEqAndT, GadgetTarget::kEqAndF, GadgetTarget::kEqExists};

// Free-variable tuples (sorted names, first = most significant) that extend
// to a model, by brute force.
std::set<TupleCode> projection(const QuantifiedFormula& f) {
  const auto free = f.free_variables();
  std::set<Variable> all(free.begin(), free.end());
  all.insert(f.existential.begin(), f.existential.end());
  std::set<TupleCode> out;
  oracle::for_each_env({all.begin(), all.end()}, [&](const oracle::Env& env) {
    if (!oracle::holds(f.body, env)) return;
    for (const auto& [a, b] : f.equalities) {
      if (env.at(a) != env.at(b)) return;
    }
    TupleCode m = 0;
    for (const auto& v : free) m = (m << 1) | (env.at(v) ? 1U : 0U);
    out.insert(m);
  });
  return out;
}

std::set<TupleCode> tuples(const Relation& r) {
  auto t = r.tuples();
  return {t.begin(), t.end()};
}

bool precondition(GadgetTarget t, const PropertyReport& p) {
  switch (t) {
    case GadgetTarget::kNeq: return p.complementive && !p.zero_valid && !p.one_valid;
    case GadgetTarget::kImpl: return !p.complementive && p.zero_valid && p.one_valid;
    case GadgetTarget::kAndNot: return !p.complementive && !p.zero_valid && !p.one_valid;
    case GadgetTarget::kTConst: return p.one_valid && !p.zero_valid;
    case GadgetTarget::kFConst: return p.zero_valid && !p.one_valid;
    case GadgetTarget::kEq: return p.zero_valid && p.one_valid;
    case GadgetTarget::kEqAndT: return p.one_valid && !p.zero_valid && !p.positive;
    case GadgetTarget::kEqAndF: return p.zero_valid && !p.one_valid && !p.negative;
    case GadgetTarget::kEqExists: return !p.schaefer;
  }
  return false;
}

void check_all_targets(const Relation& r) {
  const ConstraintLanguage lang({r});
  for (auto t : kAllTargets) {
    const bool pre = precondition(t, oracle::properties(r));
    ASSERT_EQ(expressible(t, lang), pre) << r << ' ' << to_string(t);
    if (!pre) {
      EXPECT_THROW(express(t, lang), PreconditionViolation) << r << ' ' << to_string(t);
      continue;
    }
    const auto f = express(t, lang);
    EXPECT_TRUE(verify_expresses(f, target_relation(t))) << r << ' ' << to_string(t);
    const auto free = f.free_variables();
    ASSERT_EQ(static_cast<int>(free.size()), target_relation(t).arity());
    EXPECT_EQ(projection(f), tuples(target_relation(t))) << r << ' ' << to_string(t);
    if (t != GadgetTarget::kEqExists) {
      EXPECT_TRUE(f.existential.empty());
    }
    for (const auto& c : f.body.constraints) EXPECT_EQ(c.relation, r);
  }
}

TEST(Targets, Names) {
  for (auto t : kAllTargets) EXPECT_EQ(parse_gadget_target(to_string(t)), t);
  EXPECT_FALSE(parse_gadget_target("nope"));
  EXPECT_EQ(tuples(target_relation(GadgetTarget::kEqAndT)), (std::set<TupleCode>{0b001, 0b111}));
  EXPECT_EQ(tuples(target_relation(GadgetTarget::kEqAndF)), (std::set<TupleCode>{0b000, 0b110}));
  EXPECT_EQ(tuples(target_relation(GadgetTarget::kNeq)), (std::set<TupleCode>{0b01, 0b10}));
}

TEST(Express, Examples) {
  auto neq = express(GadgetTarget::kNeq, ConstraintLanguage({rel::NAE3()}));
  EXPECT_EQ(projection(neq), (std::set<TupleCode>{0b01, 0b10}));

  auto eq = express(GadgetTarget::kEq, ConstraintLanguage({rel::IMPL()}));
  EXPECT_EQ(to_string(eq), "IMPL(y,x) & IMPL(x,y)");
  EXPECT_EQ(projection(eq), (std::set<TupleCode>{0b00, 0b11}));

  auto t = express(GadgetTarget::kTConst, ConstraintLanguage({rel::OR2()}));
  EXPECT_EQ(t.body, GammaFormula{C(rel::OR2(), {"x", "x"})});

  auto ex = express(GadgetTarget::kEqExists, ConstraintLanguage({rel::ONE_IN_THREE()}));
  EXPECT_FALSE(ex.existential.empty());
  EXPECT_EQ(projection(ex), (std::set<TupleCode>{0b00, 0b11}));
}

TEST(Express, PreconditionErrors) {
  EXPECT_THROW(express(GadgetTarget::kNeq, ConstraintLanguage({rel::OR2()})), PreconditionViolation);
  EXPECT_THROW(express(GadgetTarget::kEqExists, ConstraintLanguage({rel::NEQ()})), PreconditionViolation);
  EXPECT_THROW(express(GadgetTarget::kEq, ConstraintLanguage({rel::T()})), PreconditionViolation);
}

TEST(Express, MultiRelationLanguage) {
  const ConstraintLanguage lang({rel::T(), rel::IMPL()});
  ASSERT_TRUE(expressible(GadgetTarget::kTConst, lang));
  auto f = express(GadgetTarget::kTConst, lang);
  EXPECT_EQ(projection(f), (std::set<TupleCode>{1}));
  auto g = express(GadgetTarget::kEqExists, ConstraintLanguage({rel::NAE3(), rel::IMPL()}));
  EXPECT_EQ(projection(g), (std::set<TupleCode>{0b00, 0b11}));
}

TEST(Express, EveryRelationUpToArity3) {
  for (int arity = 1; arity <= 3; ++arity) {
    const std::uint32_t size = 1U << arity;
    for (std::uint32_t mask = 1; mask + 1 < (1U << size); ++mask) {
      check_all_targets(
          Relation::from_predicate("R", arity, [mask](TupleCode m) { return mask >> m & 1U; }));
    }
  }
}

TEST(Express, SampledArity4) {
  std::mt19937 rng(59);
  for (int i = 0; i < 150; ++i) check_all_targets(oracle::random_relation(rng, "R", 4));
}

TEST(Express, NeqIsExactNotASuperset) {
  for (const auto& r : {rel::NAE3(), rel::NEQ(), Relation::from_strings("X", 4, {"0011", "1100", "0101", "1010"})}) {
    auto f = express(GadgetTarget::kNeq, ConstraintLanguage({r}));
    EXPECT_EQ(projection(f), (std::set<TupleCode>{0b01, 0b10})) << r;
  }
}

TEST(Verify, Examples) {
  GammaFormula eq{C(rel::IMPL(), {"x", "y"}), C(rel::IMPL(), {"y", "x"})};
  EXPECT_TRUE(verify_expresses(eq, rel::EQ()));
  EXPECT_FALSE(verify_expresses(GammaFormula{C(rel::OR2(), {"x", "y"})}, rel::NEQ()));
  QuantifiedFormula dd{{"z"}, GammaFormula{C(rel::NEQ(), {"x", "z"}), C(rel::NEQ(), {"z", "y"})}, {}};
  EXPECT_TRUE(verify_expresses(dd, rel::EQ()));
  EXPECT_THROW(verify_expresses(GammaFormula{C(rel::T(), {"x"})}, rel::EQ()), PreconditionViolation);
}

TEST(DropQuantifiers, Examples) {
  QuantifiedFormula q{{"z"}, GammaFormula{C(rel::NEQ(), {"x", "z"})}, {}};
  auto body = drop_quantifiers(q);
  EXPECT_EQ(body, (GammaFormula{C(rel::NEQ(), {"x", "z"})}));
  QuantifiedFormula plain{{}, body, {}};
  EXPECT_EQ(drop_quantifiers(plain), body);
  QuantifiedFormula again{{"z"}, drop_quantifiers(q), {}};
  EXPECT_EQ(again, q);
  QuantifiedFormula with_eq{{}, body, {{"x", "y"}}};
  EXPECT_THROW(drop_quantifiers(with_eq), PreconditionViolation);
}

}  // namespace
