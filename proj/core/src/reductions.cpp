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

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "argcl/argumentation.hpp"
#include "argcl/errors.hpp"
#include "argcl/reductions.hpp"

namespace argcl {

namespace {

// Hands out names not used by the source.
class Namer {
 public:
  void reserve(const Variable& v) { used_.insert(v); }
  void reserve(const GammaFormula& f) {
    for (const auto& v : f.variables()) used_.insert(v);
  }
  Variable fresh(const std::string& base) {
    Variable v = base;
    for (int i = 1; used_.count(v); ++i) v = base + "_" + std::to_string(i);
    used_.insert(v);
    return v;
  }

 private:
  std::set<Variable> used_;
};

Constraint atom(const Relation& r, std::vector<Variable> args) {
  return Constraint(r, std::move(args));
}

std::string signs_of(const std::vector<int>& clause) {
  std::string s;
  for (int lit : clause) s += lit > 0 ? 'P' : 'N';
  return s;
}

bool clause_holds(const std::vector<int>& clause, TupleCode m, int arity) {
  for (std::size_t p = 0; p < clause.size(); ++p) {
    bool bit = (m & position_bit(arity, static_cast<int>(p))) != 0;
    if (bit == (clause[p] > 0)) return true;
  }
  return false;
}

std::vector<Variable> clause_vars(const std::vector<int>& clause) {
  std::vector<Variable> out;
  for (int lit : clause) out.push_back(cnf_variable(std::abs(lit)));
  return out;
}

void require_clauses(const CnfInput& cnf, std::size_t max_width) {
  cnf.validate();
  if (cnf.num_vars < 1) throw InvalidArgument("CNF source needs at least one variable");
  for (const auto& clause : cnf.clauses) {
    if (clause.empty() || clause.size() > max_width) {
      throw InvalidArgument("unsupported clause width " +
                            std::to_string(clause.size()));
    }
  }
}

// C ∨ (f → t) over (clause variables, f, t).
Relation clause_or_impl(const std::vector<int>& clause) {
  const int k = static_cast<int>(clause.size()) + 2;
  return Relation::from_predicate("CI_" + signs_of(clause), k, [&](TupleCode m) {
    bool f = m & 2U, t = m & 1U;
    return clause_holds(clause, m, k) || !f || t;
  });
}

// C ∨ u over (clause variables, u).
Relation clause_or_unit(const std::vector<int>& clause) {
  const int k = static_cast<int>(clause.size()) + 1;
  return Relation::from_predicate("CU_" + signs_of(clause), k, [&](TupleCode m) {
    return clause_holds(clause, m, k) || (m & 1U);
  });
}

// (C ∨ u) ∧ ¬v over (clause variables, u, v).
Relation clause_or_unit_not(const std::vector<int>& clause) {
  const int k = static_cast<int>(clause.size()) + 2;
  return Relation::from_predicate("CUV_" + signs_of(clause), k, [&](TupleCode m) {
    bool u = m & 2U, v = m & 1U;
    return (clause_holds(clause, m, k) || u) && !v;
  });
}

Relation or_not() {  // x ∨ ¬y
  return Relation::from_strings("ORN", 2, {"00", "10", "11"});
}
Relation clause3() {  // x ∨ ¬y ∨ z
  return Relation::from_predicate("CL3", 3, [](TupleCode m) { return m != 0b010; });
}
Relation and2() { return Relation::from_strings("AND2", 2, {"11"}); }

ConstraintLanguage with(const ConstraintLanguage& base, std::vector<Relation> extra) {
  ConstraintLanguage out = base;
  for (const auto& r : extra) out.add(r);
  return out;
}

bool is_t_relation(const Relation& r) {
  return r.arity() == 1 && r.size() == 1 && r.contains(1);
}

template <typename T>
const T& expect(const Source& source, ReductionKind k) {
  if (const T* v = std::get_if<T>(&source)) return *v;
  throw InvalidArgument("source does not match reduction " +
                        std::string(to_string(k)));
}

void require_phi(const AbdInstance& abd) {
  abd.validate();
  if (abd.phi.empty()) throw InvalidArgument("abduction theory must not be empty");
}

void require_relations(const GammaFormula& f, bool (*ok)(const PropertyReport&),
                       const char* what) {
  for (const auto& c : f.constraints) {
    if (!ok(c.relation.properties())) {
      throw PreconditionViolation("relation " + c.relation.name() + " is not " + what);
    }
  }
}

Namer namer_for(const AbdInstance& abd) {
  Namer n;
  n.reserve(abd.phi);
  for (const auto& h : abd.hypotheses) n.reserve(h);
  n.reserve(abd.observation);
  return n;
}

// ---------------------------------------------------------------------------

ReducedInstance threesat_arg_neq(const CnfInput& cnf) {
  require_clauses(cnf, 3);
  const Relation neq = rel::NEQ();
  const int n = cnf.num_vars;
  const Variable f = "f";
  auto x = [](int j) { return cnf_variable(j); };
  auto xp = [](int j) { return cnf_variable(j) + "p"; };
  auto c = [](std::size_t i) { return "c" + std::to_string(i + 1); };

  ArgInstance out;
  out.language = ConstraintLanguage({neq});
  for (int j = 1; j <= n; ++j) {
    out.delta.push_back(GammaFormula{atom(neq, {x(j), f})});
    out.delta.push_back(GammaFormula{atom(neq, {xp(j), f})});
  }
  GammaFormula pairs;
  for (int j = 1; j <= n; ++j) pairs.constraints.push_back(atom(neq, {x(j), xp(j)}));
  out.delta.push_back(pairs);
  for (std::size_t i = 0; i < cnf.clauses.size(); ++i) {
    for (int lit : cnf.clauses[i]) {
      int j = std::abs(lit);
      out.delta.push_back(GammaFormula{atom(neq, {lit < 0 ? x(j) : xp(j), c(i)})});
    }
  }
  for (std::size_t i = 0; i < cnf.clauses.size(); ++i) {
    out.alpha.constraints.push_back(atom(neq, {c(i), f}));
  }
  for (const auto& p : pairs.constraints) out.alpha.constraints.push_back(p);
  return {out, TargetProblem::kArg};
}

ReducedInstance pos1in3_arg_andnot(const CnfInput& cnf) {
  require_clauses(cnf, 3);
  if (cnf.clauses.empty()) throw InvalidArgument("1-in-3 source needs a clause");
  for (const auto& clause : cnf.clauses) {
    if (std::any_of(clause.begin(), clause.end(), [](int l) { return l < 0; })) {
      throw InvalidArgument("1-in-3 source admits positive literals only");
    }
  }
  const Relation an = rel::AND_NOT();
  const Variable f = "f";
  ArgInstance out;
  out.language = ConstraintLanguage({an});
  for (std::size_t i = 0; i < cnf.clauses.size(); ++i) {
    const Variable ci = "c" + std::to_string(i + 1);
    const auto& clause = cnf.clauses[i];
    // c_i ∧ x ∧ ¬(other literals) ∧ ¬f for each choice of the true literal x.
    for (int chosen : clause) {
      GammaFormula g{atom(an, {ci, f}), atom(an, {cnf_variable(chosen), f})};
      for (int other : clause) {
        if (other != chosen) g.constraints.push_back(atom(an, {ci, cnf_variable(other)}));
      }
      out.delta.push_back(g);
    }
    out.alpha.constraints.push_back(atom(an, {ci, f}));
  }
  return {out, TargetProblem::kArg};
}

ReducedInstance abdp_arg(const AbdInstance& abd, bool complementive) {
  require_phi(abd);
  Namer names = namer_for(abd);
  const Variable f = names.fresh("f");
  ArgInstance out;
  out.delta.push_back(abd.phi);
  if (complementive) {
    require_relations(abd.phi, [](const PropertyReport& p) { return p.complementive; },
                      "complementive");
    const Relation neq = rel::NEQ();
    out.language = with(abd.language, {neq});
    for (const auto& h : abd.hypotheses) out.delta.push_back(GammaFormula{atom(neq, {h, f})});
    out.alpha = GammaFormula{atom(neq, {abd.observation, f})};
  } else {
    const Relation an = rel::AND_NOT();
    const Variable t = names.fresh("t");
    out.language = with(abd.language, {an});
    for (const auto& h : abd.hypotheses) out.delta.push_back(GammaFormula{atom(an, {h, f})});
    out.delta.push_back(GammaFormula{atom(an, {t, f})});
    out.alpha = GammaFormula{atom(an, {abd.observation, f}), atom(an, {t, f})};
  }
  return {out, TargetProblem::kArg};
}

ReducedInstance critsat_argcheck(const CnfInput& cnf, ReductionKind kind) {
  require_clauses(cnf, static_cast<std::size_t>(kMaxArity - 2));
  ArgInstance out;
  for (const auto& clause : cnf.clauses) {
    auto vars = clause_vars(clause);
    Relation r = kind == ReductionKind::kCritSatArgCheckImpl ? clause_or_impl(clause)
                 : kind == ReductionKind::kCritSatArgCheckT  ? clause_or_unit(clause)
                                                             : clause_or_unit_not(clause);
    if (kind == ReductionKind::kCritSatArgCheckImpl) {
      vars.insert(vars.end(), {"f", "t"});
    } else if (kind == ReductionKind::kCritSatArgCheckT) {
      vars.push_back("u");
    } else {
      vars.insert(vars.end(), {"u", "v"});
    }
    out.language.add(r);
    out.delta.push_back(GammaFormula{atom(r, vars)});
  }
  Relation claim = kind == ReductionKind::kCritSatArgCheckImpl ? rel::IMPL()
                   : kind == ReductionKind::kCritSatArgCheckT  ? rel::T()
                                                               : rel::AND_NOT();
  out.language.add(claim);
  if (kind == ReductionKind::kCritSatArgCheckImpl) {
    out.alpha = GammaFormula{atom(claim, {"f", "t"})};
  } else if (kind == ReductionKind::kCritSatArgCheckT) {
    out.alpha = GammaFormula{atom(claim, {"u"})};
  } else {
    out.alpha = GammaFormula{atom(claim, {"u", "v"})};
  }
  return {out, TargetProblem::kArgCheck};
}

ReducedInstance threesat_argrel(const CnfInput& cnf, ReductionKind kind) {
  require_clauses(cnf, 3);
  // Equality atoms, optionally strengthened by t or ¬t.
  Relation eq = kind == ReductionKind::kThreeSatArgRelEq ? rel::EQ()
                : kind == ReductionKind::kThreeSatArgRelEqT
                    ? Relation::from_strings("EQT", 3, {"001", "111"})
                    : Relation::from_strings("EQF", 3, {"000", "110"});
  auto same = [&](const Variable& a, const Variable& b) {
    if (kind == ReductionKind::kThreeSatArgRelEq) return atom(eq, {a, b});
    return atom(eq, {a, b, "t"});
  };
  auto c = [](std::size_t i) { return "c" + std::to_string(i); };
  const Variable s = "s";
  const std::size_t k = cnf.clauses.size();

  ArgInstance out;
  out.language = ConstraintLanguage({eq});
  for (int j = 1; j <= cnf.num_vars; ++j) {
    const Variable xj = cnf_variable(j);
    GammaFormula gamma{same(c(0), xj)};
    GammaFormula delta{same(xj, s)};
    for (std::size_t i = 1; i <= k; ++i) {
      const auto& clause = cnf.clauses[i - 1];
      if (std::find(clause.begin(), clause.end(), j) != clause.end()) {
        gamma.constraints.push_back(same(c(i - 1), c(i)));
      }
      if (std::find(clause.begin(), clause.end(), -j) != clause.end()) {
        delta.constraints.push_back(same(c(i - 1), c(i)));
      }
    }
    out.delta.push_back(gamma);
    out.delta.push_back(delta);
  }
  out.delta.push_back(GammaFormula{same(c(k), s)});
  out.relevant = out.delta.size() - 1;
  out.alpha = GammaFormula{same(c(0), s)};
  return {out, TargetProblem::kArgRel};
}

ReducedInstance arg_argrel(const ArgInstance& src) {
  src.validate();
  if (src.language.empty()) throw InvalidArgument("instance language is empty");
  Namer names;
  for (const auto& d : src.delta) names.reserve(d);
  names.reserve(src.alpha);
  const Relation& r = src.language.relations().front();
  std::vector<Variable> fresh;
  for (int i = 1; i <= r.arity(); ++i) fresh.push_back(names.fresh("p" + std::to_string(i)));
  const GammaFormula pad{atom(r, fresh)};

  ArgInstance out;
  out.language = src.language;
  out.delta = src.delta;
  out.delta.push_back(pad);
  out.relevant = out.delta.size() - 1;
  out.alpha = src.alpha;
  out.alpha.constraints.push_back(pad.constraints.front());
  return {out, TargetProblem::kArgRel};
}

ReducedInstance abd_argrel_both_valid(const AbdInstance& abd, bool second_step) {
  require_phi(abd);
  require_relations(abd.phi,
                    [](const PropertyReport& p) { return p.zero_valid && p.one_valid; },
                    "both 0-valid and 1-valid");
  Namer names = namer_for(abd);
  const Variable s = names.fresh("s"), t = names.fresh("t"), f = names.fresh("f");
  const Relation orn = or_not(), eq = rel::EQ(), cl = clause3();

  ArgInstance out;
  for (const auto& h : abd.hypotheses) {
    out.delta.push_back(GammaFormula{atom(orn, {h, t})});  // h ∨ ¬t
    out.delta.push_back(GammaFormula{atom(orn, {f, h})});  // ¬h ∨ f
  }
  out.delta.push_back(abd.phi);
  out.delta.push_back(GammaFormula{atom(eq, {s, abd.observation})});
  out.relevant = out.delta.size() - 1;
  if (!second_step) {
    out.language = with(abd.language, {orn, eq, cl});
    out.alpha = GammaFormula{atom(cl, {s, t, f})};
    return {out, TargetProblem::kArgRel};
  }
  const Relation rd = r_delta_both_valid(), eq2 = double_equality();
  const Variable u1 = names.fresh("u1"), u2 = names.fresh("u2"),
                 v1 = names.fresh("v1"), v2 = names.fresh("v2");
  out.language = with(abd.language, {orn, eq, rd, eq2});
  out.delta.push_back(GammaFormula{atom(rd, {s, t, f, u1, u2, v1, v2})});
  out.alpha = GammaFormula{atom(eq2, {u1, u2, v1, v2})};
  return {out, TargetProblem::kArgRel};
}

ReducedInstance abd_argrel_one_valid(const AbdInstance& abd, bool second_step) {
  require_phi(abd);
  require_relations(abd.phi, [](const PropertyReport& p) { return p.one_valid; },
                    "1-valid");
  Namer names = namer_for(abd);
  const Variable s = names.fresh("s"), f = names.fresh("f");
  const Relation t = rel::T(), orn = or_not(), eq = rel::EQ(), or2 = rel::OR2();

  ArgInstance out;
  for (const auto& h : abd.hypotheses) {
    out.delta.push_back(GammaFormula{atom(t, {h})});
    out.delta.push_back(GammaFormula{atom(orn, {f, h})});  // ¬h ∨ f
  }
  out.delta.push_back(abd.phi);
  out.delta.push_back(GammaFormula{atom(eq, {s, abd.observation})});
  out.relevant = out.delta.size() - 1;
  if (!second_step) {
    out.language = with(abd.language, {t, eq, orn, or2});
    out.alpha = GammaFormula{atom(or2, {s, f})};
    return {out, TargetProblem::kArgRel};
  }
  const Relation rd = r_delta_one_valid(), a2 = and2();
  const Variable u = names.fresh("u"), v = names.fresh("v");
  out.language = with(abd.language, {t, eq, orn, rd, a2});
  out.delta.push_back(GammaFormula{atom(rd, {s, f, u, v})});
  out.alpha = GammaFormula{atom(a2, {u, v})};
  return {out, TargetProblem::kArgRel};
}

ReducedInstance t_elimination(const ArgInstance& src, bool via_equality) {
  src.validate();
  ConstraintLanguage rest;
  for (const auto& r : src.language.relations()) {
    if (!is_t_relation(r)) rest.add(r);
  }
  if (!rest.empty()) {
    const auto p = language_properties(rest);
    if (!p.complementive) {
      throw PreconditionViolation("T-elimination needs a complementive language");
    }
    if (via_equality && !(p.zero_valid && p.one_valid)) {
      throw PreconditionViolation("equality variant needs a 0- and 1-valid language");
    }
    if (!via_equality && (p.zero_valid || p.one_valid)) {
      throw PreconditionViolation(
          "disequality variant needs a language neither 0- nor 1-valid");
    }
  }
  Namer names;
  for (const auto& d : src.delta) names.reserve(d);
  names.reserve(src.alpha);
  const Variable t = names.fresh("t");
  const Relation link = via_equality ? rel::EQ() : rel::NEQ();
  std::map<Variable, Variable> partner;  // x -> f_x

  auto rewrite = [&](const GammaFormula& g) {
    GammaFormula out;
    for (const auto& c : g.constraints) {
      if (!is_t_relation(c.relation)) {
        out.constraints.push_back(c);
        continue;
      }
      const Variable& x = c.args.front();
      if (via_equality) {
        out.constraints.push_back(atom(link, {x, t}));
        continue;
      }
      auto it = partner.find(x);
      if (it == partner.end()) it = partner.emplace(x, names.fresh("f_" + x)).first;
      out.constraints.push_back(atom(link, {x, it->second}));
      out.constraints.push_back(atom(link, {it->second, t}));
    }
    return out;
  };

  ArgInstance out;
  out.language = with(rest, {link});
  for (const auto& d : src.delta) out.delta.push_back(rewrite(d));
  out.alpha = rewrite(src.alpha);
  out.names = src.names;
  return {out, TargetProblem::kArgCheck};
}

struct KindInfo {
  ReductionKind kind;
  std::string_view name;
  SourceProblem source;
  TargetProblem target;
};

constexpr KindInfo kKinds[] = {
    {ReductionKind::kThreeSatArgNeq, "threesat-arg-neq", SourceProblem::kThreeSat, TargetProblem::kArg},
    {ReductionKind::kPos1In3ArgAndNot, "pos1in3-arg-andnot", SourceProblem::kPos1In3, TargetProblem::kArg},
    {ReductionKind::kAbdPArgNeq, "abdp-arg-neq", SourceProblem::kAbdP, TargetProblem::kArg},
    {ReductionKind::kAbdPArgAndNot, "abdp-arg-andnot", SourceProblem::kAbdP, TargetProblem::kArg},
    {ReductionKind::kCritSatArgCheckImpl, "critsat-argcheck-impl", SourceProblem::kCriticalSat, TargetProblem::kArgCheck},
    {ReductionKind::kCritSatArgCheckT, "critsat-argcheck-t", SourceProblem::kCriticalSat, TargetProblem::kArgCheck},
    {ReductionKind::kCritSatArgCheckAndNot, "critsat-argcheck-andnot", SourceProblem::kCriticalSat, TargetProblem::kArgCheck},
    {ReductionKind::kThreeSatArgRelEq, "threesat-argrel-eq", SourceProblem::kThreeSat, TargetProblem::kArgRel},
    {ReductionKind::kThreeSatArgRelEqT, "threesat-argrel-eqt", SourceProblem::kThreeSat, TargetProblem::kArgRel},
    {ReductionKind::kThreeSatArgRelEqF, "threesat-argrel-eqf", SourceProblem::kThreeSat, TargetProblem::kArgRel},
    {ReductionKind::kArgArgRel, "arg-argrel", SourceProblem::kArg, TargetProblem::kArgRel},
    {ReductionKind::kAbdArgRelBothValid1, "abd-argrel-bothvalid-1", SourceProblem::kAbd, TargetProblem::kArgRel},
    {ReductionKind::kAbdArgRelBothValid2, "abd-argrel-bothvalid-2", SourceProblem::kAbd, TargetProblem::kArgRel},
    {ReductionKind::kAbdArgRelOneValid1, "abd-argrel-onevalid-1", SourceProblem::kAbd, TargetProblem::kArgRel},
    {ReductionKind::kAbdArgRelOneValid2, "abd-argrel-onevalid-2", SourceProblem::kAbd, TargetProblem::kArgRel},
    {ReductionKind::kTElimEq, "telim-eq", SourceProblem::kArgCheck, TargetProblem::kArgCheck},
    {ReductionKind::kTElimNeq, "telim-neq", SourceProblem::kArgCheck, TargetProblem::kArgCheck},
};

const KindInfo& info(ReductionKind k) {
  for (const auto& i : kKinds) {
    if (i.kind == k) return i;
  }
  throw InvalidArgument("unknown reduction kind");
}

}  // namespace

Relation double_equality() {
  return Relation::from_strings("EQ2", 4, {"0000", "0011", "1100", "1111"});
}

Relation r_delta_both_valid() {
  return Relation::from_predicate("RDELTA7", 7, [](TupleCode m) {
    auto x = [m](int i) { return (m & position_bit(7, i - 1)) != 0; };
    bool clause = x(1) || !x(2) || x(3);
    return clause == (x(4) == x(5)) && x(6) == x(7);
  });
}

Relation r_delta_one_valid() {
  return Relation::from_predicate("RDELTA4", 4, [](TupleCode m) {
    auto x = [m](int i) { return (m & position_bit(4, i - 1)) != 0; };
    return (x(1) || x(2)) == x(3) && x(4);
  });
}

std::vector<ReductionKind> all_reduction_kinds() {
  std::vector<ReductionKind> out;
  for (const auto& i : kKinds) out.push_back(i.kind);
  return out;
}

std::string_view to_string(ReductionKind k) { return info(k).name; }

std::optional<ReductionKind> parse_reduction_kind(std::string_view s) {
  for (const auto& i : kKinds) {
    if (i.name == s) return i.kind;
  }
  return std::nullopt;
}

SourceProblem source_problem(ReductionKind k) { return info(k).source; }
TargetProblem target_problem(ReductionKind k) { return info(k).target; }

ReducedInstance reduce(ReductionKind kind, const Source& source) {
  ReducedInstance out = [&]() -> ReducedInstance {
    switch (kind) {
      case ReductionKind::kThreeSatArgNeq:
        return threesat_arg_neq(expect<CnfInput>(source, kind));
      case ReductionKind::kPos1In3ArgAndNot:
        return pos1in3_arg_andnot(expect<CnfInput>(source, kind));
      case ReductionKind::kAbdPArgNeq:
        return abdp_arg(expect<AbdInstance>(source, kind), true);
      case ReductionKind::kAbdPArgAndNot:
        return abdp_arg(expect<AbdInstance>(source, kind), false);
      case ReductionKind::kCritSatArgCheckImpl:
      case ReductionKind::kCritSatArgCheckT:
      case ReductionKind::kCritSatArgCheckAndNot:
        return critsat_argcheck(expect<CnfInput>(source, kind), kind);
      case ReductionKind::kThreeSatArgRelEq:
      case ReductionKind::kThreeSatArgRelEqT:
      case ReductionKind::kThreeSatArgRelEqF:
        return threesat_argrel(expect<CnfInput>(source, kind), kind);
      case ReductionKind::kArgArgRel:
        return arg_argrel(expect<ArgInstance>(source, kind));
      case ReductionKind::kAbdArgRelBothValid1:
      case ReductionKind::kAbdArgRelBothValid2:
        return abd_argrel_both_valid(expect<AbdInstance>(source, kind),
                                     kind == ReductionKind::kAbdArgRelBothValid2);
      case ReductionKind::kAbdArgRelOneValid1:
      case ReductionKind::kAbdArgRelOneValid2:
        return abd_argrel_one_valid(expect<AbdInstance>(source, kind),
                                    kind == ReductionKind::kAbdArgRelOneValid2);
      case ReductionKind::kTElimEq:
        return t_elimination(expect<ArgInstance>(source, kind), true);
      case ReductionKind::kTElimNeq:
        return t_elimination(expect<ArgInstance>(source, kind), false);
    }
    throw InvalidArgument("unknown reduction kind");
  }();
  out.instance.validate();
  return out;
}

bool solve_target(const ReducedInstance& reduced, const SolverOptions& options) {
  const auto& inst = reduced.instance;
  switch (reduced.target) {
    case TargetProblem::kArg: return arg_exists(inst.delta, inst.alpha, options);
    case TargetProblem::kArgCheck: return argcheck(inst.delta, inst.alpha, options);
    case TargetProblem::kArgRel:
      if (!inst.relevant) throw InvalidArgument("relevance target without psi");
      return argrel(inst.delta, inst.alpha, *inst.relevant, options);
  }
  throw InvalidArgument("unknown target problem");
}

}  // namespace argcl
