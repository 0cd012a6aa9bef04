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

// Brute-force deciders for the source problems of the reductions, and the
// enumerated source families of the soundness sweep.
#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <set>

#include "argcl/argumentation.hpp"
#include "argcl/errors.hpp"
#include "argcl/reductions.hpp"

namespace argcl {

namespace {

constexpr int kMaxCnfVars = 20;
constexpr std::size_t kMaxHypotheses = 12;

struct BitClause {
  std::uint32_t pos = 0;
  std::uint32_t neg = 0;
};

std::vector<BitClause> bit_clauses(const CnfInput& cnf) {
  cnf.validate();
  if (cnf.num_vars > kMaxCnfVars) {
    throw BudgetExceeded("CNF oracle limited to " + std::to_string(kMaxCnfVars) +
                         " variables, got " + std::to_string(cnf.num_vars));
  }
  std::vector<BitClause> out;
  for (const auto& clause : cnf.clauses) {
    BitClause b;
    for (int lit : clause) {
      std::uint32_t bit = std::uint32_t{1} << (std::abs(lit) - 1);
      (lit > 0 ? b.pos : b.neg) |= bit;
    }
    out.push_back(b);
  }
  return out;
}

bool satisfiable(int n, const std::vector<BitClause>& clauses,
                 std::size_t skip = static_cast<std::size_t>(-1)) {
  const std::uint32_t total = std::uint32_t{1} << n;
  for (std::uint32_t a = 0; a < total; ++a) {
    bool ok = true;
    for (std::size_t i = 0; i < clauses.size() && ok; ++i) {
      if (i == skip) continue;
      ok = (a & clauses[i].pos) != 0 || (~a & clauses[i].neg) != 0;
    }
    if (ok) return true;
  }
  return false;
}

void require_width(const CnfInput& cnf, std::size_t max_width, bool positive) {
  for (const auto& clause : cnf.clauses) {
    if (clause.empty() || clause.size() > max_width) {
      throw InvalidArgument("unsupported clause width " +
                            std::to_string(clause.size()));
    }
    if (positive && std::any_of(clause.begin(), clause.end(),
                                [](int l) { return l < 0; })) {
      throw InvalidArgument("positive 1-in-3 instances admit positive literals only");
    }
  }
}

bool one_in_three(const CnfInput& cnf) {
  require_width(cnf, 3, true);
  const auto clauses = bit_clauses(cnf);
  const std::uint32_t total = std::uint32_t{1} << cnf.num_vars;
  for (std::uint32_t a = 0; a < total; ++a) {
    if (std::all_of(clauses.begin(), clauses.end(), [&](const BitClause& c) {
          return std::popcount(a & c.pos) == 1;
        })) {
      return true;
    }
  }
  return false;
}

bool critical(const CnfInput& cnf) {
  const auto clauses = bit_clauses(cnf);
  if (satisfiable(cnf.num_vars, clauses)) return false;
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    if (!satisfiable(cnf.num_vars, clauses, i)) return false;
  }
  return true;
}

// An explanation exists iff some model of φ has a hypothesis pattern that no
// q-falsifying model shares (ABD: same projection; ABD_P: a superset of its
// true hypotheses).
bool abduction(const AbdInstance& abd, bool positive_only,
               const SolverOptions& options) {
  abd.validate();
  if (abd.hypotheses.size() > kMaxHypotheses) {
    throw BudgetExceeded("abduction oracle limited to " +
                         std::to_string(kMaxHypotheses) + " hypotheses");
  }
  std::vector<Variable> over = abd.phi.variables();
  for (const auto& h : abd.hypotheses) over.push_back(h);
  over.push_back(abd.observation);
  std::sort(over.begin(), over.end());
  over.erase(std::unique(over.begin(), over.end()), over.end());
  auto pos = [&](const Variable& v) {
    return static_cast<std::size_t>(
        std::lower_bound(over.begin(), over.end(), v) - over.begin());
  };

  std::set<std::uint32_t> with_q, without_q;
  for (const auto& m : enumerate_models(abd.phi, over, options.max_models)) {
    std::uint32_t pattern = 0;
    for (std::size_t i = 0; i < abd.hypotheses.size(); ++i) {
      if (m[pos(abd.hypotheses[i])]) pattern |= std::uint32_t{1} << i;
    }
    (m[pos(abd.observation)] ? with_q : without_q).insert(pattern);
  }
  for (std::uint32_t e : with_q) {
    bool refuted =
        positive_only
            ? std::any_of(without_q.begin(), without_q.end(),
                          [&](std::uint32_t w) { return (e & ~w) == 0; })
            : without_q.count(e) > 0;
    if (!refuted) return true;
  }
  return false;
}

template <typename T>
const T& expect(const Source& source, SourceProblem p) {
  if (const T* v = std::get_if<T>(&source)) return *v;
  throw InvalidArgument("source does not match problem " +
                        std::string(to_string(p)));
}

}  // namespace

std::string_view to_string(SourceProblem p) {
  switch (p) {
    case SourceProblem::kThreeSat: return "threesat";
    case SourceProblem::kPos1In3: return "pos1in3";
    case SourceProblem::kCriticalSat: return "critsat";
    case SourceProblem::kAbd: return "abd";
    case SourceProblem::kAbdP: return "abdp";
    case SourceProblem::kArg: return "arg";
    case SourceProblem::kArgCheck: return "argcheck";
  }
  return "?";
}

std::optional<SourceProblem> parse_source_problem(std::string_view s) {
  for (auto p : {SourceProblem::kThreeSat, SourceProblem::kPos1In3,
                 SourceProblem::kCriticalSat, SourceProblem::kAbd,
                 SourceProblem::kAbdP, SourceProblem::kArg,
                 SourceProblem::kArgCheck}) {
    if (to_string(p) == s) return p;
  }
  return std::nullopt;
}

std::string_view to_string(TargetProblem p) {
  switch (p) {
    case TargetProblem::kArg: return "arg";
    case TargetProblem::kArgCheck: return "argcheck";
    case TargetProblem::kArgRel: return "argrel";
  }
  return "?";
}

bool solve_source(SourceProblem problem, const Source& source,
                  const SolverOptions& options) {
  SolverOptions oracle = options;
  oracle.engine = Engine::kGeneric;
  switch (problem) {
    case SourceProblem::kThreeSat: {
      const auto& cnf = expect<CnfInput>(source, problem);
      require_width(cnf, 3, false);
      return satisfiable(cnf.num_vars, bit_clauses(cnf));
    }
    case SourceProblem::kPos1In3:
      return one_in_three(expect<CnfInput>(source, problem));
    case SourceProblem::kCriticalSat:
      return critical(expect<CnfInput>(source, problem));
    case SourceProblem::kAbd:
      return abduction(expect<AbdInstance>(source, problem), false, oracle);
    case SourceProblem::kAbdP:
      return abduction(expect<AbdInstance>(source, problem), true, oracle);
    case SourceProblem::kArg: {
      const auto& inst = expect<ArgInstance>(source, problem);
      inst.validate();
      return arg_exists(inst.delta, inst.alpha, oracle);
    }
    case SourceProblem::kArgCheck: {
      const auto& inst = expect<ArgInstance>(source, problem);
      inst.validate();
      return argcheck(inst.delta, inst.alpha, oracle);
    }
  }
  throw InvalidArgument("unknown source problem");
}

// ---------------------------------------------------------------------------
// Sweep families

std::vector<CnfInput> small_cnf_family() {
  std::vector<CnfInput> out;
  for (int n = 1; n <= 3; ++n) {
    // Every nonempty clause over x1..xn: each variable absent, positive or
    // negative.
    std::vector<std::vector<int>> clauses;
    int patterns = 1;
    for (int j = 0; j < n; ++j) patterns *= 3;
    for (int code = 1; code < patterns; ++code) {
      std::vector<int> clause;
      int c = code;
      for (int j = 1; j <= n; ++j, c /= 3) {
        if (c % 3 == 1) clause.push_back(j);
        if (c % 3 == 2) clause.push_back(-j);
      }
      clauses.push_back(clause);
    }
    const std::size_t m = clauses.size();
    for (std::size_t a = 0; a < m; ++a) {
      out.push_back({n, {clauses[a]}});
      for (std::size_t b = a + 1; b < m; ++b) {
        out.push_back({n, {clauses[a], clauses[b]}});
        for (std::size_t c = b + 1; c < m; ++c) {
          out.push_back({n, {clauses[a], clauses[b], clauses[c]}});
        }
      }
    }
  }
  return out;
}

namespace {

Relation cp6() {
  return Relation::from_strings("CP6", 3, {"000", "001", "010", "101", "110", "111"});
}

// Constraints of `r` over distinct variables of `pool`, in lexicographic
// order of the argument index tuple.
std::vector<Constraint> distinct_atoms(const Relation& r,
                                       const std::vector<Variable>& pool) {
  std::vector<Constraint> out;
  const int k = r.arity();
  std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
  for (;;) {
    std::set<std::size_t> uniq(idx.begin(), idx.end());
    if (uniq.size() == idx.size()) {
      std::vector<Variable> args;
      for (auto i : idx) args.push_back(pool[i]);
      out.emplace_back(r, args);
    }
    int p = k - 1;
    while (p >= 0 && idx[static_cast<std::size_t>(p)] + 1 == pool.size()) {
      idx[static_cast<std::size_t>(p)] = 0;
      --p;
    }
    if (p < 0) break;
    ++idx[static_cast<std::size_t>(p)];
  }
  return out;
}

// Every (φ, H, q) over the pool {a,b,c,d}: φ is one or two atoms with
// distinct arguments whose first atom is R(a,b,...) (all others are
// renamings), |H| <= 2, q outside H.
std::vector<Source> abduction_family(const ConstraintLanguage& gamma) {
  const std::vector<Variable> pool{"a", "b", "c", "d"};
  std::vector<Constraint> atoms;
  std::vector<Constraint> firsts;
  for (const auto& r : gamma.relations()) {
    for (auto& a : distinct_atoms(r, pool)) atoms.push_back(a);
    std::vector<Variable> args(pool.begin(), pool.begin() + r.arity());
    firsts.emplace_back(r, args);
  }
  std::vector<GammaFormula> phis;
  for (const auto& first : firsts) {
    phis.push_back(GammaFormula{first});
    for (const auto& second : atoms) {
      if (!(second == first)) phis.push_back(GammaFormula{first, second});
    }
  }
  std::vector<std::vector<Variable>> hyps{{}};
  for (std::size_t i = 0; i < pool.size(); ++i) {
    hyps.push_back({pool[i]});
  }
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      hyps.push_back({pool[i], pool[j]});
    }
  }
  std::vector<Source> out;
  for (const auto& phi : phis) {
    for (const auto& h : hyps) {
      for (const auto& q : pool) {
        if (std::find(h.begin(), h.end(), q) != h.end()) continue;
        out.push_back(AbdInstance{gamma, phi, h, q});
      }
    }
  }
  return out;
}

std::vector<Constraint> all_atoms(const ConstraintLanguage& gamma,
                                  const std::vector<Variable>& pool) {
  std::vector<Constraint> out;
  for (const auto& r : gamma.relations()) {
    const int k = r.arity();
    std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
    for (;;) {
      std::vector<Variable> args;
      for (auto i : idx) args.push_back(pool[i]);
      out.emplace_back(r, args);
      int p = k - 1;
      while (p >= 0 && idx[static_cast<std::size_t>(p)] + 1 == pool.size()) {
        idx[static_cast<std::size_t>(p)] = 0;
        --p;
      }
      if (p < 0) break;
      ++idx[static_cast<std::size_t>(p)];
    }
  }
  return out;
}

// Instances (Δ, α) with Δ a set of at most three atoms and α one atom.
std::vector<Source> atom_instances(const ConstraintLanguage& gamma,
                                   const std::vector<Constraint>& atoms) {
  std::vector<std::vector<std::size_t>> subsets{{}};
  const std::size_t m = atoms.size();
  for (std::size_t a = 0; a < m; ++a) {
    subsets.push_back({a});
    for (std::size_t b = a + 1; b < m; ++b) {
      subsets.push_back({a, b});
      for (std::size_t c = b + 1; c < m; ++c) subsets.push_back({a, b, c});
    }
  }
  std::vector<Source> out;
  for (const auto& claim : atoms) {
    for (const auto& s : subsets) {
      ArgInstance inst;
      inst.language = gamma;
      for (auto i : s) inst.delta.push_back(GammaFormula{atoms[i]});
      inst.alpha = GammaFormula{claim};
      out.push_back(std::move(inst));
    }
  }
  return out;
}

}  // namespace

std::vector<Source> sweep_family(ReductionKind kind) {
  std::vector<Source> out;
  auto cnfs = [&](bool positive_only) {
    for (auto& cnf : small_cnf_family()) {
      bool positive = std::all_of(cnf.clauses.begin(), cnf.clauses.end(), [](const auto& c) {
        return std::all_of(c.begin(), c.end(), [](int l) { return l > 0; });
      });
      if (!positive_only || positive) out.emplace_back(std::move(cnf));
    }
  };
  switch (kind) {
    case ReductionKind::kThreeSatArgNeq:
    case ReductionKind::kCritSatArgCheckImpl:
    case ReductionKind::kCritSatArgCheckT:
    case ReductionKind::kCritSatArgCheckAndNot:
    case ReductionKind::kThreeSatArgRelEq:
    case ReductionKind::kThreeSatArgRelEqT:
    case ReductionKind::kThreeSatArgRelEqF:
      cnfs(false);
      return out;
    case ReductionKind::kPos1In3ArgAndNot:
      cnfs(true);
      return out;
    case ReductionKind::kAbdPArgNeq:
      return abduction_family(ConstraintLanguage({rel::NAE3(), cp6()}));
    case ReductionKind::kAbdPArgAndNot:
      return abduction_family(ConstraintLanguage({rel::IMPL(), rel::NAE3()}));
    case ReductionKind::kAbdArgRelBothValid1:
    case ReductionKind::kAbdArgRelBothValid2:
      return abduction_family(ConstraintLanguage({rel::IMPL(), cp6()}));
    case ReductionKind::kAbdArgRelOneValid1:
    case ReductionKind::kAbdArgRelOneValid2:
      return abduction_family(ConstraintLanguage({rel::OR2(), rel::IMPL()}));
    case ReductionKind::kArgArgRel: {
      ConstraintLanguage gamma({rel::F(), rel::T(), rel::OR2()});
      return atom_instances(gamma, all_atoms(gamma, {"a", "b"}));
    }
    case ReductionKind::kTElimEq:
    case ReductionKind::kTElimNeq: {
      const Relation base = kind == ReductionKind::kTElimEq ? cp6() : rel::NAE3();
      ConstraintLanguage gamma({base, rel::T()});
      const std::vector<Variable> pool{"a", "b", "c"};
      auto atoms = distinct_atoms(base, pool);
      for (auto& a : distinct_atoms(rel::T(), pool)) atoms.push_back(a);
      return atom_instances(gamma, atoms);
    }
  }
  return out;
}

}  // namespace argcl
