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

#include "argcl/argumentation.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "argcl/errors.hpp"
#include "compiled.hpp"
#include "engines.hpp"

namespace argcl {

namespace {

using Mask = std::uint64_t;

std::vector<GammaFormula> pick(std::span<const GammaFormula> delta,
                               const std::vector<std::size_t>& idx) {
  std::vector<GammaFormula> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(delta[i]);
  return out;
}

// Conjunction of the flags of every relation occurring in Δ and α.
PropertyReport used_properties(std::span<const GammaFormula> delta,
                               const GammaFormula& alpha) {
  std::vector<Relation> used;
  auto note = [&](const GammaFormula& f) {
    for (const auto& c : f.constraints) {
      if (std::find(used.begin(), used.end(), c.relation) == used.end()) {
        used.push_back(c.relation);
      }
    }
  };
  for (const auto& d : delta) note(d);
  note(alpha);
  if (used.empty()) {
    PropertyReport all;
    all.horn = all.dual_horn = all.bijunctive = all.affine = true;
    all.zero_valid = all.one_valid = all.eps_valid = true;
    all.complementive = all.positive = all.negative = true;
    all.in_is0 = all.in_is1 = all.schaefer = true;
    return all;
  }
  return language_properties(std::span<const Relation>(used));
}

void check_index(std::span<const GammaFormula> delta, std::size_t psi) {
  if (psi >= delta.size()) {
    throw InvalidArgument("relevant index " + std::to_string(psi) +
                          " out of range for a knowledge base of size " +
                          std::to_string(delta.size()));
  }
}

void check_kb_budget(std::size_t n, const SolverOptions& options) {
  if (n > options.max_kb) {
    throw BudgetExceeded("knowledge base of " + std::to_string(n) +
                         " formulas exceeds the subset budget of " +
                         std::to_string(options.max_kb));
  }
}

// Subsets of {0..n-1} by increasing cardinality, then lexicographically.
// `visit` returns false to stop; returns false iff stopped.
template <typename Visit>
bool for_each_subset(std::size_t n, Visit&& visit) {
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k <= n; ++k) {
    idx.resize(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      if (!visit(static_cast<const std::vector<std::size_t>&>(idx))) return false;
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return true;
}

bool is_support(std::span<const GammaFormula> delta,
                const std::vector<std::size_t>& idx,
                const GammaFormula& alpha, const SolverOptions& options) {
  const auto phi = pick(delta, idx);
  return is_consistent(phi, options) && entails(phi, alpha, options);
}

std::vector<Mask> maximal(std::vector<Mask> masks) {
  std::sort(masks.begin(), masks.end(), [](Mask a, Mask b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa > pb : a < b;
  });
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<Mask> out;
  for (Mask m : masks) {
    bool covered = std::any_of(out.begin(), out.end(),
                               [&](Mask o) { return (m & ~o) == 0; });
    if (!covered) out.push_back(m);
  }
  return out;
}

bool covered_by(Mask m, const std::vector<Mask>& sets) {
  return std::any_of(sets.begin(), sets.end(),
                     [&](Mask s) { return (m & ~s) == 0; });
}

// For every total assignment m over var(Δ) ∪ var(α), the set Φ_m of
// formulas of Δ it satisfies. A consistent Φ entails α iff Φ is contained
// in some Φ_m and in no Φ_m' with m' falsifying α.
struct ModelTable {
  std::vector<Mask> satisfied;   // maximal Φ_m
  std::vector<Mask> falsifying;  // maximal Φ_m with m ⊭ α
  std::vector<Mask> all;         // every distinct Φ_m
};

constexpr std::size_t kTableMaxVars = 22;

bool table_applicable(std::span<const GammaFormula> delta,
                      const GammaFormula& alpha, const SolverOptions& options) {
  if (delta.size() > 64) return false;
  std::vector<GammaFormula> all(delta.begin(), delta.end());
  all.push_back(alpha);
  const std::size_t n = variables_of(all).size();
  if (n > kTableMaxVars || (std::uint64_t{1} << n) > options.max_models) {
    return false;
  }
  // Subset search wins when Δ is small relative to the variable count.
  return delta.size() > options.max_kb || n <= delta.size() + 8;
}

ModelTable build_table(std::span<const GammaFormula> delta,
                       const GammaFormula& alpha) {
  std::vector<GammaFormula> all(delta.begin(), delta.end());
  all.push_back(alpha);
  const auto compiled = detail::compile(all);
  const std::size_t n = compiled.vars.size();

  auto lower = [&](const GammaFormula& f) {
    std::vector<detail::CompiledConstraint> out;
    for (const auto& c : f.constraints) {
      std::vector<int> args;
      for (const auto& a : c.args) args.push_back(compiled.index_of(a));
      out.push_back({c.relation, std::move(args)});
    }
    return out;
  };
  std::vector<std::vector<detail::CompiledConstraint>> parts;
  for (const auto& d : delta) parts.push_back(lower(d));
  const auto claim = lower(alpha);

  std::vector<std::int8_t> values(n, 0);
  auto holds = [&](const std::vector<detail::CompiledConstraint>& cs) {
    return std::all_of(cs.begin(), cs.end(), [&](const auto& c) {
      return c.relation.contains(detail::encode(c, values));
    });
  };

  std::map<Mask, bool> seen;  // Φ_m -> some such m falsifies α
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < total; ++m) {
    for (std::size_t i = 0; i < n; ++i) {
      values[i] = static_cast<std::int8_t>((m >> (n - 1 - i)) & 1U);
    }
    Mask mask = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (holds(parts[i])) mask |= Mask{1} << i;
    }
    bool& falsified = seen[mask];
    if (!falsified && !holds(claim)) falsified = true;
  }

  ModelTable t;
  std::vector<Mask> falsifying;
  for (const auto& [mask, f] : seen) {
    t.all.push_back(mask);
    if (f) falsifying.push_back(mask);
  }
  t.satisfied = maximal(t.all);
  t.falsifying = maximal(falsifying);
  return t;
}

Support support_of(Mask m) {
  Support s;
  for (std::size_t i = 0; m != 0; ++i, m >>= 1) {
    if (m & 1U) s.indices.push_back(i);
  }
  return s;
}

Support shrink(std::span<const GammaFormula> delta, Support candidate,
               const GammaFormula& alpha, const SolverOptions& options) {
  // Ascending scan; an element stays only if dropping it loses entailment.
  std::vector<std::size_t> keep = candidate.indices;
  for (std::size_t i : candidate.indices) {
    std::vector<std::size_t> trial;
    for (std::size_t j : keep) {
      if (j != i) trial.push_back(j);
    }
    if (entails(pick(delta, trial), alpha, options)) keep = std::move(trial);
  }
  return Support{keep};
}

GammaFormula flip_formula(const GammaFormula& f) {
  GammaFormula out;
  for (const auto& c : f.constraints) {
    out.constraints.emplace_back(c.relation.flipped(c.relation.name()), c.args);
  }
  return out;
}

bool argrel_general(std::span<const GammaFormula> delta,
                    const GammaFormula& alpha, std::size_t psi,
                    const SolverOptions& options) {
  if (table_applicable(delta, alpha, options)) {
    const auto t = build_table(delta, alpha);
    const Mask psi_bit = Mask{1} << psi;
    std::vector<Mask> with_psi;
    for (Mask m : t.all) {
      if (m & psi_bit) with_psi.push_back(m);
    }
    with_psi = maximal(std::move(with_psi));
    for (Mask a : with_psi) {
      for (Mask b : t.falsifying) {
        Mask u = (a & b) | psi_bit;
        if (!covered_by(u, t.falsifying)) return true;
      }
    }
    return false;
  }

  check_kb_budget(delta.size(), options);
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < delta.size(); ++i) {
    if (i != psi) rest.push_back(i);
  }
  return !for_each_subset(rest.size(), [&](const std::vector<std::size_t>& sub) {
    std::vector<std::size_t> s;
    for (std::size_t i : sub) s.push_back(rest[i]);
    auto without = pick(delta, s);
    auto with = without;
    with.push_back(delta[psi]);
    bool witness = is_consistent(with, options) &&
                   entails(with, alpha, options) &&
                   !entails(without, alpha, options);
    return !witness;
  });
}

}  // namespace

bool Support::contains(std::size_t i) const {
  return std::binary_search(indices.begin(), indices.end(), i);
}

std::string to_string(const Support& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.indices.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s.indices[i]);
  }
  return out + "}";
}

std::string_view to_string(ComplexityClass c) {
  switch (c) {
    case ComplexityClass::kP: return "P";
    case ComplexityClass::kNPComplete: return "NP-complete";
    case ComplexityClass::kCoNPComplete: return "coNP-complete";
    case ComplexityClass::kDPComplete: return "DP-complete";
    case ComplexityClass::kSigmaP2Complete: return "SigmaP2-complete";
  }
  return "?";
}

bool argcheck(std::span<const GammaFormula> phi, const GammaFormula& alpha,
              const SolverOptions& options) {
  if (!is_consistent(phi, options) || !entails(phi, alpha, options)) {
    return false;
  }
  std::vector<GammaFormula> rest;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    rest.clear();
    for (std::size_t j = 0; j < phi.size(); ++j) {
      if (j != i) rest.push_back(phi[j]);
    }
    if (entails(rest, alpha, options)) return false;
  }
  return true;
}

bool arg_exists(std::span<const GammaFormula> delta, const GammaFormula& alpha,
                const SolverOptions& options) {
  if (options.engine == Engine::kAuto) {
    if (used_properties(delta, alpha).eps_valid) {
      return entails(delta, alpha, options);
    }
    if (table_applicable(delta, alpha, options)) {
      const auto t = build_table(delta, alpha);
      return std::any_of(t.satisfied.begin(), t.satisfied.end(), [&](Mask a) {
        return !covered_by(a, t.falsifying);
      });
    }
  }
  check_kb_budget(delta.size(), options);
  return !for_each_subset(delta.size(), [&](const std::vector<std::size_t>& s) {
    return !is_support(delta, s, alpha, options);
  });
}

std::optional<Support> find_minimal_support(std::span<const GammaFormula> delta,
                                            const GammaFormula& alpha,
                                            const SolverOptions& options) {
  std::optional<Support> candidate;
  if (options.engine == Engine::kAuto &&
      used_properties(delta, alpha).eps_valid) {
    if (!entails(delta, alpha, options)) return std::nullopt;
    Support all;
    for (std::size_t i = 0; i < delta.size(); ++i) all.indices.push_back(i);
    candidate = all;
  } else if (options.engine == Engine::kAuto &&
             table_applicable(delta, alpha, options)) {
    const auto t = build_table(delta, alpha);
    // Largest candidate first, ties by mask value, for a stable choice.
    for (Mask a : t.satisfied) {
      if (!covered_by(a, t.falsifying)) {
        candidate = support_of(a);
        break;
      }
    }
    if (!candidate) return std::nullopt;
  } else {
    check_kb_budget(delta.size(), options);
    for_each_subset(delta.size(), [&](const std::vector<std::size_t>& s) {
      if (!is_support(delta, s, alpha, options)) return true;
      candidate = Support{s};
      return false;
    });
    if (!candidate) return std::nullopt;
  }
  return shrink(delta, *candidate, alpha, options);
}

std::vector<Support> enumerate_minimal_supports(std::span<const GammaFormula> delta,
                                                const GammaFormula& alpha,
                                                const SolverOptions& options) {
  check_kb_budget(delta.size(), options);
  std::vector<Mask> found_masks;
  std::vector<Support> found;
  for_each_subset(delta.size(), [&](const std::vector<std::size_t>& s) {
    Mask m = 0;
    for (std::size_t i : s) m |= Mask{1} << i;
    bool superset = std::any_of(found_masks.begin(), found_masks.end(),
                                [&](Mask f) { return (f & ~m) == 0; });
    if (!superset && is_support(delta, s, alpha, options)) {
      found_masks.push_back(m);
      found.push_back(Support{s});
    }
    return true;
  });
  return found;
}

bool argrel(std::span<const GammaFormula> delta, const GammaFormula& alpha,
            std::size_t psi, const SolverOptions& options) {
  check_index(delta, psi);
  if (options.engine == Engine::kGeneric) {
    const auto supports = enumerate_minimal_supports(delta, alpha, options);
    return std::any_of(supports.begin(), supports.end(),
                       [&](const Support& s) { return s.contains(psi); });
  }
  const auto props = used_properties(delta, alpha);
  if (props.positive) return argrel_positive(delta, alpha, psi, options);
  if (props.negative) {
    std::vector<GammaFormula> flipped;
    for (const auto& d : delta) flipped.push_back(flip_formula(d));
    return argrel_positive(flipped, flip_formula(alpha), psi, options);
  }
  return argrel_general(delta, alpha, psi, options);
}

bool argrel_positive(std::span<const GammaFormula> delta,
                     const GammaFormula& alpha, std::size_t psi,
                     const SolverOptions& options) {
  check_index(delta, psi);
  if (!used_properties(delta, alpha).positive) {
    throw PreconditionViolation("argrel_positive needs a positive language");
  }
  // Positive clauses of α as sorted variable sets, deduplicated.
  std::set<std::vector<Variable>> clauses;
  for (const auto& c : alpha.constraints) {
    for (const auto& pc : positive_cnf_of(c.relation)) {
      std::vector<Variable> vars;
      for (const auto& lit : instantiate(pc, c)) vars.push_back(lit.var);
      std::sort(vars.begin(), vars.end());
      clauses.insert(std::move(vars));
    }
  }
  for (const auto& vars : clauses) {
    Clause clause;
    for (const auto& v : vars) clause.push_back(Literal{v, true});
    std::vector<GammaFormula> part{delta[psi]};
    for (std::size_t i = 0; i < delta.size(); ++i) {
      if (i == psi) continue;
      if (!entails(std::span<const GammaFormula>(&delta[i], 1), clause, options)) {
        part.push_back(delta[i]);
      }
    }
    if (entails(part, alpha, options)) return true;
  }
  return false;
}

ComplexityReport classify_complexity(const ConstraintLanguage& language) {
  const auto p = language_properties(language);
  ComplexityReport r{};
  if (p.schaefer) {
    r.arg = p.eps_valid ? ComplexityClass::kP : ComplexityClass::kNPComplete;
  } else {
    r.arg = p.eps_valid ? ComplexityClass::kCoNPComplete
                        : ComplexityClass::kSigmaP2Complete;
  }
  r.argcheck = p.schaefer ? ComplexityClass::kP : ComplexityClass::kDPComplete;
  if (p.positive || p.negative) {
    r.argrel = ComplexityClass::kP;
  } else {
    r.argrel = p.schaefer ? ComplexityClass::kNPComplete
                          : ComplexityClass::kSigmaP2Complete;
  }
  return r;
}

}  // namespace argcl
