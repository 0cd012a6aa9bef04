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

#include "argcl/expressibility.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "argcl/errors.hpp"

namespace argcl {

namespace {

// Cartesian product of the language's relations, with the means to turn a
// substitution of its positions back into constraints over the originals.
class Product {
 public:
  explicit Product(const ConstraintLanguage& language) {
    if (language.empty()) throw InvalidArgument("empty constraint language");
    int total = 0;
    for (const auto& r : language.relations()) {
      blocks_.push_back(r);
      total += r.arity();
    }
    if (total > kMaxArity) {
      throw InvalidArgument("product of the language has arity " +
                            std::to_string(total) + " > " +
                            std::to_string(kMaxArity));
    }
    arity_ = total;
  }

  int arity() const { return arity_; }
  TupleCode full() const { return (TupleCode{1} << arity_) - 1; }

  bool contains(TupleCode m) const {
    int shift = arity_;
    for (const auto& r : blocks_) {
      shift -= r.arity();
      if (!r.contains((m >> shift) & r.full())) return false;
    }
    return true;
  }

  // One constraint per block with position i replaced by sigma[i].
  std::vector<Constraint> emit(const std::vector<Variable>& sigma) const {
    std::vector<Constraint> out;
    std::size_t pos = 0;
    for (const auto& r : blocks_) {
      std::vector<Variable> args(sigma.begin() + static_cast<std::ptrdiff_t>(pos),
                                 sigma.begin() + static_cast<std::ptrdiff_t>(pos) + r.arity());
      pos += static_cast<std::size_t>(r.arity());
      out.emplace_back(r, std::move(args));
    }
    return out;
  }

  // Section by a classification of positions: position i gets
  // names[label(i)].
  std::vector<Constraint> section(const std::function<int(int)>& label,
                                  const std::vector<Variable>& names) const {
    std::vector<Variable> sigma;
    for (int i = 0; i < arity_; ++i) {
      sigma.push_back(names[static_cast<std::size_t>(label(i))]);
    }
    return emit(sigma);
  }

  bool bit(TupleCode m, int i) const {
    return (m & position_bit(arity_, i)) != 0;
  }

  const std::vector<Relation>& blocks() const { return blocks_; }

  Relation as_relation() const {
    return Relation::from_predicate("PRODUCT", arity_,
                                    [&](TupleCode m) { return contains(m); });
  }

  // Same positions, every block complemented.
  Product dual() const {
    Product p;
    for (const auto& r : blocks_) p.blocks_.push_back(r.flipped(r.name()));
    p.arity_ = arity_;
    return p;
  }

 private:
  Product() = default;
  std::vector<Relation> blocks_;
  int arity_ = 0;
};

void append(GammaFormula& f, std::vector<Constraint> cs) {
  for (auto& c : cs) {
    if (std::find(f.constraints.begin(), f.constraints.end(), c) ==
        f.constraints.end()) {
      f.constraints.push_back(std::move(c));
    }
  }
}

// Constraints of `f` (over the blocks of `from`) rewritten over the blocks of
// `to`, block by block.
GammaFormula rebase(const GammaFormula& f, const Product& from, const Product& to) {
  GammaFormula out;
  for (const auto& c : f.constraints) {
    for (std::size_t b = 0; b < from.blocks().size(); ++b) {
      if (from.blocks()[b] == c.relation) {
        out.constraints.emplace_back(to.blocks()[b], c.args);
        break;
      }
    }
  }
  return out;
}

QuantifiedFormula plain(GammaFormula f) {
  QuantifiedFormula q;
  q.body = std::move(f);
  return q;
}

void require(bool ok, GadgetTarget t) {
  if (!ok) {
    throw PreconditionViolation("language does not meet the precondition for " +
                                std::string(to_string(t)));
  }
}

void check(const QuantifiedFormula& f, GadgetTarget t) {
  if (!verify_expresses(f, target_relation(t))) {
    throw InternalError("construction for " + std::string(to_string(t)) +
                        " failed verification: " + to_string(f));
  }
}

const std::vector<Variable> kXY{"x", "y"};

// m ∈ R with m̄ ∉ R, first in canonical order.
TupleCode non_complemented_member(const Product& p) {
  for (TupleCode m = 0; m <= p.full(); ++m) {
    if (p.contains(m) && !p.contains(p.full() & ~m)) return m;
  }
  throw InternalError("no member with a non-member complement");
}

GammaFormula build_neq(const Product& p) {
  for (TupleCode m = 0; m <= p.full(); ++m) {
    if (p.contains(m)) {
      GammaFormula f;
      append(f, p.section([&](int i) { return p.bit(m, i) ? 1 : 0; }, kXY));
      return f;
    }
  }
  throw InternalError("empty relation");
}

GammaFormula build_impl(const Product& p) {
  TupleCode m = non_complemented_member(p);
  GammaFormula f;
  append(f, p.section([&](int i) { return p.bit(m, i) ? 1 : 0; }, kXY));
  return f;
}

GammaFormula build_and_not(const Product& p, const Variable& x,
                           const Variable& y) {
  TupleCode m = non_complemented_member(p);
  // The section is {01}; swapping the arguments gives {10}.
  GammaFormula f;
  append(f, p.section([&](int i) { return p.bit(m, i) ? 0 : 1; },
                      std::vector<Variable>{x, y}));
  return f;
}

GammaFormula build_const(const Product& p, const Variable& x) {
  GammaFormula f;
  append(f, p.section([](int) { return 0; }, std::vector<Variable>{x}));
  return f;
}

GammaFormula build_eq(const Product& p) {
  for (TupleCode m = 1; m < p.full(); ++m) {
    if (p.contains(m)) continue;
    auto label = [&](int i) { return p.bit(m, i) ? 1 : 0; };
    GammaFormula f;
    append(f, p.section(label, kXY));
    append(f, p.section(label, std::vector<Variable>{"y", "x"}));
    return f;
  }
  throw InternalError("no non-member other than the constant tuples");
}

// (x = y) ∧ z for a 1-valid, not 0-valid, non-positive product.
GammaFormula build_eq_and_t(const Product& p, const Relation& r) {
  const int k = p.arity();
  const auto ts = r.tuples();
  auto entails_eq = [&](int a, int b) {
    return std::all_of(ts.begin(), ts.end(), [&](TupleCode m) {
      return p.bit(m, a) == p.bit(m, b);
    });
  };
  auto entails_one = [&](int a) {
    return std::all_of(ts.begin(), ts.end(),
                       [&](TupleCode m) { return p.bit(m, a); });
  };
  const std::vector<Variable> xyz{"x", "y", "z"};
  const auto t_of_z = p.section([](int) { return 2; }, xyz);

  if (r.properties().in_is0) {
    for (int pivot = 0; pivot < k; ++pivot) {
      if (entails_one(pivot)) continue;
      std::vector<bool> w(static_cast<std::size_t>(k), false);
      bool partner = false;
      for (int i = 0; i < k; ++i) {
        w[static_cast<std::size_t>(i)] = entails_eq(pivot, i);
        partner = partner || (i != pivot && w[static_cast<std::size_t>(i)]);
      }
      if (!partner) continue;
      GammaFormula f;
      append(f, p.section(
                    [&](int i) {
                      if (i == pivot) return 0;
                      return w[static_cast<std::size_t>(i)] ? 1 : 2;
                    },
                    xyz));
      if (!verify_expresses(f, target_relation(GadgetTarget::kEqAndT))) {
        // The bare section can still admit x = y = 1 with z = 0 when a
        // positive clause links the pivot to the rest; pin z to 1.
        append(f, t_of_z);
      }
      return f;
    }
    throw InternalError("no forced equality in a non-positive IS0 relation");
  }

  for (TupleCode m1 = 0; m1 <= p.full(); ++m1) {
    if (!p.contains(m1)) continue;
    for (TupleCode m2 = 0; m2 <= p.full(); ++m2) {
      if (!p.contains(m2) || p.contains((p.full() & ~m1) | m2)) continue;
      // V00 -> a, V10 -> b, V01 and V11 -> c; M(x,y,z,z) ∧ M(y,x,z,z) ∧ T(z).
      auto label_for = [&](int a, int b) {
        return [&p, m1, m2, a, b](int i) {
          bool v1 = p.bit(m1, i), v2 = p.bit(m2, i);
          if (v2) return 2;
          return v1 ? b : a;
        };
      };
      GammaFormula f;
      append(f, p.section(label_for(0, 1), xyz));
      append(f, p.section(label_for(1, 0), xyz));
      append(f, t_of_z);
      return f;
    }
  }
  throw InternalError("relation outside IS0 without an implication witness");
}

// ∃ f,t . N(x,z) ∧ N(z,y) ∧ (t ∧ ¬f) with N built from the Horn and dual-Horn
// counterexamples.
QuantifiedFormula build_eq_exists_general(const Product& p) {
  auto witness = [&](auto combine) {
    for (TupleCode a = 0; a <= p.full(); ++a) {
      if (!p.contains(a)) continue;
      for (TupleCode b = 0; b <= p.full(); ++b) {
        if (p.contains(b) && !p.contains(combine(a, b))) {
          return std::pair<TupleCode, TupleCode>{a, b};
        }
      }
    }
    throw InternalError("missing Horn/dual-Horn counterexample");
  };
  const auto [m1, m2] = witness([](TupleCode a, TupleCode b) { return a & b; });
  const auto [m3, m4] = witness([](TupleCode a, TupleCode b) { return a | b; });

  // Labels 0..3 stand for V00, V01, V10, V11 and map to (u, x, y, v).
  auto quad = [&](TupleCode a, TupleCode b) {
    return [&p, a, b](int i) {
      return (p.bit(a, i) ? 2 : 0) + (p.bit(b, i) ? 1 : 0);
    };
  };
  auto neq = [&](const Variable& l, const Variable& r) {
    std::vector<Variable> names{"f", l, r, "t"};
    GammaFormula g;
    append(g, p.section(quad(m1, m2), names));
    append(g, p.section(quad(m3, m4), names));
    return g;
  };

  QuantifiedFormula q;
  q.existential = {"f", "t", "z"};
  append(q.body, neq("x", "z").constraints);
  append(q.body, neq("z", "y").constraints);
  append(q.body, build_and_not(p, "t", "f").constraints);
  return q;
}

}  // namespace

std::string_view to_string(GadgetTarget t) {
  switch (t) {
    case GadgetTarget::kNeq: return "neq";
    case GadgetTarget::kImpl: return "impl";
    case GadgetTarget::kAndNot: return "and_not";
    case GadgetTarget::kTConst: return "t";
    case GadgetTarget::kFConst: return "f";
    case GadgetTarget::kEq: return "eq";
    case GadgetTarget::kEqAndT: return "eq_and_t";
    case GadgetTarget::kEqAndF: return "eq_and_f";
    case GadgetTarget::kEqExists: return "eq_exists";
  }
  return "?";
}

std::optional<GadgetTarget> parse_gadget_target(std::string_view s) {
  for (auto t : {GadgetTarget::kNeq, GadgetTarget::kImpl, GadgetTarget::kAndNot,
                 GadgetTarget::kTConst, GadgetTarget::kFConst, GadgetTarget::kEq,
                 GadgetTarget::kEqAndT, GadgetTarget::kEqAndF,
                 GadgetTarget::kEqExists}) {
    if (to_string(t) == s) return t;
  }
  return std::nullopt;
}

Relation target_relation(GadgetTarget t) {
  switch (t) {
    case GadgetTarget::kNeq: return rel::NEQ();
    case GadgetTarget::kImpl: return rel::IMPL();
    case GadgetTarget::kAndNot: return rel::AND_NOT();
    case GadgetTarget::kTConst: return rel::T();
    case GadgetTarget::kFConst: return rel::F();
    case GadgetTarget::kEq:
    case GadgetTarget::kEqExists: return rel::EQ();
    case GadgetTarget::kEqAndT:
      return Relation::from_strings("EQ_AND_T", 3, {"001", "111"});
    case GadgetTarget::kEqAndF:
      return Relation::from_strings("EQ_AND_F", 3, {"000", "110"});
  }
  throw InvalidArgument("unknown gadget target");
}

bool expressible(GadgetTarget t, const ConstraintLanguage& language) {
  const auto p = language_properties(language);
  switch (t) {
    case GadgetTarget::kNeq:
      return p.complementive && !p.zero_valid && !p.one_valid;
    case GadgetTarget::kImpl:
      return !p.complementive && p.zero_valid && p.one_valid;
    case GadgetTarget::kAndNot:
      return !p.complementive && !p.zero_valid && !p.one_valid;
    case GadgetTarget::kTConst: return p.one_valid && !p.zero_valid;
    case GadgetTarget::kFConst: return p.zero_valid && !p.one_valid;
    case GadgetTarget::kEq: return p.zero_valid && p.one_valid;
    case GadgetTarget::kEqAndT:
      return p.one_valid && !p.zero_valid && !p.positive;
    case GadgetTarget::kEqAndF:
      return p.zero_valid && !p.one_valid && !p.negative;
    case GadgetTarget::kEqExists: return !p.schaefer;
  }
  return false;
}

QuantifiedFormula express(GadgetTarget t, const ConstraintLanguage& language) {
  require(expressible(t, language), t);
  const Product p(language);
  QuantifiedFormula out;
  switch (t) {
    case GadgetTarget::kNeq: out = plain(build_neq(p)); break;
    case GadgetTarget::kImpl: out = plain(build_impl(p)); break;
    case GadgetTarget::kAndNot: out = plain(build_and_not(p, "x", "y")); break;
    case GadgetTarget::kTConst:
    case GadgetTarget::kFConst: out = plain(build_const(p, "x")); break;
    case GadgetTarget::kEq: out = plain(build_eq(p)); break;
    case GadgetTarget::kEqAndT:
      out = plain(build_eq_and_t(p, p.as_relation()));
      break;
    case GadgetTarget::kEqAndF: {
      // Dual construction on the complemented relations, then read back
      // over the originals: R'(v) holds iff R(v̄) does.
      const Product d = p.dual();
      out = plain(rebase(build_eq_and_t(d, d.as_relation()), d, p));
      break;
    }
    case GadgetTarget::kEqExists: {
      const auto props = language_properties(language);
      if (props.zero_valid && props.one_valid) {
        out = plain(build_eq(p));
      } else if (props.one_valid) {
        out = plain(build_eq_and_t(p, p.as_relation()));
        out.existential = {"z"};
      } else if (props.zero_valid) {
        const Product d = p.dual();
        out = plain(rebase(build_eq_and_t(d, d.as_relation()), d, p));
        out.existential = {"z"};
      } else if (props.complementive) {
        // N(x,z) ∧ N(z,y)
        const auto n = build_neq(p);
        out.existential = {"z"};
        append(out.body, substitute(n, {"y"}, "z").constraints);
        append(out.body, substitute(n, {"x"}, "z").constraints);
      } else {
        out = build_eq_exists_general(p);
      }
      break;
    }
  }
  check(out, t);
  return out;
}

bool verify_expresses(const QuantifiedFormula& f, const Relation& target,
                      std::uint64_t max_models) {
  const auto vars = f.variables();
  const auto free = f.free_variables();
  if (static_cast<int>(free.size()) != target.arity()) {
    throw PreconditionViolation(
        "formula has " + std::to_string(free.size()) +
        " free variables, target arity is " + std::to_string(target.arity()));
  }
  auto index = [&](const Variable& v) {
    return static_cast<std::size_t>(
        std::lower_bound(vars.begin(), vars.end(), v) - vars.begin());
  };
  std::vector<std::size_t> free_idx;
  for (const auto& v : free) free_idx.push_back(index(v));

  std::set<TupleCode> projected;
  const std::vector<GammaFormula> body{f.body};
  for (const auto& m : enumerate_models(body, vars, max_models)) {
    bool ok = std::all_of(f.equalities.begin(), f.equalities.end(),
                          [&](const auto& eq) {
                            return m[index(eq.first)] == m[index(eq.second)];
                          });
    if (!ok) continue;
    TupleCode code = 0;
    for (std::size_t i : free_idx) code = (code << 1) | (m[i] ? 1U : 0U);
    projected.insert(code);
  }
  const auto ts = target.tuples();
  return std::equal(projected.begin(), projected.end(), ts.begin(), ts.end());
}

bool verify_expresses(const GammaFormula& f, const Relation& target,
                      std::uint64_t max_models) {
  return verify_expresses(plain(f), target, max_models);
}

GammaFormula drop_quantifiers(const QuantifiedFormula& f) {
  if (!f.equalities.empty()) {
    throw PreconditionViolation("cannot drop quantifiers over equalities");
  }
  return f.body;
}

std::string to_string(const QuantifiedFormula& f) {
  std::string out;
  if (!f.existential.empty()) {
    out += "exists ";
    for (std::size_t i = 0; i < f.existential.size(); ++i) {
      if (i) out += ',';
      out += f.existential[i];
    }
    out += '\n';
  }
  out += to_string(f.body);
  for (const auto& [a, b] : f.equalities) {
    if (!out.empty() && out.back() != '\n') out += " & ";
    out += a + " = " + b;
  }
  return out;
}

}  // namespace argcl
