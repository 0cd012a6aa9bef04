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

#include "engines.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

#include "argcl/errors.hpp"

namespace argcl::detail {

namespace {

struct Lit {
  int var;
  bool positive;
};
using ClauseList = std::vector<std::vector<Lit>>;

// Prime implicates of every constraint mapped onto variable indices, plus a
// unit clause per fixed variable. Clauses made tautological by repeated
// arguments are dropped. Returns false if an empty clause arises.
bool collect_clauses(const Compiled& compiled,
                     const std::vector<std::int8_t>& fixed, bool flip,
                     ClauseList& out) {
  for (const auto& c : compiled.constraints) {
    const int k = c.relation.arity();
    for (const auto& pc : c.relation.prime_implicates()) {
      std::vector<Lit> lits;
      bool tautology = false;
      for (int i = 0; i < k && !tautology; ++i) {
        const TupleCode bit = position_bit(k, i);
        if (((pc.positive | pc.negative) & bit) == 0) continue;
        Lit lit{c.args[static_cast<std::size_t>(i)], (pc.positive & bit) != 0};
        auto same = std::find_if(lits.begin(), lits.end(),
                                 [&](const Lit& l) { return l.var == lit.var; });
        if (same == lits.end()) {
          lits.push_back(lit);
        } else if (same->positive != lit.positive) {
          tautology = true;
        }
      }
      if (tautology) continue;
      if (lits.empty()) return false;
      if (flip) {
        for (auto& l : lits) l.positive = !l.positive;
      }
      out.push_back(std::move(lits));
    }
  }
  for (std::size_t v = 0; v < fixed.size(); ++v) {
    if (fixed[v] == kFree) continue;
    out.push_back({Lit{static_cast<int>(v), (fixed[v] == 1) != flip}});
  }
  return true;
}

// Minimal-model propagation for clauses with at most one positive literal.
bool horn_sat(std::size_t n, const ClauseList& clauses) {
  std::vector<int> pending(clauses.size(), 0);
  std::vector<int> head(clauses.size(), -1);
  std::vector<std::vector<std::size_t>> watch(n);
  std::vector<char> truth(n, 0);
  std::vector<int> queue;

  auto fire = [&](std::size_t ci) {
    int h = head[ci];
    if (h < 0) return false;
    if (!truth[static_cast<std::size_t>(h)]) {
      truth[static_cast<std::size_t>(h)] = 1;
      queue.push_back(h);
    }
    return true;
  };

  for (std::size_t ci = 0; ci < clauses.size(); ++ci) {
    for (const Lit& l : clauses[ci]) {
      if (l.positive) {
        head[ci] = l.var;
      } else {
        ++pending[ci];
        watch[static_cast<std::size_t>(l.var)].push_back(ci);
      }
    }
  }
  for (std::size_t ci = 0; ci < clauses.size(); ++ci) {
    if (pending[ci] == 0 && !fire(ci)) return false;
  }
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    for (std::size_t ci : watch[static_cast<std::size_t>(v)]) {
      if (--pending[ci] == 0 && !fire(ci)) return false;
    }
  }
  return true;
}

// Implication graph on 2n literal nodes; unsatisfiable iff some x and ¬x
// share a strongly connected component.
bool two_sat(std::size_t n, const ClauseList& clauses) {
  const std::size_t nodes = 2 * n;
  auto node = [](const Lit& l) {
    return 2 * static_cast<std::size_t>(l.var) + (l.positive ? 0 : 1);
  };
  std::vector<std::vector<std::size_t>> graph(nodes);
  for (const auto& cl : clauses) {
    if (cl.size() == 1) {
      std::size_t a = node(cl[0]);
      graph[a ^ 1].push_back(a);
    } else {
      std::size_t a = node(cl[0]);
      std::size_t b = node(cl[1]);
      graph[a ^ 1].push_back(b);
      graph[b ^ 1].push_back(a);
    }
  }

  // Iterative Tarjan.
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(nodes, kUnvisited), low(nodes, 0),
      comp(nodes, kUnvisited);
  std::vector<char> on_stack(nodes, 0);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> call;
  std::size_t counter = 0;
  std::size_t components = 0;
  for (std::size_t root = 0; root < nodes; ++root) {
    if (index[root] != kUnvisited) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, edge] = call.back();
      if (edge < graph[v].size()) {
        std::size_t w = graph[v][edge++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      std::size_t done = v;
      call.pop_back();
      if (!call.empty()) {
        std::size_t parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = components;
        } while (w != done);
        ++components;
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (comp[2 * v] == comp[2 * v + 1]) return false;
  }
  return true;
}

// Incremental elimination over GF(2); a row is n bits plus the right-hand
// side in the last word's spare position.
class Gf2System {
 public:
  explicit Gf2System(std::size_t n)
      : n_(n), words_((n + 1 + 63) / 64), pivot_of_(n, -1) {}

  // Adds sum_{v in vars} x_v = rhs; returns false on inconsistency.
  bool add(std::vector<std::uint64_t> row) {
    for (;;) {
      std::size_t col = first_bit(row);
      if (col >= n_) return !get(row, n_);
      int p = pivot_of_[col];
      if (p < 0) {
        pivot_of_[col] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(row));
        return true;
      }
      const auto& pr = rows_[static_cast<std::size_t>(p)];
      for (std::size_t w = 0; w < words_; ++w) row[w] ^= pr[w];
    }
  }

  std::vector<std::uint64_t> blank() const {
    return std::vector<std::uint64_t>(words_, 0);
  }
  static void flip(std::vector<std::uint64_t>& row, std::size_t bit) {
    row[bit / 64] ^= std::uint64_t{1} << (bit % 64);
  }
  std::size_t rhs_bit() const { return n_; }

 private:
  static bool get(const std::vector<std::uint64_t>& row, std::size_t bit) {
    return (row[bit / 64] >> (bit % 64)) & 1U;
  }
  std::size_t first_bit(const std::vector<std::uint64_t>& row) const {
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t word = row[w];
      if (w + 1 == words_) {
        // Mask out the rhs bit.
        word &= ~(std::uint64_t{1} << (n_ % 64));
      }
      if (word != 0) {
        return w * 64 + static_cast<std::size_t>(std::countr_zero(word));
      }
    }
    return n_;
  }

  std::size_t n_;
  std::size_t words_;
  std::vector<int> pivot_of_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

bool gaussian_sat(const Compiled& compiled,
                  const std::vector<std::int8_t>& fixed) {
  const std::size_t n = compiled.vars.size();
  Gf2System sys(n);
  for (const auto& c : compiled.constraints) {
    const int k = c.relation.arity();
    const auto& eqs = c.relation.affine_equations();
    if (eqs.empty()) {
      throw InternalError("gaussian engine on non-affine relation " +
                          c.relation.name());
    }
    for (const auto& eq : eqs) {
      auto row = sys.blank();
      for (int i = 0; i < k; ++i) {
        if (eq.mask & position_bit(k, i)) {
          Gf2System::flip(row, static_cast<std::size_t>(c.args[static_cast<std::size_t>(i)]));
        }
      }
      if (eq.rhs) Gf2System::flip(row, sys.rhs_bit());
      if (!sys.add(std::move(row))) return false;
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (fixed[v] == kFree) continue;
    auto row = sys.blank();
    Gf2System::flip(row, v);
    if (fixed[v] == 1) Gf2System::flip(row, sys.rhs_bit());
    if (!sys.add(std::move(row))) return false;
  }
  return true;
}

}  // namespace

void check_budget(std::size_t free_vars, std::uint64_t max_models) {
  if (free_vars >= 63 || (std::uint64_t{1} << free_vars) > max_models) {
    throw BudgetExceeded("model budget exceeded: 2^" +
                         std::to_string(free_vars) + " assignments > " +
                         std::to_string(max_models));
  }
}

SatEngine pick_engine(const Compiled& compiled, bool with_units,
                      Engine engine) {
  if (engine == Engine::kGeneric) return SatEngine::kBacktracking;
  if (compiled.constraints.empty()) return SatEngine::kTrivial;
  bool zero = true, one = true, horn = true, dual = true, bij = true,
       aff = true;
  for (const auto& c : compiled.constraints) {
    const auto& p = c.relation.properties();
    zero = zero && p.zero_valid;
    one = one && p.one_valid;
    horn = horn && p.horn;
    dual = dual && p.dual_horn;
    bij = bij && p.bijunctive;
    aff = aff && p.affine;
  }
  if (!with_units && (zero || one)) return SatEngine::kConstant;
  if (horn) return SatEngine::kHorn;
  if (dual) return SatEngine::kDualHorn;
  if (bij) return SatEngine::kTwoSat;
  if (aff) return SatEngine::kGaussian;
  return SatEngine::kBacktracking;
}

bool solve_sat(const Compiled& compiled, const std::vector<std::int8_t>& fixed,
               SatEngine engine, std::uint64_t max_models) {
  const std::size_t n = compiled.vars.size();
  switch (engine) {
    case SatEngine::kTrivial:
    case SatEngine::kConstant:
      return true;
    case SatEngine::kHorn:
    case SatEngine::kDualHorn: {
      ClauseList clauses;
      if (!collect_clauses(compiled, fixed, engine == SatEngine::kDualHorn,
                           clauses)) {
        return false;
      }
      return horn_sat(n, clauses);
    }
    case SatEngine::kTwoSat: {
      ClauseList clauses;
      if (!collect_clauses(compiled, fixed, false, clauses)) return false;
      return two_sat(n, clauses);
    }
    case SatEngine::kGaussian:
      return gaussian_sat(compiled, fixed);
    case SatEngine::kBacktracking: {
      std::size_t free_vars = static_cast<std::size_t>(
          std::count(fixed.begin(), fixed.end(), kFree));
      check_budget(free_vars, max_models);
      bool found = false;
      for_each_model(compiled, fixed, [&](const std::vector<std::int8_t>&) {
        found = true;
        return false;
      });
      return found;
    }
  }
  throw InternalError("unknown engine");
}

}  // namespace argcl::detail
