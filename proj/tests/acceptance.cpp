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

// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "argcl/argumentation.hpp"
#include "argcl/errors.hpp"
#include "argcl/expressibility.hpp"
#include "argcl/logic.hpp"
#include "argcl/reductions.hpp"
#include "oracles.hpp"

using namespace argcl;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool report(int id, const char* title, double limit_s, const std::function<Outcome()>& run) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = run();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double t = seconds_since(start);
  const bool pass = out.ok && (limit_s <= 0 || t < limit_s);
  std::printf("criterion %d %s: %s (%s; %.2fs", id, title, pass ? "PASS" : "FAIL",
              out.detail.c_str(), t);
  if (limit_s > 0) std::printf(" < %.0fs", limit_s);
  std::printf(")\n");
  std::fflush(stdout);
  return pass;
}

const SolverOptions kGeneric{Engine::kGeneric};

Outcome catalog() {
  using CC = ComplexityClass;
  auto of = [](std::vector<Relation> rs) { return classify_complexity(ConstraintLanguage(rs)); };
  const auto r_prime = Relation::from_strings("RP", 3, {"011", "100", "111"});
  struct Check {
    const char* what;
    CC got, want;
  };
  const Check checks[] = {
      {"OR2 argrel", of({rel::OR2()}).argrel, CC::kP},
      {"R' argrel", of({r_prime}).argrel, CC::kNPComplete},
      {"NEQ arg", of({rel::NEQ()}).arg, CC::kNPComplete},
      {"NEQ argcheck", of({rel::NEQ()}).argcheck, CC::kP},
      {"IMPL arg", of({rel::IMPL()}).arg, CC::kP},
      {"IMPL argrel", of({rel::IMPL()}).argrel, CC::kNPComplete},
      {"NAE3 arg", of({rel::NAE3()}).arg, CC::kSigmaP2Complete},
      {"NAE3 argcheck", of({rel::NAE3()}).argcheck, CC::kDPComplete},
      {"NAE3 argrel", of({rel::NAE3()}).argrel, CC::kSigmaP2Complete},
      {"1-in-3 arg", of({rel::ONE_IN_THREE()}).arg, CC::kSigmaP2Complete},
      {"1-in-3 argcheck", of({rel::ONE_IN_THREE()}).argcheck, CC::kDPComplete},
      {"1-in-3 argrel", of({rel::ONE_IN_THREE()}).argrel, CC::kSigmaP2Complete},
  };
  Outcome out{true, ""};
  int wrong = 0;
  for (const auto& c : checks) {
    if (c.got != c.want) {
      ++wrong;
      out.ok = false;
      out.detail += std::string(c.what) + "=" + std::string(to_string(c.got)) + " ";
    }
  }
  out.detail += std::to_string(std::size(checks) - wrong) + "/" + std::to_string(std::size(checks)) +
                " entries match";
  return out;
}

Outcome oracle_equivalence() {
  std::mt19937 rng(2024);
  int mismatches = 0, n = 0;
  for (; n < 1200; ++n) {
    std::vector<Relation> lang;
    const int k = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < k; ++i) {
      lang.push_back(oracle::random_relation(rng, "R" + std::to_string(i), 1 + static_cast<int>(rng() % 3)));
    }
    auto inst = oracle::random_instance(rng, lang, 6, 6);
    mismatches += arg_exists(inst.delta, inst.alpha) != arg_exists(inst.delta, inst.alpha, kGeneric);
    mismatches += argcheck(inst.delta, inst.alpha) != argcheck(inst.delta, inst.alpha, kGeneric);
    mismatches += argrel(inst.delta, inst.alpha, inst.psi) !=
                  argrel(inst.delta, inst.alpha, inst.psi, kGeneric);
  }
  return {mismatches == 0, std::to_string(n) + " instances, " + std::to_string(mismatches) + " mismatches"};
}

Outcome algorithm1() {
  const std::vector<Relation> positive{rel::T(), rel::OR2(), rel::OR3()};
  std::mt19937 rng(77);
  int mismatches = 0, n = 0;
  for (; n < 600; ++n) {
    auto inst = oracle::random_instance(rng, positive, 6, 6);
    mismatches += argrel_positive(inst.delta, inst.alpha, inst.psi) !=
                  oracle::argrel(inst.delta, inst.alpha, inst.psi);
  }
  // Large instance: 40 formulas over 30 variables.
  std::vector<GammaFormula> delta;
  for (int i = 0; i < 40; ++i) delta.push_back(oracle::random_formula(rng, positive, 30, 3));
  GammaFormula alpha = oracle::random_formula(rng, positive, 30, 2);
  const auto start = Clock::now();
  bool answers[2];
  answers[0] = argrel_positive(delta, alpha, 0);
  answers[1] = argrel(delta, alpha, 0);
  const double t = seconds_since(start);
  const bool fast = t < 1.0 && answers[0] == answers[1];
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3fs", t);
  return {mismatches == 0 && fast,
          std::to_string(n) + " instances, " + std::to_string(mismatches) +
              " mismatches; |delta|=40 over 30 variables answered " +
              (answers[0] ? "YES" : "NO") + " in " + buf};
}

Outcome gadgets() {
  const GadgetTarget targets[] = {
      GadgetTarget::kNeq,    GadgetTarget::kImpl, GadgetTarget::kAndNot,
      GadgetTarget::kTConst, GadgetTarget::kFConst, GadgetTarget::kEq,
      GadgetTarget::kEqAndT, GadgetTarget::kEqAndF, GadgetTarget::kEqExists};
  int relations = 0, arity3 = 0, built = 0, failures = 0;
  for (int arity = 1; arity <= 3; ++arity) {
    const std::uint32_t size = 1U << arity;
    for (std::uint32_t mask = 1; mask + 1 < (1U << size); ++mask) {
      ++relations;
      arity3 += arity == 3;
      const ConstraintLanguage lang(
          {Relation::from_predicate("R", arity, [mask](TupleCode m) { return mask >> m & 1U; })});
      for (auto t : targets) {
        if (!expressible(t, lang)) continue;
        ++built;
        try {
          failures += !verify_expresses(express(t, lang), target_relation(t));
        } catch (const Error&) {
          ++failures;
        }
      }
    }
  }
  return {arity3 == 254 && failures == 0,
          std::to_string(relations) + " relations (" + std::to_string(arity3) + " of arity 3), " + std::to_string(built) + " gadgets, " +
              std::to_string(failures) + " failures"};
}

Outcome sweep() {
  int instances = 0, mismatches = 0;
  std::string bad;
  for (auto kind : all_reduction_kinds()) {
    for (const auto& source : sweep_family(kind)) {
      ++instances;
      if (solve_target(reduce(kind, source)) != solve_source(source_problem(kind), source)) {
        if (!mismatches++) bad = std::string(to_string(kind)) + " ";
      }
    }
  }
  return {mismatches == 0 && instances > 0, bad + std::to_string(all_reduction_kinds().size()) +
                                                " kinds, " + std::to_string(instances) +
                                                " instances, " + std::to_string(mismatches) +
                                                " mismatches"};
}

Outcome eps_valid() {
  const std::vector<std::vector<Relation>> langs = {
      {rel::IMPL(), rel::OR2()},
      {Relation::from_strings("NOR", 2, {"00", "01", "10"}), rel::F()},
      {Relation::from_strings("M", 3, {"001", "010", "111"}), rel::T()},
      {rel::OR3(), rel::IMPL()},
  };
  std::mt19937 rng(99);
  int mismatches = 0, n = 0;
  for (; n < 200; ++n) {
    auto inst = oracle::random_instance(rng, langs[n % langs.size()], 6, 6);
    if (!language_properties(ConstraintLanguage(inst.language)).eps_valid) return {false, "bad language"};
    mismatches += arg_exists(inst.delta, inst.alpha) != entails(inst.delta, inst.alpha);
  }
  return {mismatches == 0, std::to_string(n) + " instances, " + std::to_string(mismatches) + " mismatches"};
}

Outcome positive_non_entailment() {
  const std::vector<Relation> positive{rel::T(), rel::OR2(), rel::OR3()};
  std::mt19937 rng(123);
  int violations = 0, premises_hold = 0, n = 0;
  for (; n < 500; ++n) {
    auto a = oracle::random_formula(rng, positive, 5, 3);
    auto b = oracle::random_formula(rng, positive, 5, 3);
    Clause gamma;
    for (int v = 0; v < 5; ++v) {
      if (rng() % 3 == 0) gamma.push_back({"v" + std::to_string(v), true});
    }
    if (gamma.empty()) gamma.push_back({"v" + std::to_string(rng() % 5), true});
    std::vector<GammaFormula> fa{a}, fb{b}, fab{a, b};
    if (!entails(fa, gamma) && !entails(fb, gamma)) {
      ++premises_hold;
      violations += entails(fab, gamma);
    }
  }
  return {violations == 0, std::to_string(n) + " triples, " + std::to_string(premises_hold) +
                               " with both premises, " + std::to_string(violations) + " violations"};
}

}  // namespace

int main() {
  bool all = true;
  all &= report(1, "classification catalog", 1, catalog);
  all &= report(2, "oracle equivalence", 60, oracle_equivalence);
  all &= report(3, "positive relevance algorithm", 0, algorithm1);
  all &= report(4, "gadget verification", 120, gadgets);
  all &= report(5, "reduction soundness sweep", 120, sweep);
  all &= report(6, "eps-valid shortcut", 0, eps_valid);
  all &= report(7, "positive clause non-entailment", 0, positive_non_entailment);
  std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
