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

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "argcl/argumentation.hpp"
#include "argcl/expressibility.hpp"
#include "argcl/logic.hpp"

using namespace argcl;

namespace {

std::vector<GammaFormula> random_formulas(std::vector<Relation> lang, int count, int vars,
                                          unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<GammaFormula> out;
  for (int i = 0; i < count; ++i) {
    const Relation& r = lang[rng() % lang.size()];
    std::vector<Variable> args;
    for (int j = 0; j < r.arity(); ++j) args.push_back("v" + std::to_string(rng() % vars));
    out.push_back(GammaFormula{Constraint(r, args)});
  }
  return out;
}

void run_sat(benchmark::State& state, std::vector<Relation> lang) {
  const int n = static_cast<int>(state.range(0));
  auto fs = random_formulas(std::move(lang), 2 * n, n, 1);
  state.SetLabel(std::string(to_string(select_sat_engine(fs, false))));
  for (auto _ : state) benchmark::DoNotOptimize(is_consistent(fs));
}

void BM_SatHorn(benchmark::State& s) {
  run_sat(s, {rel::IMPL(), rel::T(), Relation::from_strings("NAND", 2, {"00", "01", "10"})});
}
void BM_SatTwoSat(benchmark::State& s) { run_sat(s, {rel::NEQ(), rel::OR2()}); }
void BM_SatGaussian(benchmark::State& s) {
  run_sat(s, {rel::NEQ(), Relation::from_strings("X3", 3, {"000", "011", "101", "110"}),
              rel::T()});
}
void BM_SatBacktracking(benchmark::State& s) { run_sat(s, {rel::NAE3(), rel::ONE_IN_THREE()}); }

BENCHMARK(BM_SatHorn)->RangeMultiplier(4)->Range(16, 1024);
BENCHMARK(BM_SatTwoSat)->RangeMultiplier(4)->Range(16, 1024);
BENCHMARK(BM_SatGaussian)->RangeMultiplier(4)->Range(16, 256);
BENCHMARK(BM_SatBacktracking)->DenseRange(8, 20, 4);

void BM_ArgRelPositive(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  auto delta = random_formulas({rel::T(), rel::OR2(), rel::OR3()}, k, k, 2);
  auto alpha = random_formulas({rel::OR2(), rel::OR3()}, 1, k, 3).front();
  for (auto _ : state) benchmark::DoNotOptimize(argrel_positive(delta, alpha, 0));
}
BENCHMARK(BM_ArgRelPositive)->RangeMultiplier(2)->Range(8, 128);

void BM_ArgExistsGeneric(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  auto delta = random_formulas({rel::NAE3()}, k, 6, 4);
  auto alpha = random_formulas({rel::NAE3()}, 1, 6, 5).front();
  const SolverOptions opts{Engine::kGeneric};
  for (auto _ : state) benchmark::DoNotOptimize(arg_exists(delta, alpha, opts));
}
BENCHMARK(BM_ArgExistsGeneric)->DenseRange(4, 12, 4);

void BM_ExpressEqExists(benchmark::State& state) {
  const ConstraintLanguage lang({rel::ONE_IN_THREE()});
  for (auto _ : state) benchmark::DoNotOptimize(express(GadgetTarget::kEqExists, lang));
}
BENCHMARK(BM_ExpressEqExists);

}  // namespace

BENCHMARK_MAIN();
