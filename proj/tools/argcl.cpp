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

// argcl: command-line front end.
//
// Exit status: 0 YES / success, 1 NO, 2 usage, parse or precondition error,
// 3 budget exceeded.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "argcl/argumentation.hpp"
#include "argcl/errors.hpp"
#include "argcl/expressibility.hpp"
#include "argcl/instance.hpp"
#include "argcl/logic.hpp"
#include "argcl/reductions.hpp"
#include "argcl/relation.hpp"

namespace {

using namespace argcl;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

int answer(bool yes) {
  std::cout << (yes ? "YES" : "NO") << '\n';
  return yes ? kYes : kNo;
}

std::string support_names(const Support& s, const ArgInstance& inst) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.indices.size(); ++i) {
    if (i) out += ',';
    std::size_t k = s.indices[i];
    out += k < inst.names.size() ? inst.names[k] : std::to_string(k);
  }
  return out + "}";
}

void print_flags(const PropertyReport& p) {
  const std::pair<const char*, bool> flags[] = {
      {"horn", p.horn},           {"dual_horn", p.dual_horn},
      {"bijunctive", p.bijunctive}, {"affine", p.affine},
      {"zero_valid", p.zero_valid}, {"one_valid", p.one_valid},
      {"eps_valid", p.eps_valid},   {"complementive", p.complementive},
      {"positive", p.positive},     {"negative", p.negative},
      {"in_is0", p.in_is0},         {"in_is1", p.in_is1},
      {"schaefer", p.schaefer}};
  for (const auto& [name, value] : flags) {
    std::cout << "  " << name << ": " << (value ? "true" : "false") << '\n';
  }
}

int cmd_props(const std::string& path) {
  const auto lang = load_relations(path);
  for (const auto& r : lang.relations()) {
    std::cout << r.name() << ":\n";
    print_flags(r.properties());
  }
  std::cout << "language:\n";
  print_flags(language_properties(lang));
  return kYes;
}

int cmd_classify(const std::string& path) {
  const auto report = classify_complexity(load_relations(path));
  std::cout << "ARG: " << to_string(report.arg) << '\n'
            << "ARGCHECK: " << to_string(report.argcheck) << '\n'
            << "ARGREL: " << to_string(report.argrel) << '\n';
  return kYes;
}

int cmd_solve(const std::string& problem, const std::string& path,
              const SolverOptions& opts) {
  const auto inst = load_instance(path);
  if (problem == "sat") return answer(is_consistent(inst.delta, opts));
  if (problem == "imp") return answer(entails(inst.delta, inst.alpha, opts));
  if (problem == "arg") return answer(arg_exists(inst.delta, inst.alpha, opts));
  if (problem == "check") return answer(argcheck(inst.delta, inst.alpha, opts));
  if (!inst.relevant) throw InvalidArgument("instance has no 'relevant' line");
  return answer(argrel(inst.delta, inst.alpha, *inst.relevant, opts));
}

int cmd_supports(const std::string& path, bool all, const SolverOptions& opts) {
  const auto inst = load_instance(path);
  std::vector<Support> found;
  if (all) {
    found = enumerate_minimal_supports(inst.delta, inst.alpha, opts);
  } else if (auto s = find_minimal_support(inst.delta, inst.alpha, opts)) {
    found.push_back(*s);
  }
  for (const auto& s : found) std::cout << support_names(s, inst) << '\n';
  if (found.empty()) std::cout << "none\n";
  return found.empty() ? kNo : kYes;
}

int cmd_express(const std::string& target_name, const std::string& path,
                const SolverOptions& opts) {
  auto target = parse_gadget_target(target_name);
  if (!target) throw InvalidArgument("unknown gadget target '" + target_name + "'");
  const auto f = express(*target, load_relations(path));
  std::cout << to_string(f) << '\n'
            << "verified: "
            << (verify_expresses(f, target_relation(*target), opts.max_models) ? "true"
                                                                                : "false")
            << '\n';
  return kYes;
}

Source load_source(SourceProblem p, const std::string& path) {
  switch (p) {
    case SourceProblem::kThreeSat:
    case SourceProblem::kPos1In3:
    case SourceProblem::kCriticalSat: return load_dimacs(path);
    case SourceProblem::kAbd:
    case SourceProblem::kAbdP: return load_abduction(path);
    case SourceProblem::kArg:
    case SourceProblem::kArgCheck: return load_instance(path);
  }
  throw InvalidArgument("unknown source problem");
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out || !(out << text)) throw InvalidArgument("cannot write " + path);
}

int cmd_reduce(const std::string& kind_name, const std::string& path,
               const std::string& prefix) {
  auto kind = parse_reduction_kind(kind_name);
  if (!kind) throw InvalidArgument("unknown reduction kind '" + kind_name + "'");
  const auto reduced = reduce(*kind, load_source(source_problem(*kind), path));
  const std::string rel_path = prefix + ".rel";
  const std::string arg_path = prefix + ".arg";
  const auto rel_name = std::filesystem::path(rel_path).filename().string();
  write_file(rel_path, serialize_relations(reduced.instance.language));
  write_file(arg_path, serialize_instance(reduced.instance, rel_name));
  std::cout << "target: " << to_string(reduced.target) << '\n'
            << "relations: " << rel_path << '\n'
            << "instance: " << arg_path << '\n';
  return kYes;
}

int cmd_oracle(const std::string& problem_name, const std::string& path,
               const SolverOptions& opts) {
  auto problem = parse_source_problem(problem_name);
  if (!problem) throw InvalidArgument("unknown problem '" + problem_name + "'");
  return answer(solve_source(*problem, load_source(*problem, path), opts));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Argumentation problems over Boolean constraint languages"};
  app.require_subcommand(1);
  app.fallthrough();

  SolverOptions opts;
  std::string engine = "auto";
  app.add_option("--max-models", opts.max_models, "Model enumeration budget")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-kb", opts.max_kb, "Largest knowledge base searched by subsets");
  app.add_option("--engine", engine, "Solver engine")
      ->check(CLI::IsMember({"auto", "generic"}));

  std::string file, problem, target, kind, prefix = "reduced";
  bool all = false;

  auto* props = app.add_subcommand("props", "Print structural flags of a relation file");
  props->add_option("relfile", file)->required();
  auto* classify = app.add_subcommand("classify", "Print the complexity of ARG, ARGCHECK, ARGREL");
  classify->add_option("relfile", file)->required();
  auto* solve = app.add_subcommand("solve", "Decide a problem on an instance file");
  solve->add_option("problem", problem)
      ->required()
      ->check(CLI::IsMember({"sat", "imp", "arg", "check", "rel"}));
  solve->add_option("instfile", file)->required();
  auto* supports = app.add_subcommand("supports", "Print a minimal support");
  supports->add_flag("--all", all, "Print every minimal support");
  supports->add_option("instfile", file)->required();
  auto* expr = app.add_subcommand("express", "Build a gadget over a language");
  expr->add_option("target", target)->required();
  expr->add_option("relfile", file)->required();
  auto* red = app.add_subcommand("reduce", "Write the reduced instance of a source");
  red->add_option("kind", kind)->required();
  red->add_option("srcfile", file)->required();
  red->add_option("-o,--output", prefix, "Output path prefix (.rel and .arg appended)");
  auto* oracle = app.add_subcommand("oracle", "Decide a source problem by brute force");
  oracle->add_option("problem", problem)->required();
  oracle->add_option("srcfile", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }
  opts.engine = engine == "generic" ? Engine::kGeneric : Engine::kAuto;

  try {
    if (*props) return cmd_props(file);
    if (*classify) return cmd_classify(file);
    if (*solve) return cmd_solve(problem, file, opts);
    if (*supports) return cmd_supports(file, all, opts);
    if (*expr) return cmd_express(target, file, opts);
    if (*red) return cmd_reduce(kind, file, prefix);
    if (*oracle) return cmd_oracle(problem, file, opts);
  } catch (const BudgetExceeded& e) {
    std::cerr << "argcl: budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "argcl: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
