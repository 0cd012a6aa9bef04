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

#ifndef ARGCL_INSTANCE_HPP_
#define ARGCL_INSTANCE_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "argcl/formula.hpp"
#include "argcl/relation.hpp"

namespace argcl {

// Knowledge base Δ, claim α and optionally the index of a distinguished
// ψ ∈ Δ. For verification problems Δ plays the role of the support Φ.
struct ArgInstance {
  ConstraintLanguage language;
  std::vector<GammaFormula> delta;
  GammaFormula alpha;
  std::optional<std::size_t> relevant;
  // Display labels for delta, parallel to it when non-empty. Not part of
  // the instance's identity.
  std::vector<std::string> names;

  // Throws InvalidArgument if a constraint uses a relation outside
  // `language`, alpha is empty, or `relevant` is out of range.
  void validate() const;

  friend bool operator==(const ArgInstance& a, const ArgInstance& b) {
    return a.language == b.language && a.delta == b.delta &&
           a.alpha == b.alpha && a.relevant == b.relevant;
  }
};

// Line-level contents of an instance or abduction file, before the
// keyword set is checked by a particular consumer.
struct InstanceDocument {
  struct Named {
    std::string name;
    GammaFormula formula;
    std::size_t line = 0;
  };
  ConstraintLanguage language;
  std::vector<Named> formulas;
  std::vector<std::pair<std::string, std::size_t>> kb;  // name, line
  std::optional<GammaFormula> claim;
  std::optional<std::pair<std::string, std::size_t>> relevant;
  std::optional<std::vector<Variable>> hypotheses;
  std::optional<Variable> observation;

  // Index into `formulas`, or nullopt.
  std::optional<std::size_t> find(std::string_view name) const;
};

// Maps the argument of a `use` line to the relations it declares.
using RelationResolver = std::function<ConstraintLanguage(const std::string&)>;

InstanceDocument parse_document(std::string_view text,
                                const RelationResolver& resolve);

// Instance grammar:
//   use <relation-file-path>
//   formula <name> = <REL>(<v>,...) & ...
//   kb <name> <name> ...
//   claim <REL>(...) & ...
//   relevant <name>
// `#` starts a comment. Errors carry line numbers.
ArgInstance parse_instance(std::string_view text, const RelationResolver& resolve);
// Reads a file; `use` paths are resolved relative to its directory.
ArgInstance load_instance(const std::string& path);
// Resolver that loads relation files relative to `base_dir`.
RelationResolver file_resolver(std::string base_dir);

std::string serialize_instance(const ArgInstance& instance,
                               const std::string& relation_path);

}  // namespace argcl

#endif  // ARGCL_INSTANCE_HPP_
