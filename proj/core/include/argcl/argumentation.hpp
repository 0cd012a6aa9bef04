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

#ifndef ARGCL_ARGUMENTATION_HPP_
#define ARGCL_ARGUMENTATION_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "argcl/formula.hpp"
#include "argcl/logic.hpp"
#include "argcl/relation.hpp"

namespace argcl {

// Subset of a knowledge base, as ascending indices into it.
struct Support {
  std::vector<std::size_t> indices;

  bool contains(std::size_t i) const;
  friend bool operator==(const Support&, const Support&) = default;
};

// "{0,2}"
std::string to_string(const Support& s);

enum class ComplexityClass { kP, kNPComplete, kCoNPComplete, kDPComplete, kSigmaP2Complete };

std::string_view to_string(ComplexityClass c);

struct ComplexityReport {
  ComplexityClass arg;
  ComplexityClass argcheck;
  ComplexityClass argrel;
  friend bool operator==(const ComplexityReport&, const ComplexityReport&) = default;
};

// Φ is consistent, entails α, and no Φ minus one element entails α.
bool argcheck(std::span<const GammaFormula> phi, const GammaFormula& alpha,
              const SolverOptions& options = {});

// Some consistent subset of Δ entails α.
bool arg_exists(std::span<const GammaFormula> delta, const GammaFormula& alpha,
                const SolverOptions& options = {});

// A support passing argcheck, or nullopt iff arg_exists is false.
std::optional<Support> find_minimal_support(std::span<const GammaFormula> delta,
                                            const GammaFormula& alpha,
                                            const SolverOptions& options = {});

// All ⊆-minimal consistent entailing subsets, by cardinality then
// lexicographically. Throws BudgetExceeded when |Δ| > options.max_kb.
std::vector<Support> enumerate_minimal_supports(std::span<const GammaFormula> delta,
                                                const GammaFormula& alpha,
                                                const SolverOptions& options = {});

// Δ[psi] belongs to some minimal support.
bool argrel(std::span<const GammaFormula> delta, const GammaFormula& alpha,
            std::size_t psi, const SolverOptions& options = {});

// Clause-splitting decision for positive languages. Throws
// PreconditionViolation when a relation in Δ or α is not positive.
bool argrel_positive(std::span<const GammaFormula> delta,
                     const GammaFormula& alpha, std::size_t psi,
                     const SolverOptions& options = {});

ComplexityReport classify_complexity(const ConstraintLanguage& language);

}  // namespace argcl

#endif  // ARGCL_ARGUMENTATION_HPP_
