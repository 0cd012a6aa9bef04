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

#ifndef ARGCL_RELATION_HPP_
#define ARGCL_RELATION_HPP_

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace argcl {

inline constexpr int kMaxArity = 16;

// A k-bit assignment to x_1..x_k. x_1 is the most significant bit, so the
// numeric order of codes is the lexicographic order of their tuple strings.
using TupleCode = std::uint32_t;

// Bit of TupleCode holding variable x_{position+1}.
constexpr TupleCode position_bit(int arity, int position) {
  return TupleCode{1} << (arity - 1 - position);
}

// "0110" style rendering, most significant variable first.
std::string tuple_string(TupleCode code, int arity);

// Algebraic flags of a relation or a constraint language.
struct PropertyReport {
  bool horn = false;
  bool dual_horn = false;
  bool bijunctive = false;
  bool affine = false;
  bool zero_valid = false;
  bool one_valid = false;
  bool eps_valid = false;
  bool complementive = false;
  bool positive = false;
  bool negative = false;
  bool in_is0 = false;
  bool in_is1 = false;
  bool schaefer = false;

  friend bool operator==(const PropertyReport&, const PropertyReport&) = default;
};

// Clause over the argument positions of a relation. Bits follow the
// TupleCode layout; a tuple m falsifies the clause iff
// (m & positive) == 0 and (m & negative) == negative.
struct PositionalClause {
  TupleCode positive = 0;
  TupleCode negative = 0;

  int width() const;
  bool falsified_by(TupleCode m) const {
    return (m & positive) == 0 && (m & negative) == negative;
  }
  friend auto operator<=>(const PositionalClause&,
                          const PositionalClause&) = default;
};

// Affine equation sum_{i in mask} x_i = rhs over GF(2).
struct PositionalEquation {
  TupleCode mask = 0;
  bool rhs = false;
};

// Extensional nontrivial Boolean relation. Immutable; copies share storage.
class Relation {
 public:
  // Throws InvalidArgument unless 1 <= arity <= kMaxArity, every code fits
  // the arity, and the tuple set is neither empty nor full.
  Relation(std::string name, int arity, std::span<const TupleCode> tuples);

  // Tuples given as '0'/'1' strings of length `arity`.
  static Relation from_strings(std::string name, int arity,
                               const std::vector<std::string>& tuples);

  template <typename Pred>
  static Relation from_predicate(std::string name, int arity, Pred&& pred) {
    std::vector<TupleCode> codes;
    for (TupleCode m = 0; m < (TupleCode{1} << arity); ++m) {
      if (pred(m)) codes.push_back(m);
    }
    return Relation(std::move(name), arity, codes);
  }

  const std::string& name() const;
  int arity() const;
  TupleCode full() const { return (TupleCode{1} << arity()) - 1; }
  bool contains(TupleCode m) const;
  std::size_t size() const;
  // Ascending (canonical) order.
  std::vector<TupleCode> tuples() const;

  Relation renamed(std::string name) const;
  // {m̄ : m ∈ R}, the coordinate-wise complement.
  Relation flipped(std::string name) const;

  // Cached derived data; computed once per relation, thread-safe.
  const PropertyReport& properties() const;
  const std::vector<PositionalClause>& prime_implicates() const;
  // Linear system whose solution set is exactly R. Empty iff R is not
  // affine (a nontrivial affine relation needs at least one equation).
  const std::vector<PositionalEquation>& affine_equations() const;

  friend bool operator==(const Relation& a, const Relation& b);

 private:
  struct Data;
  explicit Relation(std::shared_ptr<const Data> data);
  std::shared_ptr<const Data> data_;
};

std::ostream& operator<<(std::ostream& os, const Relation& r);

// Finite set of relations with unique names, in declaration order.
class ConstraintLanguage {
 public:
  ConstraintLanguage() = default;
  explicit ConstraintLanguage(std::vector<Relation> relations);

  // Throws InvalidArgument on a duplicate name with different content;
  // re-adding an identical relation is a no-op.
  void add(const Relation& r);
  const Relation* find(std::string_view name) const;
  const std::vector<Relation>& relations() const { return relations_; }
  bool empty() const { return relations_.empty(); }
  std::size_t size() const { return relations_.size(); }

  friend bool operator==(const ConstraintLanguage&,
                         const ConstraintLanguage&) = default;

 private:
  std::vector<Relation> relations_;
};

PropertyReport relation_properties(const Relation& r);
// Conjunction of the per-relation flags; eps_valid and schaefer re-derived.
// Throws InvalidArgument on an empty language.
PropertyReport language_properties(const ConstraintLanguage& language);
PropertyReport language_properties(std::span<const Relation> relations);

// Relation file: one `relation <NAME> <arity> { <tuple> ... }` per line,
// `#` comments.
ConstraintLanguage parse_relations(std::string_view text);
ConstraintLanguage load_relations(const std::string& path);
std::string serialize_relations(const ConstraintLanguage& language);

bool is_identifier(std::string_view s);

// Frequently used relations under their conventional names.
namespace rel {
Relation T();             // {1}
Relation F();             // {0}
Relation NEQ();           // x != y
Relation EQ();            // x = y
Relation IMPL();          // x -> y
Relation OR2();           // x v y
Relation OR3();           // x v y v z
Relation AND_NOT();       // x & !y
Relation NAE3();          // not-all-equal
Relation ONE_IN_THREE();  // exactly one of three
}  // namespace rel

}  // namespace argcl

#endif  // ARGCL_RELATION_HPP_
