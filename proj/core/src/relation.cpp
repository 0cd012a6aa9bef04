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

#include "argcl/relation.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>

#include "argcl/errors.hpp"
#include "detail.hpp"

namespace argcl {

struct Relation::Data {
  std::string name;
  int arity = 0;
  std::vector<std::uint64_t> mask;
  std::size_t count = 0;

  mutable std::once_flag props_once;
  mutable PropertyReport props;
  mutable std::once_flag cnf_once;
  mutable std::vector<PositionalClause> cnf;
  mutable std::once_flag affine_once;
  mutable std::vector<PositionalEquation> affine;

  bool test(TupleCode m) const { return (mask[m >> 6] >> (m & 63)) & 1U; }
};

std::string tuple_string(TupleCode code, int arity) {
  std::string s(static_cast<std::size_t>(arity), '0');
  for (int i = 0; i < arity; ++i) {
    if (code & position_bit(arity, i)) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s.front());
  if (!std::isalpha(head) && head != '_') return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

int PositionalClause::width() const {
  return std::popcount(positive) + std::popcount(negative);
}

Relation::Relation(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

Relation::Relation(std::string name, int arity,
                   std::span<const TupleCode> tuples) {
  if (!is_identifier(name)) {
    throw InvalidArgument("invalid relation name '" + name + "'");
  }
  if (arity < 1 || arity > kMaxArity) {
    throw InvalidArgument("relation " + name + ": arity " +
                          std::to_string(arity) + " outside [1, " +
                          std::to_string(kMaxArity) + "]");
  }
  auto data = std::make_shared<Data>();
  data->name = std::move(name);
  data->arity = arity;
  const std::size_t universe = std::size_t{1} << arity;
  data->mask.assign(std::max<std::size_t>(1, universe / 64), 0);
  for (TupleCode m : tuples) {
    if (m >= universe) {
      throw InvalidArgument("relation " + data->name + ": tuple code " +
                            std::to_string(m) + " exceeds arity");
    }
    if (!data->test(m)) {
      data->mask[m >> 6] |= std::uint64_t{1} << (m & 63);
      ++data->count;
    }
  }
  if (data->count == 0 || data->count == universe) {
    throw InvalidArgument("relation " + data->name +
                          " is trivial (empty or full)");
  }
  data_ = std::move(data);
}

Relation Relation::from_strings(std::string name, int arity,
                                const std::vector<std::string>& tuples) {
  std::vector<TupleCode> codes;
  codes.reserve(tuples.size());
  for (const auto& t : tuples) {
    if (static_cast<int>(t.size()) != arity) {
      throw InvalidArgument("relation " + name + ": tuple '" + t +
                            "' does not have length " + std::to_string(arity));
    }
    TupleCode code = 0;
    for (char c : t) {
      if (c != '0' && c != '1') {
        throw InvalidArgument("relation " + name + ": tuple '" + t +
                              "' is not a 0/1 string");
      }
      code = (code << 1) | static_cast<TupleCode>(c == '1');
    }
    codes.push_back(code);
  }
  return Relation(std::move(name), arity, codes);
}

const std::string& Relation::name() const { return data_->name; }
int Relation::arity() const { return data_->arity; }
std::size_t Relation::size() const { return data_->count; }

bool Relation::contains(TupleCode m) const {
  return m <= full() && data_->test(m);
}

std::vector<TupleCode> Relation::tuples() const {
  std::vector<TupleCode> out;
  out.reserve(data_->count);
  for (TupleCode m = 0; m <= full(); ++m) {
    if (data_->test(m)) out.push_back(m);
  }
  return out;
}

Relation Relation::renamed(std::string name) const {
  return Relation(std::move(name), arity(), tuples());
}

Relation Relation::flipped(std::string name) const {
  auto ts = tuples();
  for (auto& m : ts) m ^= full();
  return Relation(std::move(name), arity(), ts);
}

const PropertyReport& Relation::properties() const {
  std::call_once(data_->props_once,
                 [this] { data_->props = detail::compute_properties(*this); });
  return data_->props;
}

const std::vector<PositionalClause>& Relation::prime_implicates() const {
  std::call_once(data_->cnf_once, [this] {
    data_->cnf = detail::compute_prime_implicates(*this);
  });
  return data_->cnf;
}

const std::vector<PositionalEquation>& Relation::affine_equations() const {
  std::call_once(data_->affine_once, [this] {
    data_->affine = detail::compute_affine_equations(*this);
  });
  return data_->affine;
}

bool operator==(const Relation& a, const Relation& b) {
  if (a.data_ == b.data_) return true;
  return a.name() == b.name() && a.arity() == b.arity() &&
         a.data_->mask == b.data_->mask;
}

std::ostream& operator<<(std::ostream& os, const Relation& r) {
  os << "relation " << r.name() << ' ' << r.arity() << " {";
  for (TupleCode m : r.tuples()) os << ' ' << tuple_string(m, r.arity());
  return os << " }";
}

// ---------------------------------------------------------------------------
// Property tests.

namespace {

// True iff the tuple set given by `member` is closed under coordinate-wise
// conjunction. Uses the superset-meet transform: S is ∧-closed iff no
// non-member m (other than 1^k) equals the meet of its supersets in S.
template <typename Member>
bool meet_closed(int arity, Member member) {
  const TupleCode full = (TupleCode{1} << arity) - 1;
  std::vector<TupleCode> meet(std::size_t{full} + 1, full);
  for (TupleCode m = full;; --m) {
    TupleCode acc = member(m) ? m : full;
    for (int b = 0; b < arity; ++b) {
      TupleCode bit = TupleCode{1} << b;
      if (!(m & bit)) acc &= meet[m | bit];
    }
    meet[m] = acc;
    if (!member(m) && m != full && acc == m) return false;
    if (m == 0) break;
  }
  return true;
}

bool bijunctive_test(const Relation& r) {
  const int k = r.arity();
  // seen[i][j] holds the observed (x_i, x_j) value pairs as a 4-bit set.
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(k * k), 0);
  const auto ts = r.tuples();
  for (TupleCode m : ts) {
    for (int i = 0; i < k; ++i) {
      int bi = (m & position_bit(k, i)) ? 1 : 0;
      for (int j = i; j < k; ++j) {
        int bj = (m & position_bit(k, j)) ? 1 : 0;
        seen[static_cast<std::size_t>(i * k + j)] |=
            static_cast<std::uint8_t>(1U << (bi * 2 + bj));
      }
    }
  }
  // R is majority-closed iff it equals the 2-CNF closure of its binary
  // projections; R is always contained in that closure, so compare sizes.
  std::size_t closure = 0;
  for (TupleCode m = 0; m <= r.full(); ++m) {
    bool ok = true;
    for (int i = 0; ok && i < k; ++i) {
      int bi = (m & position_bit(k, i)) ? 1 : 0;
      for (int j = i; j < k; ++j) {
        int bj = (m & position_bit(k, j)) ? 1 : 0;
        if (!(seen[static_cast<std::size_t>(i * k + j)] & (1U << (bi * 2 + bj)))) {
          ok = false;
          break;
        }
      }
    }
    if (ok && ++closure > ts.size()) return false;
  }
  return closure == ts.size();
}

// Gaussian basis of {m ^ m0 : m in R}; returns its rank.
int translate_rank(const std::vector<TupleCode>& ts,
                   std::vector<TupleCode>* basis_out = nullptr) {
  std::vector<TupleCode> basis;
  for (TupleCode m : ts) {
    TupleCode v = m ^ ts.front();
    for (TupleCode b : basis) v = std::min(v, v ^ b);
    if (v != 0) {
      basis.push_back(v);
      std::sort(basis.rbegin(), basis.rend());
    }
  }
  if (basis_out) *basis_out = basis;
  return static_cast<int>(basis.size());
}

bool affine_test(const Relation& r) {
  const auto ts = r.tuples();
  if (!std::has_single_bit(ts.size())) return false;
  return (std::size_t{1} << translate_rank(ts)) == ts.size();
}

}  // namespace

namespace detail {

PropertyReport compute_properties(const Relation& r) {
  PropertyReport p;
  const int k = r.arity();
  const TupleCode full = r.full();
  const auto ts = r.tuples();

  p.zero_valid = r.contains(0);
  p.one_valid = r.contains(full);
  p.complementive = std::all_of(ts.begin(), ts.end(), [&](TupleCode m) {
    return r.contains(m ^ full);
  });
  p.positive = std::all_of(ts.begin(), ts.end(), [&](TupleCode m) {
    for (int b = 0; b < k; ++b) {
      if (!r.contains(m | (TupleCode{1} << b))) return false;
    }
    return true;
  });
  p.negative = std::all_of(ts.begin(), ts.end(), [&](TupleCode m) {
    for (int b = 0; b < k; ++b) {
      if (!r.contains(m & ~(TupleCode{1} << b))) return false;
    }
    return true;
  });
  p.horn = meet_closed(k, [&](TupleCode m) { return r.contains(m); });
  p.dual_horn = meet_closed(k, [&](TupleCode m) { return r.contains(m ^ full); });
  p.bijunctive = bijunctive_test(r);
  p.affine = affine_test(r);

  auto pair_closed = [&](auto op) {
    for (TupleCode a : ts) {
      for (TupleCode b : ts) {
        if (!r.contains(op(a, b) & full)) return false;
      }
    }
    return true;
  };
  p.in_is0 = p.one_valid &&
             pair_closed([](TupleCode a, TupleCode b) { return ~a | b; });
  p.in_is1 = p.zero_valid &&
             pair_closed([](TupleCode a, TupleCode b) { return a & ~b; });

  p.eps_valid = p.zero_valid || p.one_valid;
  p.schaefer = p.horn || p.dual_horn || p.bijunctive || p.affine;
  return p;
}

std::vector<PositionalEquation> compute_affine_equations(const Relation& r) {
  if (!r.properties().affine) return {};
  const auto ts = r.tuples();
  std::vector<TupleCode> basis;
  translate_rank(ts, &basis);
  // Annihilator of the translate, reduced to an independent set.
  std::vector<TupleCode> rows;
  for (TupleCode a = 1; a <= r.full(); ++a) {
    bool orthogonal = std::all_of(basis.begin(), basis.end(), [&](TupleCode b) {
      return std::popcount(a & b) % 2 == 0;
    });
    if (!orthogonal) continue;
    TupleCode v = a;
    for (TupleCode row : rows) v = std::min(v, v ^ row);
    if (v != 0) {
      rows.push_back(v);
      std::sort(rows.rbegin(), rows.rend());
    }
  }
  std::vector<PositionalEquation> out;
  out.reserve(rows.size());
  for (TupleCode a : rows) {
    out.push_back({a, std::popcount(a & ts.front()) % 2 == 1});
  }
  return out;
}

}  // namespace detail

PropertyReport relation_properties(const Relation& r) { return r.properties(); }

PropertyReport language_properties(std::span<const Relation> relations) {
  if (relations.empty()) {
    throw InvalidArgument("constraint language must be nonempty");
  }
  PropertyReport acc = relations.front().properties();
  for (const auto& r : relations.subspan(1)) {
    const auto& p = r.properties();
    acc.horn &= p.horn;
    acc.dual_horn &= p.dual_horn;
    acc.bijunctive &= p.bijunctive;
    acc.affine &= p.affine;
    acc.zero_valid &= p.zero_valid;
    acc.one_valid &= p.one_valid;
    acc.complementive &= p.complementive;
    acc.positive &= p.positive;
    acc.negative &= p.negative;
    acc.in_is0 &= p.in_is0;
    acc.in_is1 &= p.in_is1;
  }
  acc.eps_valid = acc.zero_valid || acc.one_valid;
  acc.schaefer = acc.horn || acc.dual_horn || acc.bijunctive || acc.affine;
  return acc;
}

PropertyReport language_properties(const ConstraintLanguage& language) {
  return language_properties(std::span<const Relation>(language.relations()));
}

// ---------------------------------------------------------------------------
// ConstraintLanguage.

ConstraintLanguage::ConstraintLanguage(std::vector<Relation> relations) {
  for (const auto& r : relations) add(r);
}

void ConstraintLanguage::add(const Relation& r) {
  if (const Relation* existing = find(r.name())) {
    if (*existing == r) return;
    throw InvalidArgument("relation name '" + r.name() +
                          "' declared twice with different content");
  }
  relations_.push_back(r);
}

const Relation* ConstraintLanguage::find(std::string_view name) const {
  for (const auto& r : relations_) {
    if (r.name() == name) return &r;
  }
  return nullptr;
}

// ---------------------------------------------------------------------------
// Relation files.

namespace {

std::string_view strip_comment(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) {
    line = line.substr(0, hash);
  }
  return line;
}

}  // namespace

ConstraintLanguage parse_relations(std::string_view text) {
  ConstraintLanguage language;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line(strip_comment(raw));
    // Braces may touch their neighbours: "{01 10}".
    std::string spaced;
    for (char c : line) {
      if (c == '{' || c == '}') {
        spaced += ' ';
        spaced += c;
        spaced += ' ';
      } else {
        spaced += c;
      }
    }
    std::istringstream tok(spaced);
    std::vector<std::string> words;
    for (std::string w; tok >> w;) words.push_back(w);
    if (words.empty()) continue;
    if (words[0] != "relation") {
      throw ParseError("expected 'relation', got '" + words[0] + "'", lineno);
    }
    if (words.size() < 5 || words[3] != "{" || words.back() != "}") {
      throw ParseError("expected: relation <NAME> <arity> { <tuple> ... }",
                       lineno);
    }
    if (std::find(words.begin() + 4, words.end() - 1, "}") != words.end() - 1 ||
        std::find(words.begin() + 4, words.end() - 1, "{") != words.end() - 1) {
      throw ParseError("unbalanced braces", lineno);
    }
    int arity = 0;
    try {
      std::size_t used = 0;
      arity = std::stoi(words[2], &used);
      if (used != words[2].size()) throw std::invalid_argument(words[2]);
    } catch (const std::exception&) {
      throw ParseError("invalid arity '" + words[2] + "'", lineno);
    }
    std::vector<std::string> tuples(words.begin() + 4, words.end() - 1);
    std::vector<std::string> sorted = tuples;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ParseError("duplicate tuple in relation " + words[1], lineno);
    }
    if (language.find(words[1])) {
      throw ParseError("relation " + words[1] + " declared twice", lineno);
    }
    try {
      language.add(Relation::from_strings(words[1], arity, tuples));
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  if (language.empty()) throw ParseError("no relation declared");
  return language;
}

ConstraintLanguage load_relations(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open relation file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_relations(buf.str());
}

std::string serialize_relations(const ConstraintLanguage& language) {
  std::ostringstream os;
  for (const auto& r : language.relations()) os << r << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------

namespace rel {
Relation T() { return Relation::from_strings("T", 1, {"1"}); }
Relation F() { return Relation::from_strings("F", 1, {"0"}); }
Relation NEQ() { return Relation::from_strings("NEQ", 2, {"01", "10"}); }
Relation EQ() { return Relation::from_strings("EQ", 2, {"00", "11"}); }
Relation IMPL() { return Relation::from_strings("IMPL", 2, {"00", "01", "11"}); }
Relation OR2() { return Relation::from_strings("OR2", 2, {"01", "10", "11"}); }
Relation OR3() {
  return Relation::from_predicate("OR3", 3, [](TupleCode m) { return m != 0; });
}
Relation AND_NOT() { return Relation::from_strings("AND_NOT", 2, {"10"}); }
Relation NAE3() {
  return Relation::from_predicate("NAE3", 3,
                                  [](TupleCode m) { return m != 0 && m != 7; });
}
Relation ONE_IN_THREE() {
  return Relation::from_strings("ONE_IN_THREE", 3, {"100", "010", "001"});
}
}  // namespace rel

}  // namespace argcl
