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

#include "argcl/instance.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "argcl/errors.hpp"

namespace argcl {

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

Constraint parse_constraint(std::string_view text,
                            const ConstraintLanguage& language,
                            std::size_t line) {
  text = trim(text);
  auto open = text.find('(');
  if (open == std::string_view::npos || text.empty() || text.back() != ')') {
    throw ParseError("expected <REL>(<v>,...), got '" + std::string(text) + "'",
                     line);
  }
  std::string name(trim(text.substr(0, open)));
  const Relation* r = language.find(name);
  if (!r) throw ParseError("unknown relation '" + name + "'", line);
  std::string_view inner = text.substr(open + 1, text.size() - open - 2);
  std::vector<Variable> args;
  while (true) {
    auto comma = inner.find(',');
    std::string v(trim(inner.substr(0, comma)));
    if (!is_identifier(v)) {
      throw ParseError("invalid variable name '" + v + "'", line);
    }
    args.push_back(v);
    if (comma == std::string_view::npos) break;
    inner = inner.substr(comma + 1);
  }
  if (static_cast<int>(args.size()) != r->arity()) {
    throw ParseError("arity mismatch: " + name + " expects " +
                         std::to_string(r->arity()) + " arguments, got " +
                         std::to_string(args.size()),
                     line);
  }
  return Constraint(*r, std::move(args));
}

GammaFormula parse_conjunction(std::string_view text,
                               const ConstraintLanguage& language,
                               std::size_t line) {
  GammaFormula f;
  while (true) {
    auto amp = text.find('&');
    f.constraints.push_back(parse_constraint(text.substr(0, amp), language, line));
    if (amp == std::string_view::npos) break;
    text = text.substr(amp + 1);
  }
  return f;
}

}  // namespace

std::optional<std::size_t> InstanceDocument::find(std::string_view name) const {
  for (std::size_t i = 0; i < formulas.size(); ++i) {
    if (formulas[i].name == name) return i;
  }
  return std::nullopt;
}

InstanceDocument parse_document(std::string_view text,
                                const RelationResolver& resolve) {
  InstanceDocument doc;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    auto sp = line.find_first_of(" \t");
    std::string keyword(line.substr(0, sp));
    std::string_view rest =
        sp == std::string_view::npos ? std::string_view{} : trim(line.substr(sp));

    if (keyword == "use") {
      if (rest.empty()) throw ParseError("'use' needs a path", lineno);
      ConstraintLanguage loaded;
      try {
        loaded = resolve(std::string(rest));
      } catch (const ParseError& e) {
        throw ParseError(std::string("in '") + std::string(rest) + "': " + e.what(),
                         lineno);
      }
      for (const auto& r : loaded.relations()) {
        try {
          doc.language.add(r);
        } catch (const InvalidArgument& e) {
          throw ParseError(e.what(), lineno);
        }
      }
    } else if (keyword == "formula") {
      auto eq = rest.find('=');
      if (eq == std::string_view::npos) {
        throw ParseError("expected: formula <name> = <constraints>", lineno);
      }
      std::string name(trim(rest.substr(0, eq)));
      if (!is_identifier(name)) {
        throw ParseError("invalid formula name '" + name + "'", lineno);
      }
      if (doc.find(name)) {
        throw ParseError("formula '" + name + "' declared twice", lineno);
      }
      doc.formulas.push_back(
          {name, parse_conjunction(rest.substr(eq + 1), doc.language, lineno), lineno});
    } else if (keyword == "kb") {
      for (auto& w : split_words(rest)) doc.kb.emplace_back(w, lineno);
    } else if (keyword == "claim") {
      if (doc.claim) throw ParseError("duplicate 'claim'", lineno);
      if (rest.empty()) throw ParseError("'claim' needs constraints", lineno);
      doc.claim = parse_conjunction(rest, doc.language, lineno);
    } else if (keyword == "relevant") {
      auto words = split_words(rest);
      if (words.size() != 1) throw ParseError("expected: relevant <name>", lineno);
      if (doc.relevant) throw ParseError("duplicate 'relevant'", lineno);
      doc.relevant = std::make_pair(words[0], lineno);
    } else if (keyword == "hypotheses") {
      auto words = split_words(rest);
      for (const auto& w : words) {
        if (!is_identifier(w)) throw ParseError("invalid variable name '" + w + "'", lineno);
      }
      if (doc.hypotheses) throw ParseError("duplicate 'hypotheses'", lineno);
      doc.hypotheses = words;
    } else if (keyword == "observation") {
      auto words = split_words(rest);
      if (words.size() != 1 || !is_identifier(words[0])) {
        throw ParseError("expected: observation <variable>", lineno);
      }
      if (doc.observation) throw ParseError("duplicate 'observation'", lineno);
      doc.observation = words[0];
    } else {
      throw ParseError("unknown keyword '" + keyword + "'", lineno);
    }
  }
  return doc;
}

ArgInstance parse_instance(std::string_view text, const RelationResolver& resolve) {
  InstanceDocument doc = parse_document(text, resolve);
  if (doc.hypotheses) throw ParseError("'hypotheses' is only valid in abduction files");
  if (doc.observation) throw ParseError("'observation' is only valid in abduction files");
  if (!doc.claim) throw ParseError("missing 'claim'");

  ArgInstance inst;
  inst.language = doc.language;
  std::set<std::string> seen;
  for (const auto& [name, line] : doc.kb) {
    auto idx = doc.find(name);
    if (!idx) throw ParseError("unknown formula '" + name + "'", line);
    if (!seen.insert(name).second) {
      throw ParseError("formula '" + name + "' listed twice in kb", line);
    }
    inst.delta.push_back(doc.formulas[*idx].formula);
    inst.names.push_back(name);
  }
  inst.alpha = *doc.claim;
  if (doc.relevant) {
    const auto& [name, line] = *doc.relevant;
    auto it = std::find(inst.names.begin(), inst.names.end(), name);
    if (it == inst.names.end()) {
      throw ParseError("dangling relevant reference '" + name +
                           "' (not in kb)",
                       line);
    }
    inst.relevant = static_cast<std::size_t>(it - inst.names.begin());
  }
  return inst;
}

RelationResolver file_resolver(std::string base_dir) {
  return [base = std::move(base_dir)](const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_relative() && !base.empty()) p = std::filesystem::path(base) / p;
    return load_relations(p.string());
  };
}

ArgInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str(),
                        file_resolver(std::filesystem::path(path).parent_path().string()));
}

void ArgInstance::validate() const {
  auto check = [&](const GammaFormula& f) {
    for (const auto& c : f.constraints) {
      const Relation* r = language.find(c.relation.name());
      if (!r || !(*r == c.relation)) {
        throw InvalidArgument("relation '" + c.relation.name() +
                              "' is not part of the instance language");
      }
    }
  };
  for (const auto& f : delta) check(f);
  if (alpha.empty()) throw InvalidArgument("claim must not be empty");
  check(alpha);
  if (relevant && *relevant >= delta.size()) {
    throw InvalidArgument("relevant index out of range");
  }
  if (!names.empty() && names.size() != delta.size()) {
    throw InvalidArgument("names must parallel delta");
  }
}

std::string serialize_instance(const ArgInstance& instance,
                               const std::string& relation_path) {
  std::vector<std::string> names = instance.names;
  std::set<std::string> unique(names.begin(), names.end());
  bool usable = names.size() == instance.delta.size() &&
                unique.size() == names.size() &&
                std::all_of(names.begin(), names.end(),
                            [](const std::string& n) { return is_identifier(n); });
  if (!usable) {
    names.clear();
    for (std::size_t i = 0; i < instance.delta.size(); ++i) {
      names.push_back("f" + std::to_string(i + 1));
    }
  }
  std::ostringstream os;
  os << "use " << relation_path << '\n';
  for (std::size_t i = 0; i < instance.delta.size(); ++i) {
    os << "formula " << names[i] << " = " << to_string(instance.delta[i]) << '\n';
  }
  os << "kb";
  for (const auto& n : names) os << ' ' << n;
  os << '\n' << "claim " << to_string(instance.alpha) << '\n';
  if (instance.relevant) os << "relevant " << names[*instance.relevant] << '\n';
  return os.str();
}

}  // namespace argcl
