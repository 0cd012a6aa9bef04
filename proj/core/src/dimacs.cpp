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

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "argcl/errors.hpp"
#include "argcl/reductions.hpp"

namespace argcl {

namespace {

std::string read_file(const std::string& path, const char* what) {
  std::ifstream in(path);
  if (!in) throw ParseError(std::string("cannot open ") + what + " '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

long parse_int(const std::string& token, std::size_t line) {
  char* end = nullptr;
  errno = 0;
  long v = std::strtol(token.c_str(), &end, 10);
  if (token.empty() || *end != '\0' || errno == ERANGE) {
    throw ParseError("expected an integer, got '" + token + "'", line);
  }
  return v;
}

}  // namespace

void CnfInput::validate() const {
  if (num_vars < 0) throw InvalidArgument("negative variable count");
  for (const auto& clause : clauses) {
    for (int lit : clause) {
      if (lit == 0 || std::abs(lit) > num_vars) {
        throw InvalidArgument("literal " + std::to_string(lit) +
                              " outside 1.." + std::to_string(num_vars));
      }
      if (std::find(clause.begin(), clause.end(), -lit) != clause.end()) {
        throw InvalidArgument("clause contains " + std::to_string(lit) +
                              " and its negation");
      }
    }
  }
}

CnfInput parse_dimacs(std::string_view text) {
  CnfInput cnf;
  bool header = false;
  long declared_clauses = 0;
  std::vector<int> current;
  std::size_t current_line = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  bool done = false;
  while (!done && std::getline(in, raw)) {
    ++lineno;
    std::istringstream words(raw);
    std::string first;
    if (!(words >> first)) continue;
    if (first == "c") continue;
    if (first == "%") break;  // SATLIB trailer
    if (first == "p") {
      if (header) throw ParseError("duplicate problem line", lineno);
      std::string fmt, n, k, extra;
      if (!(words >> fmt >> n >> k) || fmt != "cnf" || (words >> extra)) {
        throw ParseError("expected 'p cnf <variables> <clauses>'", lineno);
      }
      long nv = parse_int(n, lineno);
      declared_clauses = parse_int(k, lineno);
      if (nv < 0 || declared_clauses < 0 || nv > 1000000) {
        throw ParseError("invalid problem line counts", lineno);
      }
      cnf.num_vars = static_cast<int>(nv);
      header = true;
      continue;
    }
    if (!header) throw ParseError("clause before the 'p cnf' line", lineno);
    std::vector<std::string> tokens{first};
    for (std::string w; words >> w;) tokens.push_back(w);
    for (const auto& tok : tokens) {
      long lit = parse_int(tok, lineno);
      if (current.empty()) current_line = lineno;
      if (lit == 0) {
        std::sort(current.begin(), current.end(), [](int a, int b) {
          return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a < b;
        });
        current.erase(std::unique(current.begin(), current.end()), current.end());
        for (std::size_t i = 0; i + 1 < current.size(); ++i) {
          if (current[i] == -current[i + 1]) {
            throw ParseError("clause contains literal " +
                                 std::to_string(std::abs(current[i])) +
                                 " in both polarities",
                             current_line);
          }
        }
        cnf.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (std::labs(lit) > cnf.num_vars) {
        throw ParseError("literal " + std::to_string(lit) + " exceeds the " +
                             std::to_string(cnf.num_vars) + " declared variables",
                         lineno);
      }
      current.push_back(static_cast<int>(lit));
    }
  }
  if (!header) throw ParseError("missing 'p cnf' line");
  if (!current.empty()) {
    throw ParseError("last clause is not terminated by 0", current_line);
  }
  if (static_cast<long>(cnf.clauses.size()) != declared_clauses) {
    throw ParseError("problem line declares " + std::to_string(declared_clauses) +
                     " clauses, found " + std::to_string(cnf.clauses.size()));
  }
  return cnf;
}

CnfInput load_dimacs(const std::string& path) {
  return parse_dimacs(read_file(path, "DIMACS file"));
}

std::string serialize_dimacs(const CnfInput& cnf) {
  std::ostringstream os;
  os << "p cnf " << cnf.num_vars << ' ' << cnf.clauses.size() << '\n';
  for (const auto& clause : cnf.clauses) {
    for (int lit : clause) os << lit << ' ';
    os << "0\n";
  }
  return os.str();
}

Variable cnf_variable(int j) { return "x" + std::to_string(j); }

void AbdInstance::validate() const {
  std::set<Variable> hs(hypotheses.begin(), hypotheses.end());
  if (hs.size() != hypotheses.size()) {
    throw InvalidArgument("hypotheses repeat a variable");
  }
  if (!is_identifier(observation)) {
    throw InvalidArgument("invalid observation variable '" + observation + "'");
  }
  if (hs.count(observation)) {
    throw InvalidArgument("observation '" + observation + "' is a hypothesis");
  }
  for (const auto& c : phi.constraints) {
    const Relation* r = language.find(c.relation.name());
    if (!r || !(*r == c.relation)) {
      throw InvalidArgument("relation '" + c.relation.name() +
                            "' is not part of the abduction language");
    }
  }
}

AbdInstance parse_abduction(std::string_view text, const RelationResolver& resolve) {
  InstanceDocument doc = parse_document(text, resolve);
  if (doc.claim) throw ParseError("'claim' is not valid in abduction files");
  if (doc.relevant) throw ParseError("'relevant' is not valid in abduction files");
  if (!doc.hypotheses) throw ParseError("missing 'hypotheses'");
  if (!doc.observation) throw ParseError("missing 'observation'");

  AbdInstance abd;
  abd.language = doc.language;
  std::set<std::string> seen;
  for (const auto& [name, line] : doc.kb) {
    auto idx = doc.find(name);
    if (!idx) throw ParseError("unknown formula '" + name + "'", line);
    if (!seen.insert(name).second) {
      throw ParseError("formula '" + name + "' listed twice in kb", line);
    }
    for (const auto& c : doc.formulas[*idx].formula.constraints) {
      abd.phi.constraints.push_back(c);
    }
  }
  abd.hypotheses = *doc.hypotheses;
  abd.observation = *doc.observation;
  try {
    abd.validate();
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
  return abd;
}

AbdInstance load_abduction(const std::string& path) {
  return parse_abduction(
      read_file(path, "abduction file"),
      file_resolver(std::filesystem::path(path).parent_path().string()));
}

std::string serialize_abduction(const AbdInstance& abd,
                                const std::string& relation_path) {
  std::ostringstream os;
  os << "use " << relation_path << '\n';
  if (!abd.phi.empty()) {
    os << "formula phi = " << to_string(abd.phi) << '\n' << "kb phi\n";
  }
  os << "hypotheses";
  for (const auto& h : abd.hypotheses) os << ' ' << h;
  os << '\n' << "observation " << abd.observation << '\n';
  return os.str();
}

}  // namespace argcl
