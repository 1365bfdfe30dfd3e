// Copyright 2026 The mgvqe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "mgvqe/errors.hpp"
#include "mgvqe/problems.hpp"

namespace mgvqe {

Graph read_edge_list(std::istream& in) {
  std::vector<std::pair<int, int>> edges;
  int declared_nodes = -1;
  int max_node = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first[0] == '#') {
      std::string key;
      if (first == "#" && (ls >> key) && key == "nodes") {
        if (!(ls >> declared_nodes) || declared_nodes < 0) {
          throw ValidationError("edge list line " + std::to_string(line_no) +
                                ": bad node count");
        }
      }
      continue;
    }
    int u = 0, v = 0;
    std::istringstream pair(line);
    std::string trailing;
    if (!(pair >> u >> v) || (pair >> trailing)) {
      throw ValidationError("edge list line " + std::to_string(line_no) + ": expected 'u v'");
    }
    edges.emplace_back(u, v);
    max_node = std::max({max_node, u, v});
  }
  Graph g(declared_nodes >= 0 ? declared_nodes : max_node + 1);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# nodes " << g.num_nodes() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

CnfFormula read_dimacs(std::istream& in) {
  int num_vars = -1;
  int num_clauses = -1;
  std::vector<std::vector<int>> raw;
  std::vector<int> current;
  std::string token;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    if (!(ls >> token)) continue;
    if (token == "c") continue;
    if (token == "p") {
      std::string fmt;
      if (!(ls >> fmt >> num_vars >> num_clauses) || fmt != "cnf") {
        throw ValidationError("DIMACS: malformed header '" + line + "'");
      }
      continue;
    }
    if (num_vars < 0) throw ValidationError("DIMACS: clause before 'p cnf' header");
    std::istringstream clause_stream(line);
    int lit = 0;
    while (clause_stream >> lit) {
      if (lit == 0) {
        raw.push_back(current);
        current.clear();
      } else {
        current.push_back(lit);
      }
    }
    if (!clause_stream.eof()) throw ValidationError("DIMACS: non-integer token in '" + line + "'");
  }
  if (num_vars < 0) throw ValidationError("DIMACS: missing 'p cnf' header");
  if (!current.empty()) throw ValidationError("DIMACS: last clause is not 0-terminated");
  if (static_cast<int>(raw.size()) != num_clauses) {
    throw ValidationError("DIMACS: header declares " + std::to_string(num_clauses) +
                          " clauses, found " + std::to_string(raw.size()));
  }
  const int k = raw.empty() ? 1 : static_cast<int>(raw.front().size());
  CnfFormula f(num_vars, k);
  for (const auto& c : raw) {
    Clause clause;
    for (int lit : c) {
      const int var = std::abs(lit) - 1;
      if (var >= num_vars) throw ValidationError("DIMACS: literal exceeds declared variables");
      clause.push_back({var, lit < 0});
    }
    f.add_clause(std::move(clause));
  }
  return f;
}

void write_dimacs(std::ostream& out, const CnfFormula& f) {
  out << "p cnf " << f.num_vars() << ' ' << f.clauses().size() << '\n';
  for (const Clause& c : f.clauses()) {
    for (const Literal& lit : c) out << (lit.negated ? -(lit.var + 1) : lit.var + 1) << ' ';
    out << "0\n";
  }
}

}  // namespace mgvqe
