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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "mgvqe/hamiltonian.hpp"
#include "mgvqe/pauli.hpp"
#include "mgvqe/rng.hpp"

namespace mgvqe {

// ---------------------------------------------------------------------------
// Discrete 1-D Laplacians on 2^n grid points.
//
// With S = I - X_0 and P the cyclic increment,
//   periodic  = S + P^dagger S P
//   dirichlet = periodic + P^dagger (|0><0|^{(n-1)} (x) X_0) P
// Each P-conjugated piece is one measurement frame whose conjugation circuit is
// the increment circuit, so a Dirichlet Hamiltonian has two frames.
// ---------------------------------------------------------------------------

/// Throws ValidationError for n < 2.
Hamiltonian dirichlet_hamiltonian(int num_qubits);
Hamiltonian periodic_hamiltonian(int num_qubits);

/// The boundary correction P^dagger (|0><0|^{(n-1)} (x) X_0) P on its own.
Hamiltonian dirichlet_boundary_term(int num_qubits);

/// Reference matrices written directly from the second-difference stencils.
Eigen::MatrixXd dirichlet_stencil_matrix(int num_qubits);
Eigen::MatrixXd periodic_stencil_matrix(int num_qubits);
/// Zero-derivative boundary: first and last diagonal entries are 1.
Eigen::MatrixXd neumann_dense(int num_qubits);

// ---------------------------------------------------------------------------
// Hierarchies
// ---------------------------------------------------------------------------

struct HierarchyStage {
  int size = 0;
  /// Objective minimized at this stage. For combinatorial problems this is the
  /// negated cost, so the minimum is minus the best achievable cost.
  Hamiltonian hamiltonian;
  /// Minimum of `hamiltonian`, when known.
  std::optional<double> optimum;
  /// var_to_qubit[v] is the qubit carrying variable (or node) v. Empty for
  /// grid problems, where the basis index is the grid coordinate.
  std::vector<int> var_to_qubit;
};

/// Problem stages from coarse to fine; sizes increase by exactly one.
struct Hierarchy {
  std::vector<HierarchyStage> stages;

  int first_size() const { return stages.front().size; }
  int final_size() const { return stages.back().size; }
  bool is_combinatorial() const { return !stages.front().var_to_qubit.empty(); }

  /// Throws ValidationError if empty or if sizes do not step by one.
  void validate() const;
};

/// Qubit placement used by every combinatorial hierarchy: variable v of a
/// size-j stage sits on qubit j - 1 - v, so the newest variable is always
/// qubit 0, matching where refinement inserts the new qubit.
std::vector<int> stage_qubit_map(int stage_size);

/// Maps a measured qubit bitstring to a variable assignment (bit v = var v).
std::uint64_t decode_assignment(std::span<const int> var_to_qubit, std::uint64_t outcome);
/// Inverse of decode_assignment.
std::uint64_t encode_assignment(std::span<const int> var_to_qubit, std::uint64_t assignment);

/// Cost ratio of an outcome against the stage optimum, or std::nullopt when
/// the optimum is zero (ratio undefined) or unknown.
std::optional<double> approximation_ratio(const HierarchyStage& stage, std::uint64_t outcome);

/// Dirichlet stages for n = 2..n_max, each with its ground energy attached.
Hierarchy laplacian_hierarchy(int n_max);

// ---------------------------------------------------------------------------
// MaxCut
// ---------------------------------------------------------------------------

class Graph {
 public:
  explicit Graph(int num_nodes = 0);

  int num_nodes() const { return num_nodes_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  /// Stores the pair as (min, max). Throws on self-loops, out-of-range
  /// endpoints, and duplicates.
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;

  /// Number of edges crossing the partition; bit v of `assignment` is the
  /// side of node v.
  int cut_value(std::uint64_t assignment) const;

  /// Subgraph induced by nodes 0..count-1.
  Graph induced_prefix(int count) const;

 private:
  int num_nodes_;
  std::vector<std::pair<int, int>> edges_;
};

/// Diagonal Hamiltonian 1/2 sum_{(u,v)} (Z_u Z_v - 1) whose entry at a
/// bitstring is minus its cut. `node_to_qubit` defaults to the identity.
Hamiltonian maxcut_hamiltonian(const Graph& g, std::span<const int> node_to_qubit = {});

/// Each of the n(n-1)/2 pairs, in lexicographic order, is an edge with
/// probability p. Node labels are generation order.
Graph erdos_renyi(int num_nodes, double p, Rng& rng);

struct CutResult {
  int value = 0;
  std::uint64_t assignment = 0;
};

/// Exact MaxCut. Enumerates the 2^(n-1) cuts with the highest-numbered node
/// fixed to side 0 and returns the numerically smallest optimal assignment.
/// Throws CapacityError above 26 nodes.
CutResult maxcut_bruteforce(const Graph& g);

/// Stage j holds nodes 0..j-1 with every edge among them, for j from
/// `first_size` to the full graph.
Hierarchy subgraph_hierarchy(const Graph& g, int first_size = 2);

// ---------------------------------------------------------------------------
// Max-E-k-SAT
// ---------------------------------------------------------------------------

struct Literal {
  int var = 0;
  bool negated = false;
  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::vector<Literal>;

class CnfFormula {
 public:
  CnfFormula(int num_vars, int k);

  int num_vars() const { return num_vars_; }
  int k() const { return k_; }
  const std::vector<Clause>& clauses() const { return clauses_; }

  /// Requires exactly k literals over distinct in-range variables.
  void add_clause(Clause clause);

  int count_satisfied(std::uint64_t assignment) const;

  /// Variables 0..count-1 together with every clause contained in them.
  CnfFormula restricted_prefix(int count) const;

 private:
  int num_vars_;
  int k_;
  std::vector<Clause> clauses_;
};

/// Clause count used for hard random instances: 3n for k = 2, 6n for k = 3.
int hard_instance_clause_count(int num_vars, int k);

/// m clauses, each over k distinct uniformly chosen variables with
/// independent fair polarities. Duplicate clauses may occur.
CnfFormula random_eksat(int num_vars, int k, int num_clauses, Rng& rng);

/// Diagonal observable whose entry at an assignment is the number of
/// satisfied clauses. Built clause by clause as I - (projector onto the
/// unique falsifying assignment), evaluating |0><0| factors natively.
Hamiltonian sat_hamiltonian(const CnfFormula& f, std::span<const int> var_to_qubit = {});

/// The same observable expanded through |0><0| -> (I+Z)/2 and
/// |1><1| -> (I-Z)/2 with like terms merged. At most m 2^k strings.
std::vector<PauliString> sat_pauli_expansion(const CnfFormula& f,
                                             std::span<const int> var_to_qubit = {});

struct SatResult {
  int value = 0;
  std::uint64_t assignment = 0;
};

/// Exact Max-SAT by enumeration; smallest optimal assignment wins ties.
/// Throws CapacityError above 26 variables.
SatResult sat_bruteforce(const CnfFormula& f);

/// Stage j holds variables 0..j-1 and only the clauses fully inside them.
/// Stages start at max(2, k). Each stage minimizes the negated clause count.
Hierarchy subformula_hierarchy(const CnfFormula& f);

// ---------------------------------------------------------------------------
// Text formats
// ---------------------------------------------------------------------------

/// Edge list: one "u v" pair per line (0-based). Blank lines and lines
/// starting with '#' are ignored, except an optional "# nodes N" header that
/// fixes the node count (otherwise max endpoint + 1).
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

/// DIMACS CNF: "c" comment lines, a "p cnf <vars> <clauses>" header, then
/// clauses as signed 1-based integers terminated by 0.
CnfFormula read_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const CnfFormula& f);

}  // namespace mgvqe
