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
#include <bit>
#include <string>

#include "mgvqe/errors.hpp"
#include "mgvqe/problems.hpp"

namespace mgvqe {

Graph::Graph(int num_nodes) : num_nodes_(num_nodes) {
  if (num_nodes < 0 || num_nodes > 63) {
    throw CapacityError("Graph: node count out of range");
  }
}

void Graph::add_edge(int u, int v) {
  if (u == v) throw ValidationError("Graph: self-loop on node " + std::to_string(u));
  if (u < 0 || v < 0 || u >= num_nodes_ || v >= num_nodes_) {
    throw ValidationError("Graph: edge endpoint out of range");
  }
  if (has_edge(u, v)) throw ValidationError("Graph: duplicate edge");
  edges_.emplace_back(std::min(u, v), std::max(u, v));
}

bool Graph::has_edge(int u, int v) const {
  const std::pair<int, int> e{std::min(u, v), std::max(u, v)};
  return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
}

int Graph::cut_value(std::uint64_t assignment) const {
  int cut = 0;
  for (const auto& [u, v] : edges_) cut += ((assignment >> u) ^ (assignment >> v)) & 1;
  return cut;
}

Graph Graph::induced_prefix(int count) const {
  if (count < 0 || count > num_nodes_) throw ValidationError("Graph: prefix size out of range");
  Graph g(count);
  for (const auto& [u, v] : edges_) {
    if (v < count) g.edges_.emplace_back(u, v);
  }
  return g;
}

namespace {

std::vector<int> resolve_map(std::span<const int> map, int num_vars, int num_qubits) {
  std::vector<int> out(num_vars);
  if (map.empty()) {
    for (int v = 0; v < num_vars; ++v) out[v] = v;
    return out;
  }
  if (map.size() != static_cast<std::size_t>(num_vars)) {
    throw ValidationError("qubit map size differs from variable count");
  }
  std::uint64_t used = 0;
  for (int v = 0; v < num_vars; ++v) {
    const int q = map[v];
    if (q < 0 || q >= num_qubits || ((used >> q) & 1)) {
      throw ValidationError("qubit map is not injective into the register");
    }
    used |= std::uint64_t{1} << q;
    out[v] = q;
  }
  return out;
}

}  // namespace

Hamiltonian maxcut_hamiltonian(const Graph& g, std::span<const int> node_to_qubit) {
  const int n = std::max(1, g.num_nodes());
  const std::vector<int> map = resolve_map(node_to_qubit, g.num_nodes(), n);
  Hamiltonian h(n, -0.5 * static_cast<double>(g.edges().size()));
  std::vector<MeasuredTerm> terms;
  terms.reserve(g.edges().size());
  for (const auto& [u, v] : g.edges()) {
    terms.push_back({0.5, (std::uint64_t{1} << map[u]) | (std::uint64_t{1} << map[v]), 0});
  }
  h.add_frame(MeasurementFrame(ParamCircuit(n), std::vector<MeasureBasis>(n, MeasureBasis::kZ),
                               std::move(terms)));
  return h;
}

Graph erdos_renyi(int num_nodes, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("erdos_renyi: p must lie in [0, 1]");
  Graph g(num_nodes);
  for (int u = 0; u < num_nodes; ++u) {
    for (int v = u + 1; v < num_nodes; ++v) {
      if (rng.bernoulli(p)) g.add_edge(u, v);
    }
  }
  return g;
}

CutResult maxcut_bruteforce(const Graph& g) {
  const int n = g.num_nodes();
  if (n > 26) throw CapacityError("maxcut_bruteforce: at most 26 nodes");
  if (n <= 1) return {0, 0};
  std::vector<std::uint64_t> adjacency(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adjacency[u] |= std::uint64_t{1} << v;
    adjacency[v] |= std::uint64_t{1} << u;
  }
  // Every cut appears once with node n-1 on side 0, and that representative
  // is the numerically smaller of the complementary pair.
  CutResult best{-1, 0};
  const std::uint64_t half = std::uint64_t{1} << (n - 1);
  for (std::uint64_t z = 0; z < half; ++z) {
    int twice_cut = 0;
    for (int v = 0; v < n; ++v) {
      const std::uint64_t other_side = ((z >> v) & 1) ? ~z : z;
      twice_cut += std::popcount(adjacency[v] & other_side);
    }
    // Each crossing edge is seen from both endpoints.
    if (twice_cut / 2 > best.value) best = {twice_cut / 2, z};
  }
  return best;
}

Hierarchy subgraph_hierarchy(const Graph& g, int first_size) {
  if (first_size < 1 || g.num_nodes() < first_size) {
    throw ValidationError("subgraph_hierarchy: graph smaller than the first stage");
  }
  Hierarchy hier;
  for (int j = first_size; j <= g.num_nodes(); ++j) {
    const Graph sub = g.induced_prefix(j);
    std::vector<int> map = stage_qubit_map(j);
    Hamiltonian h = maxcut_hamiltonian(sub, map);
    const double optimum = -static_cast<double>(maxcut_bruteforce(sub).value);
    hier.stages.push_back({j, std::move(h), optimum, std::move(map)});
  }
  return hier;
}

}  // namespace mgvqe
