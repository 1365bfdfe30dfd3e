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

#include <string>

#include "mgvqe/errors.hpp"
#include "mgvqe/problems.hpp"
#include "mgvqe/spectral.hpp"

namespace mgvqe {

namespace {

void require_grid(int num_qubits) {
  if (num_qubits < 2) {
    throw ValidationError("Laplacian: not defined on fewer than two qubits (got " +
                          std::to_string(num_qubits) + ")");
  }
  if (num_qubits > StateVector::kMaxQubits) {
    throw CapacityError("Laplacian: too many qubits");
  }
}

std::vector<MeasureBasis> x_on_qubit0(int n) {
  std::vector<MeasureBasis> basis(n, MeasureBasis::kZ);
  basis[0] = MeasureBasis::kX;
  return basis;
}

constexpr std::uint64_t kQubit0 = 1;

std::uint64_t projector_mask(int n) { return ((std::uint64_t{1} << n) - 1) & ~kQubit0; }

}  // namespace

Hamiltonian periodic_hamiltonian(int n) {
  require_grid(n);
  // S contributes 1 - X_0 per copy; the constants go to the offset.
  Hamiltonian h(n, 2.0);
  h.add_frame(MeasurementFrame(ParamCircuit(n), x_on_qubit0(n), {{-1.0, kQubit0, 0}}));
  h.add_frame(MeasurementFrame(increment_circuit(n), x_on_qubit0(n), {{-1.0, kQubit0, 0}}));
  return h;
}

Hamiltonian dirichlet_hamiltonian(int n) {
  require_grid(n);
  Hamiltonian h(n, 2.0);
  h.add_frame(MeasurementFrame(ParamCircuit(n), x_on_qubit0(n), {{-1.0, kQubit0, 0}}));
  // The shifted S and the boundary correction share the shifted frame.
  h.add_frame(MeasurementFrame(increment_circuit(n), x_on_qubit0(n),
                               {{-1.0, kQubit0, 0}, {1.0, kQubit0, projector_mask(n)}}));
  return h;
}

Hamiltonian dirichlet_boundary_term(int n) {
  require_grid(n);
  Hamiltonian h(n);
  h.add_frame(
      MeasurementFrame(increment_circuit(n), x_on_qubit0(n), {{1.0, kQubit0, projector_mask(n)}}));
  return h;
}

namespace {

Eigen::MatrixXd second_difference(int n) {
  require_grid(n);
  if (n > 12) throw CapacityError("stencil matrix: at most 12 qubits");
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    m(i, i) = 2.0;
    if (i > 0) m(i, i - 1) = -1.0;
    if (i + 1 < dim) m(i, i + 1) = -1.0;
  }
  return m;
}

}  // namespace

Eigen::MatrixXd dirichlet_stencil_matrix(int n) { return second_difference(n); }

Eigen::MatrixXd periodic_stencil_matrix(int n) {
  Eigen::MatrixXd m = second_difference(n);
  const Eigen::Index last = m.rows() - 1;
  m(0, last) = -1.0;
  m(last, 0) = -1.0;
  return m;
}

Eigen::MatrixXd neumann_dense(int n) {
  Eigen::MatrixXd m = second_difference(n);
  const Eigen::Index last = m.rows() - 1;
  m(0, 0) = 1.0;
  m(last, last) = 1.0;
  return m;
}

void Hierarchy::validate() const {
  if (stages.empty()) {
    throw ValidationError("Hierarchy: no stages");
  }
  for (std::size_t i = 0; i < stages.size(); ++i) {
    const HierarchyStage& s = stages[i];
    if (s.hamiltonian.num_qubits() != s.size) {
      throw ValidationError("Hierarchy: stage Hamiltonian size mismatch");
    }
    if (i > 0 && s.size != stages[i - 1].size + 1) {
      throw ValidationError("Hierarchy: stage sizes must increase by one");
    }
    if (!s.var_to_qubit.empty() && s.var_to_qubit.size() != static_cast<std::size_t>(s.size)) {
      throw ValidationError("Hierarchy: variable map size mismatch");
    }
  }
}

std::vector<int> stage_qubit_map(int stage_size) {
  std::vector<int> map(stage_size);
  for (int v = 0; v < stage_size; ++v) map[v] = stage_size - 1 - v;
  return map;
}

std::uint64_t decode_assignment(std::span<const int> var_to_qubit, std::uint64_t outcome) {
  std::uint64_t a = 0;
  for (std::size_t v = 0; v < var_to_qubit.size(); ++v) {
    if ((outcome >> var_to_qubit[v]) & 1) a |= std::uint64_t{1} << v;
  }
  return a;
}

std::uint64_t encode_assignment(std::span<const int> var_to_qubit, std::uint64_t assignment) {
  std::uint64_t z = 0;
  for (std::size_t v = 0; v < var_to_qubit.size(); ++v) {
    if ((assignment >> v) & 1) z |= std::uint64_t{1} << var_to_qubit[v];
  }
  return z;
}

std::optional<double> approximation_ratio(const HierarchyStage& stage, std::uint64_t outcome) {
  if (!stage.optimum || *stage.optimum == 0.0) return std::nullopt;
  // Adding +0.0 maps a -0.0 quotient to +0.0.
  return diagonal_entry(stage.hamiltonian, outcome) / *stage.optimum + 0.0;
}

Hierarchy laplacian_hierarchy(int n_max) {
  require_grid(n_max);
  Hierarchy hier;
  for (int n = 2; n <= n_max; ++n) {
    Hamiltonian h = dirichlet_hamiltonian(n);
    std::optional<double> optimum;
    if (n <= 12) optimum = ground_energy(h);
    hier.stages.push_back({n, std::move(h), optimum, {}});
  }
  return hier;
}

}  // namespace mgvqe
