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

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "mgvqe/state_vector.hpp"

namespace mgvqe {

enum class GateKind { kH, kX, kRY, kRZ, kCX, kCZ, kMCX };

std::string_view gate_name(GateKind kind);

/// Index into the parameter vector bound at simulation time.
struct ParamSlot {
  std::size_t index = 0;
  friend bool operator==(const ParamSlot&, const ParamSlot&) = default;
};

/// Rotations carry either a fixed angle (radians) or a slot; other gates carry
/// std::monostate.
using AngleSource = std::variant<std::monostate, double, ParamSlot>;

/// Qubit layout per kind: single-qubit gates {q}; CX {control, target};
/// CZ {a, b}; MCX {controls..., target}.
struct GateOp {
  GateKind kind = GateKind::kH;
  std::vector<int> qubits;
  AngleSource angle;
};

/// Ordered gate list over `num_qubits` qubits whose rotations reference
/// parameter slots. Every slot in [0, num_params) is referenced by at least one
/// rotation because slots are only ever allocated by a rotation.
class ParamCircuit {
 public:
  explicit ParamCircuit(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  std::size_t num_params() const { return num_params_; }
  const std::vector<GateOp>& ops() const { return ops_; }
  bool empty() const { return ops_.empty(); }
  bool is_parameter_free() const { return num_params_ == 0; }

  void h(int q);
  void x(int q);
  void cx(int control, int target);
  void cz(int a, int b);
  void mcx(std::vector<int> controls, int target);

  /// Rotation bound to a freshly allocated slot; returns the slot index.
  std::size_t ry(int q);
  std::size_t rz(int q);
  void ry_fixed(int q, double angle);
  void rz_fixed(int q, double angle);

  /// Copy on a `num_qubits` register with every qubit index shifted by
  /// `offset`. Parameter slots are unchanged.
  ParamCircuit embed(int num_qubits, int offset) const;

  /// Inverse of a parameter-free circuit. Throws ValidationError otherwise.
  ParamCircuit inverse() const;

  /// Appends `op` after validating its qubits. Slot references must be
  /// < num_params(); use ry()/rz() to allocate new slots.
  void append(GateOp op);

 private:
  void check_qubits(const std::vector<int>& qubits, std::size_t expected_min) const;

  int num_qubits_;
  std::size_t num_params_ = 0;
  std::vector<GateOp> ops_;
};

/// Applies `circ` to `state` in place with the slots bound to `theta`.
void apply_circuit(const ParamCircuit& circ, std::span<const double> theta, StateVector& state);

/// Resets `out` to |0...0> and applies `circ`. Reuses `out`'s storage.
void simulate_into(const ParamCircuit& circ, std::span<const double> theta, StateVector& out);

/// The state prepared by `circ` from |0...0>.
StateVector simulate(const ParamCircuit& circ, std::span<const double> theta);

/// Hardware-efficient seed ansatz: (reps + 1) layers of RY then RZ on every
/// qubit, separated by reverse-linear CX chains CX(n-2, n-1), ..., CX(0, 1).
ParamCircuit efficient_su2(int num_qubits, int reps = 3);

/// Order in which the refinement layer entangles the old qubits with the new
/// one. This is the single switch for that choice.
enum class RefineOrder { kAscending, kDescending };
inline constexpr RefineOrder kDefaultRefineOrder = RefineOrder::kAscending;

/// Multigrid refinement. Produces an (n+1)-qubit circuit: the old circuit on
/// qubits 1..n, then H on the new qubit 0 followed by CZ(i,0) RY(new) CZ(i,0)
/// for every old qubit i. With the new angles at zero the CZ pairs cancel and
/// the output is old_state (x) |+>, i.e. each amplitude duplicated.
ParamCircuit refine(const ParamCircuit& circ, RefineOrder order = kDefaultRefineOrder);

/// Parameter-free cyclic increment |b> -> |(b+1) mod 2^n>: MCX cascade from
/// the top qubit down, finishing with X on qubit 0.
ParamCircuit increment_circuit(int num_qubits);

/// Parameters after refining an m-qubit seed with `seed_params` parameters up
/// to n qubits: seed_params + (n^2 - n - m^2 + m) / 2.
std::size_t multigrid_param_count(int seed_qubits, std::size_t seed_params, int num_qubits);

struct GateCounts {
  std::size_t h = 0, x = 0, ry = 0, rz = 0, cx = 0, cz = 0, mcx = 0;
};
GateCounts count_gates(const ParamCircuit& circ);

/// One gate per line: `<KIND> <qubits...> [p<slot>|a<angle>]`. For MCX the
/// last qubit is the target; for CX it is `control target`.
std::string to_text(const ParamCircuit& circ);

}  // namespace mgvqe
