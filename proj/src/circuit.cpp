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

#include "mgvqe/circuit.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "mgvqe/errors.hpp"

namespace mgvqe {

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::kH: return "H";
    case GateKind::kX: return "X";
    case GateKind::kRY: return "RY";
    case GateKind::kRZ: return "RZ";
    case GateKind::kCX: return "CX";
    case GateKind::kCZ: return "CZ";
    case GateKind::kMCX: return "MCX";
  }
  return "?";
}

namespace {

bool is_rotation(GateKind kind) { return kind == GateKind::kRY || kind == GateKind::kRZ; }

std::size_t arity(GateKind kind) {
  switch (kind) {
    case GateKind::kCX:
    case GateKind::kCZ: return 2;
    case GateKind::kMCX: return 0;  // variable
    default: return 1;
  }
}

}  // namespace

ParamCircuit::ParamCircuit(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > StateVector::kMaxQubits) {
    throw CapacityError("ParamCircuit: qubit count " + std::to_string(num_qubits) +
                        " out of range");
  }
}

void ParamCircuit::check_qubits(const std::vector<int>& qubits, std::size_t expected) const {
  if (expected != 0 && qubits.size() != expected) {
    throw ValidationError("ParamCircuit: wrong number of qubits for gate");
  }
  if (qubits.empty()) {
    throw ValidationError("ParamCircuit: gate has no qubits");
  }
  std::uint64_t seen = 0;
  for (int q : qubits) {
    if (q < 0 || q >= num_qubits_) {
      throw std::out_of_range("ParamCircuit: qubit " + std::to_string(q) + " out of range");
    }
    const std::uint64_t bit = std::uint64_t{1} << q;
    if (seen & bit) {
      throw ValidationError("ParamCircuit: repeated qubit in gate");
    }
    seen |= bit;
  }
}

void ParamCircuit::append(GateOp op) {
  check_qubits(op.qubits, arity(op.kind));
  if (is_rotation(op.kind)) {
    if (std::holds_alternative<std::monostate>(op.angle)) {
      throw ValidationError("ParamCircuit: rotation without an angle source");
    }
    if (const auto* slot = std::get_if<ParamSlot>(&op.angle); slot && slot->index >= num_params_) {
      throw ValidationError("ParamCircuit: parameter slot not allocated");
    }
  } else if (!std::holds_alternative<std::monostate>(op.angle)) {
    throw ValidationError("ParamCircuit: non-rotation gate carries an angle");
  }
  ops_.push_back(std::move(op));
}

void ParamCircuit::h(int q) { append({GateKind::kH, {q}, {}}); }
void ParamCircuit::x(int q) { append({GateKind::kX, {q}, {}}); }
void ParamCircuit::cx(int control, int target) { append({GateKind::kCX, {control, target}, {}}); }
void ParamCircuit::cz(int a, int b) { append({GateKind::kCZ, {a, b}, {}}); }

void ParamCircuit::mcx(std::vector<int> controls, int target) {
  controls.push_back(target);
  append({GateKind::kMCX, std::move(controls), {}});
}

std::size_t ParamCircuit::ry(int q) {
  check_qubits({q}, 1);
  const std::size_t slot = num_params_++;
  ops_.push_back({GateKind::kRY, {q}, ParamSlot{slot}});
  return slot;
}

std::size_t ParamCircuit::rz(int q) {
  check_qubits({q}, 1);
  const std::size_t slot = num_params_++;
  ops_.push_back({GateKind::kRZ, {q}, ParamSlot{slot}});
  return slot;
}

void ParamCircuit::ry_fixed(int q, double angle) { append({GateKind::kRY, {q}, angle}); }
void ParamCircuit::rz_fixed(int q, double angle) { append({GateKind::kRZ, {q}, angle}); }

ParamCircuit ParamCircuit::embed(int num_qubits, int offset) const {
  if (offset < 0 || num_qubits_ + offset > num_qubits) {
    throw ValidationError("ParamCircuit::embed: target register too small");
  }
  ParamCircuit out(num_qubits);
  out.num_params_ = num_params_;
  out.ops_.reserve(ops_.size());
  for (GateOp op : ops_) {
    for (int& q : op.qubits) q += offset;
    out.ops_.push_back(std::move(op));
  }
  return out;
}

ParamCircuit ParamCircuit::inverse() const {
  if (!is_parameter_free()) {
    throw ValidationError("ParamCircuit::inverse: circuit has free parameters");
  }
  ParamCircuit out(num_qubits_);
  for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
    GateOp op = *it;
    if (const auto* a = std::get_if<double>(&op.angle)) op.angle = -*a;
    out.ops_.push_back(std::move(op));
  }
  return out;
}

void apply_circuit(const ParamCircuit& circ, std::span<const double> theta, StateVector& state) {
  if (theta.size() != circ.num_params()) {
    throw ValidationError("simulate: expected " + std::to_string(circ.num_params()) +
                          " angles, got " + std::to_string(theta.size()));
  }
  if (state.num_qubits() != circ.num_qubits()) {
    throw ValidationError("simulate: state and circuit qubit counts differ");
  }
  auto amps = state.amplitudes();
  for (const GateOp& op : circ.ops()) {
    const auto& q = op.qubits;
    switch (op.kind) {
      case GateKind::kH: detail::apply_h_unchecked(amps, q[0]); break;
      case GateKind::kX: detail::apply_x_unchecked(amps, q[0]); break;
      case GateKind::kRY:
      case GateKind::kRZ: {
        const double angle = std::holds_alternative<double>(op.angle)
                                 ? std::get<double>(op.angle)
                                 : theta[std::get<ParamSlot>(op.angle).index];
        if (op.kind == GateKind::kRY) {
          detail::apply_ry_unchecked(amps, q[0], angle);
        } else {
          detail::apply_rz_unchecked(amps, q[0], angle);
        }
        break;
      }
      case GateKind::kCX:
        detail::apply_mcx_unchecked(amps, std::uint64_t{1} << q[0], q[1]);
        break;
      case GateKind::kCZ: detail::apply_cz_unchecked(amps, q[0], q[1]); break;
      case GateKind::kMCX: {
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i + 1 < q.size(); ++i) mask |= std::uint64_t{1} << q[i];
        detail::apply_mcx_unchecked(amps, mask, q.back());
        break;
      }
    }
  }
}

void simulate_into(const ParamCircuit& circ, std::span<const double> theta, StateVector& out) {
  out.reset();
  apply_circuit(circ, theta, out);
}

StateVector simulate(const ParamCircuit& circ, std::span<const double> theta) {
  StateVector state(circ.num_qubits());
  apply_circuit(circ, theta, state);
  return state;
}

ParamCircuit efficient_su2(int num_qubits, int reps) {
  if (reps < 0) {
    throw ValidationError("efficient_su2: reps must be >= 0");
  }
  ParamCircuit circ(num_qubits);
  for (int layer = 0; layer <= reps; ++layer) {
    for (int q = 0; q < num_qubits; ++q) circ.ry(q);
    for (int q = 0; q < num_qubits; ++q) circ.rz(q);
    if (layer == reps) break;
    for (int i = num_qubits - 2; i >= 0; --i) circ.cx(i, i + 1);
  }
  return circ;
}

ParamCircuit refine(const ParamCircuit& circ, RefineOrder order) {
  const int n = circ.num_qubits();
  ParamCircuit out = circ.embed(n + 1, 1);
  out.h(0);
  for (int k = 0; k < n; ++k) {
    const int old = order == RefineOrder::kAscending ? k + 1 : n - k;
    out.cz(old, 0);
    out.ry(0);
    out.cz(old, 0);
  }
  return out;
}

ParamCircuit increment_circuit(int num_qubits) {
  ParamCircuit circ(num_qubits);
  for (int target = num_qubits - 1; target >= 1; --target) {
    std::vector<int> controls;
    for (int c = 0; c < target; ++c) controls.push_back(c);
    if (controls.size() == 1) {
      circ.cx(controls[0], target);
    } else {
      circ.mcx(std::move(controls), target);
    }
  }
  circ.x(0);
  return circ;
}

std::size_t multigrid_param_count(int seed_qubits, std::size_t seed_params, int num_qubits) {
  if (seed_qubits < 1 || num_qubits < seed_qubits) {
    throw ValidationError("multigrid_param_count: requires n >= m >= 1");
  }
  const long long n = num_qubits;
  const long long m = seed_qubits;
  return seed_params + static_cast<std::size_t>((n * n - n - m * m + m) / 2);
}

GateCounts count_gates(const ParamCircuit& circ) {
  GateCounts c;
  for (const GateOp& op : circ.ops()) {
    switch (op.kind) {
      case GateKind::kH: ++c.h; break;
      case GateKind::kX: ++c.x; break;
      case GateKind::kRY: ++c.ry; break;
      case GateKind::kRZ: ++c.rz; break;
      case GateKind::kCX: ++c.cx; break;
      case GateKind::kCZ: ++c.cz; break;
      case GateKind::kMCX: ++c.mcx; break;
    }
  }
  return c;
}

std::string to_text(const ParamCircuit& circ) {
  std::ostringstream os;
  os.precision(17);
  for (const GateOp& op : circ.ops()) {
    os << gate_name(op.kind);
    for (int q : op.qubits) os << ' ' << q;
    if (const auto* slot = std::get_if<ParamSlot>(&op.angle)) {
      os << " p" << slot->index;
    } else if (const auto* a = std::get_if<double>(&op.angle)) {
      os << " a" << *a;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace mgvqe
