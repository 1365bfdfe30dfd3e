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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mgvqe/circuit.hpp"
#include "mgvqe/errors.hpp"

namespace mgvqe {
namespace {

std::vector<double> random_angles(std::size_t count, Rng& rng) {
  std::vector<double> theta(count);
  for (double& t : theta) t = 2 * std::numbers::pi * rng.uniform();
  return theta;
}

double distance(const StateVector& a, const StateVector& b) {
  double d2 = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) d2 += std::norm(a[i] - b[i]);
  return std::sqrt(d2);
}

TEST(Simulate, EmptyCircuitGivesZeroState) {
  const StateVector s = simulate(ParamCircuit(2), {});
  EXPECT_EQ(s[0], Complex(1.0));
}

TEST(Simulate, SingleHadamard) {
  ParamCircuit c(1);
  c.h(0);
  const StateVector s = simulate(c, {});
  EXPECT_NEAR(s[0].real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(s[1].real(), 1 / std::sqrt(2.0), 1e-15);
}

TEST(Simulate, ThetaLengthMismatch) {
  ParamCircuit c(1);
  c.ry(0);
  const std::vector<double> wrong(2, 0.0);
  EXPECT_THROW(simulate(c, wrong), ValidationError);
}

TEST(Simulate, MatchesGateByGateApplication) {
  Rng rng(4);
  const ParamCircuit c = efficient_su2(3, 2);
  const auto theta = random_angles(c.num_params(), rng);
  StateVector manual(3);
  for (const GateOp& op : c.ops()) {
    switch (op.kind) {
      case GateKind::kRY:
        apply_1q(manual, op.qubits[0],
                 Unitary2x2::ry(theta[std::get<ParamSlot>(op.angle).index]));
        break;
      case GateKind::kRZ:
        apply_1q(manual, op.qubits[0],
                 Unitary2x2::rz(theta[std::get<ParamSlot>(op.angle).index]));
        break;
      case GateKind::kCX: {
        const int ctrl[] = {op.qubits[0]};
        apply_controlled(manual, ctrl, op.qubits[1], Unitary2x2::pauli_x());
        break;
      }
      default:
        FAIL() << "unexpected gate";
    }
  }
  EXPECT_LT(distance(simulate(c, theta), manual), 1e-13);
}

TEST(EfficientSU2, ZeroAnglesGiveZeroState) {
  const ParamCircuit c = efficient_su2(2, 3);
  const StateVector s = simulate(c, std::vector<double>(c.num_params(), 0.0));
  EXPECT_NEAR(std::abs(s[0]), 1.0, 1e-15);
}

TEST(EfficientSU2, ParameterAndGateCounts) {
  EXPECT_EQ(efficient_su2(2, 3).num_params(), 16u);
  const GateCounts one = count_gates(efficient_su2(1, 3));
  EXPECT_EQ(efficient_su2(1, 3).num_params(), 8u);
  EXPECT_EQ(one.cx, 0u);
  const ParamCircuit four = efficient_su2(4, 3);
  EXPECT_EQ(four.num_params(), 32u);
  const GateCounts c4 = count_gates(four);
  EXPECT_EQ(c4.cx, 9u);
  EXPECT_EQ(c4.ry, 16u);
  EXPECT_EQ(c4.rz, 16u);
  for (int n = 1; n <= 6; ++n) {
    for (int reps = 0; reps <= 4; ++reps) {
      EXPECT_EQ(efficient_su2(n, reps).num_params(), static_cast<std::size_t>(2 * n * (reps + 1)));
    }
  }
}

TEST(EfficientSU2, EntanglingBlockOrder) {
  const ParamCircuit c = efficient_su2(4, 1);
  std::vector<std::pair<int, int>> cx;
  for (const GateOp& op : c.ops()) {
    if (op.kind == GateKind::kCX) cx.emplace_back(op.qubits[0], op.qubits[1]);
  }
  const std::vector<std::pair<int, int>> want = {{2, 3}, {1, 2}, {0, 1}};
  EXPECT_EQ(cx, want);
}

TEST(Refine, AddsOneParameterPerOldQubit) {
  ParamCircuit c = efficient_su2(2, 3);
  c = refine(c);
  EXPECT_EQ(c.num_qubits(), 3);
  EXPECT_EQ(c.num_params(), 18u);
  c = refine(c);
  EXPECT_EQ(c.num_params(), 21u);
}

TEST(Refine, SeedSixteenReachesSixtyAtTenQubits) {
  ParamCircuit c = efficient_su2(2, 3);
  while (c.num_qubits() < 10) c = refine(c);
  EXPECT_EQ(c.num_params(), 60u);
}

TEST(Refine, LayerStructure) {
  const ParamCircuit fine = refine(efficient_su2(2, 0));
  const auto& ops = fine.ops();
  const std::size_t old_ops = efficient_su2(2, 0).ops().size();
  ASSERT_EQ(ops.size(), old_ops + 1 + 3 * 2);
  for (std::size_t i = 0; i < old_ops; ++i) {
    for (int q : ops[i].qubits) EXPECT_GE(q, 1);
  }
  EXPECT_EQ(ops[old_ops].kind, GateKind::kH);
  EXPECT_EQ(ops[old_ops].qubits, std::vector<int>{0});
  for (int i = 0; i < 2; ++i) {
    const std::size_t base = old_ops + 1 + 3 * i;
    EXPECT_EQ(ops[base].kind, GateKind::kCZ);
    EXPECT_EQ(ops[base].qubits, (std::vector<int>{i + 1, 0}));
    EXPECT_EQ(ops[base + 1].kind, GateKind::kRY);
    EXPECT_EQ(ops[base + 1].qubits, std::vector<int>{0});
    EXPECT_EQ(ops[base + 2].kind, GateKind::kCZ);
  }
}

class RefineInterpolation : public ::testing::TestWithParam<RefineOrder> {};

TEST_P(RefineInterpolation, ZeroNewAnglesDuplicateAmplitudes) {
  Rng rng(21);
  ParamCircuit coarse = efficient_su2(2, 3);
  for (int n = 2; n <= 7; ++n) {
    const ParamCircuit fine = refine(coarse, GetParam());
    for (int trial = 0; trial < 10; ++trial) {
      auto theta = random_angles(coarse.num_params(), rng);
      const StateVector old_state = simulate(coarse, theta);
      theta.resize(fine.num_params(), 0.0);
      const StateVector new_state = simulate(fine, theta);
      for (std::uint64_t b = 0; b < old_state.dimension(); ++b) {
        const Complex want = old_state[b] / std::sqrt(2.0);
        EXPECT_LT(std::abs(new_state[2 * b] - want), 1e-12);
        EXPECT_LT(std::abs(new_state[2 * b + 1] - want), 1e-12);
      }
    }
    coarse = fine;
  }
}

INSTANTIATE_TEST_SUITE_P(Orders, RefineInterpolation,
                         ::testing::Values(RefineOrder::kAscending, RefineOrder::kDescending),
                         [](const auto& info) {
                           return info.param == RefineOrder::kAscending ? "Ascending"
                                                                        : "Descending";
                         });

TEST(Refine, NonzeroNewAnglesChangeTheState) {
  const ParamCircuit coarse = efficient_su2(2, 3);
  const ParamCircuit fine = refine(coarse);
  Rng rng(2);
  auto theta = random_angles(fine.num_params(), rng);
  const StateVector moved = simulate(fine, theta);
  std::fill(theta.begin() + 16, theta.end(), 0.0);
  EXPECT_GT(distance(moved, simulate(fine, theta)), 1e-3);
}

TEST(ParamCount, Formula) {
  EXPECT_EQ(multigrid_param_count(2, 16, 10), 60u);
  EXPECT_EQ(multigrid_param_count(2, 16, 2), 16u);
  EXPECT_EQ(multigrid_param_count(3, 24, 5), 31u);
  EXPECT_THROW(multigrid_param_count(3, 24, 2), ValidationError);
  ParamCircuit c = efficient_su2(3, 3);
  for (int n = 4; n <= 9; ++n) {
    c = refine(c);
    EXPECT_EQ(c.num_params(), multigrid_param_count(3, 24, n));
  }
}

TEST(Increment, SingleQubitIsX) {
  const ParamCircuit inc = increment_circuit(1);
  ASSERT_EQ(inc.ops().size(), 1u);
  EXPECT_EQ(inc.ops()[0].kind, GateKind::kX);
  StateVector s(1);
  apply_circuit(inc, {}, s);
  EXPECT_EQ(s[1], Complex(1.0));
}

TEST(Increment, SevenWrapsToZero) {
  StateVector s(3);
  s[0] = 0.0;
  s[7] = 1.0;
  apply_circuit(increment_circuit(3), {}, s);
  EXPECT_EQ(s[0], Complex(1.0));
}

TEST(Increment, MatchesPermutationOnEveryBasisState) {
  for (int n = 1; n <= 8; ++n) {
    const ParamCircuit inc = increment_circuit(n);
    EXPECT_TRUE(inc.is_parameter_free());
    const auto perm = increment_permutation(n);
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
      StateVector via_circuit(n), via_perm(n);
      via_circuit[0] = via_perm[0] = 0.0;
      via_circuit[b] = via_perm[b] = 1.0;
      apply_circuit(inc, {}, via_circuit);
      apply_permutation(via_perm, perm);
      ASSERT_EQ(distance(via_circuit, via_perm), 0.0) << "n=" << n << " b=" << b;
    }
  }
}

TEST(Increment, InverseDecrements) {
  const ParamCircuit dec = increment_circuit(4).inverse();
  StateVector s(4);
  apply_circuit(dec, {}, s);
  EXPECT_EQ(s[15], Complex(1.0));
}

TEST(ParamCircuit, InverseRejectsParameters) {
  ParamCircuit c(1);
  c.ry(0);
  EXPECT_THROW(c.inverse(), ValidationError);
}

TEST(ParamCircuit, QubitValidation) {
  ParamCircuit c(2);
  EXPECT_THROW(c.h(2), std::out_of_range);
  EXPECT_THROW(c.cx(1, 1), ValidationError);
  EXPECT_THROW(c.mcx({0, 0}, 1), ValidationError);
  EXPECT_THROW(c.append(GateOp{GateKind::kRY, {0}, ParamSlot{3}}), ValidationError);
}

TEST(ParamCircuit, EverySlotReferenced) {
  const ParamCircuit c = refine(refine(efficient_su2(2, 3)));
  std::vector<int> refs(c.num_params(), 0);
  for (const GateOp& op : c.ops()) {
    if (const auto* slot = std::get_if<ParamSlot>(&op.angle)) ++refs[slot->index];
    for (int q : op.qubits) EXPECT_LT(q, c.num_qubits());
  }
  for (int r : refs) EXPECT_GE(r, 1);
}

TEST(ParamCircuit, FixedRotations) {
  ParamCircuit c(1);
  c.ry_fixed(0, std::numbers::pi);
  EXPECT_EQ(c.num_params(), 0u);
  const StateVector s = simulate(c, {});
  EXPECT_NEAR(std::abs(s[1]), 1.0, 1e-15);
}

TEST(ParamCircuit, TextDump) {
  ParamCircuit c(3);
  c.h(0);
  c.ry(1);
  c.rz_fixed(2, 0.5);
  c.cx(0, 2);
  c.mcx({0, 1}, 2);
  EXPECT_EQ(to_text(c), "H 0\nRY 1 p0\nRZ 2 a0.5\nCX 0 2\nMCX 0 1 2\n");
}

}  // namespace
}  // namespace mgvqe
