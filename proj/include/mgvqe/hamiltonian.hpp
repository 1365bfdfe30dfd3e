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
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "mgvqe/circuit.hpp"
#include "mgvqe/pauli.hpp"
#include "mgvqe/rng.hpp"
#include "mgvqe/state_vector.hpp"

namespace mgvqe {

/// Single-qubit measurement setting: Z directly, X after H, Y after S^dagger H.
enum class MeasureBasis : std::uint8_t { kZ, kX, kY };

/// A diagonal observable read off one Z-basis outcome:
///   weight * prod_{j in sign_mask} (1 - 2 bit_j) * prod_{j in zero_mask} [bit_j == 0].
/// The zero mask evaluates |0><0| projectors natively, without expanding them
/// into 2^k Pauli strings.
struct MeasuredTerm {
  double weight = 0.0;
  std::uint64_t sign_mask = 0;
  std::uint64_t zero_mask = 0;

  double value(std::uint64_t outcome) const;
};

/// One measurement setting: the state is conjugated by a parameter-free
/// circuit W, rotated into `basis` qubit by qubit, and every term is read from
/// the same Z-basis outcome. Represents W^dagger B^dagger D B W where D is the
/// diagonal sum of the terms.
class MeasurementFrame {
 public:
  MeasurementFrame(ParamCircuit conjugation, std::vector<MeasureBasis> basis,
                   std::vector<MeasuredTerm> terms);

  int num_qubits() const { return conjugation_.num_qubits(); }
  const ParamCircuit& conjugation() const { return conjugation_; }
  const std::vector<MeasureBasis>& basis() const { return basis_; }
  const std::vector<MeasuredTerm>& terms() const { return terms_; }

  /// Sum of all term values for a Z-basis outcome.
  double outcome_value(std::uint64_t outcome) const;

  /// Applies W then the basis change.
  void rotate_in(StateVector& state) const;
  /// Inverse of rotate_in.
  void rotate_out(StateVector& state) const;

  /// True when the frame needs neither conjugation nor basis change.
  bool is_diagonal() const;

  MeasurementFrame scaled(double factor) const;

 private:
  static constexpr int kMaxTabulatedQubits = 20;

  ParamCircuit conjugation_;
  ParamCircuit conjugation_inverse_;
  std::vector<MeasureBasis> basis_;
  std::vector<MeasuredTerm> terms_;
  std::vector<double> table_;  // outcome -> value, when small enough
};

/// H = sum_frames W^dagger O W + offset * I.
class Hamiltonian {
 public:
  explicit Hamiltonian(int num_qubits, double offset = 0.0);

  int num_qubits() const { return num_qubits_; }
  double offset() const { return offset_; }
  const std::vector<MeasurementFrame>& frames() const { return frames_; }

  void add_frame(MeasurementFrame frame);
  void add_offset(double delta) { offset_ += delta; }

  Hamiltonian scaled(double factor) const;
  Hamiltonian negated() const { return scaled(-1.0); }

 private:
  int num_qubits_;
  double offset_;
  std::vector<MeasurementFrame> frames_;
};

/// <psi|H|psi> by operator action; no sampling.
double expectation_exact(const Hamiltonian& h, const StateVector& psi);

/// Shot-based estimate: `shots` is split evenly over the frames with the
/// remainder going to the earlier frames. Requires shots >= number of frames.
double expectation_sampled(const Hamiltonian& h, const StateVector& psi, std::size_t shots,
                           Rng& rng);

/// H|psi> (unnormalized).
std::vector<Complex> apply_hamiltonian(const Hamiltonian& h, const StateVector& psi);

/// Dense 2^n x 2^n matrix. Throws CapacityError for n > 12.
Eigen::MatrixXcd to_dense(const Hamiltonian& h);

/// <b|H|b> for a Hamiltonian whose frames are all diagonal.
double diagonal_entry(const Hamiltonian& h, std::uint64_t basis_index);

/// Greedy first-fit grouping of strings into qubit-wise compatible frames.
/// Identity strings become constant terms of the first frame they fit.
std::vector<MeasurementFrame> group_commuting(std::span<const PauliString> strings);

/// Hamiltonian over `num_qubits` whose frames come from group_commuting.
Hamiltonian hamiltonian_from_paulis(int num_qubits, std::span<const PauliString> strings);

/// Pauli expansion of the boundary observable |0><0|^{(n-1)} (x) X, with X on
/// qubit 0 and the projectors on qubits 1..n-1: 2^(n-1) strings of weight
/// 2^-(n-1), one per Z-subset of the projector qubits.
std::vector<PauliString> pauli_expand_projector_term(int num_qubits);

}  // namespace mgvqe
