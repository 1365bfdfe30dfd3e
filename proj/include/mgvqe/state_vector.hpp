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

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mgvqe/rng.hpp"

namespace mgvqe {

using Complex = std::complex<double>;

/// Dense single-qubit operator in row-major order: {m00, m01, m10, m11}.
struct Unitary2x2 {
  std::array<Complex, 4> m{Complex{1.0}, Complex{}, Complex{}, Complex{1.0}};

  Unitary2x2 adjoint() const;
  bool is_unitary(double tol = 1e-12) const;

  static Unitary2x2 identity() { return {}; }
  static Unitary2x2 hadamard();
  static Unitary2x2 pauli_x();
  static Unitary2x2 pauli_y();
  static Unitary2x2 pauli_z();
  static Unitary2x2 s();
  static Unitary2x2 s_dagger();
  static Unitary2x2 ry(double theta);
  static Unitary2x2 rz(double theta);
};

/// 2^n complex amplitudes. Qubit j is bit j of the basis index, so qubit 0 is
/// the least-significant bit.
class StateVector {
 public:
  static constexpr int kMaxQubits = 24;

  /// |0...0> on `num_qubits` qubits. Throws CapacityError outside [1, 24].
  explicit StateVector(int num_qubits);

  /// Wraps explicit amplitudes; the length must be a power of two >= 2.
  /// No normalization is applied.
  static StateVector from_amplitudes(std::vector<Complex> amps);

  int num_qubits() const { return num_qubits_; }
  std::size_t dimension() const { return amps_.size(); }

  std::span<const Complex> amplitudes() const { return amps_; }
  std::span<Complex> amplitudes() { return amps_; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }
  Complex& operator[](std::size_t i) { return amps_[i]; }

  double norm() const;

  /// Resets to |0...0> without reallocating.
  void reset();

 private:
  StateVector() = default;

  int num_qubits_ = 0;
  std::vector<Complex> amps_;
};

StateVector zero_state(int num_qubits);

/// Normalized state with real and imaginary parts drawn uniformly from [-1, 1).
StateVector random_state(int num_qubits, Rng& rng);

/// Applies `u` to `qubit`. Throws std::out_of_range for a bad index and
/// ValidationError for a non-unitary `u`.
void apply_1q(StateVector& state, int qubit, const Unitary2x2& u);

/// Applies `u` to `target` on basis states where every control bit is 1.
void apply_controlled(StateVector& state, std::span<const int> controls, int target,
                      const Unitary2x2& u);

/// Moves amplitude b to index perm[b]. `perm` must be a bijection on [0, 2^n).
void apply_permutation(StateVector& state, std::span<const std::uint64_t> perm);

/// The cyclic increment b -> (b + 1) mod 2^n as an explicit table.
std::vector<std::uint64_t> increment_permutation(int num_qubits);

/// Draws `shots` basis indices i.i.d. from |amps|^2.
std::vector<std::uint64_t> sample(const StateVector& state, std::size_t shots, Rng& rng);

/// Per-basis-state outcome counts of `shots` i.i.d. draws (one multinomial
/// draw). Small budgets sample shot by shot; budgets above four times the
/// dimension use sequential conditional binomials, costing O(2^n) per call.
std::vector<std::size_t> sample_counts(const StateVector& state, std::size_t shots, Rng& rng);

namespace detail {
// Unchecked kernels used by the circuit simulator; callers guarantee indices
// are valid and disjoint.
void apply_1q_unchecked(std::span<Complex> amps, int qubit, const Unitary2x2& u);
void apply_ry_unchecked(std::span<Complex> amps, int qubit, double theta);
void apply_rz_unchecked(std::span<Complex> amps, int qubit, double theta);
void apply_x_unchecked(std::span<Complex> amps, int qubit);
void apply_h_unchecked(std::span<Complex> amps, int qubit);
void apply_mcx_unchecked(std::span<Complex> amps, std::uint64_t control_mask, int target);
void apply_cz_unchecked(std::span<Complex> amps, int a, int b);
}  // namespace detail

}  // namespace mgvqe
