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

#include "mgvqe/state_vector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "mgvqe/errors.hpp"

namespace mgvqe {

Unitary2x2 Unitary2x2::adjoint() const {
  return {{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}};
}

bool Unitary2x2::is_unitary(double tol) const {
  // U U^dagger = I
  const Complex a = m[0] * std::conj(m[0]) + m[1] * std::conj(m[1]);
  const Complex b = m[0] * std::conj(m[2]) + m[1] * std::conj(m[3]);
  const Complex d = m[2] * std::conj(m[2]) + m[3] * std::conj(m[3]);
  return std::abs(a - 1.0) <= tol && std::abs(b) <= tol && std::abs(d - 1.0) <= tol;
}

Unitary2x2 Unitary2x2::hadamard() {
  const double r = 1.0 / std::numbers::sqrt2;
  return {{Complex{r}, Complex{r}, Complex{r}, Complex{-r}}};
}

Unitary2x2 Unitary2x2::pauli_x() { return {{Complex{}, Complex{1.0}, Complex{1.0}, Complex{}}}; }

Unitary2x2 Unitary2x2::pauli_y() {
  return {{Complex{}, Complex{0.0, -1.0}, Complex{0.0, 1.0}, Complex{}}};
}

Unitary2x2 Unitary2x2::pauli_z() { return {{Complex{1.0}, Complex{}, Complex{}, Complex{-1.0}}}; }

Unitary2x2 Unitary2x2::s() { return {{Complex{1.0}, Complex{}, Complex{}, Complex{0.0, 1.0}}}; }

Unitary2x2 Unitary2x2::s_dagger() {
  return {{Complex{1.0}, Complex{}, Complex{}, Complex{0.0, -1.0}}};
}

Unitary2x2 Unitary2x2::ry(double theta) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  return {{Complex{c}, Complex{-s}, Complex{s}, Complex{c}}};
}

Unitary2x2 Unitary2x2::rz(double theta) {
  return {{std::polar(1.0, -theta / 2), Complex{}, Complex{}, std::polar(1.0, theta / 2)}};
}

StateVector::StateVector(int num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw CapacityError("StateVector: qubit count " + std::to_string(num_qubits) +
                        " outside [1, " + std::to_string(kMaxQubits) + "]");
  }
  num_qubits_ = num_qubits;
  amps_.assign(std::size_t{1} << num_qubits, Complex{});
  amps_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amps) {
  const std::size_t dim = amps.size();
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw ValidationError("StateVector: amplitude count must be a power of two >= 2");
  }
  const int n = std::countr_zero(dim);
  if (n > kMaxQubits) {
    throw CapacityError("StateVector: too many amplitudes");
  }
  StateVector out;
  out.num_qubits_ = n;
  out.amps_ = std::move(amps);
  return out;
}

double StateVector::norm() const {
  double acc = 0.0;
  for (const Complex& a : amps_) acc += std::norm(a);
  return std::sqrt(acc);
}

void StateVector::reset() {
  std::fill(amps_.begin(), amps_.end(), Complex{});
  amps_[0] = 1.0;
}

StateVector zero_state(int num_qubits) { return StateVector(num_qubits); }

StateVector random_state(int num_qubits, Rng& rng) {
  StateVector state(num_qubits);
  auto amps = state.amplitudes();
  double norm2 = 0.0;
  for (Complex& a : amps) {
    a = Complex(2 * rng.uniform() - 1, 2 * rng.uniform() - 1);
    norm2 += std::norm(a);
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (Complex& a : amps) a *= scale;
  return state;
}

namespace {

void check_qubit(const StateVector& state, int qubit) {
  if (qubit < 0 || qubit >= state.num_qubits()) {
    throw std::out_of_range("qubit index " + std::to_string(qubit) + " out of range for " +
                            std::to_string(state.num_qubits()) + " qubits");
  }
}

// Visits every index whose `bit` is clear, in ascending order.
template <typename F>
inline void for_each_pair(std::size_t dim, int bit, F&& f) {
  const std::size_t stride = std::size_t{1} << bit;
  for (std::size_t hi = 0; hi < dim; hi += 2 * stride) {
    for (std::size_t lo = 0; lo < stride; ++lo) {
      f(hi + lo, hi + lo + stride);
    }
  }
}

}  // namespace

namespace detail {

void apply_1q_unchecked(std::span<Complex> amps, int qubit, const Unitary2x2& u) {
  const auto& m = u.m;
  for_each_pair(amps.size(), qubit, [&](std::size_t i0, std::size_t i1) {
    const Complex a0 = amps[i0];
    const Complex a1 = amps[i1];
    amps[i0] = m[0] * a0 + m[1] * a1;
    amps[i1] = m[2] * a0 + m[3] * a1;
  });
}

void apply_ry_unchecked(std::span<Complex> amps, int qubit, double theta) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  for_each_pair(amps.size(), qubit, [&](std::size_t i0, std::size_t i1) {
    const Complex a0 = amps[i0];
    const Complex a1 = amps[i1];
    amps[i0] = c * a0 - s * a1;
    amps[i1] = s * a0 + c * a1;
  });
}

void apply_rz_unchecked(std::span<Complex> amps, int qubit, double theta) {
  const Complex p0 = std::polar(1.0, -theta / 2);
  const Complex p1 = std::polar(1.0, theta / 2);
  for_each_pair(amps.size(), qubit, [&](std::size_t i0, std::size_t i1) {
    amps[i0] *= p0;
    amps[i1] *= p1;
  });
}

void apply_x_unchecked(std::span<Complex> amps, int qubit) {
  for_each_pair(amps.size(), qubit,
                [&](std::size_t i0, std::size_t i1) { std::swap(amps[i0], amps[i1]); });
}

void apply_h_unchecked(std::span<Complex> amps, int qubit) {
  const double r = 1.0 / std::numbers::sqrt2;
  for_each_pair(amps.size(), qubit, [&](std::size_t i0, std::size_t i1) {
    const Complex a0 = amps[i0];
    const Complex a1 = amps[i1];
    amps[i0] = r * (a0 + a1);
    amps[i1] = r * (a0 - a1);
  });
}

void apply_mcx_unchecked(std::span<Complex> amps, std::uint64_t control_mask, int target) {
  for_each_pair(amps.size(), target, [&](std::size_t i0, std::size_t i1) {
    if ((i0 & control_mask) == control_mask) std::swap(amps[i0], amps[i1]);
  });
}

void apply_cz_unchecked(std::span<Complex> amps, int a, int b) {
  const std::uint64_t mask = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & mask) == mask) amps[i] = -amps[i];
  }
}

}  // namespace detail

void apply_1q(StateVector& state, int qubit, const Unitary2x2& u) {
  check_qubit(state, qubit);
  if (!u.is_unitary()) {
    throw ValidationError("apply_1q: operator is not unitary");
  }
  detail::apply_1q_unchecked(state.amplitudes(), qubit, u);
}

void apply_controlled(StateVector& state, std::span<const int> controls, int target,
                      const Unitary2x2& u) {
  check_qubit(state, target);
  if (!u.is_unitary()) {
    throw ValidationError("apply_controlled: operator is not unitary");
  }
  std::uint64_t mask = 0;
  for (int c : controls) {
    check_qubit(state, c);
    const std::uint64_t bit = std::uint64_t{1} << c;
    if (c == target || (mask & bit) != 0) {
      throw ValidationError("apply_controlled: controls and target must be distinct");
    }
    mask |= bit;
  }
  auto amps = state.amplitudes();
  const auto& m = u.m;
  for_each_pair(amps.size(), target, [&](std::size_t i0, std::size_t i1) {
    if ((i0 & mask) != mask) return;
    const Complex a0 = amps[i0];
    const Complex a1 = amps[i1];
    amps[i0] = m[0] * a0 + m[1] * a1;
    amps[i1] = m[2] * a0 + m[3] * a1;
  });
}

void apply_permutation(StateVector& state, std::span<const std::uint64_t> perm) {
  const std::size_t dim = state.dimension();
  if (perm.size() != dim) {
    throw ValidationError("apply_permutation: table size does not match state dimension");
  }
  std::vector<char> seen(dim, 0);
  for (std::uint64_t target : perm) {
    if (target >= dim || seen[target]) {
      throw ValidationError("apply_permutation: table is not a bijection");
    }
    seen[target] = 1;
  }
  std::vector<Complex> out(dim);
  auto amps = state.amplitudes();
  for (std::size_t b = 0; b < dim; ++b) out[perm[b]] = amps[b];
  std::copy(out.begin(), out.end(), amps.begin());
}

std::vector<std::uint64_t> increment_permutation(int num_qubits) {
  if (num_qubits < 1 || num_qubits > StateVector::kMaxQubits) {
    throw CapacityError("increment_permutation: qubit count out of range");
  }
  const std::uint64_t dim = std::uint64_t{1} << num_qubits;
  std::vector<std::uint64_t> perm(dim);
  for (std::uint64_t b = 0; b < dim; ++b) perm[b] = (b + 1) % dim;
  return perm;
}

std::vector<std::uint64_t> sample(const StateVector& state, std::size_t shots, Rng& rng) {
  if (shots < 1) {
    throw ValidationError("sample: shots must be >= 1");
  }
  const auto amps = state.amplitudes();
  std::vector<double> cumulative(amps.size());
  double total = 0.0;
  for (std::size_t b = 0; b < amps.size(); ++b) {
    total += std::norm(amps[b]);
    cumulative[b] = total;
  }
  std::vector<std::uint64_t> out;
  out.reserve(shots);
  for (std::size_t s = 0; s < shots; ++s) {
    const double u = rng.uniform() * total;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    // Guard against u landing exactly on the total after rounding, and skip
    // zero-probability tail entries.
    std::size_t idx = std::min<std::size_t>(it - cumulative.begin(), amps.size() - 1);
    while (idx > 0 && std::norm(amps[idx]) == 0.0) --idx;
    out.push_back(idx);
  }
  return out;
}

std::vector<std::size_t> sample_counts(const StateVector& state, std::size_t shots, Rng& rng) {
  if (shots < 1) {
    throw ValidationError("sample_counts: shots must be >= 1");
  }
  const auto amps = state.amplitudes();
  std::vector<std::size_t> counts(amps.size(), 0);
  if (shots <= 4 * amps.size()) {
    for (std::uint64_t outcome : sample(state, shots, rng)) ++counts[outcome];
    return counts;
  }
  std::vector<double> tail(amps.size() + 1, 0.0);
  for (std::size_t b = amps.size(); b-- > 0;) tail[b] = tail[b + 1] + std::norm(amps[b]);
  std::size_t remaining = shots;
  for (std::size_t b = 0; b < amps.size() && remaining > 0; ++b) {
    const double p = std::norm(amps[b]);
    if (p == 0.0) continue;
    if (p >= tail[b] || tail[b + 1] == 0.0) {
      counts[b] = remaining;
      break;
    }
    std::binomial_distribution<std::size_t> draw(remaining, p / tail[b]);
    counts[b] = draw(rng);
    remaining -= counts[b];
  }
  return counts;
}

}  // namespace mgvqe
