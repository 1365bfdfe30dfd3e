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
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace mgvqe {

enum class Pauli : std::uint8_t { kI, kX, kY, kZ };

/// Weighted tensor product of single-qubit Paulis. letters[q] acts on qubit q.
struct PauliString {
  std::vector<Pauli> letters;
  double weight = 1.0;

  int num_qubits() const { return static_cast<int>(letters.size()); }
  bool is_identity() const;

  /// Parses text such as "XIZ" where character q is the letter on qubit q.
  static PauliString parse(std::string_view text, double weight = 1.0);
  std::string to_string() const;

  /// Letter assignment on a register of `num_qubits`, with `letter` on each
  /// qubit of `qubits` and I elsewhere.
  static PauliString on(int num_qubits, std::span<const int> qubits, Pauli letter,
                        double weight = 1.0);

  friend bool operator==(const PauliString&, const PauliString&) = default;
};

/// True if on every qubit the non-identity letters of `a` and `b` agree.
bool qubitwise_compatible(const PauliString& a, const PauliString& b);

/// Sums weights of strings with identical letters, keeping first-seen order
/// and dropping strings whose total weight is exactly zero.
std::vector<PauliString> merge_like_terms(std::span<const PauliString> strings);

/// Dense matrix of a weighted Pauli sum built directly from the single-qubit
/// matrices. Intended as an oracle for small registers.
Eigen::MatrixXcd pauli_sum_dense(std::span<const PauliString> strings);

}  // namespace mgvqe
