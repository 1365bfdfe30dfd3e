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

#include "mgvqe/pauli.hpp"

#include <algorithm>
#include <complex>
#include <map>

#include "mgvqe/errors.hpp"

namespace mgvqe {

bool PauliString::is_identity() const {
  return std::all_of(letters.begin(), letters.end(), [](Pauli p) { return p == Pauli::kI; });
}

PauliString PauliString::parse(std::string_view text, double weight) {
  PauliString out;
  out.weight = weight;
  out.letters.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'I': case '_': out.letters.push_back(Pauli::kI); break;
      case 'X': out.letters.push_back(Pauli::kX); break;
      case 'Y': out.letters.push_back(Pauli::kY); break;
      case 'Z': out.letters.push_back(Pauli::kZ); break;
      default: throw ValidationError(std::string("PauliString: bad letter '") + c + "'");
    }
  }
  return out;
}

std::string PauliString::to_string() const {
  std::string s;
  for (Pauli p : letters) s.push_back("IXYZ"[static_cast<int>(p)]);
  return s;
}

PauliString PauliString::on(int num_qubits, std::span<const int> qubits, Pauli letter,
                            double weight) {
  PauliString out;
  out.letters.assign(num_qubits, Pauli::kI);
  out.weight = weight;
  for (int q : qubits) {
    if (q < 0 || q >= num_qubits) throw std::out_of_range("PauliString::on: qubit out of range");
    out.letters[q] = letter;
  }
  return out;
}

bool qubitwise_compatible(const PauliString& a, const PauliString& b) {
  if (a.letters.size() != b.letters.size()) return false;
  for (std::size_t q = 0; q < a.letters.size(); ++q) {
    const Pauli x = a.letters[q];
    const Pauli y = b.letters[q];
    if (x != Pauli::kI && y != Pauli::kI && x != y) return false;
  }
  return true;
}

std::vector<PauliString> merge_like_terms(std::span<const PauliString> strings) {
  std::vector<PauliString> out;
  std::map<std::vector<Pauli>, std::size_t> index;
  for (const PauliString& s : strings) {
    auto [it, inserted] = index.try_emplace(s.letters, out.size());
    if (inserted) {
      out.push_back(s);
    } else {
      out[it->second].weight += s.weight;
    }
  }
  std::erase_if(out, [](const PauliString& s) { return s.weight == 0.0; });
  return out;
}

Eigen::MatrixXcd pauli_sum_dense(std::span<const PauliString> strings) {
  if (strings.empty()) {
    throw ValidationError("pauli_sum_dense: empty sum has no register size");
  }
  const int n = strings.front().num_qubits();
  if (n > 12) throw CapacityError("pauli_sum_dense: register too large");
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  const std::complex<double> i1(0.0, 1.0);
  for (const PauliString& s : strings) {
    if (s.num_qubits() != n) throw ValidationError("pauli_sum_dense: mixed register sizes");
    for (Eigen::Index col = 0; col < dim; ++col) {
      // Column `col` of P is a single basis vector times a phase.
      Eigen::Index row = col;
      std::complex<double> phase = s.weight;
      for (int q = 0; q < n; ++q) {
        const bool bit = (col >> q) & 1;
        switch (s.letters[q]) {
          case Pauli::kI: break;
          case Pauli::kX: row ^= Eigen::Index{1} << q; break;
          case Pauli::kY:
            row ^= Eigen::Index{1} << q;
            phase *= bit ? -i1 : i1;
            break;
          case Pauli::kZ:
            if (bit) phase = -phase;
            break;
        }
      }
      out(row, col) += phase;
    }
  }
  return out;
}

}  // namespace mgvqe
