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

#include "mgvqe/hamiltonian.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "mgvqe/errors.hpp"

namespace mgvqe {

double MeasuredTerm::value(std::uint64_t outcome) const {
  if ((outcome & zero_mask) != 0) return 0.0;
  return (std::popcount(outcome & sign_mask) & 1) ? -weight : weight;
}

MeasurementFrame::MeasurementFrame(ParamCircuit conjugation, std::vector<MeasureBasis> basis,
                                   std::vector<MeasuredTerm> terms)
    : conjugation_(std::move(conjugation)),
      conjugation_inverse_(conjugation_.inverse()),
      basis_(std::move(basis)),
      terms_(std::move(terms)) {
  const int n = conjugation_.num_qubits();
  if (basis_.size() != static_cast<std::size_t>(n)) {
    throw ValidationError("MeasurementFrame: basis assignment must cover every qubit");
  }
  const std::uint64_t all = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (const MeasuredTerm& t : terms_) {
    if ((t.sign_mask & t.zero_mask) != 0) {
      throw ValidationError("MeasuredTerm: sign and zero masks overlap");
    }
    if (((t.sign_mask | t.zero_mask) & ~all) != 0) {
      throw ValidationError("MeasuredTerm: mask references a qubit outside the register");
    }
    if (!std::isfinite(t.weight)) {
      throw ValidationError("MeasuredTerm: non-finite weight");
    }
  }
  if (n <= kMaxTabulatedQubits) {
    table_.assign(std::size_t{1} << n, 0.0);
    for (std::size_t b = 0; b < table_.size(); ++b) {
      double v = 0.0;
      for (const MeasuredTerm& t : terms_) v += t.value(b);
      table_[b] = v;
    }
  }
}

double MeasurementFrame::outcome_value(std::uint64_t outcome) const {
  if (!table_.empty()) return table_[outcome];
  double v = 0.0;
  for (const MeasuredTerm& t : terms_) v += t.value(outcome);
  return v;
}

void MeasurementFrame::rotate_in(StateVector& state) const {
  apply_circuit(conjugation_, {}, state);
  auto amps = state.amplitudes();
  for (int q = 0; q < num_qubits(); ++q) {
    switch (basis_[q]) {
      case MeasureBasis::kZ: break;
      case MeasureBasis::kX: detail::apply_h_unchecked(amps, q); break;
      case MeasureBasis::kY:
        detail::apply_1q_unchecked(amps, q, Unitary2x2::s_dagger());
        detail::apply_h_unchecked(amps, q);
        break;
    }
  }
}

void MeasurementFrame::rotate_out(StateVector& state) const {
  auto amps = state.amplitudes();
  for (int q = 0; q < num_qubits(); ++q) {
    switch (basis_[q]) {
      case MeasureBasis::kZ: break;
      case MeasureBasis::kX: detail::apply_h_unchecked(amps, q); break;
      case MeasureBasis::kY:
        detail::apply_h_unchecked(amps, q);
        detail::apply_1q_unchecked(amps, q, Unitary2x2::s());
        break;
    }
  }
  apply_circuit(conjugation_inverse_, {}, state);
}

bool MeasurementFrame::is_diagonal() const {
  if (!conjugation_.empty()) return false;
  for (MeasureBasis b : basis_) {
    if (b != MeasureBasis::kZ) return false;
  }
  return true;
}

MeasurementFrame MeasurementFrame::scaled(double factor) const {
  std::vector<MeasuredTerm> terms = terms_;
  for (MeasuredTerm& t : terms) t.weight *= factor;
  return MeasurementFrame(conjugation_, basis_, std::move(terms));
}

Hamiltonian::Hamiltonian(int num_qubits, double offset)
    : num_qubits_(num_qubits), offset_(offset) {
  if (num_qubits < 1 || num_qubits > StateVector::kMaxQubits) {
    throw CapacityError("Hamiltonian: qubit count out of range");
  }
}

void Hamiltonian::add_frame(MeasurementFrame frame) {
  if (frame.num_qubits() != num_qubits_) {
    throw ValidationError("Hamiltonian: frame register size differs");
  }
  frames_.push_back(std::move(frame));
}

Hamiltonian Hamiltonian::scaled(double factor) const {
  Hamiltonian out(num_qubits_, offset_ * factor);
  for (const MeasurementFrame& f : frames_) out.add_frame(f.scaled(factor));
  return out;
}

namespace {

void check_dimensions(const Hamiltonian& h, const StateVector& psi) {
  if (h.num_qubits() != psi.num_qubits()) {
    throw ValidationError("expectation: Hamiltonian has " + std::to_string(h.num_qubits()) +
                          " qubits, state has " + std::to_string(psi.num_qubits()));
  }
}

}  // namespace

double expectation_exact(const Hamiltonian& h, const StateVector& psi) {
  check_dimensions(h, psi);
  double total = h.offset();
  StateVector work = psi;
  for (const MeasurementFrame& frame : h.frames()) {
    if (frame.is_diagonal()) {
      const auto amps = psi.amplitudes();
      for (std::size_t b = 0; b < amps.size(); ++b) total += std::norm(amps[b]) * frame.outcome_value(b);
      continue;
    }
    std::copy(psi.amplitudes().begin(), psi.amplitudes().end(), work.amplitudes().begin());
    frame.rotate_in(work);
    const auto amps = work.amplitudes();
    for (std::size_t b = 0; b < amps.size(); ++b) total += std::norm(amps[b]) * frame.outcome_value(b);
  }
  return total;
}

double expectation_sampled(const Hamiltonian& h, const StateVector& psi, std::size_t shots,
                           Rng& rng) {
  check_dimensions(h, psi);
  const std::size_t num_frames = h.frames().size();
  if (num_frames == 0) return h.offset();
  if (shots < num_frames) {
    throw ValidationError("expectation_sampled: need at least one shot per frame (" +
                          std::to_string(num_frames) + " frames)");
  }
  const std::size_t base = shots / num_frames;
  const std::size_t extra = shots % num_frames;
  double total = h.offset();
  StateVector work = psi;
  for (std::size_t f = 0; f < num_frames; ++f) {
    const MeasurementFrame& frame = h.frames()[f];
    const std::size_t frame_shots = base + (f < extra ? 1 : 0);
    std::copy(psi.amplitudes().begin(), psi.amplitudes().end(), work.amplitudes().begin());
    frame.rotate_in(work);
    const std::vector<std::size_t> counts = sample_counts(work, frame_shots, rng);
    double acc = 0.0;
    for (std::size_t b = 0; b < counts.size(); ++b) {
      if (counts[b] != 0) acc += static_cast<double>(counts[b]) * frame.outcome_value(b);
    }
    total += acc / static_cast<double>(frame_shots);
  }
  return total;
}

std::vector<Complex> apply_hamiltonian(const Hamiltonian& h, const StateVector& psi) {
  check_dimensions(h, psi);
  std::vector<Complex> out(psi.dimension());
  const auto in = psi.amplitudes();
  for (std::size_t b = 0; b < out.size(); ++b) out[b] = h.offset() * in[b];
  StateVector work = psi;
  for (const MeasurementFrame& frame : h.frames()) {
    std::copy(in.begin(), in.end(), work.amplitudes().begin());
    frame.rotate_in(work);
    auto amps = work.amplitudes();
    for (std::size_t b = 0; b < amps.size(); ++b) amps[b] *= frame.outcome_value(b);
    frame.rotate_out(work);
    for (std::size_t b = 0; b < out.size(); ++b) out[b] += amps[b];
  }
  return out;
}

Eigen::MatrixXcd to_dense(const Hamiltonian& h) {
  if (h.num_qubits() > 12) {
    throw CapacityError("to_dense: at most 12 qubits");
  }
  const std::size_t dim = std::size_t{1} << h.num_qubits();
  Eigen::MatrixXcd m(dim, dim);
  std::vector<Complex> basis(dim);
  for (std::size_t col = 0; col < dim; ++col) {
    std::fill(basis.begin(), basis.end(), Complex{});
    basis[col] = 1.0;
    const std::vector<Complex> image = apply_hamiltonian(h, StateVector::from_amplitudes(basis));
    for (std::size_t row = 0; row < dim; ++row) m(row, col) = image[row];
  }
  return m;
}

double diagonal_entry(const Hamiltonian& h, std::uint64_t basis_index) {
  if (basis_index >= (std::uint64_t{1} << h.num_qubits())) {
    throw std::out_of_range("diagonal_entry: basis index out of range");
  }
  double v = h.offset();
  for (const MeasurementFrame& frame : h.frames()) {
    if (!frame.is_diagonal()) {
      throw ValidationError("diagonal_entry: Hamiltonian has a non-diagonal frame");
    }
    v += frame.outcome_value(basis_index);
  }
  return v;
}

namespace {

struct FrameBuilder {
  std::vector<Pauli> setting;
  std::vector<MeasuredTerm> terms;
};

MeasureBasis basis_of(Pauli p) {
  switch (p) {
    case Pauli::kX: return MeasureBasis::kX;
    case Pauli::kY: return MeasureBasis::kY;
    default: return MeasureBasis::kZ;
  }
}

}  // namespace

std::vector<MeasurementFrame> group_commuting(std::span<const PauliString> strings) {
  std::vector<FrameBuilder> groups;
  int n = -1;
  for (const PauliString& s : strings) {
    if (n < 0) n = s.num_qubits();
    if (s.num_qubits() != n) {
      throw ValidationError("group_commuting: strings have different lengths");
    }
    PauliString as_setting{s.letters, 1.0};
    FrameBuilder* target = nullptr;
    for (FrameBuilder& g : groups) {
      if (qubitwise_compatible(PauliString{g.setting, 1.0}, as_setting)) {
        target = &g;
        break;
      }
    }
    if (target == nullptr) {
      groups.push_back({std::vector<Pauli>(n, Pauli::kI), {}});
      target = &groups.back();
    }
    MeasuredTerm term{s.weight, 0, 0};
    for (int q = 0; q < n; ++q) {
      if (s.letters[q] == Pauli::kI) continue;
      target->setting[q] = s.letters[q];
      term.sign_mask |= std::uint64_t{1} << q;
    }
    target->terms.push_back(term);
  }
  std::vector<MeasurementFrame> frames;
  frames.reserve(groups.size());
  for (FrameBuilder& g : groups) {
    std::vector<MeasureBasis> basis(n);
    for (int q = 0; q < n; ++q) basis[q] = basis_of(g.setting[q]);
    frames.emplace_back(ParamCircuit(n), std::move(basis), std::move(g.terms));
  }
  return frames;
}

Hamiltonian hamiltonian_from_paulis(int num_qubits, std::span<const PauliString> strings) {
  Hamiltonian h(num_qubits);
  std::vector<PauliString> non_identity;
  for (const PauliString& s : strings) {
    if (s.num_qubits() != num_qubits) {
      throw ValidationError("hamiltonian_from_paulis: string length differs from register");
    }
    if (s.is_identity()) {
      h.add_offset(s.weight);
    } else {
      non_identity.push_back(s);
    }
  }
  for (MeasurementFrame& f : group_commuting(non_identity)) h.add_frame(std::move(f));
  return h;
}

std::vector<PauliString> pauli_expand_projector_term(int num_qubits) {
  if (num_qubits < 2) {
    throw ValidationError("pauli_expand_projector_term: requires n >= 2");
  }
  if (num_qubits > 30) {
    throw CapacityError("pauli_expand_projector_term: expansion too large");
  }
  const int projector_qubits = num_qubits - 1;
  const double weight = std::ldexp(1.0, -projector_qubits);
  std::vector<PauliString> out;
  out.reserve(std::size_t{1} << projector_qubits);
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << projector_qubits); ++subset) {
    PauliString s;
    s.weight = weight;
    s.letters.assign(num_qubits, Pauli::kI);
    s.letters[0] = Pauli::kX;
    for (int j = 0; j < projector_qubits; ++j) {
      if ((subset >> j) & 1) s.letters[j + 1] = Pauli::kZ;
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace mgvqe
