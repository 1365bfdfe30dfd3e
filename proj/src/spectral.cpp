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

#include "mgvqe/spectral.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "mgvqe/errors.hpp"

namespace mgvqe {

double lowest_eigenvalue(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw ValidationError("lowest_eigenvalue: matrix must be square and non-empty");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("lowest_eigenvalue: eigensolver did not converge");
  }
  return solver.eigenvalues()(0);
}

namespace {

// Solves (T - shift I) x = rhs for symmetric tridiagonal T by the Thomas
// algorithm. Stable here because shift lies below the spectrum, which makes
// T - shift I positive definite.
Eigen::VectorXd solve_shifted(const Eigen::VectorXd& d, const Eigen::VectorXd& e, double shift,
                              const Eigen::VectorXd& rhs) {
  const Eigen::Index n = d.size();
  Eigen::VectorXd c(n), x(n);
  double denom = d(0) - shift;
  c(0) = n > 1 ? e(0) / denom : 0.0;
  x(0) = rhs(0) / denom;
  for (Eigen::Index i = 1; i < n; ++i) {
    denom = (d(i) - shift) - e(i - 1) * c(i - 1);
    if (i + 1 < n) c(i) = e(i) / denom;
    x(i) = (rhs(i) - e(i - 1) * x(i - 1)) / denom;
  }
  for (Eigen::Index i = n - 2; i >= 0; --i) x(i) -= c(i) * x(i + 1);
  return x;
}

}  // namespace

Eigenpair tridiagonal_ground_state(const Eigen::VectorXd& diagonal,
                                   const Eigen::VectorXd& off_diagonal) {
  const Eigen::Index n = diagonal.size();
  if (n == 0 || off_diagonal.size() != n - 1) {
    throw ValidationError("tridiagonal_ground_state: inconsistent band sizes");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diagonal, off_diagonal, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("tridiagonal_ground_state: eigensolver did not converge");
  }
  Eigenpair out;
  out.value = solver.eigenvalues()(0);
  if (n == 1) {
    out.vector = Eigen::VectorXd::Ones(1);
    return out;
  }
  // Inverse iteration with a shift just below the computed eigenvalue.
  const double scale = diagonal.cwiseAbs().maxCoeff() + 2.0 * off_diagonal.cwiseAbs().maxCoeff();
  const double shift = out.value - 1e-12 * std::max(1.0, scale);
  Eigen::VectorXd v = Eigen::VectorXd::Ones(n) / std::sqrt(static_cast<double>(n));
  for (int iter = 0; iter < 4; ++iter) {
    v = solve_shifted(diagonal, off_diagonal, shift, v);
    v.normalize();
  }
  if (v.sum() < 0) v = -v;
  out.vector = v;
  return out;
}

std::optional<TridiagonalBands> tridiagonal_bands(const Hamiltonian& h, double tol) {
  if (h.num_qubits() > 16) {
    throw CapacityError("tridiagonal_bands: at most 16 qubits");
  }
  const std::size_t dim = std::size_t{1} << h.num_qubits();
  TridiagonalBands bands{Eigen::VectorXd(dim), Eigen::VectorXd(dim - 1)};
  std::vector<Complex> basis(dim);
  std::vector<Complex> upper(dim, Complex{});  // entry (col-1, col)
  for (std::size_t col = 0; col < dim; ++col) {
    std::fill(basis.begin(), basis.end(), Complex{});
    basis[col] = 1.0;
    const std::vector<Complex> image = apply_hamiltonian(h, StateVector::from_amplitudes(basis));
    for (std::size_t row = 0; row < dim; ++row) {
      const bool in_band = row + 1 >= col && row <= col + 1;
      if (!in_band && std::abs(image[row]) > tol) return std::nullopt;
      if (in_band && std::abs(image[row].imag()) > tol) return std::nullopt;
    }
    bands.diagonal(col) = image[col].real();
    if (col > 0) upper[col] = image[col - 1];
    if (col + 1 < dim) bands.off_diagonal(col) = image[col + 1].real();
  }
  for (std::size_t col = 1; col < dim; ++col) {
    if (std::abs(upper[col].real() - bands.off_diagonal(col - 1)) > tol) return std::nullopt;
  }
  return bands;
}

double ground_energy(const Hamiltonian& h) {
  if (h.num_qubits() > 12) {
    throw CapacityError("ground_energy: at most 12 qubits");
  }
  if (auto bands = tridiagonal_bands(h)) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(bands->diagonal, bands->off_diagonal, Eigen::EigenvaluesOnly);
    return solver.eigenvalues()(0);
  }
  return lowest_eigenvalue(to_dense(h));
}

}  // namespace mgvqe
