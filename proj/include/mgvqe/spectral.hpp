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

#include <optional>

#include <Eigen/Dense>

#include "mgvqe/hamiltonian.hpp"

namespace mgvqe {

struct Eigenpair {
  double value = 0.0;
  Eigen::VectorXd vector;  // unit norm, sign fixed so the entry sum is >= 0
};

/// Smallest eigenvalue of a Hermitian matrix.
double lowest_eigenvalue(const Eigen::MatrixXcd& m);

/// Lowest eigenpair of a real symmetric tridiagonal matrix.
Eigenpair tridiagonal_ground_state(const Eigen::VectorXd& diagonal,
                                   const Eigen::VectorXd& off_diagonal);

struct TridiagonalBands {
  Eigen::VectorXd diagonal;
  Eigen::VectorXd off_diagonal;
};

/// Reads the dense operator column by column and returns its bands.
/// Returns std::nullopt if any entry outside the tridiagonal band exceeds
/// `tol` or the band is not real symmetric within `tol`.
std::optional<TridiagonalBands> tridiagonal_bands(const Hamiltonian& h, double tol = 1e-12);

/// Lowest eigenvalue of H. Uses the tridiagonal solver when the operator is
/// real tridiagonal and a full dense eigensolve otherwise (n <= 12).
double ground_energy(const Hamiltonian& h);

}  // namespace mgvqe
