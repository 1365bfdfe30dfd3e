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

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace mgvqe {

enum class OptimizerMethod {
  kSimplex,      // Nelder-Mead, derivative free
  kQuasiNewton,  // BFGS with central finite-difference gradients
};

std::string_view method_name(OptimizerMethod method);
/// Accepts "simplex" / "nelder-mead" and "quasi-newton" / "bfgs".
OptimizerMethod parse_method(std::string_view name);

struct OptimizerConfig {
  OptimizerMethod method = OptimizerMethod::kSimplex;
  int max_iterations = 1000;
  /// Simplex: stop when the spread of vertex values drops below this.
  /// Quasi-Newton: stop when an accepted step changes f by less than this.
  double function_tolerance = 1e-8;
  /// Central-difference step (quasi-Newton only).
  double fd_step = 1e-5;
  /// Edge length of the initial simplex around theta0 (simplex only).
  double simplex_step = 0.5;

  /// Throws ValidationError on out-of-range settings.
  void validate() const;
};

struct OptResult {
  std::vector<double> theta_star;
  double value = 0.0;            // objective at theta_star, as last evaluated
  std::size_t n_evaluations = 0; // every objective call, including gradients
  bool converged = false;
  int iterations = 0;
};

using Objective = std::function<double(std::span<const double>)>;

/// Minimizes `objective` from `theta0`. Throws NumericalError if the objective
/// returns a non-finite value.
OptResult minimize(const Objective& objective, std::span<const double> theta0,
                   const OptimizerConfig& cfg);

}  // namespace mgvqe
