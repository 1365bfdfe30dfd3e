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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mgvqe/circuit.hpp"
#include "mgvqe/hamiltonian.hpp"
#include "mgvqe/optimize.hpp"
#include "mgvqe/problems.hpp"
#include "mgvqe/rng.hpp"

namespace mgvqe {

/// Either a finite shot count or exact (noise-free) expectation values.
class ShotBudget {
 public:
  static ShotBudget exact() { return ShotBudget(0); }
  /// Throws ValidationError for zero shots.
  static ShotBudget shots(std::size_t count);
  /// "exact" or a positive integer.
  static ShotBudget parse(std::string_view text);

  bool is_exact() const { return count_ == 0; }
  std::size_t count() const { return count_; }
  std::string label() const;

  friend bool operator==(const ShotBudget&, const ShotBudget&) = default;

 private:
  explicit ShotBudget(std::size_t count) : count_(count) {}
  std::size_t count_;
};

/// Shot counts at or above this allow the quasi-Newton optimizer on sampled
/// objectives.
inline constexpr std::size_t kMinShotsForQuasiNewton = 1'000'000;

/// Exact or sampled <psi|H|psi> depending on `shots`.
double estimate_energy(const Hamiltonian& h, const StateVector& psi, ShotBudget shots, Rng& rng);

/// Minimizes theta -> <U(theta)|H|U(theta)>. Sampled objectives draw from
/// `rng`, advancing it on every evaluation.
OptResult vqe(const Hamiltonian& h, const ParamCircuit& ansatz, std::span<const double> theta0,
              ShotBudget shots, const OptimizerConfig& cfg, Rng& rng);

struct StageResult {
  int stage_size = 0;
  std::size_t num_params = 0;
  OptResult opt;
  /// Fresh estimate of the stage objective at opt.theta_star.
  double estimate = 0.0;
  /// Objective evaluations spent on this stage and all earlier ones.
  std::size_t cumulative_evaluations = 0;
  /// Most frequent measured bitstring at theta_star (combinatorial stages).
  std::optional<std::uint64_t> most_frequent_bitstring;
};

/// Most frequent outcome among `shots` samples, smaller index on ties. With
/// an exact budget, the most probable basis state.
std::uint64_t most_frequent_outcome(const StateVector& psi, ShotBudget shots, Rng& rng);

/// Multigrid VQE. Stage 1 optimizes `seed` from all-zero angles; each later
/// stage refines the previous ansatz and starts from the previous optimum with
/// the new angles at zero. `seed_stage_cfg`, when given, replaces `cfg` for
/// the first stage only.
std::vector<StageResult> multigrid_vqe(const Hierarchy& hier, const ParamCircuit& seed,
                                       ShotBudget shots, const OptimizerConfig& cfg, Rng& rng,
                                       const std::optional<OptimizerConfig>& seed_stage_cfg = {});

/// Same circuits and optimizers as multigrid_vqe, but every stage restarts
/// from all-zero angles.
std::vector<StageResult> cold_multigrid_baseline(
    const Hierarchy& hier, const ParamCircuit& seed, ShotBudget shots, const OptimizerConfig& cfg,
    Rng& rng, const std::optional<OptimizerConfig>& seed_stage_cfg = {});

/// VQE with efficient_su2(n, 3) from zero angles, or from uniform angles in
/// [0, 2 pi) when `random_init` is set.
OptResult static_vqe_baseline(const Hamiltonian& h, int num_qubits, ShotBudget shots,
                              const OptimizerConfig& cfg, Rng& rng, bool random_init = false);

/// Static baseline on one hierarchy stage, packaged like a multigrid stage.
StageResult static_stage(const HierarchyStage& stage, ShotBudget shots,
                         const OptimizerConfig& cfg, Rng& rng, bool random_init = false);

}  // namespace mgvqe
