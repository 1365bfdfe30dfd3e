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

#include "mgvqe/vqe.hpp"

#include <charconv>
#include <numbers>

#include "mgvqe/errors.hpp"

namespace mgvqe {

ShotBudget ShotBudget::shots(std::size_t count) {
  if (count == 0) throw ValidationError("shot count must be >= 1");
  return ShotBudget(count);
}

ShotBudget ShotBudget::parse(std::string_view text) {
  if (text == "exact" || text == "EXACT") return exact();
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
    throw ValidationError("bad shot count '" + std::string(text) + "'");
  }
  return shots(value);
}

std::string ShotBudget::label() const { return is_exact() ? "exact" : std::to_string(count_); }

double estimate_energy(const Hamiltonian& h, const StateVector& psi, ShotBudget shots, Rng& rng) {
  return shots.is_exact() ? expectation_exact(h, psi)
                          : expectation_sampled(h, psi, shots.count(), rng);
}

OptResult vqe(const Hamiltonian& h, const ParamCircuit& ansatz, std::span<const double> theta0,
              ShotBudget shots, const OptimizerConfig& cfg, Rng& rng) {
  if (ansatz.num_qubits() != h.num_qubits()) {
    throw ValidationError("vqe: ansatz has " + std::to_string(ansatz.num_qubits()) +
                          " qubits, Hamiltonian has " + std::to_string(h.num_qubits()));
  }
  if (cfg.method == OptimizerMethod::kQuasiNewton && !shots.is_exact() &&
      shots.count() < kMinShotsForQuasiNewton) {
    throw ValidationError("vqe: quasi-Newton needs exact objectives or >= 1e6 shots");
  }
  StateVector buffer(ansatz.num_qubits());
  const Objective objective = [&](std::span<const double> theta) {
    simulate_into(ansatz, theta, buffer);
    return estimate_energy(h, buffer, shots, rng);
  };
  return minimize(objective, theta0, cfg);
}

std::uint64_t most_frequent_outcome(const StateVector& psi, ShotBudget shots, Rng& rng) {
  const auto amps = psi.amplitudes();
  if (shots.is_exact()) {
    std::uint64_t best = 0;
    for (std::size_t b = 1; b < amps.size(); ++b) {
      if (std::norm(amps[b]) > std::norm(amps[best])) best = b;
    }
    return best;
  }
  const std::vector<std::size_t> counts = sample_counts(psi, shots.count(), rng);
  std::uint64_t best = 0;
  for (std::size_t b = 1; b < counts.size(); ++b) {
    if (counts[b] > counts[best]) best = b;
  }
  return best;
}

namespace {

StageResult finish_stage(const HierarchyStage& stage, const ParamCircuit& ansatz, OptResult opt,
                         ShotBudget shots, Rng& rng, std::size_t prior_evaluations) {
  StageResult r;
  r.stage_size = stage.size;
  r.num_params = ansatz.num_params();
  const StateVector psi = simulate(ansatz, opt.theta_star);
  r.estimate = estimate_energy(stage.hamiltonian, psi, shots, rng);
  if (!stage.var_to_qubit.empty()) r.most_frequent_bitstring = most_frequent_outcome(psi, shots, rng);
  r.cumulative_evaluations = prior_evaluations + opt.n_evaluations;
  r.opt = std::move(opt);
  return r;
}

std::vector<StageResult> run_hierarchy(const Hierarchy& hier, const ParamCircuit& seed,
                                       ShotBudget shots, const OptimizerConfig& cfg, Rng& rng,
                                       const std::optional<OptimizerConfig>& seed_stage_cfg,
                                       bool warm_start) {
  hier.validate();
  if (seed.num_qubits() != hier.first_size()) {
    throw ValidationError("multigrid: seed ansatz has " + std::to_string(seed.num_qubits()) +
                          " qubits but the first stage has " + std::to_string(hier.first_size()));
  }
  std::vector<StageResult> results;
  ParamCircuit ansatz = seed;
  std::vector<double> theta0(seed.num_params(), 0.0);
  std::size_t evaluations = 0;
  for (std::size_t i = 0; i < hier.stages.size(); ++i) {
    const HierarchyStage& stage = hier.stages[i];
    if (i > 0) {
      ansatz = refine(ansatz);
      if (warm_start) {
        theta0 = results.back().opt.theta_star;
        theta0.resize(ansatz.num_params(), 0.0);
      } else {
        theta0.assign(ansatz.num_params(), 0.0);
      }
    }
    const OptimizerConfig& stage_cfg = (i == 0 && seed_stage_cfg) ? *seed_stage_cfg : cfg;
    OptResult opt = vqe(stage.hamiltonian, ansatz, theta0, shots, stage_cfg, rng);
    results.push_back(finish_stage(stage, ansatz, std::move(opt), shots, rng, evaluations));
    evaluations = results.back().cumulative_evaluations;
  }
  return results;
}

}  // namespace

std::vector<StageResult> multigrid_vqe(const Hierarchy& hier, const ParamCircuit& seed,
                                       ShotBudget shots, const OptimizerConfig& cfg, Rng& rng,
                                       const std::optional<OptimizerConfig>& seed_stage_cfg) {
  return run_hierarchy(hier, seed, shots, cfg, rng, seed_stage_cfg, /*warm_start=*/true);
}

std::vector<StageResult> cold_multigrid_baseline(const Hierarchy& hier, const ParamCircuit& seed,
                                                 ShotBudget shots, const OptimizerConfig& cfg,
                                                 Rng& rng,
                                                 const std::optional<OptimizerConfig>& seed_stage_cfg) {
  return run_hierarchy(hier, seed, shots, cfg, rng, seed_stage_cfg, /*warm_start=*/false);
}

OptResult static_vqe_baseline(const Hamiltonian& h, int num_qubits, ShotBudget shots,
                              const OptimizerConfig& cfg, Rng& rng, bool random_init) {
  const ParamCircuit ansatz = efficient_su2(num_qubits, 3);
  std::vector<double> theta0(ansatz.num_params(), 0.0);
  if (random_init) {
    for (double& t : theta0) t = 2 * std::numbers::pi * rng.uniform();
  }
  return vqe(h, ansatz, theta0, shots, cfg, rng);
}

StageResult static_stage(const HierarchyStage& stage, ShotBudget shots,
                         const OptimizerConfig& cfg, Rng& rng, bool random_init) {
  OptResult opt = static_vqe_baseline(stage.hamiltonian, stage.size, shots, cfg, rng, random_init);
  return finish_stage(stage, efficient_su2(stage.size, 3), std::move(opt), shots, rng, 0);
}

}  // namespace mgvqe
