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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "mgvqe/errors.hpp"
#include "mgvqe/spectral.hpp"
#include "mgvqe/vqe.hpp"

namespace mgvqe {
namespace {

const double kDirichlet2 = 2 - 2 * std::cos(std::numbers::pi / 5);

OptimizerConfig simplex(int iters = 1000) {
  OptimizerConfig cfg;
  cfg.max_iterations = iters;
  return cfg;
}

OptimizerConfig quasi_newton() {
  OptimizerConfig cfg;
  cfg.method = OptimizerMethod::kQuasiNewton;
  return cfg;
}

Graph triangle() {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  return g;
}

TEST(ShotBudget, ParseAndLabel) {
  EXPECT_TRUE(ShotBudget::parse("exact").is_exact());
  EXPECT_EQ(ShotBudget::parse("1000").count(), 1000u);
  EXPECT_EQ(ShotBudget::parse("1000").label(), "1000");
  EXPECT_EQ(ShotBudget::exact().label(), "exact");
  EXPECT_THROW(ShotBudget::parse("0"), ValidationError);
  EXPECT_THROW(ShotBudget::parse("1e3"), ValidationError);
  EXPECT_THROW(ShotBudget::parse("-5"), ValidationError);
}

TEST(Vqe, SingleQubitZ) {
  Hamiltonian h(1);
  h.add_frame(MeasurementFrame(ParamCircuit(1), {MeasureBasis::kZ}, {{1.0, 1, 0}}));
  const ParamCircuit ansatz = efficient_su2(1, 3);
  Rng rng(1);
  const std::vector<double> theta0(ansatz.num_params(), 0.3);
  for (const OptimizerConfig& cfg : {simplex(), quasi_newton()}) {
    const OptResult r = vqe(h, ansatz, theta0, ShotBudget::exact(), cfg, rng);
    EXPECT_LE(r.value, -1 + 1e-6);
  }
}

TEST(Vqe, DirichletTwoQubitsBestOfRestarts) {
  const Hamiltonian h = dirichlet_hamiltonian(2);
  const ParamCircuit ansatz = efficient_su2(2, 3);
  Rng rng(2);
  double best = 1e9;
  for (int restart = 0; restart < 5; ++restart) {
    std::vector<double> theta0(ansatz.num_params());
    for (double& t : theta0) t = 2 * std::numbers::pi * rng.uniform();
    best = std::min(best, vqe(h, ansatz, theta0, ShotBudget::exact(), simplex(3000), rng).value);
  }
  EXPECT_NEAR(best, kDirichlet2, 1e-4);
  EXPECT_GE(best, kDirichlet2 - 1e-9);
}

TEST(Vqe, TriangleMaxCut) {
  const Graph g = triangle();
  const Hamiltonian h = maxcut_hamiltonian(g);
  const ParamCircuit ansatz = efficient_su2(3, 3);
  Rng rng(3);
  std::vector<double> theta0(ansatz.num_params());
  for (double& t : theta0) t = 2 * std::numbers::pi * rng.uniform();
  const OptResult r = vqe(h, ansatz, theta0, ShotBudget::exact(), quasi_newton(), rng);
  EXPECT_NEAR(r.value, -2.0, 1e-3);
  const StateVector psi = simulate(ansatz, r.theta_star);
  const std::uint64_t z = most_frequent_outcome(psi, ShotBudget::exact(), rng);
  EXPECT_EQ(g.cut_value(z), 2);
}

TEST(Vqe, QubitMismatchRejected) {
  Rng rng(1);
  const std::vector<double> theta0(16, 0.0);
  EXPECT_THROW(vqe(dirichlet_hamiltonian(3), efficient_su2(2, 3), theta0, ShotBudget::exact(),
                   simplex(), rng),
               ValidationError);
}

TEST(Vqe, QuasiNewtonNeedsManyShots) {
  Rng rng(1);
  const ParamCircuit ansatz = efficient_su2(2, 1);
  const std::vector<double> theta0(ansatz.num_params(), 0.0);
  const Hamiltonian h = dirichlet_hamiltonian(2);
  EXPECT_THROW(vqe(h, ansatz, theta0, ShotBudget::shots(999'999), quasi_newton(), rng),
               ValidationError);
  OptimizerConfig few = quasi_newton();
  few.max_iterations = 2;
  EXPECT_NO_THROW(vqe(h, ansatz, theta0, ShotBudget::shots(1'000'000), few, rng));
}

TEST(Vqe, VariationalBoundExact) {
  Rng rng(4);
  for (int n = 2; n <= 5; ++n) {
    const Hamiltonian h = dirichlet_hamiltonian(n);
    const double lambda0 = ground_energy(h);
    const OptResult r = static_vqe_baseline(h, n, ShotBudget::exact(), simplex(300), rng, true);
    EXPECT_GE(r.value, lambda0 - 1e-9);
  }
}

TEST(Vqe, EvaluationCountMatchesObjectiveCalls) {
  // Each objective evaluation at a shot budget below 4 * 2^n draws exactly
  // `shots` uniforms per frame, so the engine position pins the call count.
  const Hamiltonian h = dirichlet_hamiltonian(3);
  const ParamCircuit ansatz = efficient_su2(3, 1);
  const std::vector<double> theta0(ansatz.num_params(), 0.0);
  Rng rng(5);
  const OptResult r = vqe(h, ansatz, theta0, ShotBudget::shots(20), simplex(50), rng);
  Rng replay(5);
  for (std::size_t i = 0; i < r.n_evaluations * 20; ++i) replay.next_u64();
  EXPECT_EQ(rng.next_u64(), replay.next_u64());
}

TEST(Multigrid, SingleStageEqualsPlainVqe) {
  const Hierarchy hier = laplacian_hierarchy(2);
  const ParamCircuit seed = efficient_su2(2, 3);
  Rng a(6), b(6);
  const auto stages = multigrid_vqe(hier, seed, ShotBudget::exact(), simplex(), a);
  ASSERT_EQ(stages.size(), 1u);
  const OptResult direct = vqe(hier.stages[0].hamiltonian, seed,
                               std::vector<double>(16, 0.0), ShotBudget::exact(), simplex(), b);
  EXPECT_EQ(stages[0].opt.theta_star, direct.theta_star);
  EXPECT_EQ(stages[0].opt.value, direct.value);
  EXPECT_EQ(stages[0].estimate, direct.value);
  EXPECT_EQ(stages[0].cumulative_evaluations, direct.n_evaluations);
}

TEST(Multigrid, SeedSizeMismatchRejected) {
  Rng rng(1);
  EXPECT_THROW(multigrid_vqe(laplacian_hierarchy(4), efficient_su2(3, 3), ShotBudget::exact(),
                             simplex(), rng),
               ValidationError);
}

TEST(Multigrid, StageBookkeeping) {
  const Hierarchy hier = laplacian_hierarchy(5);
  Rng rng(7);
  const auto stages = multigrid_vqe(hier, efficient_su2(2, 3), ShotBudget::exact(), simplex(200), rng);
  ASSERT_EQ(stages.size(), 4u);
  std::size_t previous = 0;
  for (std::size_t i = 0; i < stages.size(); ++i) {
    EXPECT_EQ(stages[i].stage_size, static_cast<int>(i) + 2);
    EXPECT_EQ(stages[i].num_params, multigrid_param_count(2, 16, stages[i].stage_size));
    EXPECT_EQ(stages[i].opt.theta_star.size(), stages[i].num_params);
    EXPECT_EQ(stages[i].cumulative_evaluations, previous + stages[i].opt.n_evaluations);
    EXPECT_TRUE(std::isfinite(stages[i].estimate));
    EXPECT_FALSE(stages[i].most_frequent_bitstring.has_value());
    previous = stages[i].cumulative_evaluations;
  }
}

TEST(Multigrid, WarmStartContinuity) {
  // Each stage starts from the previous optimum duplicated across the new
  // qubit.
  const Hierarchy hier = laplacian_hierarchy(4);
  Rng rng(8);
  const auto stages = multigrid_vqe(hier, efficient_su2(2, 3), ShotBudget::exact(), simplex(400), rng);
  ParamCircuit circ = efficient_su2(2, 3);
  for (std::size_t i = 0; i + 1 < stages.size(); ++i) {
    const StateVector coarse = simulate(circ, stages[i].opt.theta_star);
    circ = refine(circ);
    std::vector<double> theta0 = stages[i].opt.theta_star;
    theta0.resize(circ.num_params(), 0.0);
    const StateVector start = simulate(circ, theta0);
    for (std::uint64_t b = 0; b < start.dimension(); ++b) {
      EXPECT_LT(std::abs(start[b] - coarse[b >> 1] / std::sqrt(2.0)), 1e-12);
    }
    // The stage optimum cannot be worse than the warm start.
    EXPECT_LE(stages[i + 1].opt.value,
              expectation_exact(hier.stages[i + 1].hamiltonian, start) + 1e-12);
  }
}

TEST(Multigrid, Deterministic) {
  const Hierarchy hier = laplacian_hierarchy(4);
  Rng a(9), b(9);
  const auto ra = multigrid_vqe(hier, efficient_su2(2, 3), ShotBudget::shots(500), simplex(100), a);
  const auto rb = multigrid_vqe(hier, efficient_su2(2, 3), ShotBudget::shots(500), simplex(100), b);
  ASSERT_EQ(ra.size(), rb.size());
  for (std::size_t i = 0; i < ra.size(); ++i) {
    EXPECT_EQ(ra[i].opt.theta_star, rb[i].opt.theta_star);
    EXPECT_EQ(ra[i].estimate, rb[i].estimate);
    EXPECT_EQ(ra[i].cumulative_evaluations, rb[i].cumulative_evaluations);
  }
}

TEST(Multigrid, BeatsStaticOnLaplacian) {
  const int n_max = 6;
  const Hierarchy hier = laplacian_hierarchy(n_max);
  double mg = 0.0, st = 0.0;
  for (int seed = 0; seed < 10; ++seed) {
    Rng a(seed, 1), b(seed, 2);
    mg += multigrid_vqe(hier, efficient_su2(2, 3), ShotBudget::exact(), simplex(), a)
              .back()
              .estimate;
    st += static_stage(hier.stages.back(), ShotBudget::exact(), simplex(), b).estimate;
  }
  EXPECT_LT(mg / 10, st / 10);
}

TEST(Multigrid, CombinatorialStagesReportBitstrings) {
  Rng inst(3);
  const Hierarchy hier = subgraph_hierarchy(erdos_renyi(5, 0.6, inst));
  Rng rng(4);
  const auto stages = multigrid_vqe(hier, efficient_su2(2, 3), ShotBudget::shots(200), simplex(100), rng);
  for (const StageResult& s : stages) {
    ASSERT_TRUE(s.most_frequent_bitstring.has_value());
    EXPECT_LT(*s.most_frequent_bitstring, std::uint64_t{1} << s.stage_size);
  }
}

TEST(Cold, FirstStageMatchesWarm) {
  const Hierarchy hier = laplacian_hierarchy(4);
  Rng a(10), b(10);
  const auto warm = multigrid_vqe(hier, efficient_su2(2, 3), ShotBudget::exact(), quasi_newton(), a);
  const auto cold =
      cold_multigrid_baseline(hier, efficient_su2(2, 3), ShotBudget::exact(), quasi_newton(), b);
  ASSERT_EQ(warm.size(), cold.size());
  EXPECT_EQ(warm[0].opt.theta_star, cold[0].opt.theta_star);
  EXPECT_EQ(warm[0].estimate, cold[0].estimate);
  for (std::size_t i = 0; i < warm.size(); ++i) EXPECT_EQ(warm[i].num_params, cold[i].num_params);
}

TEST(Cold, WarmNoWorseOnAverage) {
  const Hierarchy hier = laplacian_hierarchy(6);
  OptimizerConfig seed_cfg = simplex();
  double warm = 0.0, cold = 0.0;
  for (int seed = 0; seed < 10; ++seed) {
    Rng a(seed, 1), b(seed, 2);
    warm += multigrid_vqe(hier, efficient_su2(2, 3), ShotBudget::exact(), quasi_newton(), a,
                          seed_cfg)
                .back()
                .estimate;
    cold += cold_multigrid_baseline(hier, efficient_su2(2, 3), ShotBudget::exact(),
                                    quasi_newton(), b, seed_cfg)
                .back()
                .estimate;
  }
  EXPECT_LE(warm, cold);
}

TEST(Objective, FiniteDifferenceGradientIsSecondOrder) {
  const Hamiltonian h = dirichlet_hamiltonian(3);
  const ParamCircuit ansatz = refine(efficient_su2(2, 3));
  Rng rng(11);
  auto energy = [&](const std::vector<double>& theta) {
    return expectation_exact(h, simulate(ansatz, theta));
  };
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<double> theta(ansatz.num_params());
    for (double& t : theta) t = 2 * std::numbers::pi * rng.uniform();
    for (std::size_t i = 0; i < theta.size(); i += 5) {
      auto fd = [&](double step) {
        auto plus = theta, minus = theta;
        plus[i] += step;
        minus[i] -= step;
        return (energy(plus) - energy(minus)) / (2 * step);
      };
      // Central differences: error O(h^2) with |third derivative| bounded by
      // the operator norm (at most 4 here).
      EXPECT_NEAR(fd(1e-3), fd(1e-4), 4.0 * 1e-6);
    }
  }
}

TEST(MostFrequent, TiesGoToSmallerIndex) {
  StateVector s(2);
  s[0] = 0.0;
  s[1] = s[2] = 1 / std::sqrt(2.0);
  Rng rng(1);
  EXPECT_EQ(most_frequent_outcome(s, ShotBudget::exact(), rng), 1u);
  s[1] = std::sqrt(0.3);
  s[2] = std::sqrt(0.7);
  EXPECT_EQ(most_frequent_outcome(s, ShotBudget::shots(1000), rng), 2u);
}

}  // namespace
}  // namespace mgvqe
