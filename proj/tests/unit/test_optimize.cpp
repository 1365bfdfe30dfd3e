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
#include <limits>

#include "mgvqe/errors.hpp"
#include "mgvqe/optimize.hpp"

namespace mgvqe {
namespace {

double rosenbrock(std::span<const double> x) {
  return std::pow(1 - x[0], 2) + 100 * std::pow(x[1] - x[0] * x[0], 2);
}

OptimizerConfig method(OptimizerMethod m) {
  OptimizerConfig cfg;
  cfg.method = m;
  return cfg;
}

class BothMethods : public ::testing::TestWithParam<OptimizerMethod> {};

TEST_P(BothMethods, ConvexQuadratic) {
  const double x0[] = {0.0};
  const OptResult r =
      minimize([](std::span<const double> x) { return std::pow(x[0] - 1, 2); }, x0,
               method(GetParam()));
  EXPECT_NEAR(r.theta_star[0], 1.0, 1e-4);
  EXPECT_TRUE(r.converged);
}

TEST_P(BothMethods, CountsEveryEvaluation) {
  std::size_t calls = 0;
  const double x0[] = {0.3, -0.2, 0.5};
  const OptResult r = minimize(
      [&](std::span<const double> x) {
        ++calls;
        return x[0] * x[0] + 2 * x[1] * x[1] + 3 * x[2] * x[2];
      },
      x0, method(GetParam()));
  EXPECT_EQ(r.n_evaluations, calls);
  EXPECT_GE(r.n_evaluations, 1u);
}

TEST_P(BothMethods, ValueIsLastEvaluationAtThetaStar) {
  const double x0[] = {-1.0, 2.0};
  const auto f = [](std::span<const double> x) { return std::pow(x[0] - 0.5, 2) + std::abs(x[1]); };
  const OptResult r = minimize(f, x0, method(GetParam()));
  EXPECT_EQ(r.value, f(r.theta_star));
}

TEST_P(BothMethods, NonFiniteAborts) {
  const double x0[] = {0.0};
  EXPECT_THROW(minimize([](std::span<const double>) { return std::nan(""); }, x0,
                        method(GetParam())),
               NumericalError);
  EXPECT_THROW(minimize([](std::span<const double> x) {
                 return x[0] > 0.1 || x[0] < -0.1 ? std::numeric_limits<double>::infinity()
                                                  : x[0];
               },
                        x0, method(GetParam())),
               NumericalError);
}

TEST_P(BothMethods, IterationCapRespected) {
  OptimizerConfig cfg = method(GetParam());
  cfg.max_iterations = 3;
  const double x0[] = {-1.2, 1.0};
  const OptResult r = minimize(rosenbrock, x0, cfg);
  EXPECT_LE(r.iterations, 3);
  EXPECT_FALSE(r.converged);
}

INSTANTIATE_TEST_SUITE_P(Methods, BothMethods,
                         ::testing::Values(OptimizerMethod::kSimplex,
                                           OptimizerMethod::kQuasiNewton),
                         [](const auto& info) {
                           return info.param == OptimizerMethod::kSimplex ? "Simplex"
                                                                          : "QuasiNewton";
                         });

TEST(Simplex, ConstantFunctionConvergesImmediately) {
  const double x0[] = {0.1, 0.2, 0.3};
  const OptResult r = minimize([](std::span<const double>) { return 4.0; }, x0, OptimizerConfig{});
  EXPECT_TRUE(r.converged);
  EXPECT_LE(r.n_evaluations, 3u + 1u + 2u);
  EXPECT_EQ(r.value, 4.0);
}

TEST(Simplex, Rosenbrock) {
  OptimizerConfig cfg;
  cfg.max_iterations = 5000;
  cfg.function_tolerance = 1e-14;
  const double x0[] = {-1.2, 1.0};
  const OptResult r = minimize(rosenbrock, x0, cfg);
  EXPECT_LT(r.value, 1e-6);
}

TEST(QuasiNewton, Rosenbrock) {
  const double x0[] = {-1.2, 1.0};
  const OptResult r = minimize(rosenbrock, x0, method(OptimizerMethod::kQuasiNewton));
  EXPECT_LE(r.value, 1e-6);
  EXPECT_NEAR(r.theta_star[0], 1.0, 1e-3);
  EXPECT_NEAR(r.theta_star[1], 1.0, 2e-3);
}

TEST(Config, Validation) {
  OptimizerConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.max_iterations = 0;
  EXPECT_THROW(cfg.validate(), ValidationError);
  cfg = {};
  cfg.function_tolerance = 0;
  EXPECT_THROW(cfg.validate(), ValidationError);
  cfg = {};
  cfg.fd_step = -1;
  EXPECT_THROW(cfg.validate(), ValidationError);
  cfg = {};
  cfg.simplex_step = 0;
  EXPECT_THROW(cfg.validate(), ValidationError);
}

TEST(Config, MethodNames) {
  EXPECT_EQ(parse_method("simplex"), OptimizerMethod::kSimplex);
  EXPECT_EQ(parse_method("nelder-mead"), OptimizerMethod::kSimplex);
  EXPECT_EQ(parse_method("quasi-newton"), OptimizerMethod::kQuasiNewton);
  EXPECT_EQ(parse_method("bfgs"), OptimizerMethod::kQuasiNewton);
  EXPECT_EQ(parse_method(method_name(OptimizerMethod::kQuasiNewton)),
            OptimizerMethod::kQuasiNewton);
  EXPECT_THROW(parse_method("cobyla"), ValidationError);
}

TEST(Minimize, EmptyParameterVector) {
  const auto f = [](std::span<const double>) { return 1.5; };
  for (auto m : {OptimizerMethod::kSimplex, OptimizerMethod::kQuasiNewton}) {
    const OptResult r = minimize(f, {}, method(m));
    EXPECT_TRUE(r.converged);
    EXPECT_EQ(r.value, 1.5);
    EXPECT_EQ(r.n_evaluations, 1u);
  }
}

TEST(Minimize, RejectsNonFiniteStart) {
  const auto f = [](std::span<const double>) { return 0.0; };
  const double bad[] = {std::nan("")};
  EXPECT_THROW(minimize(f, bad, OptimizerConfig{}), ValidationError);
}

}  // namespace
}  // namespace mgvqe
