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

#include "mgvqe/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "mgvqe/errors.hpp"

namespace mgvqe {

std::string_view method_name(OptimizerMethod method) {
  return method == OptimizerMethod::kSimplex ? "simplex" : "quasi-newton";
}

OptimizerMethod parse_method(std::string_view name) {
  if (name == "simplex" || name == "nelder-mead") return OptimizerMethod::kSimplex;
  if (name == "quasi-newton" || name == "bfgs") return OptimizerMethod::kQuasiNewton;
  throw ValidationError("unknown optimizer '" + std::string(name) + "'");
}

void OptimizerConfig::validate() const {
  if (max_iterations < 1) throw ValidationError("optimizer: max_iterations must be >= 1");
  if (!(function_tolerance > 0)) throw ValidationError("optimizer: function_tolerance must be > 0");
  if (!(fd_step > 0)) throw ValidationError("optimizer: fd_step must be > 0");
  if (!(simplex_step > 0)) throw ValidationError("optimizer: simplex_step must be > 0");
}

namespace {

using Vec = std::vector<double>;

// Counts calls and rejects non-finite values.
class CountedObjective {
 public:
  explicit CountedObjective(const Objective& f) : f_(f) {}

  double operator()(std::span<const double> x) {
    ++calls_;
    const double v = f_(x);
    if (!std::isfinite(v)) {
      std::ostringstream os;
      os << "objective returned " << v << " at evaluation " << calls_ << " (theta =";
      for (double xi : x) os << ' ' << xi;
      os << ')';
      throw NumericalError(os.str());
    }
    return v;
  }

  std::size_t calls() const { return calls_; }

 private:
  const Objective& f_;
  std::size_t calls_ = 0;
};

OptResult nelder_mead(CountedObjective& f, std::span<const double> theta0,
                      const OptimizerConfig& cfg) {
  constexpr double kReflect = 1.0, kExpand = 2.0, kContract = 0.5, kShrink = 0.5;
  const std::size_t n = theta0.size();
  std::vector<Vec> simplex(n + 1, Vec(theta0.begin(), theta0.end()));
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += cfg.simplex_step;
  Vec values(n + 1);
  for (std::size_t i = 0; i <= n; ++i) values[i] = f(simplex[i]);

  std::vector<std::size_t> order(n + 1);
  Vec centroid(n), trial(n), trial2(n);
  auto point_along = [&](double t, const Vec& from, Vec& out) {
    // out = centroid + t * (centroid - from)
    for (std::size_t j = 0; j < n; ++j) out[j] = centroid[j] + t * (centroid[j] - from[j]);
  };

  OptResult result;
  int iter = 0;
  for (; iter < cfg.max_iterations; ++iter) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    if (values[worst] - values[best] < cfg.function_tolerance) {
      result.converged = true;
      break;
    }
    if (n == 0) break;
    const std::size_t second_worst = order[n - 1];

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      const Vec& v = simplex[order[k]];
      for (std::size_t j = 0; j < n; ++j) centroid[j] += v[j];
    }
    for (double& c : centroid) c /= static_cast<double>(n);

    point_along(kReflect, simplex[worst], trial);
    const double f_reflect = f(trial);
    if (f_reflect < values[best]) {
      point_along(kReflect * kExpand, simplex[worst], trial2);
      const double f_expand = f(trial2);
      if (f_expand < f_reflect) {
        simplex[worst] = trial2;
        values[worst] = f_expand;
      } else {
        simplex[worst] = trial;
        values[worst] = f_reflect;
      }
      continue;
    }
    if (f_reflect < values[second_worst]) {
      simplex[worst] = trial;
      values[worst] = f_reflect;
      continue;
    }
    if (f_reflect < values[worst]) {
      point_along(kReflect * kContract, simplex[worst], trial2);
      const double f_contract = f(trial2);
      if (f_contract <= f_reflect) {
        simplex[worst] = trial2;
        values[worst] = f_contract;
        continue;
      }
    } else {
      point_along(-kContract, simplex[worst], trial2);
      const double f_contract = f(trial2);
      if (f_contract < values[worst]) {
        simplex[worst] = trial2;
        values[worst] = f_contract;
        continue;
      }
    }
    // Shrink toward the best vertex.
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      for (std::size_t j = 0; j < n; ++j) {
        simplex[i][j] = simplex[best][j] + kShrink * (simplex[i][j] - simplex[best][j]);
      }
      values[i] = f(simplex[i]);
    }
  }
  const auto best_it = std::min_element(values.begin(), values.end());
  const std::size_t best = static_cast<std::size_t>(best_it - values.begin());
  result.theta_star = simplex[best];
  result.value = values[best];
  result.iterations = iter;
  return result;
}

Vec central_gradient(CountedObjective& f, const Vec& x, double h) {
  Vec g(x.size());
  Vec probe = x;
  for (std::size_t i = 0; i < x.size(); ++i) {
    probe[i] = x[i] + h;
    const double fp = f(probe);
    probe[i] = x[i] - h;
    const double fm = f(probe);
    probe[i] = x[i];
    g[i] = (fp - fm) / (2 * h);
  }
  return g;
}

double dot(const Vec& a, const Vec& b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

OptResult bfgs(CountedObjective& f, std::span<const double> theta0, const OptimizerConfig& cfg) {
  constexpr double kArmijo = 1e-4;
  constexpr int kMaxBacktracks = 50;
  const std::size_t n = theta0.size();
  Vec x(theta0.begin(), theta0.end());
  double fx = f(x);
  Vec g = central_gradient(f, x, cfg.fd_step);
  // Dense inverse-Hessian approximation, row-major.
  Vec inv_h(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) inv_h[i * n + i] = 1.0;
  bool scaled = false;

  OptResult result;
  Vec p(n), x_new(n), s(n), y(n), hy(n);
  int iter = 0;
  for (; iter < cfg.max_iterations; ++iter) {
    if (n == 0 || std::all_of(g.begin(), g.end(), [](double gi) { return gi == 0.0; })) {
      result.converged = true;
      break;
    }
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) acc -= inv_h[i * n + j] * g[j];
      p[i] = acc;
    }
    double slope = dot(g, p);
    if (slope >= 0) {
      std::fill(inv_h.begin(), inv_h.end(), 0.0);
      for (std::size_t i = 0; i < n; ++i) inv_h[i * n + i] = 1.0;
      for (std::size_t i = 0; i < n; ++i) p[i] = -g[i];
      slope = dot(g, p);
    }
    double alpha = 1.0;
    double f_new = fx;
    bool accepted = false;
    for (int bt = 0; bt < kMaxBacktracks; ++bt) {
      for (std::size_t i = 0; i < n; ++i) x_new[i] = x[i] + alpha * p[i];
      f_new = f(x_new);
      if (f_new <= fx + kArmijo * alpha * slope) {
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) break;

    const Vec g_new = central_gradient(f, x_new, cfg.fd_step);
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = x_new[i] - x[i];
      y[i] = g_new[i] - g[i];
    }
    const double delta_f = fx - f_new;
    x = x_new;
    fx = f_new;
    g = g_new;

    const double sy = dot(s, y);
    if (sy > 1e-14) {
      if (!scaled) {
        const double gamma = sy / dot(y, y);
        for (std::size_t i = 0; i < n; ++i) inv_h[i * n + i] = gamma;
        scaled = true;
      }
      // H <- (I - rho s y^T) H (I - rho y s^T) + rho s s^T
      const double rho = 1.0 / sy;
      for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) acc += inv_h[i * n + j] * y[j];
        hy[i] = acc;
      }
      const double yhy = dot(y, hy);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          inv_h[i * n + j] += -rho * (hy[i] * s[j] + s[i] * hy[j]) +
                              (rho * rho * yhy + rho) * s[i] * s[j];
        }
      }
    }
    if (std::abs(delta_f) < cfg.function_tolerance) {
      result.converged = true;
      ++iter;
      break;
    }
  }
  result.theta_star = x;
  result.value = fx;
  result.iterations = iter;
  return result;
}

}  // namespace

OptResult minimize(const Objective& objective, std::span<const double> theta0,
                   const OptimizerConfig& cfg) {
  cfg.validate();
  for (double t : theta0) {
    if (!std::isfinite(t)) throw ValidationError("minimize: theta0 must be finite");
  }
  CountedObjective counted(objective);
  OptResult result = cfg.method == OptimizerMethod::kSimplex ? nelder_mead(counted, theta0, cfg)
                                                             : bfgs(counted, theta0, cfg);
  result.n_evaluations = counted.calls();
  return result;
}

}  // namespace mgvqe
