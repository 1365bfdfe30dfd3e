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

#include "mgvqe/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <ostream>

#include "mgvqe/circuit.hpp"
#include "mgvqe/harness.hpp"
#include "mgvqe/problems.hpp"
#include "mgvqe/spectral.hpp"
#include "mgvqe/vqe.hpp"

namespace mgvqe {

namespace {

constexpr double kMatrixTol = 1e-12;
constexpr double kExpectationTol = 1e-10;
constexpr double kVariationalTol = 1e-9;

double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

class Suite {
 public:
  void add(std::string module, std::string invariant, double deviation, double tol,
           std::size_t cases) {
    const bool ok = std::isfinite(deviation) && deviation <= tol;
    report_.checks.push_back({std::move(module), std::move(invariant), ok, deviation, cases});
  }
  VerifyReport take() { return std::move(report_); }

 private:
  VerifyReport report_;
};

void check_laplacian(const VerifyOptions& opt, Suite& suite) {
  double identity = 0.0, dirichlet = 0.0, periodic = 0.0;
  for (int n = 2; n <= 6; ++n) {
    const Eigen::MatrixXcd d = to_dense(opt.dirichlet(n));
    const Eigen::MatrixXcd rhs =
        to_dense(periodic_hamiltonian(n)) + to_dense(dirichlet_boundary_term(n));
    identity = std::max(identity, max_abs_diff(d, rhs));
    dirichlet = std::max(dirichlet, max_abs_diff(d, dirichlet_stencil_matrix(n).cast<Complex>()));
    periodic = std::max(periodic, max_abs_diff(to_dense(periodic_hamiltonian(n)),
                                               periodic_stencil_matrix(n).cast<Complex>()));
  }
  suite.add("laplacian", "dirichlet-equals-periodic-plus-boundary", identity, kMatrixTol, 5);
  suite.add("laplacian", "dirichlet-matches-stencil", dirichlet, kMatrixTol, 5);
  suite.add("laplacian", "periodic-matches-stencil", periodic, kMatrixTol, 5);
}

void check_circuits(const VerifyOptions& opt, Suite& suite) {
  double increment = 0.0;
  std::size_t cases = 0;
  for (int n = 1; n <= 8; ++n) {
    const ParamCircuit inc = increment_circuit(n);
    const std::uint64_t dim = std::uint64_t{1} << n;
    for (std::uint64_t b = 0; b < dim; ++b, ++cases) {
      StateVector psi(n);
      psi[0] = 0.0;
      psi[b] = 1.0;
      apply_circuit(inc, {}, psi);
      for (std::uint64_t c = 0; c < dim; ++c) {
        const double want = c == (b + 1) % dim ? 1.0 : 0.0;
        increment = std::max(increment, std::abs(psi[c] - want));
      }
    }
  }
  suite.add("circuit", "increment-circuit-equals-permutation", increment, kMatrixTol, cases);

  Rng rng(opt.seed, 1);
  double interp = 0.0;
  cases = 0;
  ParamCircuit circ = efficient_su2(2, 3);
  for (int n = 2; n <= 6; ++n) {
    const ParamCircuit fine = refine(circ);
    for (int trial = 0; trial < 20; ++trial, ++cases) {
      std::vector<double> theta(circ.num_params());
      for (double& t : theta) t = 2 * std::numbers::pi * rng.uniform();
      const StateVector coarse = simulate(circ, theta);
      theta.resize(fine.num_params(), 0.0);
      const StateVector refined = simulate(fine, theta);
      double err2 = 0.0;
      for (std::uint64_t b = 0; b < refined.dimension(); ++b) {
        err2 += std::norm(refined[b] - coarse[b >> 1] / std::sqrt(2.0));
      }
      interp = std::max(interp, std::sqrt(err2));
    }
    circ = fine;
  }
  suite.add("circuit", "refinement-reproduces-constant-interpolation", interp, kMatrixTol, cases);

  ParamCircuit grown = efficient_su2(2, 3);
  while (grown.num_qubits() < 10) grown = refine(grown);
  const double count_dev =
      std::abs(static_cast<double>(grown.num_params()) - 60.0) +
      std::abs(static_cast<double>(multigrid_param_count(2, 16, 10)) - 60.0);
  suite.add("circuit", "parameter-count-seed16-to-10-qubits", count_dev, 0.0, 1);
}

void check_expectations(const VerifyOptions& opt, Suite& suite) {
  Rng rng(opt.seed, 2);
  double dev = 0.0;
  std::size_t cases = 0;
  for (int n = 2; n <= 6; ++n) {
    Rng instance(opt.seed + n, 3);
    const Graph g = erdos_renyi(n, 0.5, instance);
    const CnfFormula f = random_eksat(n, 2, 3 * n, instance);
    const Hamiltonian family[] = {opt.dirichlet(n), periodic_hamiltonian(n),
                                  maxcut_hamiltonian(g), sat_hamiltonian(f)};
    for (const Hamiltonian& h : family) {
      const Eigen::MatrixXcd dense = to_dense(h);
      for (int trial = 0; trial < 10; ++trial, ++cases) {
        const StateVector psi = random_state(n, rng);
        const Eigen::Map<const Eigen::VectorXcd> v(psi.amplitudes().data(),
                                                   static_cast<Eigen::Index>(psi.dimension()));
        const double rayleigh = v.dot(dense * v).real();
        dev = std::max(dev, std::abs(expectation_exact(h, psi) - rayleigh));
      }
    }
  }
  suite.add("hamiltonian", "exact-expectation-matches-dense", dev, kExpectationTol, cases);
}

void check_problems(const VerifyOptions& opt, Suite& suite) {
  Rng rng(opt.seed, 4);
  const int n = 10;
  const std::uint64_t dim = std::uint64_t{1} << n;

  const Graph g = erdos_renyi(n, 0.5, rng);
  const Hamiltonian hc = maxcut_hamiltonian(g);
  double cut_dev = 0.0, symmetry = 0.0;
  for (std::uint64_t z = 0; z < dim; ++z) {
    cut_dev = std::max(cut_dev, std::abs(diagonal_entry(hc, z) + g.cut_value(z)));
    symmetry = std::max(symmetry, std::abs(double(g.cut_value(z) - g.cut_value(~z & (dim - 1)))));
  }
  suite.add("problems", "maxcut-diagonal-equals-minus-cut", cut_dev, 0.0, dim);
  suite.add("problems", "cut-complementation-symmetry", symmetry, 0.0, dim);

  double sat_dev = 0.0, expansion_dev = 0.0, expansion_bound = 0.0;
  std::size_t sat_cases = 0;
  for (int k : {2, 3}) {
    const CnfFormula f = random_eksat(n, k, hard_instance_clause_count(n, k), rng);
    const Hamiltonian hs = sat_hamiltonian(f);
    const auto strings = sat_pauli_expansion(f);
    const Hamiltonian expanded = hamiltonian_from_paulis(n, strings);
    const double bound = static_cast<double>(f.clauses().size() << k) + 1;
    expansion_bound = std::max(expansion_bound, static_cast<double>(strings.size()) - bound);
    for (std::uint64_t z = 0; z < dim; ++z, ++sat_cases) {
      const double count = f.count_satisfied(z);
      sat_dev = std::max(sat_dev, std::abs(diagonal_entry(hs, z) - count));
      expansion_dev = std::max(expansion_dev, std::abs(diagonal_entry(expanded, z) - count));
    }
  }
  suite.add("problems", "sat-diagonal-equals-satisfied-count", sat_dev, 1e-9, sat_cases);
  suite.add("problems", "sat-pauli-expansion-matches", expansion_dev, 1e-9, sat_cases);
  suite.add("problems", "sat-pauli-expansion-size-bound", std::max(0.0, expansion_bound), 0.0, 2);

  double nested = 0.0;
  const CnfFormula f = random_eksat(n, 3, 60, rng);
  for (int j = 3; j <= n; ++j) {
    const Graph coarse = g.induced_prefix(j - 1);
    const Graph restricted = g.induced_prefix(j).induced_prefix(j - 1);
    if (coarse.edges() != restricted.edges()) nested += 1;
    const CnfFormula fc = f.restricted_prefix(j - 1);
    const CnfFormula fr = f.restricted_prefix(j).restricted_prefix(j - 1);
    if (fc.clauses() != fr.clauses()) nested += 1;
  }
  suite.add("problems", "hierarchy-restriction-is-previous-stage", nested, 0.0, 2 * (n - 2));
}

void check_vqe(const VerifyOptions& opt, Suite& suite) {
  Rng rng(opt.seed, 5);
  OptimizerConfig cfg;
  cfg.max_iterations = 300;
  double violation = 0.0;
  for (int n = 2; n <= 4; ++n) {
    const Hamiltonian h = opt.dirichlet(n);
    const double lambda0 = ground_energy(h);
    const OptResult r = static_vqe_baseline(h, n, ShotBudget::exact(), cfg, rng);
    violation = std::max(violation, lambda0 - r.value);
  }
  suite.add("vqe", "variational-bound", std::max(0.0, violation), kVariationalTol, 3);
}

}  // namespace

bool VerifyReport::all_passed() const { return num_failed() == 0; }

std::size_t VerifyReport::num_failed() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const VerifyCheck& c) { return !c.passed; }));
}

VerifyOptions default_verify_options() {
  VerifyOptions opt;
  opt.dirichlet = dirichlet_hamiltonian;
  return opt;
}

VerifyReport run_verify(const VerifyOptions& options) {
  Suite suite;
  check_laplacian(options, suite);
  check_circuits(options, suite);
  check_expectations(options, suite);
  check_problems(options, suite);
  check_vqe(options, suite);
  return suite.take();
}

void write_verify_report(std::ostream& out, const VerifyReport& report) {
  std::map<std::string, std::pair<std::size_t, std::size_t>> per_module;
  std::vector<std::string> order;
  for (const VerifyCheck& c : report.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.module << " " << c.invariant
        << " cases=" << c.cases << " max_deviation=" << format_real(c.max_deviation) << "\n";
    auto [it, inserted] = per_module.try_emplace(c.module, 0, 0);
    if (inserted) order.push_back(c.module);
    it->second.first += c.passed ? 1 : 0;
    it->second.second += 1;
  }
  for (const std::string& m : order) {
    out << "module " << m << ": " << per_module[m].first << "/" << per_module[m].second
        << " passed\n";
  }
  out << "verify: " << report.checks.size() - report.num_failed() << "/" << report.checks.size()
      << " checks passed\n";
}

}  // namespace mgvqe
