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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "mgvqe/circuit.hpp"
#include "mgvqe/hamiltonian.hpp"
#include "mgvqe/harness.hpp"
#include "mgvqe/problems.hpp"
#include "mgvqe/rng.hpp"
#include "mgvqe/state_vector.hpp"

namespace {

using namespace mgvqe;

struct Outcome {
  bool passed = false;
  std::string detail;
};

int g_failures = 0;

void criterion(int id, const char* name, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!r.passed) ++g_failures;
  std::printf("%s %2d %s: %s runtime=%.2fs\n", r.passed ? "PASS" : "FAIL", id, name,
              r.detail.c_str(), secs);
  std::fflush(stdout);
}

double elapsed_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

double rayleigh(const Eigen::MatrixXcd& m, const StateVector& psi) {
  const auto amps = psi.amplitudes();
  const Eigen::Map<const Eigen::VectorXcd> v(amps.data(), static_cast<Eigen::Index>(amps.size()));
  return (v.adjoint() * m * v)(0, 0).real();
}

const SummaryRow* find_row(const std::vector<SummaryRow>& rows, int stage, Arm arm,
                           ShotBudget shots, std::optional<double> p = std::nullopt) {
  for (const SummaryRow& r : rows) {
    if (r.stage_size == stage && r.arm == arm && r.shots == shots && r.p == p) return &r;
  }
  return nullptr;
}

std::string csv_of(const ExperimentConfig& cfg) {
  std::ostringstream out;
  switch (cfg.kind) {
    case ExperimentKind::kLaplacian: {
      const ExperimentResult r = run_laplacian(cfg);
      write_summary_csv(out, cfg, r.rows);
      write_error_csv(out, r.errors);
      break;
    }
    case ExperimentKind::kWarmCold: {
      const ExperimentResult r = run_warmcold(cfg);
      write_summary_csv(out, cfg, r.rows);
      write_error_csv(out, r.errors);
      break;
    }
    case ExperimentKind::kMaxCut:
      write_summary_csv(out, cfg, run_maxcut(cfg).rows);
      break;
    case ExperimentKind::kKSat:
      write_summary_csv(out, cfg, run_ksat(cfg).rows);
      break;
    case ExperimentKind::kEigvec:
      write_eigvec_csv(out, run_eigvec(cfg));
      break;
    case ExperimentKind::kVerify:
      break;
  }
  return out.str();
}

Outcome dirichlet_identity() {
  const auto start = std::chrono::steady_clock::now();
  double dev = 0.0;
  for (int n = 2; n <= 6; ++n) {
    const Eigen::MatrixXcd lhs = to_dense(dirichlet_hamiltonian(n));
    const Eigen::MatrixXcd rhs =
        to_dense(periodic_hamiltonian(n)) + to_dense(dirichlet_boundary_term(n));
    dev = std::max(dev, max_abs(lhs - rhs));
  }
  const double secs = elapsed_since(start);
  return {dev <= 1e-12 && secs < 10.0, "n=2..6 max_dev=" + fmt("%.3g", dev) + " (tol 1e-12)"};
}

Outcome oracle_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(2024);
  std::vector<std::pair<std::string, Hamiltonian>> families;
  for (int n = 2; n <= 8; ++n) {
    families.emplace_back("dirichlet", dirichlet_hamiltonian(n));
    families.emplace_back("periodic", periodic_hamiltonian(n));
    families.emplace_back("boundary", dirichlet_boundary_term(n));
    families.emplace_back("maxcut", maxcut_hamiltonian(erdos_renyi(n, 0.5, rng)));
    const int k = n >= 3 ? 3 : 2;
    families.emplace_back(
        "sat", sat_hamiltonian(random_eksat(n, k, hard_instance_clause_count(n, k), rng)));
  }
  double dev = 0.0;
  for (const auto& [name, h] : families) {
    const Eigen::MatrixXcd dense = to_dense(h);
    for (int s = 0; s < 100; ++s) {
      const StateVector psi = random_state(h.num_qubits(), rng);
      dev = std::max(dev, std::abs(expectation_exact(h, psi) - rayleigh(dense, psi)));
    }
  }
  const double secs = elapsed_since(start);
  return {dev <= 1e-10 && secs < 60.0,
          std::to_string(families.size()) + " hamiltonians x 100 states max_dev=" +
              fmt("%.3g", dev) + " (tol 1e-10)"};
}

Outcome refinement_interpolation() {
  Rng rng(33);
  const ParamCircuit seed = efficient_su2(2, 3);
  const ParamCircuit fine = refine(seed);
  double dev = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> theta(seed.num_params());
    for (double& t : theta) t = 2 * std::numbers::pi * rng.uniform();
    const StateVector coarse = simulate(seed, theta);
    theta.resize(fine.num_params(), 0.0);
    const StateVector refined = simulate(fine, theta);
    double dist2 = 0.0;
    for (std::size_t b = 0; b < coarse.dimension(); ++b) {
      const Complex want = coarse[b] / std::sqrt(2.0);
      dist2 += std::norm(refined[2 * b] - want) + std::norm(refined[2 * b + 1] - want);
    }
    dev = std::max(dev, std::sqrt(dist2));
  }
  return {dev <= 1e-12, "100 seeds max_norm_dev=" + fmt("%.3g", dev) + " (tol 1e-12)"};
}

Outcome parameter_count() {
  ParamCircuit c = efficient_su2(2, 3);
  const std::size_t seed_params = c.num_params();
  for (int n = 3; n <= 10; ++n) c = refine(c);
  const std::size_t formula = multigrid_param_count(2, seed_params, 10);
  return {seed_params == 16 && c.num_params() == 60 && formula == 60,
          "seed=" + std::to_string(seed_params) + " n10_circuit=" + std::to_string(c.num_params()) +
              " n10_formula=" + std::to_string(formula) + " (want 16/60/60)"};
}

Outcome shot_scaling() {
  const auto start = std::chrono::steady_clock::now();
  const Hamiltonian h = dirichlet_hamiltonian(4);
  Rng rng(5);
  const StateVector psi = random_state(4, rng);
  const double exact = expectation_exact(h, psi);
  auto rms = [&](std::size_t shots) {
    double acc = 0.0;
    for (int r = 0; r < 30; ++r) {
      const double e = expectation_sampled(h, psi, shots, rng) - exact;
      acc += e * e;
    }
    return std::sqrt(acc / 30);
  };
  const double lo = rms(1000);
  const double hi = rms(100000);
  const double ratio = lo / hi;
  const double secs = elapsed_since(start);
  return {ratio >= 3 && ratio <= 30 && secs < 120.0,
          "rms(1e3)=" + fmt("%.4g", lo) + " rms(1e5)=" + fmt("%.4g", hi) +
              " ratio=" + fmt("%.3f", ratio) + " (want [3,30])"};
}

Outcome laplacian_comparison() {
  const auto start = std::chrono::steady_clock::now();
  ExperimentConfig cfg = ExperimentConfig::defaults(ExperimentKind::kLaplacian);
  cfg.size_lo = 2;
  cfg.size_hi = 8;
  cfg.trials = 10;
  cfg.shots = {ShotBudget::exact(), ShotBudget::shots(1000)};
  const ExperimentResult r = run_laplacian(cfg);
  const SummaryRow* mg_exact = find_row(r.rows, 8, Arm::kMultigrid, ShotBudget::exact());
  const SummaryRow* st_exact = find_row(r.rows, 8, Arm::kStatic, ShotBudget::exact());
  const SummaryRow* mg_shots = find_row(r.rows, 8, Arm::kMultigrid, ShotBudget::shots(1000));
  const SummaryRow* st_shots = find_row(r.rows, 8, Arm::kStatic, ShotBudget::shots(1000));
  double err = NAN;
  for (const ErrorRow& e : r.errors) {
    if (e.stage_size == 8 && e.arm == Arm::kMultigrid && e.shots.is_exact()) err = e.mean_error;
  }
  if (!mg_exact || !st_exact || !mg_shots || !st_shots) return {false, "missing n=8 rows"};
  const double secs = elapsed_since(start);
  const bool ok = mg_exact->mean < st_exact->mean && err <= 1e-2 &&
                  mg_shots->mean < st_shots->mean && secs < 1800.0;
  return {ok, "n=8 exact: multigrid=" + fmt("%.6g", mg_exact->mean) +
                  " static=" + fmt("%.6g", st_exact->mean) + " multigrid_err=" +
                  fmt("%.3g", err) + " (tol 1e-2); 1e3 shots: multigrid=" +
                  fmt("%.6g", mg_shots->mean) + " static=" + fmt("%.6g", st_shots->mean)};
}

Outcome warm_vs_cold() {
  ExperimentConfig cfg = ExperimentConfig::defaults(ExperimentKind::kWarmCold);
  cfg.size_lo = 2;
  cfg.size_hi = 6;
  cfg.trials = 10;
  const ExperimentResult r = run_warmcold(cfg);
  const SummaryRow* warm = find_row(r.rows, 6, Arm::kMultigrid, ShotBudget::exact());
  const SummaryRow* cold = find_row(r.rows, 6, Arm::kCold, ShotBudget::exact());
  if (!warm || !cold) return {false, "missing n=6 rows"};
  return {warm->mean <= cold->mean,
          "n=6 warm=" + fmt("%.12g", warm->mean) + " cold=" + fmt("%.12g", cold->mean) +
              " warm-cold=" + fmt("%.3g", warm->mean - cold->mean)};
}

Outcome maxcut_comparison() {
  ExperimentConfig cfg = ExperimentConfig::defaults(ExperimentKind::kMaxCut);
  cfg.size_lo = 2;
  cfg.size_hi = 10;
  cfg.p_list = {0.3, 0.6, 0.9};
  cfg.trials = 20;
  cfg.shots = {ShotBudget::shots(1000)};
  const ExperimentResult r = run_maxcut(cfg);
  bool ok = true;
  std::string detail;
  for (double p : cfg.p_list) {
    const SummaryRow* mg = find_row(r.rows, 10, Arm::kMultigrid, cfg.shots[0], p);
    const SummaryRow* st = find_row(r.rows, 10, Arm::kStatic, cfg.shots[0], p);
    if (!mg || !st) return {false, "missing n=10 rows"};
    ok = ok && mg->mean >= st->mean;
    detail += "p=" + fmt("%.1f", p) + " multigrid=" + fmt("%.4f", mg->mean) +
              " static=" + fmt("%.4f", st->mean) + "; ";
  }
  std::map<std::pair<double, int>, std::size_t> zero_optimum;
  for (double p : cfg.p_list) {
    for (int t = 0; t < cfg.trials; ++t) {
      const Graph g = maxcut_instance(cfg, t, p);
      for (int j = 2; j <= cfg.size_hi; ++j) {
        if (maxcut_bruteforce(g.induced_prefix(j)).value == 0) ++zero_optimum[{p, j}];
      }
    }
  }
  std::size_t mismatches = 0, discarded = 0;
  for (const SummaryRow& row : r.rows) {
    const std::size_t want = zero_optimum[{*row.p, row.stage_size}];
    discarded += row.n_discarded;
    if (row.n_discarded != want ||
        row.n_discarded + row.n_valid_trials != static_cast<std::size_t>(cfg.trials)) {
      ++mismatches;
    }
  }
  ok = ok && mismatches == 0;
  detail += "discarded=" + std::to_string(discarded) +
            " accounting_mismatches=" + std::to_string(mismatches);
  return {ok, detail};
}

Outcome ksat_comparison() {
  bool ok = true;
  std::string detail;
  for (int k : {2, 3}) {
    ExperimentConfig cfg = ExperimentConfig::defaults(ExperimentKind::kKSat);
    cfg.k = k;
    cfg.size_lo = 2;
    cfg.size_hi = 10;
    cfg.trials = 20;
    cfg.shots = {ShotBudget::shots(1000)};
    const ExperimentResult r = run_ksat(cfg);
    const SummaryRow* mg = find_row(r.rows, 10, Arm::kMultigrid, cfg.shots[0]);
    const SummaryRow* st = find_row(r.rows, 10, Arm::kStatic, cfg.shots[0]);
    if (!mg || !st) return {false, "missing n=10 rows"};
    const bool has_two = std::any_of(r.rows.begin(), r.rows.end(),
                                     [](const SummaryRow& row) { return row.stage_size == 2; });
    ok = ok && mg->mean >= st->mean && !(k == 3 && has_two);
    detail += "k=" + std::to_string(k) + " m=" + std::to_string(cfg.num_clauses()) +
              " multigrid=" + fmt("%.4f", mg->mean) + " static=" + fmt("%.4f", st->mean);
    if (k == 3) detail += has_two ? " size2_stage=present" : " size2_stage=absent";
    detail += "; ";
  }
  return {ok, detail};
}

Outcome diagonal_exhaustives() {
  Rng rng(10);
  std::size_t maxcut_bad = 0, sat_bad = 0, expand_bad = 0, bound_bad = 0, checked = 0;
  for (int n = 2; n <= 10; ++n) {
    const Graph g = erdos_renyi(n, 0.5, rng);
    const Hamiltonian hc = maxcut_hamiltonian(g);
    for (int k : {2, 3}) {
      if (k > n) continue;
      const CnfFormula f = random_eksat(n, k, hard_instance_clause_count(n, k), rng);
      const Hamiltonian hs = sat_hamiltonian(f);
      const std::vector<PauliString> strings = sat_pauli_expansion(f);
      const Hamiltonian he = hamiltonian_from_paulis(n, strings);
      const std::size_t m = f.clauses().size();
      if (strings.size() > m * (std::size_t{1} << k) + 1) ++bound_bad;
      for (const PauliString& s : strings) {
        for (Pauli l : s.letters) {
          if (l == Pauli::kX || l == Pauli::kY) ++expand_bad;
        }
      }
      for (std::uint64_t z = 0; z < (std::uint64_t{1} << n); ++z) {
        const double want = f.count_satisfied(z);
        if (diagonal_entry(hs, z) != want) ++sat_bad;
        if (std::abs(diagonal_entry(he, z) - want) > 1e-9) ++expand_bad;
        ++checked;
      }
    }
    for (std::uint64_t z = 0; z < (std::uint64_t{1} << n); ++z) {
      if (diagonal_entry(hc, z) != -g.cut_value(z)) ++maxcut_bad;
    }
  }
  const bool ok = maxcut_bad == 0 && sat_bad == 0 && expand_bad == 0 && bound_bad == 0;
  return {ok, "n=2..10 sat_assignments=" + std::to_string(checked) +
                  " maxcut_mismatch=" + std::to_string(maxcut_bad) +
                  " sat_mismatch=" + std::to_string(sat_bad) +
                  " expansion_mismatch=" + std::to_string(expand_bad) +
                  " bound_violations=" + std::to_string(bound_bad)};
}

Outcome increment_equivalence() {
  std::size_t bad = 0, checked = 0;
  for (int n = 1; n <= 8; ++n) {
    const ParamCircuit inc = increment_circuit(n);
    const std::vector<std::uint64_t> perm = increment_permutation(n);
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
      StateVector s(n);
      s[0] = 0.0;
      s[b] = 1.0;
      apply_circuit(inc, {}, s);
      if (std::abs(s[perm[b]] - Complex(1.0)) > 1e-12) ++bad;
      ++checked;
    }
  }
  return {bad == 0, "basis_states=" + std::to_string(checked) + " mismatches=" +
                        std::to_string(bad)};
}

Outcome determinism() {
  std::vector<ExperimentConfig> configs;
  for (ExperimentKind kind : {ExperimentKind::kLaplacian, ExperimentKind::kWarmCold,
                              ExperimentKind::kMaxCut, ExperimentKind::kKSat,
                              ExperimentKind::kEigvec}) {
    ExperimentConfig cfg = ExperimentConfig::defaults(kind);
    cfg.size_hi = std::min(cfg.size_hi, 5);
    cfg.trials = 3;
    cfg.base_seed = 11;
    configs.push_back(cfg);
  }
  configs[3].k = 3;
  std::string detail;
  bool ok = true;
  for (ExperimentConfig& cfg : configs) {
    cfg.jobs = 1;
    const std::string first = csv_of(cfg);
    const std::string second = csv_of(cfg);
    cfg.jobs = 2;
    const std::string threaded = csv_of(cfg);
    const bool same = !first.empty() && first == second && first == threaded;
    ok = ok && same;
    detail += std::string(experiment_name(cfg.kind)) + (same ? "=identical " : "=DIFFERENT ");
  }
  return {ok, detail + "(rerun and jobs=2)"};
}

}  // namespace

int main() {
  criterion(1, "dirichlet identity", dirichlet_identity);
  criterion(2, "oracle equivalence", oracle_equivalence);
  criterion(3, "refinement interpolation", refinement_interpolation);
  criterion(4, "parameter count", parameter_count);
  criterion(5, "shot scaling", shot_scaling);
  criterion(6, "laplacian comparison", laplacian_comparison);
  criterion(7, "warm vs cold", warm_vs_cold);
  criterion(8, "maxcut comparison", maxcut_comparison);
  criterion(9, "max-e-k-sat comparison", ksat_comparison);
  criterion(10, "diagonal encodings", diagonal_exhaustives);
  criterion(11, "increment circuit", increment_equivalence);
  criterion(12, "determinism", determinism);
  std::printf("acceptance: %d/12 criteria passed\n", 12 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
