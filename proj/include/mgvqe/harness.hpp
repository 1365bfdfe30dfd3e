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

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mgvqe/config.hpp"
#include "mgvqe/optimize.hpp"
#include "mgvqe/problems.hpp"
#include "mgvqe/vqe.hpp"

namespace mgvqe {

enum class ExperimentKind { kLaplacian, kWarmCold, kMaxCut, kKSat, kEigvec, kVerify };

std::string_view experiment_name(ExperimentKind kind);
/// Throws ConfigError for unknown names.
ExperimentKind parse_experiment(std::string_view name);

/// Resolved settings for one experiment run.
///
/// Sizes select the reported stages; combinatorial instances have `size_hi`
/// variables and every hierarchy starts at its smallest stage regardless of
/// `size_lo`.
struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kLaplacian;
  int size_lo = 2;
  int size_hi = 8;
  std::vector<ShotBudget> shots;
  int trials = 10;
  std::uint64_t base_seed = 1;
  std::vector<double> p_list;
  int k = 2;
  /// Clauses per variable; unset means 3 for k = 2 and 6 for k = 3.
  std::optional<double> clause_density;
  OptimizerConfig optimizer;
  /// Method for the first multigrid stage; other settings follow `optimizer`.
  std::optional<OptimizerMethod> seed_method;
  bool static_random_init = false;
  /// Worker threads; 0 means hardware concurrency.
  unsigned jobs = 0;
  std::string out_path;

  /// Defaults for each experiment kind.
  static ExperimentConfig defaults(ExperimentKind kind);

  /// Throws ConfigError on any inconsistency.
  void validate() const;

  int num_clauses() const;
  unsigned resolved_jobs() const;
};

/// Applies one key=value setting. Throws ConfigError for unknown keys or bad
/// values.
void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view value);
void apply_settings(ExperimentConfig& cfg, const std::vector<ConfigEntry>& entries);

/// Resolved configuration as key=value lines, readable by apply_settings.
std::string manifest_text(const ExperimentConfig& cfg);

enum class Arm { kMultigrid, kStatic, kCold };
std::string_view arm_name(Arm arm);

/// One aggregated output line.
struct SummaryRow {
  /// Edge probability (MaxCut only).
  std::optional<double> p;
  int stage_size = 0;
  Arm arm = Arm::kMultigrid;
  ShotBudget shots = ShotBudget::exact();
  double mean = 0.0;
  double ci95_half_width = 0.0;
  double mean_optimizer_calls = 0.0;
  double calls_ci95_half_width = 0.0;
  std::size_t n_valid_trials = 0;
  std::size_t n_discarded = 0;
};

/// Absolute error of Laplacian estimates against the exact ground energy.
struct ErrorRow {
  int stage_size = 0;
  Arm arm = Arm::kMultigrid;
  ShotBudget shots = ShotBudget::exact();
  double lambda0 = 0.0;
  double mean_error = 0.0;
  double ci95_half_width = 0.0;
  std::size_t n = 0;
};

struct ExperimentResult {
  std::vector<SummaryRow> rows;
  std::vector<ErrorRow> errors;
};

ExperimentResult run_laplacian(const ExperimentConfig& cfg);
ExperimentResult run_warmcold(const ExperimentConfig& cfg);
ExperimentResult run_maxcut(const ExperimentConfig& cfg);
ExperimentResult run_ksat(const ExperimentConfig& cfg);

/// Instances used by run_maxcut and run_ksat for a given trial.
Graph maxcut_instance(const ExperimentConfig& cfg, int trial, double p);
CnfFormula ksat_instance(const ExperimentConfig& cfg, int trial);

struct EigvecRow {
  int n = 0;
  std::uint64_t index = 0;
  double amplitude = 0.0;
};

/// Dirichlet ground vectors for each size, all entries non-negative.
std::vector<EigvecRow> run_eigvec(const ExperimentConfig& cfg);

/// Runs `count` independent tasks on up to `jobs` threads. Exceptions are
/// rethrown after all workers finish, lowest task index first.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& task);

/// CSV writers. Summary columns are
/// stage,arm,shots,mean,ci95,calls_mean,calls_ci95,n
/// with a leading `p` column for MaxCut and a trailing `discarded` column for
/// the combinatorial experiments.
void write_summary_csv(std::ostream& out, const ExperimentConfig& cfg,
                       const std::vector<SummaryRow>& rows);
void write_error_csv(std::ostream& out, const std::vector<ErrorRow>& rows);
void write_eigvec_csv(std::ostream& out, const std::vector<EigvecRow>& rows);

/// Shortest round-trip text for a double; "nan" for NaN.
std::string format_real(double x);

/// `<stem>.manifest.txt` and `<stem>.error.csv` next to `csv_path`.
std::string manifest_path_for(const std::string& csv_path);
std::string error_csv_path_for(const std::string& csv_path);

}  // namespace mgvqe
