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

#include "mgvqe/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>
#include <tuple>

#include "mgvqe/errors.hpp"
#include "mgvqe/problems.hpp"
#include "mgvqe/spectral.hpp"
#include "mgvqe/stats.hpp"

namespace mgvqe {

namespace {

constexpr int kMaxExperimentQubits = 20;
constexpr int kMaxEigvecQubits = 12;

struct KindName {
  ExperimentKind kind;
  std::string_view name;
};
constexpr KindName kKindNames[] = {
    {ExperimentKind::kLaplacian, "laplacian"}, {ExperimentKind::kWarmCold, "warmcold"},
    {ExperimentKind::kMaxCut, "maxcut"},       {ExperimentKind::kKSat, "ksat"},
    {ExperimentKind::kEigvec, "eigvec"},       {ExperimentKind::kVerify, "verify"},
};

bool uses_shots(ExperimentKind kind) {
  return kind != ExperimentKind::kEigvec && kind != ExperimentKind::kVerify;
}

// Stream ids: role, stage, shot count and an instance parameter hashed into
// one 64-bit word.
enum Role : std::uint64_t { kInstance = 0, kMultigridRole = 1, kStaticRole = 2, kColdRole = 3 };

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  h *= 0xBF58476D1CE4E5B9ULL;
  return h ^ (h >> 31);
}

Rng trial_rng(const ExperimentConfig& cfg, int trial, Role role, int stage, ShotBudget shots,
              std::uint64_t instance_tag) {
  std::uint64_t stream = mix(0, role);
  stream = mix(stream, static_cast<std::uint64_t>(stage));
  stream = mix(stream, shots.count());
  stream = mix(stream, instance_tag);
  return Rng(cfg.base_seed + static_cast<std::uint64_t>(trial), stream);
}

std::uint64_t p_tag(double p) { return static_cast<std::uint64_t>(std::llround(p * 1e6)); }

std::uint64_t shots_sort_key(ShotBudget s) {
  return s.is_exact() ? std::numeric_limits<std::uint64_t>::max() : s.count();
}

// One trial's contribution to one output row.
struct Record {
  std::size_t p_index = 0;
  int stage = 0;
  Arm arm = Arm::kMultigrid;
  ShotBudget shots = ShotBudget::exact();
  std::optional<double> value;  // nullopt: discarded
  double calls = 0.0;
  std::optional<double> error;
  double lambda0 = 0.0;
};

OptimizerConfig with_method(OptimizerConfig cfg, OptimizerMethod method) {
  cfg.method = method;
  return cfg;
}

bool in_range(const ExperimentConfig& cfg, int stage) {
  return stage >= cfg.size_lo && stage <= cfg.size_hi;
}

void laplacian_records(const std::vector<StageResult>& results, const Hierarchy& hier, Arm arm,
                       ShotBudget shots, const ExperimentConfig& cfg, std::vector<Record>& out) {
  for (const StageResult& r : results) {
    if (!in_range(cfg, r.stage_size)) continue;
    Record rec;
    rec.stage = r.stage_size;
    rec.arm = arm;
    rec.shots = shots;
    rec.value = r.estimate;
    rec.calls = static_cast<double>(r.cumulative_evaluations);
    const auto& optimum = hier.stages[r.stage_size - hier.first_size()].optimum;
    if (optimum) {
      rec.error = std::abs(r.estimate - *optimum);
      rec.lambda0 = *optimum;
    }
    out.push_back(rec);
  }
}

void combinatorial_records(const std::vector<StageResult>& results, const Hierarchy& hier,
                           Arm arm, ShotBudget shots, std::size_t p_index,
                           const ExperimentConfig& cfg, std::vector<Record>& out) {
  for (const StageResult& r : results) {
    if (!in_range(cfg, r.stage_size)) continue;
    Record rec;
    rec.p_index = p_index;
    rec.stage = r.stage_size;
    rec.arm = arm;
    rec.shots = shots;
    rec.value = approximation_ratio(hier.stages[r.stage_size - hier.first_size()],
                                    *r.most_frequent_bitstring);
    rec.calls = static_cast<double>(r.cumulative_evaluations);
    out.push_back(rec);
  }
}

// Static EfficientSU2 arm on every reported stage of a hierarchy.
std::vector<StageResult> static_arm(const Hierarchy& hier, ShotBudget shots,
                                    const ExperimentConfig& cfg, int trial,
                                    std::uint64_t instance_tag) {
  std::vector<StageResult> results;
  for (const HierarchyStage& stage : hier.stages) {
    if (!in_range(cfg, stage.size)) continue;
    Rng rng = trial_rng(cfg, trial, kStaticRole, stage.size, shots, instance_tag);
    results.push_back(static_stage(stage, shots, cfg.optimizer, rng, cfg.static_random_init));
  }
  return results;
}

// Groups records by (p, stage, arm, shots), exact shots last. `p_list` labels
// rows with their edge probability when given.
ExperimentResult aggregate(const std::vector<std::vector<Record>>& per_task, bool emit_errors,
                           const std::vector<double>* p_list = nullptr) {
  using Key = std::tuple<std::size_t, int, int, std::uint64_t>;
  struct Bucket {
    ShotBudget shots = ShotBudget::exact();
    std::vector<double> values, calls, errors;
    std::size_t discarded = 0;
    double lambda0 = 0.0;
  };
  std::map<Key, Bucket> buckets;
  for (const auto& records : per_task) {
    for (const Record& r : records) {
      Bucket& b = buckets[{r.p_index, r.stage, static_cast<int>(r.arm), shots_sort_key(r.shots)}];
      b.shots = r.shots;
      if (!r.value) {
        ++b.discarded;
        continue;
      }
      b.values.push_back(*r.value);
      b.calls.push_back(r.calls);
      if (r.error) {
        b.errors.push_back(*r.error);
        b.lambda0 = r.lambda0;
      }
    }
  }
  ExperimentResult result;
  for (const auto& [key, b] : buckets) {
    SummaryRow row;
    if (p_list) row.p = (*p_list)[std::get<0>(key)];
    row.stage_size = std::get<1>(key);
    row.arm = static_cast<Arm>(std::get<2>(key));
    row.shots = b.shots;
    row.mean = mean(b.values);
    row.ci95_half_width = ci95_half_width(b.values);
    row.mean_optimizer_calls = mean(b.calls);
    row.calls_ci95_half_width = ci95_half_width(b.calls);
    row.n_valid_trials = b.values.size();
    row.n_discarded = b.discarded;
    result.rows.push_back(row);
    if (emit_errors && !b.errors.empty()) {
      result.errors.push_back(ErrorRow{row.stage_size, row.arm, row.shots, b.lambda0,
                                       mean(b.errors), ci95_half_width(b.errors),
                                       b.errors.size()});
    }
  }
  return result;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

}  // namespace

std::string_view experiment_name(ExperimentKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

ExperimentKind parse_experiment(std::string_view name) {
  for (const auto& [kind, n] : kKindNames) {
    if (n == name) return kind;
  }
  throw ConfigError("unknown experiment '" + std::string(name) + "'");
}

std::string_view arm_name(Arm arm) {
  switch (arm) {
    case Arm::kMultigrid: return "multigrid";
    case Arm::kStatic: return "static";
    case Arm::kCold: return "cold";
  }
  return "unknown";
}

ExperimentConfig ExperimentConfig::defaults(ExperimentKind kind) {
  ExperimentConfig cfg;
  cfg.kind = kind;
  switch (kind) {
    case ExperimentKind::kLaplacian:
      cfg.size_lo = 2;
      cfg.size_hi = 8;
      cfg.shots = {ShotBudget::shots(1000), ShotBudget::shots(1000000)};
      cfg.trials = 10;
      break;
    case ExperimentKind::kWarmCold:
      cfg.size_lo = 2;
      cfg.size_hi = 6;
      cfg.shots = {ShotBudget::exact()};
      cfg.trials = 10;
      cfg.optimizer.method = OptimizerMethod::kQuasiNewton;
      cfg.seed_method = OptimizerMethod::kSimplex;
      break;
    case ExperimentKind::kMaxCut:
      cfg.size_lo = 2;
      cfg.size_hi = 10;
      cfg.shots = {ShotBudget::shots(1000)};
      cfg.trials = 20;
      cfg.p_list = {0.3, 0.6, 0.9};
      break;
    case ExperimentKind::kKSat:
      cfg.size_lo = 2;
      cfg.size_hi = 10;
      cfg.shots = {ShotBudget::shots(1000)};
      cfg.trials = 20;
      cfg.k = 2;
      break;
    case ExperimentKind::kEigvec:
      cfg.size_lo = 2;
      cfg.size_hi = 6;
      cfg.trials = 1;
      break;
    case ExperimentKind::kVerify:
      cfg.trials = 1;
      break;
  }
  return cfg;
}

int ExperimentConfig::num_clauses() const {
  if (!clause_density) return hard_instance_clause_count(size_hi, k);
  return static_cast<int>(std::llround(*clause_density * size_hi));
}

unsigned ExperimentConfig::resolved_jobs() const {
  if (jobs != 0) return jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

void ExperimentConfig::validate() const {
  require(trials >= 1, "trials must be >= 1");
  require(size_lo >= 2, "sizes must start at 2 or above");
  require(size_lo <= size_hi, "sizes: LO must not exceed HI");
  const int cap = kind == ExperimentKind::kEigvec ? kMaxEigvecQubits : kMaxExperimentQubits;
  require(size_hi <= cap, "sizes: at most " + std::to_string(cap) + " qubits for " +
                              std::string(experiment_name(kind)));
  if (uses_shots(kind)) require(!shots.empty(), "shots list must not be empty");
  try {
    optimizer.validate();
  } catch (const ValidationError& e) {
    throw ConfigError(e.what());
  }
  for (ShotBudget s : shots) {
    const bool sampled_qn = optimizer.method == OptimizerMethod::kQuasiNewton && !s.is_exact() &&
                            s.count() < kMinShotsForQuasiNewton;
    require(!sampled_qn, "quasi-newton needs exact objectives or >= 1000000 shots (got " +
                             s.label() + ")");
  }
  if (kind == ExperimentKind::kMaxCut) {
    require(!p_list.empty(), "p list must not be empty");
    for (double p : p_list) require(p >= 0.0 && p <= 1.0, "p must lie in [0, 1]");
  }
  if (kind == ExperimentKind::kKSat) {
    require(k == 2 || k == 3, "k must be 2 or 3");
    require(size_hi >= k, "ksat needs at least k variables");
    if (clause_density) require(*clause_density > 0.0, "density must be positive");
    require(num_clauses() >= 1, "ksat needs at least one clause");
  }
}

void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view value) {
  try {
    if (key == "experiment") {
      const ExperimentKind kind = parse_experiment(value);
      require(kind == cfg.kind, "config is for '" + std::string(value) + "', not '" +
                                    std::string(experiment_name(cfg.kind)) + "'");
    } else if (key == "sizes") {
      std::tie(cfg.size_lo, cfg.size_hi) = parse_range(key, value);
    } else if (key == "shots") {
      cfg.shots.clear();
      for (const std::string& item : split_list(key, value)) {
        cfg.shots.push_back(ShotBudget::parse(item));
      }
    } else if (key == "trials") {
      cfg.trials = parse_int(key, value);
    } else if (key == "seed") {
      cfg.base_seed = parse_u64(key, value);
    } else if (key == "p") {
      cfg.p_list.clear();
      for (const std::string& item : split_list(key, value)) {
        cfg.p_list.push_back(parse_real(key, item));
      }
    } else if (key == "k") {
      cfg.k = parse_int(key, value);
    } else if (key == "density") {
      if (value == "default") {
        cfg.clause_density.reset();
      } else {
        cfg.clause_density = parse_real(key, value);
      }
    } else if (key == "optimizer") {
      cfg.optimizer.method = parse_method(value);
    } else if (key == "seed_optimizer") {
      if (value == "none") {
        cfg.seed_method.reset();
      } else {
        cfg.seed_method = parse_method(value);
      }
    } else if (key == "max_iterations") {
      cfg.optimizer.max_iterations = parse_int(key, value);
    } else if (key == "function_tolerance") {
      cfg.optimizer.function_tolerance = parse_real(key, value);
    } else if (key == "fd_step") {
      cfg.optimizer.fd_step = parse_real(key, value);
    } else if (key == "simplex_step") {
      cfg.optimizer.simplex_step = parse_real(key, value);
    } else if (key == "static_init") {
      require(value == "zeros" || value == "random", "static_init must be zeros or random");
      cfg.static_random_init = value == "random";
    } else if (key == "jobs") {
      const int jobs = parse_int(key, value);
      require(jobs >= 0, "jobs must be >= 0");
      cfg.jobs = static_cast<unsigned>(jobs);
    } else if (key == "out") {
      cfg.out_path = std::string(value);
    } else {
      throw ConfigError("unknown config key '" + std::string(key) + "'");
    }
  } catch (const ValidationError& e) {
    throw ConfigError(std::string(key) + ": " + e.what());
  }
}

void apply_settings(ExperimentConfig& cfg, const std::vector<ConfigEntry>& entries) {
  for (const ConfigEntry& e : entries) {
    try {
      apply_setting(cfg, e.key, e.value);
    } catch (const ConfigError& err) {
      throw ConfigError("line " + std::to_string(e.line) + ": " + err.what());
    }
  }
}

std::string manifest_text(const ExperimentConfig& cfg) {
  std::ostringstream out;
  out << "experiment=" << experiment_name(cfg.kind) << "\n";
  out << "sizes=" << cfg.size_lo << ".." << cfg.size_hi << "\n";
  if (uses_shots(cfg.kind)) {
    out << "shots=";
    for (std::size_t i = 0; i < cfg.shots.size(); ++i) {
      out << (i ? "," : "") << cfg.shots[i].label();
    }
    out << "\n";
    out << "trials=" << cfg.trials << "\n";
    out << "seed=" << cfg.base_seed << "\n";
  }
  if (cfg.kind == ExperimentKind::kMaxCut) {
    out << "p=";
    for (std::size_t i = 0; i < cfg.p_list.size(); ++i) {
      out << (i ? "," : "") << format_real(cfg.p_list[i]);
    }
    out << "\n";
  }
  if (cfg.kind == ExperimentKind::kKSat) {
    out << "k=" << cfg.k << "\n";
    out << "density="
        << (cfg.clause_density ? format_real(*cfg.clause_density) : std::string("default"))
        << "\n";
    out << "# clauses " << cfg.num_clauses() << "\n";
  }
  if (uses_shots(cfg.kind)) {
    out << "optimizer=" << method_name(cfg.optimizer.method) << "\n";
    out << "seed_optimizer="
        << (cfg.seed_method ? method_name(*cfg.seed_method) : std::string_view("none")) << "\n";
    out << "max_iterations=" << cfg.optimizer.max_iterations << "\n";
    out << "function_tolerance=" << format_real(cfg.optimizer.function_tolerance) << "\n";
    out << "fd_step=" << format_real(cfg.optimizer.fd_step) << "\n";
    out << "simplex_step=" << format_real(cfg.optimizer.simplex_step) << "\n";
    out << "static_init=" << (cfg.static_random_init ? "random" : "zeros") << "\n";
  }
  out << "jobs=" << cfg.resolved_jobs() << "\n";
  if (!cfg.out_path.empty()) out << "out=" << cfg.out_path << "\n";
  return out.str();
}

void parallel_for(std::size_t count, unsigned jobs,
                  const std::function<void(std::size_t)>& task) {
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        task(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min<std::size_t>(std::max(1u, jobs), count);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

ExperimentResult run_laplacian(const ExperimentConfig& cfg) {
  cfg.validate();
  const Hierarchy hier = laplacian_hierarchy(cfg.size_hi);
  const ParamCircuit seed = efficient_su2(hier.first_size(), 3);
  struct Task {
    int trial;
    ShotBudget shots;
    Arm arm;
  };
  std::vector<Task> tasks;
  for (int t = 0; t < cfg.trials; ++t) {
    for (ShotBudget s : cfg.shots) {
      tasks.push_back({t, s, Arm::kMultigrid});
      tasks.push_back({t, s, Arm::kStatic});
    }
  }
  std::vector<std::vector<Record>> out(tasks.size());
  parallel_for(tasks.size(), cfg.resolved_jobs(), [&](std::size_t i) {
    const Task& task = tasks[i];
    if (task.arm == Arm::kMultigrid) {
      Rng rng = trial_rng(cfg, task.trial, kMultigridRole, 0, task.shots, 0);
      const auto results = multigrid_vqe(hier, seed, task.shots, cfg.optimizer, rng);
      laplacian_records(results, hier, Arm::kMultigrid, task.shots, cfg, out[i]);
    } else {
      laplacian_records(static_arm(hier, task.shots, cfg, task.trial, 0), hier, Arm::kStatic,
                        task.shots, cfg, out[i]);
    }
  });
  return aggregate(out, true);
}

ExperimentResult run_warmcold(const ExperimentConfig& cfg) {
  cfg.validate();
  const Hierarchy hier = laplacian_hierarchy(cfg.size_hi);
  const ParamCircuit seed = efficient_su2(hier.first_size(), 3);
  std::optional<OptimizerConfig> seed_cfg;
  if (cfg.seed_method) seed_cfg = with_method(cfg.optimizer, *cfg.seed_method);
  struct Task {
    int trial;
    ShotBudget shots;
    Arm arm;
  };
  std::vector<Task> tasks;
  for (int t = 0; t < cfg.trials; ++t) {
    for (ShotBudget s : cfg.shots) {
      tasks.push_back({t, s, Arm::kMultigrid});
      tasks.push_back({t, s, Arm::kCold});
    }
  }
  std::vector<std::vector<Record>> out(tasks.size());
  parallel_for(tasks.size(), cfg.resolved_jobs(), [&](std::size_t i) {
    const Task& task = tasks[i];
    if (task.arm == Arm::kMultigrid) {
      Rng rng = trial_rng(cfg, task.trial, kMultigridRole, 0, task.shots, 0);
      const auto results = multigrid_vqe(hier, seed, task.shots, cfg.optimizer, rng, seed_cfg);
      laplacian_records(results, hier, Arm::kMultigrid, task.shots, cfg, out[i]);
    } else {
      Rng rng = trial_rng(cfg, task.trial, kColdRole, 0, task.shots, 0);
      const auto results = cold_multigrid_baseline(hier, seed, task.shots, cfg.optimizer, rng,
                                                   seed_cfg);
      laplacian_records(results, hier, Arm::kCold, task.shots, cfg, out[i]);
    }
  });
  return aggregate(out, true);
}

Graph maxcut_instance(const ExperimentConfig& cfg, int trial, double p) {
  Rng rng = trial_rng(cfg, trial, kInstance, 0, ShotBudget::exact(), p_tag(p));
  return erdos_renyi(cfg.size_hi, p, rng);
}

CnfFormula ksat_instance(const ExperimentConfig& cfg, int trial) {
  Rng rng = trial_rng(cfg, trial, kInstance, 0, ShotBudget::exact(),
                      static_cast<std::uint64_t>(cfg.k));
  return random_eksat(cfg.size_hi, cfg.k, cfg.num_clauses(), rng);
}

ExperimentResult run_maxcut(const ExperimentConfig& cfg) {
  cfg.validate();
  struct Task {
    int trial;
    std::size_t p_index;
    ShotBudget shots;
    Arm arm;
  };
  std::vector<Task> tasks;
  for (int t = 0; t < cfg.trials; ++t) {
    for (std::size_t j = 0; j < cfg.p_list.size(); ++j) {
      for (ShotBudget s : cfg.shots) {
        tasks.push_back({t, j, s, Arm::kMultigrid});
        tasks.push_back({t, j, s, Arm::kStatic});
      }
    }
  }
  std::vector<std::vector<Record>> out(tasks.size());
  parallel_for(tasks.size(), cfg.resolved_jobs(), [&](std::size_t i) {
    const Task& task = tasks[i];
    const std::uint64_t tag = p_tag(cfg.p_list[task.p_index]);
    const Graph graph = maxcut_instance(cfg, task.trial, cfg.p_list[task.p_index]);
    const Hierarchy hier = subgraph_hierarchy(graph, 2);
    std::vector<StageResult> results;
    if (task.arm == Arm::kMultigrid) {
      Rng rng = trial_rng(cfg, task.trial, kMultigridRole, 0, task.shots, tag);
      results = multigrid_vqe(hier, efficient_su2(hier.first_size(), 3), task.shots,
                              cfg.optimizer, rng);
    } else {
      results = static_arm(hier, task.shots, cfg, task.trial, tag);
    }
    combinatorial_records(results, hier, task.arm, task.shots, task.p_index, cfg, out[i]);
  });
  return aggregate(out, false, &cfg.p_list);
}

ExperimentResult run_ksat(const ExperimentConfig& cfg) {
  cfg.validate();
  struct Task {
    int trial;
    ShotBudget shots;
    Arm arm;
  };
  std::vector<Task> tasks;
  for (int t = 0; t < cfg.trials; ++t) {
    for (ShotBudget s : cfg.shots) {
      tasks.push_back({t, s, Arm::kMultigrid});
      tasks.push_back({t, s, Arm::kStatic});
    }
  }
  const std::uint64_t tag = static_cast<std::uint64_t>(cfg.k);
  std::vector<std::vector<Record>> out(tasks.size());
  parallel_for(tasks.size(), cfg.resolved_jobs(), [&](std::size_t i) {
    const Task& task = tasks[i];
    const CnfFormula formula = ksat_instance(cfg, task.trial);
    const Hierarchy hier = subformula_hierarchy(formula);
    std::vector<StageResult> results;
    if (task.arm == Arm::kMultigrid) {
      Rng rng = trial_rng(cfg, task.trial, kMultigridRole, 0, task.shots, tag);
      results = multigrid_vqe(hier, efficient_su2(hier.first_size(), 3), task.shots,
                              cfg.optimizer, rng);
    } else {
      results = static_arm(hier, task.shots, cfg, task.trial, tag);
    }
    combinatorial_records(results, hier, task.arm, task.shots, 0, cfg, out[i]);
  });
  return aggregate(out, false);
}

std::vector<EigvecRow> run_eigvec(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<EigvecRow> rows;
  for (int n = cfg.size_lo; n <= cfg.size_hi; ++n) {
    const auto bands = tridiagonal_bands(dirichlet_hamiltonian(n));
    if (!bands) throw NumericalError("Dirichlet operator is not tridiagonal");
    const Eigenpair ground = tridiagonal_ground_state(bands->diagonal, bands->off_diagonal);
    for (Eigen::Index i = 0; i < ground.vector.size(); ++i) {
      rows.push_back({n, static_cast<std::uint64_t>(i), std::max(0.0, ground.vector[i])});
    }
  }
  return rows;
}

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

void write_summary_csv(std::ostream& out, const ExperimentConfig& cfg,
                       const std::vector<SummaryRow>& rows) {
  const bool with_p = cfg.kind == ExperimentKind::kMaxCut;
  const bool with_discarded =
      cfg.kind == ExperimentKind::kMaxCut || cfg.kind == ExperimentKind::kKSat;
  if (with_p) out << "p,";
  out << "stage,arm,shots,mean,ci95,calls_mean,calls_ci95,n";
  if (with_discarded) out << ",discarded";
  out << "\n";
  for (const SummaryRow& r : rows) {
    if (with_p) out << format_real(r.p.value_or(std::nan(""))) << ",";
    out << r.stage_size << "," << arm_name(r.arm) << "," << r.shots.label() << ","
        << format_real(r.mean) << "," << format_real(r.ci95_half_width) << ","
        << format_real(r.mean_optimizer_calls) << "," << format_real(r.calls_ci95_half_width)
        << "," << r.n_valid_trials;
    if (with_discarded) out << "," << r.n_discarded;
    out << "\n";
  }
}

void write_error_csv(std::ostream& out, const std::vector<ErrorRow>& rows) {
  out << "stage,arm,shots,lambda0,err_mean,err_ci95,n\n";
  for (const ErrorRow& r : rows) {
    out << r.stage_size << "," << arm_name(r.arm) << "," << r.shots.label() << ","
        << format_real(r.lambda0) << "," << format_real(r.mean_error) << ","
        << format_real(r.ci95_half_width) << "," << r.n << "\n";
  }
}

void write_eigvec_csv(std::ostream& out, const std::vector<EigvecRow>& rows) {
  out << "n,index,amplitude\n";
  for (const EigvecRow& r : rows) {
    out << r.n << "," << r.index << "," << format_real(r.amplitude) << "\n";
  }
}

namespace {

std::string strip_csv_extension(const std::string& path) {
  const auto slash = path.find_last_of('/');
  const auto dot = path.find_last_of('.');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash) &&
      path.substr(dot) == ".csv") {
    return path.substr(0, dot);
  }
  return path;
}

}  // namespace

std::string manifest_path_for(const std::string& csv_path) {
  return strip_csv_extension(csv_path) + ".manifest.txt";
}

std::string error_csv_path_for(const std::string& csv_path) {
  return strip_csv_extension(csv_path) + ".error.csv";
}

}  // namespace mgvqe
