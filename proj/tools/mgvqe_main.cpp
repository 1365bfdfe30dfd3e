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

// Command-line front end: one subcommand per experiment.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "mgvqe/errors.hpp"
#include "mgvqe/harness.hpp"
#include "mgvqe/verify.hpp"

namespace {

using mgvqe::ExperimentConfig;
using mgvqe::ExperimentKind;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfig = 2;

struct Flags {
  std::string config_path;
  std::vector<std::pair<std::string, std::string>> overrides;
};

// Registers a string flag whose value is forwarded as a config setting.
void forward(CLI::App* cmd, Flags& flags, const std::string& name, const std::string& key,
             const std::string& help) {
  cmd->add_option_function<std::string>(
      "--" + name, [&flags, key](const std::string& v) { flags.overrides.emplace_back(key, v); },
      help);
}

void add_common(CLI::App* cmd, Flags& flags, ExperimentKind kind) {
  cmd->add_option("--config", flags.config_path, "key=value config file");
  forward(cmd, flags, "out", "out", "output CSV path ('-' for stdout)");
  forward(cmd, flags, "jobs", "jobs", "worker threads (0 = all cores)");
  if (kind == ExperimentKind::kVerify) return;
  forward(cmd, flags, "sizes", "sizes", "stage sizes LO..HI");
  if (kind == ExperimentKind::kEigvec) return;
  forward(cmd, flags, "seed", "seed", "base seed; trial t uses seed + t");
  forward(cmd, flags, "shots", "shots", "comma-separated shot counts or 'exact'");
  forward(cmd, flags, "trials", "trials", "number of trials");
  if (kind == ExperimentKind::kMaxCut) forward(cmd, flags, "p", "p", "edge probabilities");
  if (kind == ExperimentKind::kKSat) forward(cmd, flags, "k", "k", "literals per clause (2 or 3)");
}

ExperimentConfig resolve(ExperimentKind kind, const Flags& flags) {
  ExperimentConfig cfg = ExperimentConfig::defaults(kind);
  if (!flags.config_path.empty()) {
    mgvqe::apply_settings(cfg, mgvqe::load_key_value_file(flags.config_path));
  }
  for (const auto& [key, value] : flags.overrides) {
    try {
      mgvqe::apply_setting(cfg, key, value);
    } catch (const mgvqe::ConfigError& e) {
      throw mgvqe::ConfigError("--" + key + ": " + e.what());
    }
  }
  if (cfg.out_path.empty() && kind != ExperimentKind::kVerify) cfg.out_path = std::string(mgvqe::experiment_name(kind)) + ".csv";
  cfg.validate();
  return cfg;
}

template <typename Writer>
void write_file(const std::string& path, Writer&& write) {
  if (path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw mgvqe::ConfigError("cannot open '" + path + "' for writing");
  write(out);
  out.close();
  if (!out) throw mgvqe::ConfigError("failed writing '" + path + "'");
}

void write_manifest(const ExperimentConfig& cfg) {
  if (cfg.out_path == "-") return;
  write_file(mgvqe::manifest_path_for(cfg.out_path),
             [&](std::ostream& out) { out << mgvqe::manifest_text(cfg); });
}

int run(ExperimentKind kind, const Flags& flags) {
  const ExperimentConfig cfg = resolve(kind, flags);
  switch (kind) {
    case ExperimentKind::kVerify: {
      const mgvqe::VerifyReport report = mgvqe::run_verify();
      mgvqe::write_verify_report(std::cout, report);
      if (!cfg.out_path.empty() && cfg.out_path != "-") {
        write_file(cfg.out_path,
                   [&](std::ostream& out) { mgvqe::write_verify_report(out, report); });
      }
      return report.all_passed() ? kExitOk : kExitVerifyFailed;
    }
    case ExperimentKind::kEigvec: {
      const auto rows = mgvqe::run_eigvec(cfg);
      write_file(cfg.out_path, [&](std::ostream& out) { mgvqe::write_eigvec_csv(out, rows); });
      write_manifest(cfg);
      return kExitOk;
    }
    default:
      break;
  }
  mgvqe::ExperimentResult result;
  switch (kind) {
    case ExperimentKind::kLaplacian: result = mgvqe::run_laplacian(cfg); break;
    case ExperimentKind::kWarmCold: result = mgvqe::run_warmcold(cfg); break;
    case ExperimentKind::kMaxCut: result = mgvqe::run_maxcut(cfg); break;
    case ExperimentKind::kKSat: result = mgvqe::run_ksat(cfg); break;
    default: break;
  }
  write_file(cfg.out_path,
             [&](std::ostream& out) { mgvqe::write_summary_csv(out, cfg, result.rows); });
  if (!result.errors.empty() && cfg.out_path != "-") {
    write_file(mgvqe::error_csv_path_for(cfg.out_path),
               [&](std::ostream& out) { mgvqe::write_error_csv(out, result.errors); });
  }
  write_manifest(cfg);
  if (cfg.out_path != "-") {
    std::cerr << "wrote " << result.rows.size() << " rows to " << cfg.out_path << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multigrid-ansatz VQE experiments on an exact statevector simulator"};
  app.require_subcommand(1);
  Flags flags;
  std::optional<ExperimentKind> chosen;
  const std::pair<ExperimentKind, const char*> commands[] = {
      {ExperimentKind::kLaplacian, "Dirichlet Laplacian: multigrid vs static ansatz"},
      {ExperimentKind::kWarmCold, "warm-started vs cold-restarted multigrid"},
      {ExperimentKind::kMaxCut, "MaxCut approximation ratios on random graphs"},
      {ExperimentKind::kKSat, "Max-E-k-SAT approximation ratios"},
      {ExperimentKind::kEigvec, "Dirichlet ground-state vectors"},
      {ExperimentKind::kVerify, "run the invariant suite"},
  };
  for (const auto& [kind, help] : commands) {
    CLI::App* cmd = app.add_subcommand(std::string(mgvqe::experiment_name(kind)), help);
    add_common(cmd, flags, kind);
    cmd->callback([&chosen, kind = kind] { chosen = kind; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }
  try {
    return run(*chosen, flags);
  } catch (const mgvqe::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const mgvqe::ValidationError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const mgvqe::CapacityError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
}
