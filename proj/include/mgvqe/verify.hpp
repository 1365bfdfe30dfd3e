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
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "mgvqe/hamiltonian.hpp"

namespace mgvqe {

struct VerifyCheck {
  std::string module;
  std::string invariant;
  bool passed = false;
  double max_deviation = 0.0;
  std::size_t cases = 0;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;

  bool all_passed() const;
  std::size_t num_failed() const;
};

struct VerifyOptions {
  /// Builder for the Dirichlet operator under test.
  std::function<Hamiltonian(int)> dirichlet;
  std::uint64_t seed = 7;
};

VerifyOptions default_verify_options();

/// Desk-scale invariant suite across all modules.
VerifyReport run_verify(const VerifyOptions& options = default_verify_options());

/// One line per check, then per-module pass counts and a final tally.
void write_verify_report(std::ostream& out, const VerifyReport& report);

}  // namespace mgvqe
