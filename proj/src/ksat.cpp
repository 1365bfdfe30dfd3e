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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "mgvqe/errors.hpp"
#include "mgvqe/problems.hpp"

namespace mgvqe {

CnfFormula::CnfFormula(int num_vars, int k) : num_vars_(num_vars), k_(k) {
  if (num_vars < 0 || num_vars > 63) throw CapacityError("CnfFormula: variable count out of range");
  if (k < 1) throw ValidationError("CnfFormula: k must be >= 1");
}

void CnfFormula::add_clause(Clause clause) {
  if (clause.size() != static_cast<std::size_t>(k_)) {
    throw ValidationError("CnfFormula: clause must have exactly " + std::to_string(k_) +
                          " literals");
  }
  std::uint64_t seen = 0;
  for (const Literal& lit : clause) {
    if (lit.var < 0 || lit.var >= num_vars_) {
      throw ValidationError("CnfFormula: variable index out of range");
    }
    if ((seen >> lit.var) & 1) throw ValidationError("CnfFormula: repeated variable in clause");
    seen |= std::uint64_t{1} << lit.var;
  }
  clauses_.push_back(std::move(clause));
}

int CnfFormula::count_satisfied(std::uint64_t assignment) const {
  int count = 0;
  for (const Clause& c : clauses_) {
    for (const Literal& lit : c) {
      const bool value = (assignment >> lit.var) & 1;
      if (value != lit.negated) {
        ++count;
        break;
      }
    }
  }
  return count;
}

CnfFormula CnfFormula::restricted_prefix(int count) const {
  if (count < 0 || count > num_vars_) throw ValidationError("CnfFormula: prefix out of range");
  CnfFormula out(count, k_);
  for (const Clause& c : clauses_) {
    if (std::all_of(c.begin(), c.end(), [count](const Literal& l) { return l.var < count; })) {
      out.clauses_.push_back(c);
    }
  }
  return out;
}

int hard_instance_clause_count(int num_vars, int k) {
  switch (k) {
    case 2: return 3 * num_vars;
    case 3: return 6 * num_vars;
    default: throw ValidationError("hard_instance_clause_count: defined for k = 2 or 3");
  }
}

CnfFormula random_eksat(int num_vars, int k, int num_clauses, Rng& rng) {
  if (k > num_vars) {
    throw ValidationError("random_eksat: k = " + std::to_string(k) + " exceeds " +
                          std::to_string(num_vars) + " variables");
  }
  if (num_clauses < 0) throw ValidationError("random_eksat: negative clause count");
  CnfFormula f(num_vars, k);
  std::vector<int> pool(num_vars);
  for (int c = 0; c < num_clauses; ++c) {
    std::iota(pool.begin(), pool.end(), 0);
    Clause clause;
    // Partial Fisher-Yates: the first k entries become a uniform k-subset.
    for (int i = 0; i < k; ++i) {
      const auto j = i + static_cast<int>(rng.uniform_index(num_vars - i));
      std::swap(pool[i], pool[j]);
      clause.push_back({pool[i], false});
    }
    for (Literal& lit : clause) lit.negated = rng.bernoulli(0.5);
    f.add_clause(std::move(clause));
  }
  return f;
}

namespace {

std::vector<int> resolve_var_map(std::span<const int> map, int num_vars) {
  std::vector<int> out(num_vars);
  if (map.empty()) {
    std::iota(out.begin(), out.end(), 0);
    return out;
  }
  if (map.size() != static_cast<std::size_t>(num_vars)) {
    throw ValidationError("SAT: qubit map size differs from variable count");
  }
  std::uint64_t used = 0;
  for (int v = 0; v < num_vars; ++v) {
    if (map[v] < 0 || map[v] >= num_vars || ((used >> map[v]) & 1)) {
      throw ValidationError("SAT: qubit map is not a permutation");
    }
    used |= std::uint64_t{1} << map[v];
    out[v] = map[v];
  }
  return out;
}

}  // namespace

Hamiltonian sat_hamiltonian(const CnfFormula& f, std::span<const int> var_to_qubit) {
  const int n = std::max(1, f.num_vars());
  const std::vector<int> map = resolve_var_map(var_to_qubit, f.num_vars());
  Hamiltonian h(n, static_cast<double>(f.clauses().size()));
  std::vector<MeasuredTerm> terms;
  for (const Clause& c : f.clauses()) {
    // Falsifying assignment: positive literals read 0, negated literals read 1.
    // The |0><0| factors go in the zero mask; each |1><1| = (I - Z)/2 factor
    // is expanded, giving 2^{#negated} terms.
    std::uint64_t zero_mask = 0;
    std::vector<std::uint64_t> negated_bits;
    for (const Literal& lit : c) {
      const std::uint64_t bit = std::uint64_t{1} << map[lit.var];
      if (lit.negated) {
        negated_bits.push_back(bit);
      } else {
        zero_mask |= bit;
      }
    }
    const double scale = std::ldexp(1.0, -static_cast<int>(negated_bits.size()));
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << negated_bits.size()); ++subset) {
      std::uint64_t sign_mask = 0;
      int parity = 0;
      for (std::size_t j = 0; j < negated_bits.size(); ++j) {
        if ((subset >> j) & 1) {
          sign_mask |= negated_bits[j];
          parity ^= 1;
        }
      }
      terms.push_back({(parity ? scale : -scale), sign_mask, zero_mask});
    }
  }
  h.add_frame(MeasurementFrame(ParamCircuit(n), std::vector<MeasureBasis>(n, MeasureBasis::kZ),
                               std::move(terms)));
  return h;
}

std::vector<PauliString> sat_pauli_expansion(const CnfFormula& f,
                                             std::span<const int> var_to_qubit) {
  const int n = std::max(1, f.num_vars());
  const std::vector<int> map = resolve_var_map(var_to_qubit, f.num_vars());
  std::vector<PauliString> raw;
  for (const Clause& c : f.clauses()) {
    const int k = static_cast<int>(c.size());
    const double scale = std::ldexp(1.0, -k);
    raw.push_back(PauliString{std::vector<Pauli>(n, Pauli::kI), 1.0});
    // Projector product = 2^-k sum_S prod_{j in S} s_j Z_j with s = +1 for
    // |0><0| (positive literal) and -1 for |1><1| (negated literal).
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << k); ++subset) {
      PauliString s{std::vector<Pauli>(n, Pauli::kI), -scale};
      for (int j = 0; j < k; ++j) {
        if (!((subset >> j) & 1)) continue;
        s.letters[map[c[j].var]] = Pauli::kZ;
        if (c[j].negated) s.weight = -s.weight;
      }
      raw.push_back(std::move(s));
    }
  }
  return merge_like_terms(raw);
}

SatResult sat_bruteforce(const CnfFormula& f) {
  const int n = f.num_vars();
  if (n > 26) throw CapacityError("sat_bruteforce: at most 26 variables");
  // A clause is falsified iff every positive variable is 0 and every negated
  // variable is 1.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> masks;
  for (const Clause& c : f.clauses()) {
    std::uint64_t pos = 0, neg = 0;
    for (const Literal& lit : c) (lit.negated ? neg : pos) |= std::uint64_t{1} << lit.var;
    masks.emplace_back(pos, neg);
  }
  SatResult best{-1, 0};
  const int m = static_cast<int>(masks.size());
  for (std::uint64_t z = 0; z < (std::uint64_t{1} << n); ++z) {
    int unsat = 0;
    for (const auto& [pos, neg] : masks) unsat += ((z & pos) == 0 && (z & neg) == neg);
    if (m - unsat > best.value) {
      best = {m - unsat, z};
      if (unsat == 0) break;
    }
  }
  return best;
}

Hierarchy subformula_hierarchy(const CnfFormula& f) {
  const int first = std::max(2, f.k());
  if (f.num_vars() < first) {
    throw ValidationError("subformula_hierarchy: formula smaller than the first stage");
  }
  Hierarchy hier;
  for (int j = first; j <= f.num_vars(); ++j) {
    const CnfFormula sub = f.restricted_prefix(j);
    std::vector<int> map = stage_qubit_map(j);
    Hamiltonian h = sat_hamiltonian(sub, map).negated();
    const double optimum = -static_cast<double>(sat_bruteforce(sub).value);
    hier.stages.push_back({j, std::move(h), optimum, std::move(map)});
  }
  return hier;
}

}  // namespace mgvqe
