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
#include <span>

namespace mgvqe {

inline constexpr double kZ95 = 1.96;

struct Summary {
  std::size_t n = 0;
  double mean = 0.0;
  double sd = 0.0;
  double ci95 = 0.0;
};

// NaN for empty input.
double mean(std::span<const double> xs);

// Sample standard deviation (n - 1 denominator); 0 for fewer than two values.
double sample_sd(std::span<const double> xs);

// kZ95 * sample_sd / sqrt(n); 0 when n < 2.
double ci95_half_width(std::span<const double> xs);

Summary summarize(std::span<const double> xs);

}  // namespace mgvqe
