// Copyright 2026 The qdeflate authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qdeflate/linalg.hpp"

namespace qdeflate {

// Deterministic samplers. The Gaussian variates are generated in-library
// (Box-Muller over the raw engine output) so reports are reproducible
// across standard library implementations.
double random_uniform(std::mt19937_64& rng);  // in (0, 1]
double random_angle(std::mt19937_64& rng);    // uniform over (-pi, pi]
double random_gaussian(std::mt19937_64& rng); // standard normal
Mat2 random_su2(std::mt19937_64& rng);        // Haar on SU(2) via quaternions
Mat2 random_u2(std::mt19937_64& rng);         // SU(2) times a random phase
Mat4 random_unitary4(std::mt19937_64& rng);   // Gaussian + Gram-Schmidt

struct CheckResult {
  std::string check;
  int trials;
  double max_err;
  double mean_err;
  double tolerance;
  bool pass;
};

struct Report {
  std::uint64_t seed;
  int trials;
  std::vector<CheckResult> checks;
  bool pass;
};

// Runs the six equality check groups, `trials` random instances each:
// the closed-form rewrite identity, both controlled-gate sandwich
// orientations, the three-CNOT pattern rewrite, the cosine-sine
// factorization, and full three-entangler synthesis.
// Throws std::invalid_argument if trials < 1.
Report run_suite(std::uint64_t seed, int trials);

// One line per check plus a summary line.
std::string render_text(const Report& r);

// Stable JSON rendering; doubles are printed with 17 significant digits so
// equal reports are byte-identical.
std::string render_json(const Report& r);

} // namespace qdeflate
