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

#include "qdeflate/circuit.hpp"
#include "qdeflate/linalg.hpp"

namespace qdeflate {

// The three-CNOT breach pattern, in list (application) order:
//   [Cnot{1,0}, OneQubit{0,b}, OneQubit{1,g}, Cnot{1,0}, OneQubit{0,a},
//    Cnot{1,0}].
struct BreachPattern {
  Mat2 b;
  Mat2 g;
  Mat2 a;
};

// The circuit the pattern denotes.
Circuit breach_circuit(const BreachPattern& p);

// Rewrites the pattern into the canonical two-CNOT form
//   [U0,U1] CNOT [U0,U1] CNOT [U0,U1] + GlobalPhase,
// closing the gap between the three-CNOT count and the two-CNOT bound.
// Throws std::invalid_argument if any of b, g, a is not unitary within 1e-8.
Circuit close_breach(const BreachPattern& p);

} // namespace qdeflate
