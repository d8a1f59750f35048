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

#include "qdeflate/breach.hpp"

#include <stdexcept>

#include "qdeflate/deflate.hpp"

namespace qdeflate {

Circuit breach_circuit(const BreachPattern& p) {
  Circuit c;
  c.gates.emplace_back(Cnot(1, 0));
  c.gates.emplace_back(OneQubit(0, p.b));
  c.gates.emplace_back(OneQubit(1, p.g));
  c.gates.emplace_back(Cnot(1, 0));
  c.gates.emplace_back(OneQubit(0, p.a));
  c.gates.emplace_back(Cnot(1, 0));
  return c;
}

Circuit close_breach(const BreachPattern& p) {
  if (!is_unitary(p.b, 1e-8) || !is_unitary(p.g, 1e-8) ||
      !is_unitary(p.a, 1e-8)) {
    throw std::invalid_argument("close_breach: pattern gates must be unitary");
  }
  // As a matrix the pattern reads X a(0) X (b tensor g) X, which regroups
  // into a two-controlled-gate sandwich: the trailing CNOT conjugates a,
  // leaving ctrl(sx a sx a^dag) * [(a b) on 0][g on 1] * ctrl(sx).
  const Mat2 v = sigma_x() * p.a * sigma_x() * p.a.adjoint();
  return deflate_same_side(sigma_x(), p.a * p.b, p.g, v);
}

} // namespace qdeflate
