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

// Inputs of the closed-form rewrite: a controlled-Rz(theta_l) sandwich
// around a product of y-rotations, Ry(beta) on wire 0 and Ry(beta_prime) on
// wire 1, followed by a controlled-Rz(theta_r). Controls sit on wire 1.
struct DeflationInput {
  double theta_l;
  double beta;
  double beta_prime;
  double theta_r;
};

// Angles of the equivalent two-CNOT circuit, plus the intermediate
// quantities they are assembled from (one set per sign branch).
struct DeflationAngles {
  double gamma_l;
  double gamma_l_prime;
  double mu;
  double mu_prime;
  double gamma_r;
  double gamma_r_prime;

  double xi_plus, xi_minus;
  double eta_plus, eta_minus;
  double p_plus, p_minus;
  double q_plus, q_minus;
  double mu_plus, mu_minus;
};

// Closed-form angle computation. Throws std::invalid_argument on non-finite
// input. For each sign branch s the pair (p_s, q_s) satisfies
// p_s^2 + q_s^2 = 1; when p_s (resp. q_s) vanishes the corresponding xi_s
// (resp. eta_s) is set to 0.
DeflationAngles deflate_core(const DeflationInput& in);

// The four-gate controlled-rotation sandwich itself.
Circuit build_lhs(const DeflationInput& in);

// The ten-gate two-CNOT realization carrying the angles from deflate_core.
// evaluate(build_rhs(...)) == evaluate(build_lhs(...)) exactly.
Circuit build_rhs(const DeflationInput& in, const DeflationAngles& a);

// One-qubit layers of a deflated sandwich, in matrix order:
//   ctrl(gl) * (m0 on wire 0)(m1 on wire 1) * ctrl(gr)
//     = e^{i*phase} * [a0,a1] * CNOT * [b0,b1] * CNOT * [c0,c1]
// with all controls on wire 1 and targets on wire 0.
struct TwoCnotLayers {
  Mat2 a0, a1;
  Mat2 b0, b1;
  Mat2 c0, c1;
  double phase;
};

// Works for arbitrary unitary gl, m0, m1, gr (special unitarity is not
// required; determinant phases are peeled off internally).
// Throws std::invalid_argument if any input is not unitary within 1e-8.
TwoCnotLayers deflate_layers(const Mat2& gl, const Mat2& m0, const Mat2& m1,
                             const Mat2& gr);

// Rewrites the pattern
//   [ControlledU{1,0,u}, OneQubit{0,a}, OneQubit{1,b}, ControlledU{1,0,v}]
// (list order, i.e. u applied first) into the canonical two-CNOT form
//   [U0,U1] CNOT [U0,U1] CNOT [U0,U1] + GlobalPhase.
Circuit deflate_same_side(const Mat2& u, const Mat2& a, const Mat2& b,
                          const Mat2& v);

// Same, for the pattern whose second controlled gate has its control on
// wire 0:
//   [ControlledU{1,0,u}, OneQubit{0,a}, OneQubit{1,b}, ControlledU{0,1,v}].
Circuit deflate_opposite_side(const Mat2& u, const Mat2& a, const Mat2& b,
                              const Mat2& v);

// A two-controlled-gate sandwich extracted from a general circuit: exactly
// two entangling gates, with any one-qubit gates before, between and after
// them fused into the 2x2 factors.
struct SandwichPattern {
  Mat2 u;          // controlled gate applied first (control wire 1)
  Mat2 mid0, mid1; // fused one-qubit factors between the controlled gates
  Mat2 v;          // controlled gate applied last
  bool opposite;   // true if the last control sits on wire 0
  Mat2 pre0, pre1; // fused one-qubit factors before the first controlled gate
  Mat2 post0, post1; // and after the last one
  double phase;      // accumulated global phase
};

// Matches a circuit against the sandwich shape. Throws std::invalid_argument
// if the circuit does not contain exactly two entangling gates, or if the
// first entangling gate's control is not on wire 1.
SandwichPattern match_sandwich(const Circuit& c);

// Deflates a matched sandwich, fusing its pre/post one-qubit factors into
// the outer layers of the canonical two-CNOT form.
Circuit deflate_sandwich(const SandwichPattern& p);

} // namespace qdeflate
