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

// Cosine-sine factorization of a 4x4 unitary over the (a1, a0) basis, with
// blocks indexed by the wire-1 bit:
//   u = e^{i*alpha} * diag(e^{i*alpha_l} L0, e^{-i*alpha_l} L1)
//       * [[C, S], [-S, C]]
//       * diag(e^{i*alpha_r} R0, e^{-i*alpha_r} R1)
// where C = diag(cos theta1, cos theta2), S = diag(sin theta1, sin theta2),
// and L0, L1, R0, R1 are special unitary.
struct CsdFactors {
  double alpha;
  double alpha_l;
  double alpha_r;
  double theta1; // 0 <= theta1 <= theta2 <= pi/2
  double theta2;
  Mat2 l0, l1;
  Mat2 r0, r1;
};

// Computes the factorization. Throws std::invalid_argument if u is not
// unitary within 1e-8.
CsdFactors csd_2q(const Mat4& u);

// Rebuilds the 4x4 matrix the factors encode.
Mat4 csd_reconstruct(const CsdFactors& f);

// Diagonalizations feeding the circuit form. The left block-diagonal factor
// yields ctrl(L0^dag L1) = u_l ctrlRz(lambda_l) u_l^dag exactly (the
// conjugated product has unit determinant, so delta_l is 0 up to rounding).
// On the right the conjugated product sigma_z R1 R0^dag has determinant -1,
// which no ctrlRz conjugation can reach; the determinant phase delta_r
// (+-pi/2) is peeled off first:
//   sigma_z R1 R0^dag = e^{i*delta_r} u_r exp(i*lambda_r*sigma_z) u_r^dag.
struct CsdCircuitIntermediates {
  Mat2 u_l, u_r;
  double lambda_l, lambda_r;
  double delta_l, delta_r;
};

CsdCircuitIntermediates csd_circuit_intermediates(const CsdFactors& f);

// Circuit with exactly three entangling gates (two controlled-Rz and one
// CZ) evaluating to csd_reconstruct(f).
Circuit csd_to_circuit(const CsdFactors& f);

enum class EntanglerKind { Cz, Cnot };

// Synthesizes an arbitrary 4x4 unitary as a circuit with exactly three
// entangling gates (all CZ or all CNOT) and four one-qubit layers.
// Throws std::invalid_argument if u is not unitary within 1e-8.
Circuit synth_3cnot(const Mat4& u, EntanglerKind kind = EntanglerKind::Cz);

} // namespace qdeflate
