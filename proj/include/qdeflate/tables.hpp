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

#include <array>

#include "qdeflate/linalg.hpp"

namespace qdeflate {

enum class Pauli { I, X, Y, Z };

const Mat2& pauli_matrix(Pauli p);

// Signed two-qubit Pauli product: sign * (left on qubit 1) tensor (right on
// qubit 0).
struct SignedPauliPair {
  int sign; // +1 or -1
  Pauli left;
  Pauli right;
};

// The four conjugations whose action on Pauli products is tabulated:
//   MagicDagger: K = M^dag (M the magic basis)
//   Magic:       K = M
//   CnotDown:    K = CNOT with control on wire 1, target on wire 0
//   CnotUp:      K = CNOT with control on wire 0, target on wire 1
enum class ConjugationKind { MagicDagger, Magic, CnotDown, CnotUp };

// Looks up K * (left tensor right) * K^dag in the hardcoded table.
SignedPauliPair conjugate_pauli(ConjugationKind kind, Pauli left, Pauli right);

// Coefficients c[4*l + r] of m in the Pauli product basis, with
// c_{lr} = tr((sigma_l tensor sigma_r)^dag * m) / 4.
std::array<Complex, 16> expand_pauli_basis(const Mat4& m);

} // namespace qdeflate
