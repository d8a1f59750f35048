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

#include "qdeflate/tables.hpp"

#include <stdexcept>

namespace qdeflate {

const Mat2& pauli_matrix(Pauli p) {
  switch (p) {
    case Pauli::I:
      return identity2();
    case Pauli::X:
      return sigma_x();
    case Pauli::Y:
      return sigma_y();
    case Pauli::Z:
      return sigma_z();
  }
  throw std::invalid_argument("unknown Pauli label");
}

namespace {

struct Entry {
  int sign;
  Pauli left;
  Pauli right;
};

using Table = std::array<Entry, 16>;

constexpr Pauli I = Pauli::I;
constexpr Pauli X = Pauli::X;
constexpr Pauli Y = Pauli::Y;
constexpr Pauli Z = Pauli::Z;

// Rows run over the qubit-1 factor (I, X, Y, Z), columns over the qubit-0
// factor, flattened row-major.

constexpr Table kMagicDagger = {{
    {+1, I, I}, {-1, I, Y}, {+1, Y, Z}, {-1, Y, X},
    {-1, Z, Y}, {+1, Z, I}, {-1, X, X}, {-1, X, Z},
    {-1, Y, I}, {+1, Y, Y}, {-1, I, Z}, {+1, I, X},
    {-1, X, Y}, {+1, X, I}, {+1, Z, X}, {+1, Z, Z},
}};

constexpr Table kMagic = {{
    {+1, I, I}, {+1, Y, Z}, {-1, I, X}, {-1, Y, Y},
    {+1, Z, X}, {-1, X, Y}, {-1, Z, I}, {-1, X, Z},
    {-1, Y, I}, {-1, I, Z}, {+1, Y, X}, {+1, I, Y},
    {+1, X, X}, {+1, Z, Y}, {-1, X, I}, {+1, Z, Z},
}};

constexpr Table kCnotDown = {{
    {+1, I, I}, {+1, I, X}, {+1, Z, Y}, {+1, Z, Z},
    {+1, X, X}, {+1, X, I}, {+1, Y, Z}, {-1, Y, Y},
    {+1, Y, X}, {+1, Y, I}, {-1, X, Z}, {+1, X, Y},
    {+1, Z, I}, {+1, Z, X}, {+1, I, Y}, {+1, I, Z},
}};

constexpr Table kCnotUp = {{
    {+1, I, I}, {+1, X, X}, {+1, X, Y}, {+1, I, Z},
    {+1, X, I}, {+1, I, X}, {+1, I, Y}, {+1, X, Z},
    {+1, Y, Z}, {+1, Z, Y}, {-1, Z, X}, {+1, Y, I},
    {+1, Z, Z}, {-1, Y, Y}, {+1, Y, X}, {+1, Z, I},
}};

const Table& table_for(ConjugationKind kind) {
  switch (kind) {
    case ConjugationKind::MagicDagger:
      return kMagicDagger;
    case ConjugationKind::Magic:
      return kMagic;
    case ConjugationKind::CnotDown:
      return kCnotDown;
    case ConjugationKind::CnotUp:
      return kCnotUp;
  }
  throw std::invalid_argument("unknown conjugation kind");
}

} // namespace

SignedPauliPair conjugate_pauli(ConjugationKind kind, Pauli left,
                                Pauli right) {
  const Table& t = table_for(kind);
  const Entry& e =
      t[4 * static_cast<int>(left) + static_cast<int>(right)];
  return SignedPauliPair{e.sign, e.left, e.right};
}

std::array<Complex, 16> expand_pauli_basis(const Mat4& m) {
  std::array<Complex, 16> c{};
  for (int l = 0; l < 4; ++l) {
    for (int r = 0; r < 4; ++r) {
      const Mat4 basis = kron(pauli_matrix(static_cast<Pauli>(l)),
                              pauli_matrix(static_cast<Pauli>(r)));
      c[4 * l + r] = (basis.adjoint() * m).trace() / 4.0;
    }
  }
  return c;
}

} // namespace qdeflate
