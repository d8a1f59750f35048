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

#include <variant>
#include <vector>

#include <json.hpp>

#include "qdeflate/linalg.hpp"

namespace qdeflate {

// Wire 0 is the top wire of a diagram, wire 1 the bottom. Gates earlier in
// a Circuit's list are applied first, i.e. appear rightmost in the matrix
// product computed by evaluate().

struct Rotation {
  Rotation(Axis axis, int qubit, double angle);
  Axis axis;
  int qubit;
  double angle;
};

struct OneQubit {
  OneQubit(int qubit, const Mat2& matrix);
  int qubit;
  Mat2 matrix;
};

struct ControlledU {
  ControlledU(int control, int target, const Mat2& matrix);
  int control;
  int target;
  Mat2 matrix;
};

struct Cnot {
  Cnot(int control, int target);
  int control;
  int target;
};

struct Cz {};

struct GlobalPhase {
  explicit GlobalPhase(double angle);
  double angle;
};

using Gate = std::variant<Rotation, OneQubit, ControlledU, Cnot, Cz, GlobalPhase>;

struct Circuit {
  std::vector<Gate> gates;
};

// 4x4 embedding of a single gate in the (a1, a0) basis.
Mat4 gate_matrix(const Gate& g);

// Product of the gate embeddings, with list order = application order:
// evaluate({g1, g2, g3}) = gate_matrix(g3) * gate_matrix(g2) * gate_matrix(g1).
Mat4 evaluate(const Circuit& c);

// Number of Cnot, Cz and ControlledU gates in the circuit.
int entangling_count(const Circuit& c);

// Embedding of exp(i*theta*sigma_z) on `target` controlled by `control`.
Mat4 controlled_rotation_matrix(double theta, int control, int target);

// JSON serialization. Schema: {"gates": [...]} where each entry carries a
// "kind" of "rx", "ry", "rz", "u", "cu", "cnot", "cz" or "phase", with
// "qubit"/"control"/"target" indices, "angle" for rotations and phases, and
// 2x2 matrices as [[[re, im], [re, im]], [[re, im], [re, im]]].
nlohmann::json to_json(const Circuit& c);
Circuit circuit_from_json(const nlohmann::json& j);

} // namespace qdeflate
