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

#include "qdeflate/circuit.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qdeflate {

namespace {

void check_qubit(int qubit) {
  if (qubit != 0 && qubit != 1) {
    throw std::invalid_argument("gate qubit index must be 0 or 1");
  }
}

void check_pair(int control, int target) {
  check_qubit(control);
  check_qubit(target);
  if (control == target) {
    throw std::invalid_argument("control and target must differ");
  }
}

void check_angle(double angle) {
  if (!std::isfinite(angle)) {
    throw std::invalid_argument("gate angle must be finite");
  }
}

} // namespace

Rotation::Rotation(Axis axis_, int qubit_, double angle_)
    : axis(axis_), qubit(qubit_), angle(angle_) {
  check_qubit(qubit);
  check_angle(angle);
}

OneQubit::OneQubit(int qubit_, const Mat2& matrix_)
    : qubit(qubit_), matrix(matrix_) {
  check_qubit(qubit);
  if (!is_unitary(matrix, 1e-8)) {
    throw std::invalid_argument("one-qubit gate matrix must be unitary");
  }
}

ControlledU::ControlledU(int control_, int target_, const Mat2& matrix_)
    : control(control_), target(target_), matrix(matrix_) {
  check_pair(control, target);
  if (!is_unitary(matrix, 1e-8)) {
    throw std::invalid_argument("controlled gate matrix must be unitary");
  }
}

Cnot::Cnot(int control_, int target_) : control(control_), target(target_) {
  check_pair(control, target);
}

GlobalPhase::GlobalPhase(double angle_) : angle(angle_) { check_angle(angle); }

namespace {

Mat4 embed_one_qubit(int qubit, const Mat2& m) {
  return qubit == 0 ? kron(Mat2::Identity(), m) : kron(m, Mat2::Identity());
}

Mat4 embed_controlled(int control, int target, const Mat2& m) {
  Mat4 r = Mat4::Zero();
  for (int col = 0; col < 4; ++col) {
    if (((col >> control) & 1) == 0) {
      r(col, col) = 1.0;
      continue;
    }
    const int tbit = (col >> target) & 1;
    for (int tnew = 0; tnew < 2; ++tnew) {
      const int row = (col & ~(1 << target)) | (tnew << target);
      r(row, col) = m(tnew, tbit);
    }
  }
  return r;
}

struct GateMatrixVisitor {
  Mat4 operator()(const Rotation& g) const {
    return embed_one_qubit(g.qubit, rot(g.axis, g.angle));
  }
  Mat4 operator()(const OneQubit& g) const {
    return embed_one_qubit(g.qubit, g.matrix);
  }
  Mat4 operator()(const ControlledU& g) const {
    return embed_controlled(g.control, g.target, g.matrix);
  }
  Mat4 operator()(const Cnot& g) const {
    return embed_controlled(g.control, g.target, sigma_x());
  }
  Mat4 operator()(const Cz&) const {
    Mat4 r = Mat4::Identity();
    r(3, 3) = -1.0;
    return r;
  }
  Mat4 operator()(const GlobalPhase& g) const {
    return std::polar(1.0, g.angle) * Mat4::Identity();
  }
};

} // namespace

Mat4 gate_matrix(const Gate& g) { return std::visit(GateMatrixVisitor{}, g); }

Mat4 evaluate(const Circuit& c) {
  Mat4 u = Mat4::Identity();
  for (const Gate& g : c.gates) {
    u = gate_matrix(g) * u;
  }
  return u;
}

int entangling_count(const Circuit& c) {
  int n = 0;
  for (const Gate& g : c.gates) {
    if (std::holds_alternative<Cnot>(g) || std::holds_alternative<Cz>(g) ||
        std::holds_alternative<ControlledU>(g)) {
      ++n;
    }
  }
  return n;
}

Mat4 controlled_rotation_matrix(double theta, int control, int target) {
  return embed_controlled(control, target, rot(Axis::Z, theta));
}

namespace {

nlohmann::json matrix_to_json(const Mat2& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < 2; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < 2; ++j) {
      row.push_back({m(i, j).real(), m(i, j).imag()});
    }
    rows.push_back(row);
  }
  return rows;
}

Mat2 matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument("matrix must be a 2x2 array");
  }
  Mat2 m;
  for (int i = 0; i < 2; ++i) {
    const auto& row = j.at(i);
    if (!row.is_array() || row.size() != 2) {
      throw std::invalid_argument("matrix must be a 2x2 array");
    }
    for (int jj = 0; jj < 2; ++jj) {
      const auto& entry = row.at(jj);
      if (!entry.is_array() || entry.size() != 2) {
        throw std::invalid_argument("matrix entry must be [re, im]");
      }
      m(i, jj) = Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
    }
  }
  return m;
}

struct GateJsonVisitor {
  nlohmann::json operator()(const Rotation& g) const {
    const char* kind = g.axis == Axis::X ? "rx" : g.axis == Axis::Y ? "ry" : "rz";
    return {{"kind", kind}, {"qubit", g.qubit}, {"angle", g.angle}};
  }
  nlohmann::json operator()(const OneQubit& g) const {
    return {{"kind", "u"}, {"qubit", g.qubit}, {"matrix", matrix_to_json(g.matrix)}};
  }
  nlohmann::json operator()(const ControlledU& g) const {
    return {{"kind", "cu"},
            {"control", g.control},
            {"target", g.target},
            {"matrix", matrix_to_json(g.matrix)}};
  }
  nlohmann::json operator()(const Cnot& g) const {
    return {{"kind", "cnot"}, {"control", g.control}, {"target", g.target}};
  }
  nlohmann::json operator()(const Cz&) const { return {{"kind", "cz"}}; }
  nlohmann::json operator()(const GlobalPhase& g) const {
    return {{"kind", "phase"}, {"angle", g.angle}};
  }
};

} // namespace

nlohmann::json to_json(const Circuit& c) {
  nlohmann::json gates = nlohmann::json::array();
  for (const Gate& g : c.gates) {
    gates.push_back(std::visit(GateJsonVisitor{}, g));
  }
  return {{"gates", gates}};
}

namespace {

Circuit circuit_from_json_impl(const nlohmann::json& j);

} // namespace

Circuit circuit_from_json(const nlohmann::json& j) {
  try {
    return circuit_from_json_impl(j);
  } catch (const nlohmann::json::exception& e) {
    // Missing fields and type mismatches surface as the library's own
    // exception type; report them as plain invalid input instead.
    throw std::invalid_argument(std::string("malformed circuit JSON: ") +
                                e.what());
  }
}

namespace {

Circuit circuit_from_json_impl(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("gates") || !j.at("gates").is_array()) {
    throw std::invalid_argument("circuit JSON must contain a \"gates\" array");
  }
  Circuit c;
  for (const auto& g : j.at("gates")) {
    const std::string kind = g.at("kind").get<std::string>();
    if (kind == "rx" || kind == "ry" || kind == "rz") {
      const Axis axis =
          kind == "rx" ? Axis::X : kind == "ry" ? Axis::Y : Axis::Z;
      c.gates.emplace_back(
          Rotation(axis, g.at("qubit").get<int>(), g.at("angle").get<double>()));
    } else if (kind == "u") {
      c.gates.emplace_back(
          OneQubit(g.at("qubit").get<int>(), matrix_from_json(g.at("matrix"))));
    } else if (kind == "cu") {
      c.gates.emplace_back(ControlledU(g.at("control").get<int>(),
                                       g.at("target").get<int>(),
                                       matrix_from_json(g.at("matrix"))));
    } else if (kind == "cnot") {
      c.gates.emplace_back(
          Cnot(g.at("control").get<int>(), g.at("target").get<int>()));
    } else if (kind == "cz") {
      c.gates.emplace_back(Cz{});
    } else if (kind == "phase") {
      c.gates.emplace_back(GlobalPhase(g.at("angle").get<double>()));
    } else {
      throw std::invalid_argument("unknown gate kind: " + kind);
    }
  }
  return c;
}

} // namespace

} // namespace qdeflate
