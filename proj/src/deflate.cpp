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

#include "qdeflate/deflate.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qdeflate {

namespace {

void check_finite(double x, const char* name) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument(std::string("deflate_core: ") + name +
                                " must be finite");
  }
}

void check_unitary2(const Mat2& m, const char* name) {
  if (!is_unitary(m, 1e-8)) {
    throw std::invalid_argument(std::string(name) + ": matrix not unitary");
  }
}

// diag(1, e^{i*delta}), the determinant phase peeled off a controlled gate.
Mat2 control_phase(double delta) {
  Mat2 p = Mat2::Identity();
  p(1, 1) = std::polar(1.0, delta);
  return p;
}

} // namespace

DeflationAngles deflate_core(const DeflationInput& in) {
  check_finite(in.theta_l, "theta_l");
  check_finite(in.beta, "beta");
  check_finite(in.beta_prime, "beta_prime");
  check_finite(in.theta_r, "theta_r");

  const double half_sum = 0.5 * (in.theta_l + in.theta_r);
  const double half_dif = 0.5 * (in.theta_l - in.theta_r);

  DeflationAngles out{};
  double xi[2];
  double eta[2];
  double p[2];
  double q[2];
  double mu_s[2];
  for (int k = 0; k < 2; ++k) {
    const double s = k == 0 ? 1.0 : -1.0;
    const double phi = -in.beta_prime + s * in.beta;
    const double x1 = std::cos(half_sum) * std::cos(phi);
    const double x2 = std::cos(half_dif) * std::sin(phi);
    const double y1 = -s * std::sin(half_dif) * std::sin(phi);
    const double y2 = -s * std::sin(half_sum) * std::cos(phi);
    p[k] = std::hypot(x1, x2);
    q[k] = std::hypot(y1, y2);
    xi[k] = p[k] > 1e-12 ? std::atan2(x2, x1) : 0.0;
    eta[k] = q[k] > 1e-12 ? std::atan2(y2, y1) : 0.0;
    mu_s[k] = std::atan2(q[k], p[k]);
  }

  out.xi_plus = xi[0];
  out.xi_minus = xi[1];
  out.eta_plus = eta[0];
  out.eta_minus = eta[1];
  out.p_plus = p[0];
  out.p_minus = p[1];
  out.q_plus = q[0];
  out.q_minus = q[1];
  out.mu_plus = mu_s[0];
  out.mu_minus = mu_s[1];

  out.gamma_l = normalize_angle(0.25 * (eta[0] - eta[1] + xi[0] - xi[1]));
  out.gamma_l_prime =
      normalize_angle(0.25 * (-eta[0] - eta[1] - xi[0] - xi[1] + kPi));
  out.gamma_r = normalize_angle(0.25 * (-eta[0] + eta[1] + xi[0] - xi[1]));
  out.gamma_r_prime =
      normalize_angle(0.25 * (eta[0] + eta[1] - xi[0] - xi[1] - kPi));
  out.mu = normalize_angle(0.5 * (mu_s[0] - mu_s[1]));
  out.mu_prime = normalize_angle(0.5 * (mu_s[0] + mu_s[1]));
  return out;
}

Circuit build_lhs(const DeflationInput& in) {
  Circuit c;
  c.gates.emplace_back(ControlledU(1, 0, rot(Axis::Z, in.theta_l)));
  c.gates.emplace_back(Rotation(Axis::Y, 0, in.beta));
  c.gates.emplace_back(Rotation(Axis::Y, 1, in.beta_prime));
  c.gates.emplace_back(ControlledU(1, 0, rot(Axis::Z, in.theta_r)));
  return c;
}

Circuit build_rhs(const DeflationInput& in, const DeflationAngles& a) {
  Circuit c;
  c.gates.emplace_back(Rotation(Axis::Z, 0, 0.5 * in.theta_l));
  c.gates.emplace_back(Rotation(Axis::Y, 0, a.gamma_l));
  c.gates.emplace_back(Rotation(Axis::Y, 1, a.gamma_l_prime));
  c.gates.emplace_back(Cnot(1, 0));
  c.gates.emplace_back(Rotation(Axis::Z, 0, a.mu));
  c.gates.emplace_back(Rotation(Axis::X, 1, a.mu_prime));
  c.gates.emplace_back(Cnot(1, 0));
  c.gates.emplace_back(Rotation(Axis::Y, 0, a.gamma_r));
  c.gates.emplace_back(Rotation(Axis::Y, 1, a.gamma_r_prime));
  c.gates.emplace_back(Rotation(Axis::Z, 0, 0.5 * in.theta_r));
  return c;
}

TwoCnotLayers deflate_layers(const Mat2& gl, const Mat2& m0, const Mat2& m1,
                             const Mat2& gr) {
  check_unitary2(gl, "deflate_layers: gl");
  check_unitary2(m0, "deflate_layers: m0");
  check_unitary2(m1, "deflate_layers: m1");
  check_unitary2(gr, "deflate_layers: gr");

  const Diag2 dl = diagonalize_unitary2(gl);
  const Diag2 dr = diagonalize_unitary2(gr);

  // Determinant phases of the controlled gates land on wire 1: the left
  // one stays outermost, the right one fuses into the middle factor.
  const Mat2 mid0 = dl.w.adjoint() * m0 * dr.w;
  const Mat2 mid1 = m1 * control_phase(dr.delta);

  const double phi0 = 0.5 * std::arg(mid0.determinant());
  const double phi1 = 0.5 * std::arg(mid1.determinant());
  const EulerZyz z0 = euler_zyz(std::polar(1.0, -phi0) * mid0);
  const EulerZyz z1 = euler_zyz(std::polar(1.0, -phi1) * mid1);

  const DeflationAngles ang =
      deflate_core(DeflationInput{dl.theta, z0.beta, z1.beta, dr.theta});

  TwoCnotLayers out;
  out.a0 = dl.w * rot(Axis::Z, z0.alpha) * rot(Axis::Z, 0.5 * dl.theta) *
           rot(Axis::Y, ang.gamma_l);
  out.a1 = control_phase(dl.delta) * rot(Axis::Z, z1.alpha) *
           rot(Axis::Y, ang.gamma_l_prime);
  out.b0 = rot(Axis::Z, ang.mu);
  out.b1 = rot(Axis::X, ang.mu_prime);
  out.c0 = rot(Axis::Y, ang.gamma_r) * rot(Axis::Z, 0.5 * dr.theta) *
           rot(Axis::Z, z0.gamma) * dr.w.adjoint();
  out.c1 = rot(Axis::Y, ang.gamma_r_prime) * rot(Axis::Z, z1.gamma);
  out.phase = phi0 + phi1;
  return out;
}

namespace {

Circuit layers_to_circuit(const TwoCnotLayers& l) {
  Circuit c;
  c.gates.emplace_back(OneQubit(0, l.c0));
  c.gates.emplace_back(OneQubit(1, l.c1));
  c.gates.emplace_back(Cnot(1, 0));
  c.gates.emplace_back(OneQubit(0, l.b0));
  c.gates.emplace_back(OneQubit(1, l.b1));
  c.gates.emplace_back(Cnot(1, 0));
  c.gates.emplace_back(OneQubit(0, l.a0));
  c.gates.emplace_back(OneQubit(1, l.a1));
  c.gates.emplace_back(GlobalPhase(normalize_angle(l.phase)));
  return c;
}

} // namespace

Circuit deflate_same_side(const Mat2& u, const Mat2& a, const Mat2& b,
                          const Mat2& v) {
  // List order [ctrl(u), a, b, ctrl(v)] means ctrl(v) is the leftmost
  // matrix factor.
  return layers_to_circuit(deflate_layers(v, a, b, u));
}

Circuit deflate_opposite_side(const Mat2& u, const Mat2& a, const Mat2& b,
                              const Mat2& v) {
  check_unitary2(v, "deflate_opposite_side: v");
  const Diag2 dv = diagonalize_unitary2(v);
  // ctrl{0->1}(v) splits into wire-local rotations and a wire-1-controlled
  // Rz: v(1)^{n(0)} = P_v(0) w_v(1) Rz(th/2)(1) Rz(-th/2)(0) ctrlRz(th) w_v^dag(1).
  TwoCnotLayers l =
      deflate_layers(rot(Axis::Z, dv.theta), a, dv.w.adjoint() * b, u);
  l.a0 = control_phase(dv.delta) * rot(Axis::Z, -0.5 * dv.theta) * l.a0;
  l.a1 = dv.w * rot(Axis::Z, 0.5 * dv.theta) * l.a1;
  return layers_to_circuit(l);
}

namespace {

struct ControlledPart {
  Mat2 matrix;
  int control;
};

// Views an entangling gate as a controlled 2x2 unitary. CZ is symmetric and
// reported with its control on `preferred`.
ControlledPart as_controlled(const Gate& g, int preferred) {
  if (const auto* cu = std::get_if<ControlledU>(&g)) {
    return {cu->matrix, cu->control};
  }
  if (const auto* cx = std::get_if<Cnot>(&g)) {
    return {sigma_x(), cx->control};
  }
  if (std::holds_alternative<Cz>(g)) {
    return {sigma_z(), preferred};
  }
  throw std::invalid_argument("expected an entangling gate");
}

} // namespace

SandwichPattern match_sandwich(const Circuit& c) {
  if (entangling_count(c) != 2) {
    throw std::invalid_argument(
        "match_sandwich: circuit must contain exactly two entangling gates");
  }
  SandwichPattern p;
  p.mid0 = p.mid1 = p.pre0 = p.pre1 = p.post0 = p.post1 = Mat2::Identity();
  p.phase = 0.0;

  int seen = 0;
  for (const Gate& g : c.gates) {
    const bool entangling = std::holds_alternative<Cnot>(g) ||
                            std::holds_alternative<Cz>(g) ||
                            std::holds_alternative<ControlledU>(g);
    if (entangling) {
      const ControlledPart part = as_controlled(g, 1);
      if (seen == 0) {
        if (part.control != 1) {
          throw std::invalid_argument(
              "match_sandwich: first controlled gate must have its control "
              "on wire 1");
        }
        p.u = part.matrix;
      } else {
        p.v = part.matrix;
        p.opposite = part.control == 0;
      }
      ++seen;
      continue;
    }
    Mat2* w0 = seen == 0 ? &p.pre0 : seen == 1 ? &p.mid0 : &p.post0;
    Mat2* w1 = seen == 0 ? &p.pre1 : seen == 1 ? &p.mid1 : &p.post1;
    if (const auto* r = std::get_if<Rotation>(&g)) {
      Mat2& w = r->qubit == 0 ? *w0 : *w1;
      w = rot(r->axis, r->angle) * w;
    } else if (const auto* u1 = std::get_if<OneQubit>(&g)) {
      Mat2& w = u1->qubit == 0 ? *w0 : *w1;
      w = u1->matrix * w;
    } else if (const auto* ph = std::get_if<GlobalPhase>(&g)) {
      p.phase += ph->angle;
    }
  }
  return p;
}

Circuit deflate_sandwich(const SandwichPattern& p) {
  Circuit c = p.opposite ? deflate_opposite_side(p.u, p.mid0, p.mid1, p.v)
                         : deflate_same_side(p.u, p.mid0, p.mid1, p.v);
  // Canonical layout: [c0 c1] CNOT [b0 b1] CNOT [a0 a1] phase. Fuse the
  // pattern's outer one-qubit factors into the outer layers.
  std::get<OneQubit>(c.gates[0]).matrix =
      std::get<OneQubit>(c.gates[0]).matrix * p.pre0;
  std::get<OneQubit>(c.gates[1]).matrix =
      std::get<OneQubit>(c.gates[1]).matrix * p.pre1;
  std::get<OneQubit>(c.gates[6]).matrix =
      p.post0 * std::get<OneQubit>(c.gates[6]).matrix;
  std::get<OneQubit>(c.gates[7]).matrix =
      p.post1 * std::get<OneQubit>(c.gates[7]).matrix;
  std::get<GlobalPhase>(c.gates[8]).angle = normalize_angle(
      std::get<GlobalPhase>(c.gates[8]).angle + p.phase);
  return c;
}

} // namespace qdeflate
