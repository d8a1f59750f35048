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

#include "qdeflate/csd.hpp"

#include <cmath>
#include <stdexcept>

#include "qdeflate/deflate.hpp"

namespace qdeflate {

namespace {

Vec2 perp(const Vec2& p) {
  Vec2 q;
  q << -std::conj(p(1)), std::conj(p(0));
  return q;
}

// Splits a unitary into exp(i*ahat) * (special unitary part).
Mat2 peel_phase(const Mat2& m, double& ahat) {
  ahat = 0.5 * std::arg(m.determinant());
  return std::polar(1.0, -ahat) * m;
}

} // namespace

CsdFactors csd_2q(const Mat4& u) {
  if (!is_unitary(u, 1e-8)) {
    throw std::invalid_argument("csd_2q: input not unitary");
  }
  const Mat2 u00 = u.block<2, 2>(0, 0);
  const Mat2 u01 = u.block<2, 2>(0, 2);
  const Mat2 u10 = u.block<2, 2>(2, 0);
  const Mat2 u11 = u.block<2, 2>(2, 2);

  // Left/right singular frames of the top-left block give the cosine
  // entries; the sine entries come from the matching columns of u10, which
  // keeps c_i^2 + s_i^2 pinned at 1 by the unitarity of u.
  Svd2 f = svd2(u00);

  // The Gram matrices of u00 and u10 share one eigenbasis (they sum to the
  // identity), but not the same conditioning: near the identity u00's Gram
  // is almost scalar and its eigenvectors are noise, while u10's Gram still
  // resolves them cleanly. Take the frame from the block whose relative
  // eigenvalue gap is wider. Its larger singular value pairs with the
  // smaller cosine, hence the column swap.
  const Svd2 g = svd2(u10);
  const double top = f.s0 * f.s0;
  const double bot = g.s0 * g.s0;
  const double rel_top = top > 0.0 ? (top - f.s1 * f.s1) / top : 0.0;
  const double rel_bot = bot > 0.0 ? (bot - g.s1 * g.s1) / bot : 0.0;
  if (rel_bot > rel_top) {
    // Rotate the borrowed vector so its leading component is real and
    // positive, which keeps plain inputs on their plain frames.
    Vec2 q1 = g.v.col(1);
    const Complex lead = std::abs(q1(0)) >= std::abs(q1(1)) ? q1(0) : q1(1);
    if (std::abs(lead) > 0.0) {
      q1 *= std::conj(lead) / std::abs(lead);
    }
    f = svd2_in_frame(u00, q1);
  }

  // The cosines alone cannot order the angles when both sit at 1 to machine
  // precision; let the full arctangents decide and swap the paired columns
  // if needed.
  if (std::atan2((u10 * f.v.col(0)).norm(), f.s0) >
      std::atan2((u10 * f.v.col(1)).norm(), f.s1)) {
    std::swap(f.s0, f.s1);
    f.u.col(0).swap(f.u.col(1));
    f.v.col(0).swap(f.v.col(1));
  }

  const Mat2& p = f.u;
  const Mat2& q = f.v;
  const double c1 = std::min(f.s0, 1.0);
  const double c2 = std::min(f.s1, 1.0);
  const double s1 = std::min((u10 * q.col(0)).norm(), 1.0);
  const double s2 = std::min((u10 * q.col(1)).norm(), 1.0);

  // Left factor of the lower-left block. Columns of z = -u10 q are s_i
  // times the columns sought; the small-s column is completed by
  // orthogonality, with its phase locked to the data when any signal is
  // left.
  Mat2 al1;
  if (s2 <= 1e-13) {
    al1 = u11;
  } else {
    const Vec2 z1 = -(u10 * q.col(0));
    Vec2 l2 = -(u10 * q.col(1));
    l2 /= l2.norm();
    Vec2 l1 = perp(l2);
    const Complex w = l1.dot(z1);
    if (std::abs(w) > 1e-13) {
      l1 *= w / std::abs(w);
    }
    al1.col(0) = l1;
    al1.col(1) = l2;
  }

  // a_r1 = S (P^dag u01) + C (al1^dag u11) holds exactly for a consistent
  // factorization; each row is recovered through whichever of the two
  // block equations is well conditioned for it.
  Mat2 sc_combo;
  const Mat2 from01 = p.adjoint() * u01;
  const Mat2 from11 = al1.adjoint() * u11;
  sc_combo.row(0) = s1 * from01.row(0) + c1 * from11.row(0);
  sc_combo.row(1) = s2 * from01.row(1) + c2 * from11.row(1);
  const Mat2 ar1 = polar_unitary(sc_combo);

  CsdFactors out;
  out.theta1 = std::atan2(s1, c1);
  out.theta2 = std::atan2(s2, c2);

  double ahat_l0, ahat_l1, ahat_r0, ahat_r1;
  out.l0 = peel_phase(p, ahat_l0);
  out.l1 = peel_phase(al1, ahat_l1);
  out.r0 = peel_phase(q.adjoint(), ahat_r0);
  out.r1 = peel_phase(ar1, ahat_r1);
  out.alpha =
      normalize_angle(0.5 * (ahat_l0 + ahat_l1 + ahat_r0 + ahat_r1));
  out.alpha_l = 0.5 * (ahat_l0 - ahat_l1);
  out.alpha_r = 0.5 * (ahat_r0 - ahat_r1);
  return out;
}

Mat4 csd_reconstruct(const CsdFactors& f) {
  const Complex phl = std::polar(1.0, f.alpha_l);
  const Complex phr = std::polar(1.0, f.alpha_r);
  const Mat4 left = block_diag(phl * f.l0, std::conj(phl) * f.l1);
  const Mat4 right = block_diag(phr * f.r0, std::conj(phr) * f.r1);
  Mat4 mid = Mat4::Zero();
  const double c1 = std::cos(f.theta1);
  const double c2 = std::cos(f.theta2);
  const double sn1 = std::sin(f.theta1);
  const double sn2 = std::sin(f.theta2);
  mid(0, 0) = c1;
  mid(1, 1) = c2;
  mid(0, 2) = sn1;
  mid(1, 3) = sn2;
  mid(2, 0) = -sn1;
  mid(3, 1) = -sn2;
  mid(2, 2) = c1;
  mid(3, 3) = c2;
  return std::polar(1.0, f.alpha) * left * mid * right;
}

CsdCircuitIntermediates csd_circuit_intermediates(const CsdFactors& f) {
  const Diag2 dl = diagonalize_unitary2(f.l0.adjoint() * f.l1);
  const Diag2 dr = diagonalize_unitary2(sigma_z() * f.r1 * f.r0.adjoint());
  return CsdCircuitIntermediates{dl.w,     dr.w,     dl.theta,
                                 dr.theta, dl.delta, dr.delta};
}

namespace {

// One-qubit columns of the circuit form, in matrix order:
//   u = e^{i*phase} W1 ctrlRz(lambda_l) W2 CZ W3 ctrlRz(lambda_r) W4
// with Wk = wk0 on wire 0 times wk1 on wire 1 (W4 acts on wire 0 only).
struct CsdColumns {
  Mat2 w10, w11;
  Mat2 w20, w21;
  Mat2 w30, w31;
  Mat2 w40;
  double rz_left, rz_right; // wire-1 z-angles inside W1 and W3
  double ry_sum, ry_dif;    // wire-1 y-angles inside W2 and W3
  double lambda_l, lambda_r;
  double phase;
};

CsdColumns csd_columns(const CsdFactors& f) {
  const CsdCircuitIntermediates m = csd_circuit_intermediates(f);
  CsdColumns col;
  col.rz_left = f.alpha_l - 0.5 * m.delta_l;
  col.rz_right = f.alpha_r - 0.5 * m.delta_r;
  col.ry_sum = 0.5 * (f.theta1 + f.theta2);
  col.ry_dif = 0.5 * (f.theta1 - f.theta2);
  col.w10 = f.l0 * m.u_l;
  col.w11 = rot(Axis::Z, col.rz_left);
  col.w20 = m.u_l.adjoint();
  col.w21 = rot(Axis::Y, col.ry_sum);
  col.w30 = m.u_r;
  col.w31 = rot(Axis::Y, col.ry_dif) * rot(Axis::Z, col.rz_right);
  col.w40 = m.u_r.adjoint() * f.r0;
  col.lambda_l = m.lambda_l;
  col.lambda_r = m.lambda_r;
  col.phase = f.alpha + 0.5 * m.delta_l + 0.5 * m.delta_r;
  return col;
}

} // namespace

Circuit csd_to_circuit(const CsdFactors& f) {
  const CsdColumns col = csd_columns(f);
  Circuit c;
  c.gates.emplace_back(OneQubit(0, col.w40));
  c.gates.emplace_back(ControlledU(1, 0, rot(Axis::Z, col.lambda_r)));
  c.gates.emplace_back(OneQubit(0, col.w30));
  c.gates.emplace_back(Rotation(Axis::Z, 1, col.rz_right));
  c.gates.emplace_back(Rotation(Axis::Y, 1, col.ry_dif));
  c.gates.emplace_back(Cz{});
  c.gates.emplace_back(OneQubit(0, col.w20));
  c.gates.emplace_back(Rotation(Axis::Y, 1, col.ry_sum));
  c.gates.emplace_back(ControlledU(1, 0, rot(Axis::Z, col.lambda_l)));
  c.gates.emplace_back(OneQubit(0, col.w10));
  c.gates.emplace_back(Rotation(Axis::Z, 1, col.rz_left));
  c.gates.emplace_back(GlobalPhase(normalize_angle(col.phase)));
  return c;
}

Circuit synth_3cnot(const Mat4& u, EntanglerKind kind) {
  if (!is_unitary(u, 1e-8)) {
    throw std::invalid_argument("synth_3cnot: input not unitary");
  }
  const CsdFactors f = csd_2q(u);
  const CsdColumns col = csd_columns(f);

  // Deflate the left sandwich ctrlRz(lambda_l) W2 CZ, then the remaining
  // sandwich CNOT [..] ctrlRz(lambda_r) formed with the second CNOT of the
  // first rewrite. The result keeps exactly three entangling gates.
  const TwoCnotLayers seg1 =
      deflate_layers(rot(Axis::Z, col.lambda_l), col.w20, col.w21, sigma_z());
  const TwoCnotLayers seg2 = deflate_layers(
      sigma_x(), seg1.c0 * col.w30, seg1.c1 * col.w31, rot(Axis::Z, col.lambda_r));

  Mat2 l10 = col.w10 * seg1.a0;
  Mat2 l11 = col.w11 * seg1.a1;
  Mat2 l20 = seg1.b0 * seg2.a0;
  Mat2 l21 = seg1.b1 * seg2.a1;
  Mat2 l30 = seg2.b0;
  Mat2 l31 = seg2.b1;
  Mat2 l40 = seg2.c0 * col.w40;
  Mat2 l41 = seg2.c1;
  const double phase =
      normalize_angle(col.phase + seg1.phase + seg2.phase);

  Circuit c;
  if (kind == EntanglerKind::Cz) {
    // CNOT{1,0} = H(0) CZ H(0); the Hadamards fuse into the layers.
    const Mat2& h = hadamard();
    l10 = l10 * h;
    l20 = h * l20 * h;
    l30 = h * l30 * h;
    l40 = h * l40;
  }
  auto entangler = [kind]() -> Gate {
    if (kind == EntanglerKind::Cz) {
      return Cz{};
    }
    return Cnot(1, 0);
  };
  c.gates.emplace_back(OneQubit(0, l40));
  c.gates.emplace_back(OneQubit(1, l41));
  c.gates.emplace_back(entangler());
  c.gates.emplace_back(OneQubit(0, l30));
  c.gates.emplace_back(OneQubit(1, l31));
  c.gates.emplace_back(entangler());
  c.gates.emplace_back(OneQubit(0, l20));
  c.gates.emplace_back(OneQubit(1, l21));
  c.gates.emplace_back(entangler());
  c.gates.emplace_back(OneQubit(0, l10));
  c.gates.emplace_back(OneQubit(1, l11));
  c.gates.emplace_back(GlobalPhase(phase));
  return c;
}

} // namespace qdeflate
