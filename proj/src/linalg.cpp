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

#include "qdeflate/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace qdeflate {

namespace {

constexpr Complex kI{0.0, 1.0};

Vec2 perp(const Vec2& p) {
  Vec2 q;
  q << -std::conj(p(1)), std::conj(p(0));
  return q;
}

} // namespace

const Mat2& identity2() {
  static const Mat2 m = Mat2::Identity();
  return m;
}

const Mat2& sigma_x() {
  static const Mat2 m = (Mat2() << 0, 1, 1, 0).finished();
  return m;
}

const Mat2& sigma_y() {
  static const Mat2 m = (Mat2() << 0, -kI, kI, 0).finished();
  return m;
}

const Mat2& sigma_z() {
  static const Mat2 m = (Mat2() << 1, 0, 0, -1).finished();
  return m;
}

const Mat2& hadamard() {
  static const Mat2 m = [] {
    const double s = 1.0 / std::sqrt(2.0);
    return (Mat2() << s, s, s, -s).finished();
  }();
  return m;
}

const Mat2& ket1_proj() {
  static const Mat2 m = (Mat2() << 0, 0, 0, 1).finished();
  return m;
}

const Mat2& ket0_proj() {
  static const Mat2 m = (Mat2() << 1, 0, 0, 0).finished();
  return m;
}

const Mat4& magic_basis() {
  static const Mat4 m = [] {
    const double s = 1.0 / std::sqrt(2.0);
    Mat4 r;
    r << s, 0, 0, kI * s,
        0, kI * s, s, 0,
        0, kI * s, -s, 0,
        s, 0, 0, -kI * s;
    return r;
  }();
  return m;
}

const Mat4& exchange() {
  static const Mat4 m = [] {
    Mat4 r = Mat4::Zero();
    r(0, 0) = 1;
    r(1, 2) = 1;
    r(2, 1) = 1;
    r(3, 3) = 1;
    return r;
  }();
  return m;
}

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 r;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      r.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    }
  }
  return r;
}

Mat2 su2_exp(const Eigen::Vector3d& axis, double angle) {
  if (std::abs(axis.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("su2_exp: axis must be a unit vector");
  }
  const Mat2 dir =
      axis.x() * sigma_x() + axis.y() * sigma_y() + axis.z() * sigma_z();
  return std::cos(angle) * Mat2::Identity() + kI * std::sin(angle) * dir;
}

Mat2 rot(Axis axis, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  Mat2 r;
  switch (axis) {
    case Axis::X:
      r << c, kI * s, kI * s, c;
      break;
    case Axis::Y:
      r << c, s, -s, c;
      break;
    case Axis::Z:
      r << std::polar(1.0, angle), 0, 0, std::polar(1.0, -angle);
      break;
  }
  return r;
}

Mat4 block_diag(const Mat2& top, const Mat2& bottom) {
  Mat4 r = Mat4::Zero();
  r.block<2, 2>(0, 0) = top;
  r.block<2, 2>(2, 2) = bottom;
  return r;
}

double frobenius_distance(const Mat2& a, const Mat2& b) {
  return (a - b).norm();
}

double frobenius_distance(const Mat4& a, const Mat4& b) {
  return (a - b).norm();
}

bool is_unitary(const Mat2& m, double tol) {
  return (m.adjoint() * m - Mat2::Identity()).norm() <= tol;
}

bool is_unitary(const Mat4& m, double tol) {
  return (m.adjoint() * m - Mat4::Identity()).norm() <= tol;
}

double normalize_angle(double x) {
  double y = std::remainder(x, 2.0 * kPi);
  if (y <= -kPi) {
    y = kPi;
  }
  return y;
}

namespace {

template <typename Mat>
std::optional<double> equal_up_to_phase_impl(const Mat& a, const Mat& b,
                                             double tol) {
  Eigen::Index ri = 0;
  Eigen::Index ci = 0;
  b.cwiseAbs().maxCoeff(&ri, &ci);
  if (std::abs(b(ri, ci)) <= tol) {
    if (a.cwiseAbs().maxCoeff() <= tol) {
      return 0.0;
    }
    return std::nullopt;
  }
  const Complex ratio = a(ri, ci) / b(ri, ci);
  if (std::abs(std::abs(ratio) - 1.0) > tol) {
    return std::nullopt;
  }
  const double phi = std::arg(ratio);
  const Mat diff = a - std::polar(1.0, phi) * b;
  if (diff.cwiseAbs().maxCoeff() > tol) {
    return std::nullopt;
  }
  return normalize_angle(phi);
}

} // namespace

std::optional<double> equal_up_to_phase(const Mat4& a, const Mat4& b,
                                        double tol) {
  return equal_up_to_phase_impl(a, b, tol);
}

std::optional<double> equal_up_to_phase(const Mat2& a, const Mat2& b,
                                        double tol) {
  return equal_up_to_phase_impl(a, b, tol);
}

EulerZyz euler_zyz(const Mat2& a) {
  if (!is_unitary(a, 1e-10) || std::abs(a.determinant() - 1.0) > 1e-10) {
    throw std::invalid_argument("euler_zyz: input must be special unitary");
  }
  // a = [[cos(b) e^{i(alpha+gamma)}, sin(b) e^{i(alpha-gamma)}], [...]].
  const double beta = std::atan2(std::abs(a(0, 1)), std::abs(a(0, 0)));
  const double s = std::abs(a(0, 0)) > 1e-12 ? std::arg(a(0, 0)) : 0.0;
  const double d = std::abs(a(0, 1)) > 1e-12 ? std::arg(a(0, 1)) : 0.0;
  return EulerZyz{normalize_angle(0.5 * (s + d)), beta,
                  normalize_angle(0.5 * (s - d))};
}

Diag2 diagonalize_unitary2(const Mat2& a) {
  if (!is_unitary(a, 1e-8)) {
    throw std::invalid_argument("diagonalize_unitary2: input not unitary");
  }
  const double delta = 0.5 * std::arg(a.determinant());
  const Mat2 su = std::polar(1.0, -delta) * a;
  // su = cos(theta) I + i sin(theta) (n . sigma) for a unit vector n.
  const double ctheta =
      std::clamp(0.5 * su.trace().real(), -1.0, 1.0);
  const Mat2 h = (su - su.adjoint()) / (2.0 * kI);
  const double hz = h(0, 0).real();
  const double hx = h(0, 1).real();
  const double hy = -h(0, 1).imag();
  const double hn = std::sqrt(hx * hx + hy * hy + hz * hz);
  // atan2 of (|sin|, cos) stays fully accurate where acos(cos) would lose
  // half the digits, i.e. for rotations close to 0 or pi.
  const double theta = std::atan2(hn, ctheta);
  Mat2 w = Mat2::Identity();
  if (hn > 1e-12) {
    const double nx = hx / hn;
    const double ny = hy / hn;
    const double nz = hz / hn;
    Vec2 v1;
    if (nz >= 0.0) {
      const double norm = std::sqrt(2.0 * (1.0 + nz));
      v1 << (1.0 + nz) / norm, Complex(nx, ny) / norm;
    } else {
      const double norm = std::sqrt(2.0 * (1.0 - nz));
      v1 << Complex(nx, -ny) / norm, (1.0 - nz) / norm;
    }
    w.col(0) = v1;
    w.col(1) = perp(v1);
  }
  return Diag2{w, theta, delta};
}

Svd2 svd2(const Mat2& a) {
  const Mat2 b = a.adjoint() * a;
  const double b00 = b(0, 0).real();
  const double b11 = b(1, 1).real();
  const Complex b01 = b(0, 1);
  const double ab = std::abs(b01);
  const double scale = std::max({b00, b11, ab});

  Vec2 q1;
  if (scale <= 0.0 || ab <= scale * 1e-18) {
    // Numerically diagonal Gram matrix: order the standard basis by weight.
    q1 = b00 >= b11 ? Vec2(1, 0) : Vec2(0, 1);
  } else {
    const double d = 0.5 * (b00 - b11);
    const double t = std::hypot(d, ab);
    // lambda1 - b00, computed without cancellation on either sign of d.
    const double r = d >= 0.0 ? ab * ab / (t + d) : t - d;
    Vec2 v;
    v << b01, r;
    q1 = v / v.norm();
  }
  return svd2_in_frame(a, q1);
}

Svd2 svd2_in_frame(const Mat2& a, const Vec2& q1_in) {
  Vec2 q1 = q1_in / q1_in.norm();
  Vec2 q2 = perp(q1);

  double s0 = (a * q1).norm();
  double s1 = (a * q2).norm();
  if (s1 > s0) {
    std::swap(s0, s1);
    const Vec2 tmp = q1;
    q1 = q2;
    q2 = tmp;
  }

  Vec2 p1(1, 0);
  if (s0 > 1e-300) {
    p1 = (a * q1) / s0;
    p1 /= p1.norm();
  }
  Vec2 p2;
  bool done = false;
  if (s1 > s0 * 1e-10 && s1 > 1e-300) {
    Vec2 raw = (a * q2) / s1;
    raw -= p1 * (p1.dot(raw));
    if (raw.norm() > 1e-3) {
      p2 = raw / raw.norm();
      done = true;
    }
  }
  if (!done) {
    p2 = perp(p1);
    const Complex wph = p2.dot(a * q2);
    if (std::abs(wph) > 1e-300) {
      p2 *= wph / std::abs(wph);
    }
  }

  Svd2 out;
  out.u.col(0) = p1;
  out.u.col(1) = p2;
  out.s0 = s0;
  out.s1 = s1;
  out.v.col(0) = q1;
  out.v.col(1) = q2;
  return out;
}

Mat2 polar_unitary(const Mat2& a) {
  const Svd2 f = svd2(a);
  return f.u * f.v.adjoint();
}

} // namespace qdeflate
