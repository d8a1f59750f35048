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

#include <complex>
#include <optional>

#include <Eigen/Dense>

namespace qdeflate {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec2 = Eigen::Vector2cd;

// Basis convention used throughout: a two-qubit state index is (a1, a0),
// so row order is 00, 01, 10, 11 with qubit 0 the fast (rightmost) bit.
// kron(a, b) therefore places `a` on qubit 1 and `b` on qubit 0.
//
// Rotation convention: rot(D, theta) = exp(+i * theta * sigma_D).

inline constexpr double kPi = 3.141592653589793238462643383279502884;

enum class Axis { X, Y, Z };

const Mat2& identity2();
const Mat2& sigma_x();
const Mat2& sigma_y();
const Mat2& sigma_z();
const Mat2& hadamard();

// Number projectors: ket1_proj = diag(0, 1), ket0_proj = diag(1, 0).
const Mat2& ket1_proj();
const Mat2& ket0_proj();

// Magic basis: columns are the Bell-like states that carry SO(4) to SU(2)xSU(2).
const Mat4& magic_basis();

// Exchange permutation: swaps basis states 01 and 10, fixes 00 and 11.
const Mat4& exchange();

Mat4 kron(const Mat2& a, const Mat2& b);

// exp(i * angle * (axis . sigma)) for a unit 3-vector axis.
// Throws std::invalid_argument if |axis| deviates from 1 by more than 1e-12.
Mat2 su2_exp(const Eigen::Vector3d& axis, double angle);

// Single-axis rotation exp(i * angle * sigma_axis).
Mat2 rot(Axis axis, double angle);

// Builds the 4x4 matrix with the two given 2x2 blocks on its diagonal.
Mat4 block_diag(const Mat2& top, const Mat2& bottom);

double frobenius_distance(const Mat2& a, const Mat2& b);
double frobenius_distance(const Mat4& a, const Mat4& b);

// Catch-all for Eigen expressions, so products and sums can be compared
// without materializing them at the call site.
template <typename DerivedA, typename DerivedB>
double frobenius_distance(const Eigen::MatrixBase<DerivedA>& a,
                          const Eigen::MatrixBase<DerivedB>& b) {
  return (a - b).norm();
}

bool is_unitary(const Mat2& m, double tol);
bool is_unitary(const Mat4& m, double tol);

// Wraps an angle into (-pi, pi].
double normalize_angle(double x);

// If a = exp(i*phi) * b for some real phi (entrywise within tol), returns phi
// normalized to (-pi, pi]; otherwise returns nullopt.
std::optional<double> equal_up_to_phase(const Mat4& a, const Mat4& b,
                                        double tol);
std::optional<double> equal_up_to_phase(const Mat2& a, const Mat2& b,
                                        double tol);

struct EulerZyz {
  double alpha;
  double beta;
  double gamma;
};

// Factors a in SU(2) as
//   exp(i*alpha*sigma_z) * exp(i*beta*sigma_y) * exp(i*gamma*sigma_z).
// beta lies in [0, pi/2]; alpha and gamma are in (-pi, pi]. When the
// factorization is not unique (beta at 0 or pi/2) the free combination of
// alpha and gamma is set to 0.
// Throws std::invalid_argument unless a is special unitary within 1e-10.
EulerZyz euler_zyz(const Mat2& a);

struct Diag2 {
  Mat2 w;       // special unitary diagonalizer
  double theta; // in [0, pi]
  double delta; // global phase angle, arg(det a) / 2
};

// Writes a unitary a as exp(i*delta) * w * exp(i*theta*sigma_z) * w^dag with
// w special unitary. Throws std::invalid_argument if a is not unitary
// within 1e-8.
Diag2 diagonalize_unitary2(const Mat2& a);

struct Svd2 {
  Mat2 u;
  double s0; // singular values, s0 >= s1 >= 0
  double s1;
  Mat2 v; // a = u * diag(s0, s1) * v^dag
};

// Deterministic analytic SVD of an arbitrary complex 2x2 matrix.
Svd2 svd2(const Mat2& a);

// SVD of a with the right frame pinned to the unit vector q1 and its
// orthogonal complement. The caller owes a frame that (at least nearly)
// diagonalizes a^dag a; columns are reordered so s0 >= s1 still holds.
Svd2 svd2_in_frame(const Mat2& a, const Vec2& q1);

// Nearest unitary in Frobenius norm (polar factor u*v^dag of the SVD).
Mat2 polar_unitary(const Mat2& a);

} // namespace qdeflate
