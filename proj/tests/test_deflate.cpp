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

#include <doctest.h>

#include <random>
#include <variant>
#include <vector>

#include "qdeflate/deflate.hpp"
#include "qdeflate/verify.hpp"
#include "test_util.hpp"

using namespace qdeflate;
using qdeflate::testing::on_wire;
using qdeflate::testing::pauli_exp;

namespace {

double identity_error(const DeflationInput& in) {
  DeflationAngles a = deflate_core(in);
  return frobenius_distance(evaluate(build_lhs(in)),
                            evaluate(build_rhs(in, a)));
}

// The canonical two-CNOT layout produced by every rewrite in this module.
void check_canonical_shape(const Circuit& c) {
  REQUIRE(c.gates.size() == 9);
  CHECK(std::holds_alternative<OneQubit>(c.gates[0]));
  CHECK(std::holds_alternative<OneQubit>(c.gates[1]));
  CHECK(std::holds_alternative<Cnot>(c.gates[2]));
  CHECK(std::holds_alternative<OneQubit>(c.gates[3]));
  CHECK(std::holds_alternative<OneQubit>(c.gates[4]));
  CHECK(std::holds_alternative<Cnot>(c.gates[5]));
  CHECK(std::holds_alternative<OneQubit>(c.gates[6]));
  CHECK(std::holds_alternative<OneQubit>(c.gates[7]));
  CHECK(std::holds_alternative<GlobalPhase>(c.gates[8]));
  for (const Gate& g : c.gates) {
    CHECK(!std::holds_alternative<ControlledU>(g));
  }
  CHECK(entangling_count(c) == 2);
}

Mat4 same_side_product(const Mat2& u, const Mat2& a, const Mat2& b,
                       const Mat2& v) {
  return testing::ctrl_mat(1, 0, v) * on_wire(0, a) * on_wire(1, b) *
         testing::ctrl_mat(1, 0, u);
}

Mat4 opposite_side_product(const Mat2& u, const Mat2& a, const Mat2& b,
                           const Mat2& v) {
  return testing::ctrl_mat(0, 1, v) * on_wire(0, a) * on_wire(1, b) *
         testing::ctrl_mat(1, 0, u);
}

} // namespace

TEST_CASE("deflate_core at the origin") {
  DeflationAngles a = deflate_core({0, 0, 0, 0});
  CHECK(std::abs(a.gamma_l) < 1e-14);
  CHECK(a.gamma_l_prime == doctest::Approx(kPi / 4));
  CHECK(std::abs(a.gamma_r) < 1e-14);
  CHECK(a.gamma_r_prime == doctest::Approx(-kPi / 4));
  CHECK(std::abs(a.mu) < 1e-14);
  CHECK(std::abs(a.mu_prime) < 1e-14);
  CHECK(a.p_plus == doctest::Approx(1.0));
  CHECK(a.p_minus == doctest::Approx(1.0));
  CHECK(std::abs(a.q_plus) < 1e-14);
  CHECK(std::abs(a.q_minus) < 1e-14);
  CHECK(std::abs(a.xi_plus) < 1e-14);
  CHECK(std::abs(a.eta_plus) < 1e-14);
  CHECK(frobenius_distance(evaluate(build_lhs({0, 0, 0, 0})),
                           Mat4::Identity()) < 1e-14);
  CHECK(identity_error({0, 0, 0, 0}) < 1e-12);
}

TEST_CASE("deflate_core with a single y rotation") {
  DeflationAngles a = deflate_core({0, kPi / 4, 0, 0});
  CHECK(a.gamma_l == doctest::Approx(kPi / 8));
  CHECK(a.gamma_r == doctest::Approx(kPi / 8));
  CHECK(a.gamma_l_prime == doctest::Approx(kPi / 4));
  CHECK(a.gamma_r_prime == doctest::Approx(-kPi / 4));
  CHECK(std::abs(a.mu) < 1e-14);
  CHECK(std::abs(a.mu_prime) < 1e-14);
  CHECK(a.xi_plus == doctest::Approx(kPi / 4));
  CHECK(a.xi_minus == doctest::Approx(-kPi / 4));
  CHECK(std::abs(a.q_plus) < 1e-14);
  CHECK(std::abs(a.q_minus) < 1e-14);
  // With mu = mu' = 0 the CNOTs cancel and the two wire-0 Ry angles must sum
  // to beta.
  CHECK(a.gamma_l + a.gamma_r == doctest::Approx(kPi / 4));
  CHECK(identity_error({0, kPi / 4, 0, 0}) < 1e-12);
}

TEST_CASE("deflate_core rejects non-finite input") {
  CHECK_THROWS_AS(deflate_core({std::nan(""), 0, 0, 0}),
                  std::invalid_argument);
}

TEST_CASE("deflation identity over random quadruples") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 1000; ++i) {
    DeflationInput in{random_angle(rng), random_angle(rng),
                      random_angle(rng), random_angle(rng)};
    DeflationAngles a = deflate_core(in);
    CHECK(a.p_plus * a.p_plus + a.q_plus * a.q_plus ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(a.p_minus * a.p_minus + a.q_minus * a.q_minus ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(frobenius_distance(evaluate(build_lhs(in)),
                             evaluate(build_rhs(in, a))) < 1e-10);
  }
}

TEST_CASE("deflation identity on degenerate inputs") {
  // Exercise the zero branches: theta_l +- theta_r in {0, pi} and
  // beta +- beta' in {0, pi/2} force p or q through zero.
  std::vector<double> grid{0.0, kPi / 2, kPi, -kPi / 2, kPi / 4, -kPi / 4};
  for (double tl : grid) {
    for (double tr : grid) {
      for (double b : grid) {
        for (double bp : grid) {
          DeflationInput in{tl, b, bp, tr};
          DeflationAngles a = deflate_core(in);
          CHECK(a.p_plus * a.p_plus + a.q_plus * a.q_plus ==
                doctest::Approx(1.0).epsilon(1e-12));
          CHECK(identity_error(in) < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("deflation branch rules keep the matrix continuous") {
  std::vector<DeflationInput> pivots{
      {0, 0, 0, 0},          {kPi, 0.3, 0.3, 0},     {kPi / 2, kPi / 4, kPi / 4, kPi / 2},
      {0.3, 0.7, -0.2, 1.1}, {kPi, kPi / 2, 0, kPi},
  };
  for (const DeflationInput& base : pivots) {
    Mat4 here = evaluate(build_rhs(base, deflate_core(base)));
    for (int k = 0; k < 4; ++k) {
      DeflationInput in = base;
      double* fields[4] = {&in.theta_l, &in.beta, &in.beta_prime,
                           &in.theta_r};
      *fields[k] += 1e-9;
      Mat4 there = evaluate(build_rhs(in, deflate_core(in)));
      CHECK(frobenius_distance(here, there) < 1e-6);
    }
  }
}

TEST_CASE("build_rhs shape") {
  DeflationInput in{0.3, 0.7, -0.2, 1.1};
  Circuit rhs = build_rhs(in, deflate_core(in));
  CHECK(rhs.gates.size() == 10);
  CHECK(entangling_count(rhs) == 2);
  for (const Gate& g : rhs.gates) {
    CHECK(!std::holds_alternative<ControlledU>(g));
    CHECK(!std::holds_alternative<Cz>(g));
  }
  CHECK(entangling_count(build_lhs(in)) == 2);
}

TEST_CASE("cnot conjugation turns the middle block into commuting flows") {
  // CNOT (Rz(mu) on 0)(Rx(mu') on 1) CNOT = exp(i mu' XX) exp(i mu ZZ).
  std::mt19937_64 rng(42);
  Mat4 cn = testing::cnot_mat(1, 0);
  for (int i = 0; i < 100; ++i) {
    double mu = random_angle(rng);
    double mu_prime = random_angle(rng);
    Mat4 mid = cn * on_wire(0, rot(Axis::Z, mu)) *
               on_wire(1, rot(Axis::X, mu_prime)) * cn;
    Mat4 flows = pauli_exp(mu_prime, kron(sigma_x(), sigma_x())) *
                 pauli_exp(mu, kron(sigma_z(), sigma_z()));
    CHECK(frobenius_distance(mid, flows) < 1e-12);
  }
}

TEST_CASE("magic exchange conjugation of y block-diagonals") {
  std::mt19937_64 rng(43);
  const Mat4 k = magic_basis() * exchange();
  for (int i = 0; i < 100; ++i) {
    double alpha = random_angle(rng);
    double beta = random_angle(rng);
    Mat4 lhs = k * block_diag(rot(Axis::Y, alpha), rot(Axis::Y, beta)) *
               k.adjoint();
    Mat4 rhs = pauli_exp((-alpha - beta) / 2, kron(sigma_y(), identity2())) *
               pauli_exp((alpha - beta) / 2, kron(identity2(), sigma_y()));
    CHECK(frobenius_distance(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("magic exchange conjugation of z block-diagonals") {
  std::mt19937_64 rng(44);
  const Mat4 k = magic_basis() * exchange();
  for (int i = 0; i < 100; ++i) {
    double alpha = random_angle(rng);
    double beta = random_angle(rng);
    Mat4 lhs = k * block_diag(rot(Axis::Z, alpha), rot(Axis::Z, beta)) *
               k.adjoint();
    Mat4 rhs = pauli_exp((alpha + beta) / 2, kron(sigma_x(), sigma_x())) *
               pauli_exp((alpha - beta) / 2, kron(sigma_z(), sigma_z()));
    CHECK(frobenius_distance(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("deflate_layers factors a controlled sandwich") {
  std::mt19937_64 rng(45);
  Mat4 cn = testing::cnot_mat(1, 0);
  for (int i = 0; i < 200; ++i) {
    Mat2 gl = random_u2(rng), m0 = random_u2(rng), m1 = random_u2(rng),
         gr = random_u2(rng);
    TwoCnotLayers l = deflate_layers(gl, m0, m1, gr);
    Mat4 rebuilt = std::exp(Complex(0, l.phase)) * on_wire(0, l.a0) *
                   on_wire(1, l.a1) * cn * on_wire(0, l.b0) *
                   on_wire(1, l.b1) * cn * on_wire(0, l.c0) *
                   on_wire(1, l.c1);
    Mat4 direct = testing::ctrl_mat(1, 0, gl) * on_wire(0, m0) *
                  on_wire(1, m1) * testing::ctrl_mat(1, 0, gr);
    CHECK(frobenius_distance(rebuilt, direct) < 1e-9);
  }
  CHECK_THROWS_AS(deflate_layers(2.0 * identity2(), identity2(), identity2(),
                                 identity2()),
                  std::invalid_argument);
}

TEST_CASE("deflate_same_side") {
  SUBCASE("identity input") {
    Circuit c = deflate_same_side(identity2(), identity2(), identity2(),
                                  identity2());
    check_canonical_shape(c);
    CHECK(frobenius_distance(evaluate(c), Mat4::Identity()) < 1e-12);
  }

  SUBCASE("reduces to the closed-form case on rotation inputs") {
    DeflationInput in{0.3, 0.7, -0.2, 1.1};
    Circuit c = deflate_same_side(rot(Axis::Z, in.theta_l),
                                  rot(Axis::Y, in.beta),
                                  rot(Axis::Y, in.beta_prime),
                                  rot(Axis::Z, in.theta_r));
    check_canonical_shape(c);
    CHECK(frobenius_distance(evaluate(c), evaluate(build_lhs(in))) < 1e-10);
  }

  SUBCASE("random special unitaries") {
    std::mt19937_64 rng(46);
    for (int i = 0; i < 500; ++i) {
      Mat2 u = random_su2(rng), a = random_su2(rng), b = random_su2(rng),
           v = random_su2(rng);
      Circuit c = deflate_same_side(u, a, b, v);
      check_canonical_shape(c);
      CHECK(frobenius_distance(evaluate(c), same_side_product(u, a, b, v)) <
            1e-9);
    }
  }

  SUBCASE("random unitaries with arbitrary determinant phases") {
    std::mt19937_64 rng(47);
    for (int i = 0; i < 500; ++i) {
      Mat2 u = random_u2(rng), a = random_u2(rng), b = random_u2(rng),
           v = random_u2(rng);
      Circuit c = deflate_same_side(u, a, b, v);
      check_canonical_shape(c);
      CHECK(frobenius_distance(evaluate(c), same_side_product(u, a, b, v)) <
            1e-9);
    }
  }

  SUBCASE("rejects non-unitary input") {
    CHECK_THROWS_AS(deflate_same_side(identity2(), 0.5 * identity2(),
                                      identity2(), identity2()),
                    std::invalid_argument);
  }
}

TEST_CASE("deflate_opposite_side") {
  SUBCASE("identity input") {
    Circuit c = deflate_opposite_side(identity2(), identity2(), identity2(),
                                      identity2());
    check_canonical_shape(c);
    CHECK(frobenius_distance(evaluate(c), Mat4::Identity()) < 1e-12);
  }

  SUBCASE("pure z rotation on the flipped side") {
    std::mt19937_64 rng(48);
    for (int i = 0; i < 50; ++i) {
      Mat2 v = rot(Axis::Z, random_angle(rng));
      Circuit c = deflate_opposite_side(identity2(), identity2(),
                                        identity2(), v);
      check_canonical_shape(c);
      CHECK(frobenius_distance(
                evaluate(c),
                opposite_side_product(identity2(), identity2(), identity2(),
                                      v)) < 1e-10);
    }
  }

  SUBCASE("random unitaries") {
    std::mt19937_64 rng(49);
    for (int i = 0; i < 500; ++i) {
      Mat2 u = random_u2(rng), a = random_u2(rng), b = random_u2(rng),
           v = random_u2(rng);
      Circuit c = deflate_opposite_side(u, a, b, v);
      check_canonical_shape(c);
      CHECK(frobenius_distance(evaluate(c),
                               opposite_side_product(u, a, b, v)) < 1e-9);
    }
  }
}

TEST_CASE("match_sandwich and deflate_sandwich") {
  std::mt19937_64 rng(50);

  SUBCASE("full sandwich with dressing gates") {
    for (int i = 0; i < 200; ++i) {
      bool opposite = i % 2 == 1;
      Circuit c;
      c.gates.push_back(OneQubit(0, random_u2(rng)));
      c.gates.push_back(Rotation(Axis::Y, 1, random_angle(rng)));
      c.gates.push_back(ControlledU(1, 0, random_u2(rng)));
      c.gates.push_back(OneQubit(1, random_u2(rng)));
      c.gates.push_back(Rotation(Axis::Z, 0, random_angle(rng)));
      if (opposite) {
        c.gates.push_back(ControlledU(0, 1, random_u2(rng)));
      } else {
        c.gates.push_back(ControlledU(1, 0, random_u2(rng)));
      }
      c.gates.push_back(GlobalPhase(random_angle(rng)));
      c.gates.push_back(OneQubit(0, random_u2(rng)));

      SandwichPattern p = match_sandwich(c);
      CHECK(p.opposite == opposite);
      Circuit out = deflate_sandwich(p);
      check_canonical_shape(out);
      CHECK(frobenius_distance(evaluate(out), evaluate(c)) < 1e-9);
    }
  }

  SUBCASE("cnot and cz count as controlled gates") {
    Circuit c;
    c.gates.push_back(Cnot(1, 0));
    c.gates.push_back(Rotation(Axis::Y, 0, 0.6));
    c.gates.push_back(Cz());
    Circuit out = deflate_sandwich(match_sandwich(c));
    check_canonical_shape(out);
    CHECK(frobenius_distance(evaluate(out), evaluate(c)) < 1e-10);
  }

  SUBCASE("shape violations throw") {
    Circuit three;
    three.gates.push_back(Cnot(1, 0));
    three.gates.push_back(Cnot(1, 0));
    three.gates.push_back(Cnot(1, 0));
    CHECK_THROWS_AS(match_sandwich(three), std::invalid_argument);

    Circuit wrong_first;
    wrong_first.gates.push_back(ControlledU(0, 1, identity2()));
    wrong_first.gates.push_back(Cnot(1, 0));
    CHECK_THROWS_AS(match_sandwich(wrong_first), std::invalid_argument);
  }
}
