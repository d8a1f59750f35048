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

#include "qdeflate/breach.hpp"
#include "qdeflate/verify.hpp"
#include "test_util.hpp"

using namespace qdeflate;

TEST_CASE("breach_circuit lays out the three-cnot pattern") {
  std::mt19937_64 rng(61);
  BreachPattern p{random_u2(rng), random_u2(rng), random_u2(rng)};
  Circuit c = breach_circuit(p);
  REQUIRE(c.gates.size() == 6);
  CHECK(entangling_count(c) == 3);

  Mat4 cn = testing::cnot_mat(1, 0);
  Mat4 direct = cn * testing::on_wire(0, p.a) * cn *
                testing::on_wire(0, p.b) * testing::on_wire(1, p.g) * cn;
  CHECK(frobenius_distance(evaluate(c), direct) < 1e-13);
}

TEST_CASE("close_breach on the trivial pattern gives back a cnot") {
  BreachPattern p{identity2(), identity2(), identity2()};
  Circuit c = close_breach(p);
  CHECK(entangling_count(c) == 2);
  CHECK(frobenius_distance(evaluate(c), testing::cnot_mat(1, 0)) < 1e-12);
}

TEST_CASE("close_breach with a lone y rotation in the breach") {
  std::mt19937_64 rng(62);
  for (int i = 0; i < 50; ++i) {
    BreachPattern p{identity2(), identity2(),
                    rot(Axis::Y, random_angle(rng))};
    Circuit c = close_breach(p);
    CHECK(entangling_count(c) == 2);
    CHECK(frobenius_distance(evaluate(c), evaluate(breach_circuit(p))) <
          1e-9);
  }
}

TEST_CASE("close_breach drops one entangling gate on random patterns") {
  std::mt19937_64 rng(63);
  for (int i = 0; i < 1000; ++i) {
    BreachPattern p{random_u2(rng), random_u2(rng), random_u2(rng)};
    Circuit c = close_breach(p);
    CHECK(entangling_count(breach_circuit(p)) == 3);
    CHECK(entangling_count(c) == 2);
    for (const Gate& g : c.gates) {
      CHECK(!std::holds_alternative<ControlledU>(g));
    }
    CHECK(frobenius_distance(evaluate(c), evaluate(breach_circuit(p))) <
          1e-9);
  }
}

TEST_CASE("close_breach is stable under pattern re-expression") {
  // Moving a scalar phase between the two wire-0 gates leaves the denoted
  // matrix unchanged, and the rewritten circuits agree.
  std::mt19937_64 rng(64);
  for (int i = 0; i < 100; ++i) {
    BreachPattern p{random_u2(rng), random_u2(rng), random_u2(rng)};
    Complex z = std::exp(Complex(0, random_angle(rng)));
    BreachPattern q{p.b * z, p.g * std::conj(z), p.a};
    Mat4 direct = evaluate(breach_circuit(p));
    CHECK(frobenius_distance(direct, evaluate(breach_circuit(q))) < 1e-13);
    CHECK(frobenius_distance(evaluate(close_breach(p)), direct) < 1e-9);
    CHECK(frobenius_distance(evaluate(close_breach(q)), direct) < 1e-9);
  }
}

TEST_CASE("close_breach rejects non-unitary input") {
  CHECK_THROWS_AS(
      close_breach({identity2(), 0.3 * identity2(), identity2()}),
      std::invalid_argument);
}
