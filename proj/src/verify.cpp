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

#include "qdeflate/verify.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "qdeflate/breach.hpp"
#include "qdeflate/circuit.hpp"
#include "qdeflate/csd.hpp"
#include "qdeflate/deflate.hpp"

namespace qdeflate {

double random_uniform(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
}

double random_angle(std::mt19937_64& rng) {
  return kPi * (2.0 * random_uniform(rng) - 1.0);
}

double random_gaussian(std::mt19937_64& rng) {
  const double u1 = random_uniform(rng);
  const double u2 = random_uniform(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

Mat2 random_su2(std::mt19937_64& rng) {
  double q0, q1, q2, q3, n;
  do {
    q0 = random_gaussian(rng);
    q1 = random_gaussian(rng);
    q2 = random_gaussian(rng);
    q3 = random_gaussian(rng);
    n = std::sqrt(q0 * q0 + q1 * q1 + q2 * q2 + q3 * q3);
  } while (n < 1e-6);
  q0 /= n;
  q1 /= n;
  q2 /= n;
  q3 /= n;
  constexpr Complex kI{0.0, 1.0};
  Mat2 m;
  m << q0 + kI * q3, q2 + kI * q1, -q2 + kI * q1, q0 - kI * q3;
  return m;
}

Mat2 random_u2(std::mt19937_64& rng) {
  return std::polar(1.0, random_angle(rng)) * random_su2(rng);
}

Mat4 random_unitary4(std::mt19937_64& rng) {
  Mat4 g;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      g(i, j) = Complex(random_gaussian(rng), random_gaussian(rng));
    }
  }
  // Modified Gram-Schmidt, applied twice; normalizing against a positive
  // real diagonal of the triangular factor fixes the column phases.
  Mat4 q = g;
  for (int pass = 0; pass < 2; ++pass) {
    for (int j = 0; j < 4; ++j) {
      for (int i = 0; i < j; ++i) {
        q.col(j) -= q.col(i) * q.col(i).dot(q.col(j));
      }
      q.col(j) /= q.col(j).norm();
    }
  }
  return q;
}

namespace {

double circuit_error(const Mat4& target, const Circuit& c, int entanglers) {
  if (entangling_count(c) != entanglers) {
    return 1e99;
  }
  return frobenius_distance(target, evaluate(c));
}

CheckResult run_check(const std::string& name, int trials, double tolerance,
                      std::uint64_t seed, std::uint64_t salt,
                      const std::function<double(std::mt19937_64&)>& trial) {
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (salt + 1)));
  double max_err = 0.0;
  double sum_err = 0.0;
  for (int i = 0; i < trials; ++i) {
    const double err = trial(rng);
    max_err = std::max(max_err, err);
    sum_err += err;
  }
  CheckResult r;
  r.check = name;
  r.trials = trials;
  r.max_err = max_err;
  r.mean_err = sum_err / trials;
  r.tolerance = tolerance;
  r.pass = max_err <= tolerance;
  return r;
}

double theorem1_trial(std::mt19937_64& rng) {
  const DeflationInput in{random_angle(rng), random_angle(rng),
                          random_angle(rng), random_angle(rng)};
  const DeflationAngles a = deflate_core(in);
  return frobenius_distance(evaluate(build_lhs(in)),
                            evaluate(build_rhs(in, a)));
}

double same_side_trial(std::mt19937_64& rng) {
  const Mat2 u = random_u2(rng);
  const Mat2 a = random_u2(rng);
  const Mat2 b = random_u2(rng);
  const Mat2 v = random_u2(rng);
  Circuit pattern;
  pattern.gates.emplace_back(ControlledU(1, 0, u));
  pattern.gates.emplace_back(OneQubit(0, a));
  pattern.gates.emplace_back(OneQubit(1, b));
  pattern.gates.emplace_back(ControlledU(1, 0, v));
  return circuit_error(evaluate(pattern), deflate_same_side(u, a, b, v), 2);
}

double opposite_side_trial(std::mt19937_64& rng) {
  const Mat2 u = random_u2(rng);
  const Mat2 a = random_u2(rng);
  const Mat2 b = random_u2(rng);
  const Mat2 v = random_u2(rng);
  Circuit pattern;
  pattern.gates.emplace_back(ControlledU(1, 0, u));
  pattern.gates.emplace_back(OneQubit(0, a));
  pattern.gates.emplace_back(OneQubit(1, b));
  pattern.gates.emplace_back(ControlledU(0, 1, v));
  return circuit_error(evaluate(pattern),
                       deflate_opposite_side(u, a, b, v), 2);
}

double breach_trial(std::mt19937_64& rng) {
  const BreachPattern p{random_u2(rng), random_u2(rng), random_u2(rng)};
  return circuit_error(evaluate(breach_circuit(p)), close_breach(p), 2);
}

double csd_trial(std::mt19937_64& rng) {
  const Mat4 u = random_unitary4(rng);
  return frobenius_distance(u, csd_reconstruct(csd_2q(u)));
}

double synth_trial(std::mt19937_64& rng) {
  const Mat4 u = random_unitary4(rng);
  return circuit_error(u, synth_3cnot(u), 3);
}

} // namespace

Report run_suite(std::uint64_t seed, int trials) {
  if (trials < 1) {
    throw std::invalid_argument("run_suite: trials must be >= 1");
  }
  Report rep;
  rep.seed = seed;
  rep.trials = trials;
  rep.checks.push_back(
      run_check("theorem1", trials, 1e-10, seed, 0, theorem1_trial));
  rep.checks.push_back(
      run_check("theorem2_same", trials, 1e-9, seed, 1, same_side_trial));
  rep.checks.push_back(run_check("theorem2_opposite", trials, 1e-9, seed, 2,
                                 opposite_side_trial));
  rep.checks.push_back(
      run_check("theorem3", trials, 1e-9, seed, 3, breach_trial));
  rep.checks.push_back(run_check("csd", trials, 1e-10, seed, 4, csd_trial));
  rep.checks.push_back(
      run_check("synth3", trials, 1e-9, seed, 5, synth_trial));
  rep.pass = true;
  for (const CheckResult& c : rep.checks) {
    rep.pass = rep.pass && c.pass;
  }
  return rep;
}

namespace {

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

} // namespace

std::string render_text(const Report& r) {
  std::ostringstream out;
  for (const CheckResult& c : r.checks) {
    out << c.check;
    for (std::size_t i = c.check.size(); i < 20; ++i) {
      out << ' ';
    }
    out << "trials=" << c.trials << "  max_err=" << fmt17(c.max_err)
        << "  mean_err=" << fmt17(c.mean_err) << "  tol=" << fmt17(c.tolerance)
        << "  " << (c.pass ? "PASS" : "FAIL") << '\n';
  }
  out << (r.pass ? "all checks passed" : "some checks FAILED") << '\n';
  return out.str();
}

std::string render_json(const Report& r) {
  std::ostringstream out;
  out << "{\"seed\":" << r.seed << ",\"trials\":" << r.trials
      << ",\"checks\":[";
  for (std::size_t i = 0; i < r.checks.size(); ++i) {
    const CheckResult& c = r.checks[i];
    if (i > 0) {
      out << ',';
    }
    out << "{\"check\":\"" << c.check << "\",\"trials\":" << c.trials
        << ",\"max_err\":" << fmt17(c.max_err)
        << ",\"mean_err\":" << fmt17(c.mean_err)
        << ",\"tolerance\":" << fmt17(c.tolerance)
        << ",\"pass\":" << (c.pass ? "true" : "false") << '}';
  }
  out << "],\"pass\":" << (r.pass ? "true" : "false") << "}\n";
  return out.str();
}

} // namespace qdeflate
