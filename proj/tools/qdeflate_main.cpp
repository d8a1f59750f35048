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

// qdeflate command-line tool.
//
// Commands: deflate, close-breach, synth, verify, tables.
// Exit codes: 0 success, 1 input error, 2 verification failure.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qdeflate/breach.hpp"
#include "qdeflate/circuit.hpp"
#include "qdeflate/csd.hpp"
#include "qdeflate/deflate.hpp"
#include "qdeflate/linalg.hpp"
#include "qdeflate/tables.hpp"
#include "qdeflate/verify.hpp"

namespace {

using qdeflate::Circuit;
using qdeflate::Complex;
using qdeflate::Mat2;
using qdeflate::Mat4;

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

// Serializes a JSON value with every floating-point number printed to 17
// significant digits, so emitted doubles round-trip exactly and repeated
// runs are byte-identical.
void dump_json_17(const nlohmann::json& j, std::ostream& out) {
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      out << '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) {
          out << ',';
        }
        first = false;
        out << nlohmann::json(it.key()).dump() << ':';
        dump_json_17(it.value(), out);
      }
      out << '}';
      return;
    }
    case nlohmann::json::value_t::array: {
      out << '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i > 0) {
          out << ',';
        }
        dump_json_17(j[i], out);
      }
      out << ']';
      return;
    }
    case nlohmann::json::value_t::number_float:
      out << fmt17(j.get<double>());
      return;
    default:
      out << j.dump();
      return;
  }
}

double parse_number(const std::string& s) {
  if (s.empty()) {
    throw std::invalid_argument("empty number");
  }
  const char* begin = s.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  if (end != begin + s.size()) {
    throw std::invalid_argument("bad number '" + s + "'");
  }
  return v;
}

// Parses one matrix entry in "re+imj" form: a real part, an imaginary part
// suffixed with j, or both (e.g. "0.5", "-1.5j", "0.25-0.75j", "1e-3+2e-4j").
Complex parse_complex_token(const std::string& tok) {
  if (tok.empty()) {
    throw std::invalid_argument("empty matrix entry");
  }
  bool imag_tail = tok.back() == 'j' || tok.back() == 'J';
  std::string body = imag_tail ? tok.substr(0, tok.size() - 1) : tok;
  if (!imag_tail) {
    return Complex(parse_number(body), 0.0);
  }
  // Split at the last sign that starts the imaginary part (not a leading
  // sign, not an exponent sign).
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    char c = body[i];
    if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) {
    return Complex(0.0, parse_number(body));
  }
  return Complex(parse_number(body.substr(0, split)),
                 parse_number(body.substr(split)));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Reads a dim x dim complex matrix from whitespace-separated "re+imj"
// entries, row-major.
template <typename MatT>
MatT parse_matrix_text(const std::string& text, int dim,
                       const std::string& what) {
  std::istringstream in(text);
  MatT m;
  std::string tok;
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      if (!(in >> tok)) {
        throw std::invalid_argument(what + ": expected " +
                                    std::to_string(dim * dim) + " entries");
      }
      m(r, c) = parse_complex_token(tok);
    }
  }
  if (in >> tok) {
    throw std::invalid_argument(what + ": trailing data '" + tok + "'");
  }
  return m;
}

Mat2 read_mat2_file(const std::string& path) {
  return parse_matrix_text<Mat2>(read_file(path), 2, path);
}

// Reads either a 4x4 matrix text file or a circuit JSON file (detected by a
// leading '{'), returning the matrix the input denotes.
Mat4 read_input_matrix(const std::string& path) {
  std::string text = read_file(path);
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) {
      throw std::invalid_argument(path + ": malformed JSON");
    }
    return qdeflate::evaluate(qdeflate::circuit_from_json(j));
  }
  return parse_matrix_text<Mat4>(text, 4, path);
}

// Verification tolerance for the pass/fail gate, overridable through the
// DEFLATE_TOL environment variable.
double verification_tolerance(double fallback) {
  const char* env = std::getenv("DEFLATE_TOL");
  if (env == nullptr || *env == '\0') {
    return fallback;
  }
  double tol = parse_number(env);
  if (!(tol > 0.0)) {
    throw std::invalid_argument("DEFLATE_TOL must be a positive number");
  }
  return tol;
}

void emit_circuit(const Circuit& c, const std::string& out_path) {
  nlohmann::json j = qdeflate::to_json(c);
  if (out_path.empty()) {
    dump_json_17(j, std::cout);
    std::cout << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) {
    throw std::invalid_argument("cannot write '" + out_path + "'");
  }
  dump_json_17(j, out);
  out << '\n';
}

// Prints the verification line and maps the error to an exit code.
int report_error_and_exit_code(double max_err, double tol) {
  std::cout << "max_err=" << fmt17(max_err) << '\n';
  if (max_err <= tol) {
    return 0;
  }
  std::cerr << "verification failed: max_err " << fmt17(max_err)
            << " exceeds tolerance " << fmt17(tol) << '\n';
  return 2;
}

struct DeflateOptions {
  std::string circuit_path;
  std::string side;
  std::string out_path;
  std::optional<double> theta_l, beta, beta_prime, theta_r;
};

int run_deflate(const DeflateOptions& opt) {
  double tol = verification_tolerance(1e-9);
  bool angle_mode = opt.theta_l || opt.beta || opt.beta_prime || opt.theta_r;
  if (angle_mode && !opt.circuit_path.empty()) {
    throw std::invalid_argument(
        "give either the four angle flags or a circuit file, not both");
  }
  if (angle_mode) {
    if (!(opt.theta_l && opt.beta && opt.beta_prime && opt.theta_r)) {
      throw std::invalid_argument(
          "angle mode needs all of --theta-l --beta --beta-prime --theta-r");
    }
    if (!opt.side.empty()) {
      throw std::invalid_argument("--side applies only to circuit input");
    }
    qdeflate::DeflationInput in{*opt.theta_l, *opt.beta, *opt.beta_prime,
                                *opt.theta_r};
    qdeflate::DeflationAngles angles = qdeflate::deflate_core(in);
    std::cout << "gamma_l=" << fmt17(angles.gamma_l) << '\n'
              << "gamma_l_prime=" << fmt17(angles.gamma_l_prime) << '\n'
              << "mu=" << fmt17(angles.mu) << '\n'
              << "mu_prime=" << fmt17(angles.mu_prime) << '\n'
              << "gamma_r=" << fmt17(angles.gamma_r) << '\n'
              << "gamma_r_prime=" << fmt17(angles.gamma_r_prime) << '\n';
    Circuit lhs = qdeflate::build_lhs(in);
    Circuit rhs = qdeflate::build_rhs(in, angles);
    emit_circuit(rhs, opt.out_path);
    double err = qdeflate::frobenius_distance(qdeflate::evaluate(lhs),
                                              qdeflate::evaluate(rhs));
    return report_error_and_exit_code(err, tol);
  }
  if (opt.circuit_path.empty()) {
    throw std::invalid_argument(
        "need either the four angle flags or a circuit file");
  }
  if (opt.side.empty()) {
    throw std::invalid_argument("circuit input needs --side {same,opposite}");
  }
  nlohmann::json j =
      nlohmann::json::parse(read_file(opt.circuit_path), nullptr, false);
  if (j.is_discarded()) {
    throw std::invalid_argument(opt.circuit_path + ": malformed JSON");
  }
  Circuit input = qdeflate::circuit_from_json(j);
  qdeflate::SandwichPattern pattern = qdeflate::match_sandwich(input);
  bool want_opposite = opt.side == "opposite";
  if (pattern.opposite != want_opposite) {
    throw std::invalid_argument("circuit is a " +
                                std::string(pattern.opposite ? "opposite"
                                                             : "same") +
                                "-side sandwich, but --side says " + opt.side);
  }
  Circuit output = qdeflate::deflate_sandwich(pattern);
  emit_circuit(output, opt.out_path);
  double err = qdeflate::frobenius_distance(qdeflate::evaluate(input),
                                            qdeflate::evaluate(output));
  return report_error_and_exit_code(err, tol);
}

struct CloseBreachOptions {
  std::string b_path, g_path, a_path;
  std::string out_path;
};

int run_close_breach(const CloseBreachOptions& opt) {
  double tol = verification_tolerance(1e-9);
  qdeflate::BreachPattern p{read_mat2_file(opt.b_path),
                            read_mat2_file(opt.g_path),
                            read_mat2_file(opt.a_path)};
  Circuit input = qdeflate::breach_circuit(p);
  Circuit output = qdeflate::close_breach(p);
  emit_circuit(output, opt.out_path);
  double err = qdeflate::frobenius_distance(qdeflate::evaluate(input),
                                            qdeflate::evaluate(output));
  return report_error_and_exit_code(err, tol);
}

struct SynthOptions {
  std::string input_path;
  std::string gate = "cz";
  std::string out_path;
};

int run_synth(const SynthOptions& opt) {
  double tol = verification_tolerance(1e-9);
  Mat4 u = read_input_matrix(opt.input_path);
  if (!qdeflate::is_unitary(u, 1e-8)) {
    throw std::invalid_argument("input not unitary");
  }
  qdeflate::EntanglerKind kind = opt.gate == "cnot"
                                     ? qdeflate::EntanglerKind::Cnot
                                     : qdeflate::EntanglerKind::Cz;
  Circuit output = qdeflate::synth_3cnot(u, kind);
  emit_circuit(output, opt.out_path);
  double err = qdeflate::frobenius_distance(u, qdeflate::evaluate(output));
  return report_error_and_exit_code(err, tol);
}

struct VerifyOptions {
  std::uint64_t seed = 0;
  int trials = 100;
  bool text = false;
};

int run_verify(const VerifyOptions& opt) {
  const char* env = std::getenv("DEFLATE_TOL");
  qdeflate::Report report = qdeflate::run_suite(opt.seed, opt.trials);
  if (env != nullptr && *env != '\0') {
    double tol = verification_tolerance(0.0);
    report.pass = true;
    for (qdeflate::CheckResult& c : report.checks) {
      c.tolerance = tol;
      c.pass = c.max_err <= tol;
      report.pass = report.pass && c.pass;
    }
  }
  std::cout << (opt.text ? qdeflate::render_text(report)
                         : qdeflate::render_json(report));
  return report.pass ? 0 : 2;
}

char pauli_char(qdeflate::Pauli p) {
  switch (p) {
    case qdeflate::Pauli::I:
      return 'I';
    case qdeflate::Pauli::X:
      return 'X';
    case qdeflate::Pauli::Y:
      return 'Y';
    default:
      return 'Z';
  }
}

void print_table(qdeflate::ConjugationKind kind, const std::string& name,
                 const std::string& description) {
  static const qdeflate::Pauli order[4] = {
      qdeflate::Pauli::I, qdeflate::Pauli::X, qdeflate::Pauli::Y,
      qdeflate::Pauli::Z};
  std::cout << name << ": " << description << '\n';
  std::cout << "       I    X    Y    Z\n";
  for (qdeflate::Pauli left : order) {
    std::cout << "  " << pauli_char(left) << " ";
    for (qdeflate::Pauli right : order) {
      qdeflate::SignedPauliPair out =
          qdeflate::conjugate_pauli(kind, left, right);
      std::cout << "  " << (out.sign < 0 ? '-' : '+') << pauli_char(out.left)
                << pauli_char(out.right);
    }
    std::cout << '\n';
  }
}

int run_tables(const std::string& kind) {
  struct Entry {
    const char* name;
    qdeflate::ConjugationKind kind;
    const char* description;
  };
  static const Entry entries[4] = {
      {"magic-dagger", qdeflate::ConjugationKind::MagicDagger,
       "M^dag (A(1) kron B(0)) M, rows A, columns B"},
      {"magic", qdeflate::ConjugationKind::Magic,
       "M (A(1) kron B(0)) M^dag, rows A, columns B"},
      {"cnot-down", qdeflate::ConjugationKind::CnotDown,
       "conjugation by CNOT(control 1, target 0)"},
      {"cnot-up", qdeflate::ConjugationKind::CnotUp,
       "conjugation by CNOT(control 0, target 1)"},
  };
  bool printed = false;
  for (const Entry& e : entries) {
    if (!kind.empty() && kind != e.name) {
      continue;
    }
    if (printed) {
      std::cout << '\n';
    }
    print_table(e.kind, e.name, e.description);
    printed = true;
  }
  if (!printed) {
    throw std::invalid_argument("unknown table '" + kind + "'");
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-qubit circuit rewriting: controlled-gate deflation, "
               "breach closing, and three-entangling-gate synthesis"};
  app.require_subcommand(1);

  DeflateOptions deflate_opt;
  CLI::App* deflate =
      app.add_subcommand("deflate", "Rewrite a two-controlled-gate sandwich "
                                    "into a two-CNOT circuit");
  deflate->add_option("circuit", deflate_opt.circuit_path,
                      "Circuit JSON file with two controlled gates");
  deflate->add_option("--side", deflate_opt.side,
                      "Sandwich orientation of the circuit input")
      ->check(CLI::IsMember({"same", "opposite"}));
  deflate->add_option("--theta-l", deflate_opt.theta_l,
                      "Left controlled-Rz angle");
  deflate->add_option("--beta", deflate_opt.beta, "Wire-0 Ry angle");
  deflate->add_option("--beta-prime", deflate_opt.beta_prime,
                      "Wire-1 Ry angle");
  deflate->add_option("--theta-r", deflate_opt.theta_r,
                      "Right controlled-Rz angle");
  deflate->add_option("--out", deflate_opt.out_path,
                      "Write the output circuit JSON here instead of stdout");

  CloseBreachOptions breach_opt;
  CLI::App* close_breach = app.add_subcommand(
      "close-breach", "Rewrite the three-CNOT breach pattern into two CNOTs");
  close_breach
      ->add_option("--b-file", breach_opt.b_path, "Wire-0 gate after CNOT 1")
      ->required();
  close_breach
      ->add_option("--g-file", breach_opt.g_path, "Wire-1 gate in the breach")
      ->required();
  close_breach
      ->add_option("--a-file", breach_opt.a_path, "Wire-0 gate after CNOT 2")
      ->required();
  close_breach->add_option("--out", breach_opt.out_path,
                           "Write the output circuit JSON here");

  SynthOptions synth_opt;
  CLI::App* synth = app.add_subcommand(
      "synth", "Synthesize a 4x4 unitary with three entangling gates");
  synth
      ->add_option("input", synth_opt.input_path,
                   "4x4 matrix text file or circuit JSON file")
      ->required();
  synth->add_option("--gate", synth_opt.gate, "Entangling gate form")
      ->check(CLI::IsMember({"cz", "cnot"}));
  synth->add_option("--out", synth_opt.out_path,
                    "Write the output circuit JSON here");

  VerifyOptions verify_opt;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run the randomized self-verification suite");
  verify->add_option("--seed", verify_opt.seed, "Random seed");
  verify->add_option("--trials", verify_opt.trials, "Trials per check")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--text", verify_opt.text,
                   "Human-readable report instead of JSON");

  std::string tables_kind;
  CLI::App* tables =
      app.add_subcommand("tables", "Print the Pauli conjugation tables");
  tables->add_option("--kind", tables_kind,
                     "One of magic-dagger, magic, cnot-down, cnot-up");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (deflate->parsed()) {
      return run_deflate(deflate_opt);
    }
    if (close_breach->parsed()) {
      return run_close_breach(breach_opt);
    }
    if (synth->parsed()) {
      return run_synth(synth_opt);
    }
    if (verify->parsed()) {
      return run_verify(verify_opt);
    }
    if (tables->parsed()) {
      return run_tables(tables_kind);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
