// Copyright 2026 the sqgsim authors
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

#include "sqg/gates.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace sqg {

namespace {
const RegisterShape& three_qubits() {
  static const RegisterShape s = RegisterShape::qubits(3);
  return s;
}
}  // namespace

DivParams DivParams::from_couplings(double g1, double g2, double t) {
  if (g1 == 0.0 && g2 == 0.0) throw std::invalid_argument("DivParams: both couplings zero");
  return DivParams{std::atan2(g2, g1), std::hypot(g1, g2) * t};
}

Matrix u_czs(const CczsParams& p) {
  const double c2 = std::pow(std::cos(p.theta / 2), 2);
  const double s2 = std::pow(std::sin(p.theta / 2), 2);
  const double st = std::sin(p.theta);
  const Complex eg = std::polar(1.0, p.gamma);
  const Complex off = 0.5 * (1.0 + eg) * st;
  Matrix u = Matrix::Zero(4, 4);
  u(0, 0) = 1.0;
  u(1, 1) = -eg * s2 + c2;
  u(1, 2) = off * std::polar(1.0, -p.phi);
  u(2, 1) = off * std::polar(1.0, p.phi);
  u(2, 2) = -eg * c2 + s2;
  u(3, 3) = -eg;
  return u;
}

Operator cczs(const CczsParams& p) { return controlled_on_q0(u_czs(p)); }

Operator controlled_on_q0(const Matrix& block4) {
  Matrix u = Matrix::Identity(8, 8);
  u.block(4, 4, 4, 4) = block4;
  return Operator(three_qubits(), std::move(u));
}

std::pair<CczsParams, double> params_from_drive(const PhysicalCzDrive& d) {
  const double omega = d.omega();
  if (omega == 0.0) throw std::invalid_argument("params_from_drive: both couplings zero");
  CczsParams p;
  if (d.lambda1 == Complex{0.0, 0.0}) {
    p.theta = kPi;
    p.phi = 0.0;
  } else {
    const Complex r = d.lambda2 / d.lambda1;
    p.theta = 2.0 * std::atan(std::abs(r));
    // The branch that makes cczs(p) the resonant-drive propagator.
    p.phi = wrap_angle(kPi - std::arg(r));
  }
  p.gamma = kPi * d.delta / std::sqrt(4.0 * omega * omega + d.delta * d.delta);
  const double t_gate = kPi / std::sqrt(omega * omega + 0.25 * d.delta * d.delta);
  return {p, t_gate};
}

Matrix u_div_block(const DivParams& p) {
  const double c = std::cos(p.theta), s = std::sin(p.theta);
  const double cv = std::cos(p.varphi), sv = std::sin(p.varphi);
  Matrix u(3, 3);
  u(0, 0) = s * s + c * c * cv;
  u(0, 1) = -kI * c * sv;
  u(0, 2) = 0.5 * std::sin(2 * p.theta) * (cv - 1.0);
  u(1, 0) = u(0, 1);
  u(1, 1) = cv;
  u(1, 2) = -kI * s * sv;
  u(2, 0) = u(0, 2);
  u(2, 1) = u(1, 2);
  u(2, 2) = c * c + s * s * cv;
  return u;
}

Operator div_gate(const DivParams& p) {
  Matrix u = Matrix::Identity(8, 8);
  const Matrix b = u_div_block(p);
  // single-excitation (|010>,|100>,|001>) and two-excitation (|101>,|011>,|110>)
  const int s1[3] = {2, 4, 1};
  const int s2[3] = {5, 3, 6};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      u(s1[i], s1[j]) = b(i, j);
      u(s2[i], s2[j]) = b(i, j);
    }
  return Operator(three_qubits(), std::move(u));
}

Matrix xy_gate(double theta, double phi) {
  Matrix u = Matrix::Identity(4, 4);
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  u(1, 1) = c;
  u(1, 2) = kI * s * std::polar(1.0, phi);
  u(2, 1) = kI * s * std::polar(1.0, -phi);
  u(2, 2) = c;
  return u;
}

Matrix cz_gate(double gamma) {
  Matrix u = Matrix::Identity(4, 4);
  u(3, 3) = -std::polar(1.0, gamma);
  return u;
}

Matrix iswap_gate() { return xy_gate(kPi, 0.0); }

Matrix iswap_beta(double beta) {
  Matrix u = Matrix::Identity(4, 4);
  u(1, 1) = u(2, 2) = std::cos(beta);
  u(1, 2) = u(2, 1) = -kI * std::sin(beta);
  return u;
}

Matrix fredkin_block() {
  Matrix u = Matrix::Identity(4, 4);
  u(1, 1) = u(2, 2) = 0.0;
  u(1, 2) = u(2, 1) = 1.0;
  return u;
}

Matrix ifredkin_block() {
  Matrix u = Matrix::Identity(4, 4);
  u(1, 1) = u(2, 2) = 0.0;
  u(1, 2) = u(2, 1) = kI;
  return u;
}

Matrix toffoli_block() {
  Matrix u = Matrix::Identity(4, 4);
  u(2, 2) = u(3, 3) = 0.0;
  u(2, 3) = u(3, 2) = 1.0;
  return u;
}

Matrix ccz_block() {
  Matrix u = Matrix::Identity(4, 4);
  u(3, 3) = -1.0;
  return u;
}

Matrix hadamard() {
  Matrix u(2, 2);
  const double r = 1.0 / std::sqrt(2.0);
  u << r, r, r, -r;
  return u;
}

Matrix pauli_x() {
  Matrix u(2, 2);
  u << 0, 1, 1, 0;
  return u;
}

Matrix s_gate() {
  Matrix u = Matrix::Identity(2, 2);
  u(1, 1) = kI;
  return u;
}

Matrix sqrt_x() {
  Matrix u(2, 2);
  u << Complex(0.5, 0.5), Complex(0.5, -0.5), Complex(0.5, -0.5), Complex(0.5, 0.5);
  return u;
}

Operator embed_two_qubit(const Matrix& u4, int site_a, int site_b) {
  const RegisterShape two = RegisterShape::qubits(2);
  const int sites[2] = {site_a, site_b};
  return Operator(three_qubits(), embed_matrix(u4, two, three_qubits(), sites));
}

Operator named_gate(const std::string& name, std::span<const double> args) {
  auto arg = [&](size_t i, double fallback) { return i < args.size() ? args[i] : fallback; };
  auto one_qubit = [](const Matrix& m) { return Operator(RegisterShape::qubits(1), m); };
  auto two_qubit = [](const Matrix& m) { return Operator(RegisterShape::qubits(2), m); };
  if (name == "cczs") return cczs({arg(0, kPi / 2), arg(1, kPi), arg(2, 0.0)});
  if (name == "u-czs") return two_qubit(u_czs({arg(0, kPi / 2), arg(1, kPi), arg(2, 0.0)}));
  if (name == "div") return div_gate({arg(0, kPi / 4), arg(1, kPi / 2)});
  if (name == "u-div") {
    RegisterShape s({3});
    return Operator(s, u_div_block({arg(0, kPi / 4), arg(1, kPi / 2)}));
  }
  if (name == "xy") return two_qubit(xy_gate(arg(0, kPi), arg(1, 0.0)));
  if (name == "cz") return two_qubit(cz_gate(arg(0, 0.0)));
  if (name == "iswap") return two_qubit(iswap_gate());
  if (name == "iswap-beta") return two_qubit(iswap_beta(arg(0, 0.0)));
  if (name == "fredkin") return controlled_on_q0(fredkin_block());
  if (name == "ifredkin") return controlled_on_q0(ifredkin_block());
  if (name == "toffoli") return controlled_on_q0(toffoli_block());
  if (name == "ccz") return controlled_on_q0(ccz_block());
  if (name == "h") return one_qubit(hadamard());
  if (name == "x") return one_qubit(pauli_x());
  if (name == "s") return one_qubit(s_gate());
  if (name == "sqrt-x") return one_qubit(sqrt_x());
  throw std::invalid_argument("named_gate: unknown gate '" + name + "'");
}

std::vector<std::string> named_gate_list() {
  return {"cczs", "u-czs", "div",      "u-div", "xy", "cz", "iswap", "iswap-beta",
          "fredkin", "ifredkin", "toffoli", "ccz",  "h",  "x",  "s",     "sqrt-x"};
}

IdentityReport verify_decomposition_eq33(int grid, int random_triples, double tol, unsigned seed) {
  IdentityReport rep;
  rep.name = "eq33";
  auto check = [&](double th, double ph, double ga) {
    const Operator lhs = cczs({th, ph, ga});
    const Operator xy12 = embed_two_qubit(xy_gate(th, kPi / 2 - ph), 1, 2);
    const Operator cz01 = embed_two_qubit(cz_gate(ga), 0, 1);
    const Matrix rhs = xy12.matrix() * cz01.matrix() * xy12.matrix().adjoint();
    rep.max_residual = std::max(rep.max_residual, max_abs_diff_upto_phase(lhs.matrix(), rhs));
    ++rep.cases;
  };
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < grid; ++j)
      for (int k = 0; k < grid; ++k) {
        check(kPi * i / std::max(1, grid - 1),
              -kPi + kTwoPi * j / std::max(1, grid - 1),
              -kPi + 0.001 + (kTwoPi - 0.002) * k / std::max(1, grid - 1));
      }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int r = 0; r < random_triples; ++r) {
    check(kPi * u01(rng), -kPi + kTwoPi * u01(rng), -kPi + 0.001 + (kTwoPi - 0.002) * u01(rng));
  }
  rep.pass = rep.max_residual <= tol;
  std::ostringstream os;
  os << "grid " << grid << "^3 plus " << random_triples << " random triples";
  rep.detail = os.str();
  return rep;
}

namespace {

void try_candidate(ConstructionReport& rep, const std::string& label, const Matrix& candidate,
                   const Matrix& target, double tol) {
  const double r = max_abs_diff_upto_phase(target, candidate);
  rep.candidates.emplace_back(label, r);
  if (r <= tol && r < rep.residual) {
    rep.found = true;
    rep.placement = label;
    rep.residual = r;
  } else if (!rep.found) {
    rep.residual = std::min(rep.residual, r);
  }
}

}  // namespace

ConstructionReport construct_fredkin(double tol) {
  ConstructionReport rep;
  rep.name = "fredkin";
  const Matrix target = controlled_on_q0(fredkin_block()).matrix();
  const Matrix c = cczs({kPi / 2, 0.0, 0.0}).matrix();
  const Matrix z = controlled_on_q0(ccz_block()).matrix();
  try_candidate(rep, "CCZ after CCZS(pi/2,0,0)", z * c, target, tol);
  try_candidate(rep, "CCZ before CCZS(pi/2,0,0)", c * z, target, tol);
  return rep;
}

ConstructionReport construct_ifredkin(double tol) {
  ConstructionReport rep;
  rep.name = "ifredkin";
  const Matrix target = controlled_on_q0(ifredkin_block()).matrix();
  const Matrix c = cczs({kPi / 2, kPi / 2, 0.0}).matrix();
  const std::pair<int, int> pairs[3] = {{0, 1}, {0, 2}, {1, 2}};
  // trailing placements first: the construction adds the CZ after the CCZS
  for (const bool after : {true, false}) {
    for (const auto& [a, b] : pairs) {
      const Matrix cz = embed_two_qubit(cz_gate(0.0), a, b).matrix();
      const std::string pr = "(q" + std::to_string(a) + ",q" + std::to_string(b) + ")";
      const std::string label =
          "CZ on " + pr + (after ? " after" : " before") + " CCZS(pi/2,pi/2,0)";
      try_candidate(rep, label, after ? Matrix(cz * c) : Matrix(c * cz), target, tol);
    }
  }
  if (!rep.found) {
    throw std::runtime_error("construct_ifredkin: no CZ placement matches the target");
  }
  return rep;
}

ToffoliScanReport toffoli_distance_scan(int grid) {
  ToffoliScanReport rep;
  rep.grid = grid;
  rep.min_distance = 1e300;
  const Matrix target = controlled_on_q0(toffoli_block()).matrix();
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < grid; ++j)
      for (int k = 0; k < grid; ++k) {
        CczsParams p{kPi * i / (grid - 1.0), -kPi + kTwoPi * j / (grid - 1.0),
                     (-kPi + kTwoPi * k / (grid - 1.0)) * (1.0 - 1e-9)};
        const double d = frobenius_distance_upto_phase(cczs(p).matrix(), target);
        if (d < rep.min_distance) {
          rep.min_distance = d;
          rep.argmin = p;
        }
      }
  return rep;
}

}  // namespace sqg
