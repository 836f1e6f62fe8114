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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sqg/operator.hpp"
#include "sqg/types.hpp"

namespace sqg {

/// Parameters of the CZS family. gamma lies strictly inside (-pi, pi).
struct CczsParams {
  double theta = 0.0;
  double phi = 0.0;
  double gamma = 0.0;
};

/// Drive parameters behind a CZS gate: two complex couplings on the
/// |11x> <-> |20x| transitions and a common detuning.
struct PhysicalCzDrive {
  Complex lambda1{0.0, 0.0};
  Complex lambda2{0.0, 0.0};
  double delta = 0.0;

  double omega() const { return std::sqrt(std::norm(lambda1) + std::norm(lambda2)); }
};

/// Parameters of the DIV family: tan(theta) = g2/g1, varphi = Omega*t.
struct DivParams {
  double theta = 0.0;
  double varphi = 0.0;

  static DivParams from_couplings(double g1, double g2, double t);
};

/// The controlled 4x4 block of the CZS gate, basis |q1 q2> = 00,01,10,11.
Matrix u_czs(const CczsParams& p);

/// Full three-qubit gate: |0><0|_0 x I + |1><1|_0 x u_czs, order |q0 q1 q2>.
Operator cczs(const CczsParams& p);

/// Extract (theta, phi, gamma) and the gate time from a physical drive.
/// theta = 2 atan|l2/l1| in [0, pi]; phi chosen so that cczs(params) equals
/// the resonant-drive propagator for delta = 0; gamma = pi d / sqrt(4 O^2+d^2);
/// t = pi / sqrt(O^2 + d^2/4). Throws if both couplings vanish.
std::pair<CczsParams, double> params_from_drive(const PhysicalCzDrive& d);

/// 3x3 excitation-block of the DIV gate, basis order (|010>, |100>, |001>)
/// in the single-excitation sector (the two-excitation sector has the same
/// matrix over (|101>, |011>, |110>)).
Matrix u_div_block(const DivParams& p);

/// Full three-qubit DIV gate, block-diagonal by excitation number.
Operator div_gate(const DivParams& p);

// Two-qubit 4x4 primitives.
Matrix xy_gate(double theta, double phi);
Matrix cz_gate(double gamma);
Matrix iswap_gate();             // XY(pi, 0)
Matrix iswap_beta(double beta);  // exchange rotation with -i sin entries
Matrix fredkin_block();
Matrix ifredkin_block();
Matrix toffoli_block();
Matrix ccz_block();

// Single-qubit 2x2 primitives.
Matrix hadamard();
Matrix pauli_x();
Matrix s_gate();   // sqrt(Z)
Matrix sqrt_x();

/// Controlled embedding |0><0|_0 x I + |1><1|_0 x block, on three qubits.
Operator controlled_on_q0(const Matrix& block4);

/// Two-qubit gate embedded into the 8-dim three-qubit register on (site_a,
/// site_b); site_a is the slower index of the 4x4 block.
Operator embed_two_qubit(const Matrix& u4, int site_a, int site_b);

/// By-name gate constructor for the CLI. Angle arguments are read in order
/// for gates that need them (theta/phi/gamma/varphi/beta).
Operator named_gate(const std::string& name, std::span<const double> args = {});
std::vector<std::string> named_gate_list();

struct IdentityReport {
  std::string name;
  double max_residual = 0.0;
  bool pass = false;
  int cases = 0;
  std::string detail;
};

/// Checks CCZS(theta,phi,gamma) = XY_12(theta, pi/2-phi) CZ_01(gamma)
/// XY_12^dag(theta, pi/2-phi) over a grid plus random triples, up to a global
/// phase. XY acts on (q1,q2), CZ on (q0,q1).
IdentityReport verify_decomposition_eq33(int grid = 5, int random_triples = 100,
                                         double tol = kAlgebraTol, unsigned seed = 12345);

struct ConstructionReport {
  std::string name;
  bool found = false;
  std::string placement;  // human-readable description of the matching wiring
  double residual = 1.0;
  std::vector<std::pair<std::string, double>> candidates;  // every wiring tried
};

/// Fredkin from CCZS(pi/2,0,0) and a CCZ gate; both application orders are
/// tried and all matches recorded.
ConstructionReport construct_fredkin(double tol = kAlgebraTol);

/// iFredkin from CCZS(pi/2,pi/2,0) and one two-qubit CZ; the CZ placement is
/// searched over the three qubit pairs and both orders.
ConstructionReport construct_ifredkin(double tol = kAlgebraTol);

struct ToffoliScanReport {
  double min_distance = 0.0;
  CczsParams argmin;
  int grid = 0;
};

/// Global-phase-invariant Frobenius distance between cczs(theta,phi,gamma)
/// and the Toffoli gate, minimized over a grid scan.
ToffoliScanReport toffoli_distance_scan(int grid = 20);

}  // namespace sqg
