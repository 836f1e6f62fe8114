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

#include <vector>

#include "sqg/gates.hpp"
#include "sqg/operator.hpp"

namespace sqg {

/// Interaction-picture model behind the CZS family: two couplings on the
/// |11x> <-> |20x| transitions of a three-qutrit chain plus a common detuning.
struct CzPairModel {
  Complex lambda1{1.0, 0.0};
  Complex lambda2{1.0, 0.0};
  double delta = 0.0;

  RegisterShape shape() const { return RegisterShape::qutrits(3); }
  double omega() const { return std::sqrt(std::norm(lambda1) + std::norm(lambda2)); }
  double gate_time() const { return kPi / std::sqrt(omega() * omega() + 0.25 * delta * delta); }

  // Bright/dark bases of the two effective three-level systems, as
  // full-register states. The dark states are annihilated by the Hamiltonian.
  Vector bright_state() const;    // span{|101>,|110>} partner of |200>
  Vector dark_state() const;
  Vector bright_state_v() const;  // span{|210>,|201>} partner of |111>
  Vector dark_state_v() const;
};

/// Central qutrit coupled to N neighbours through its 1<->2 transition. When
/// all couplings are equal the dynamics block-diagonalizes over symmetric
/// Dicke states and a compact register (|x0> x |D_N^k>) of dimension 3(N+1)
/// is used; otherwise the full 3*2^N register is kept.
struct DickeModel {
  int neighbors = 2;
  std::vector<Complex> couplings;  // size 1 (uniform) or size N

  bool uniform() const;
  Complex coupling(int j) const { return couplings.size() == 1 ? couplings[0] : couplings[j]; }
  RegisterShape shape() const;
};

/// G_N^k = sqrt((N-k)(k+1)).
double dicke_ladder_factor(int n, int k);

/// Simultaneous-iSWAP model: exchange couplings from the middle qubit to both
/// neighbours of a three-qubit chain.
struct IswapPairModel {
  double g1 = 1.0;
  double g2 = 1.0;

  RegisterShape shape() const { return RegisterShape::qubits(3); }
  double omega() const { return std::hypot(g1, g2); }
  DivParams div_params(double t) const { return DivParams::from_couplings(g1, g2, t); }
};

/// Three-level Delta system in the rotated frame: pair couplings a12, a23, a13
/// (the last with phase Phi) and detunings on levels 1 and 3. Basis
/// (|1>, |2>, |3>).
struct DeltaSystemModel {
  double alpha12 = 1.0;
  double alpha23 = 1.0;
  double alpha13 = 0.0;
  double delta1 = 0.0;
  double delta3 = 0.0;
  double phase = 0.0;

  RegisterShape shape() const { return RegisterShape({3}); }
  /// Omega = sqrt((a13/2)^2 + 2 a12^2), valid for a12 = a23.
  double omega() const { return std::sqrt(0.25 * alpha13 * alpha13 + 2.0 * alpha12 * alpha12); }
};

Operator build_hamiltonian(const CzPairModel& m);
Operator build_hamiltonian(const DickeModel& m);
Operator build_hamiltonian(const IswapPairModel& m);
Operator build_hamiltonian(const DeltaSystemModel& m);

Operator propagate(const CzPairModel& m, double t);
Operator propagate(const DickeModel& m, double t);
Operator propagate(const IswapPairModel& m, double t);
Operator propagate(const DeltaSystemModel& m, double t);

/// 2x2 evolution in the (k+2)-excitation subspace spanned by
/// (|1_0>|D_N^{k+1}>, |2_0>|D_N^k>): cos(t l G) - i sin(t l G) sx.
Matrix dicke_step(int n, int k, double lambda, double t);

/// Closed-form bare-basis propagator of the Delta system at Omega*t = m*pi
/// (requires delta1 = delta3 = phase = 0 and alpha12 = alpha23); falls back to
/// the exact exponential otherwise.
Matrix delta_system_propagator(const DeltaSystemModel& m, double t);

}  // namespace sqg
