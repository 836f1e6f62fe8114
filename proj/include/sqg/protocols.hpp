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

#include <string>
#include <vector>

#include "sqg/effective.hpp"
#include "sqg/operator.hpp"

namespace sqg {

struct ProtocolStep {
  std::string name;
  Operator op;
  double duration = 0.0;  // nonzero for effective-dynamics evolutions
  int sites_touched = 1;
};

struct Protocol {
  std::string name;
  RegisterShape shape;
  std::vector<ProtocolStep> steps;

  int multi_site_step_count() const;
  double total_evolution_time() const;
};

StateVector run_protocol(const Protocol& p, const StateVector& initial);

struct TargetState {
  enum class Kind { Ghz, W, Dicke, D53Superposition };
  Kind kind = Kind::Ghz;
  int n = 3;
  int k = 1;

  RegisterShape shape() const;
  Vector amplitudes() const;
};

Vector ghz_target(int n);
Vector dicke_target(int n, int k);      // over qubits(n)
Vector w_target(int n);                 // dicke_target(n, 1)
Vector d53_target();                    // over the symmetric register {3, 5}

/// H(q0), X(q1), CCZS(pi/2,0,0), X(q1) on three qubits; |000> -> GHZ_3.
Protocol ghz3_protocol();

/// Five-qubit Dicke superposition preparation in the symmetric register
/// (|x0> x |D_4^k>): raise q0 to |2>, evolve pi/(4 lambda), rotate q0 into the
/// weighted superposition and flip |1>->|2>, evolve pi/(2 sqrt6 lambda), X on
/// the four neighbours. Single-qutrit rotations are ideal unitaries with
/// phases chosen to land exactly on the target.
Protocol dicke53_protocol(double lambda = 1.0);

/// Tripod variant of the first step with per-neighbour couplings on the full
/// register (central qutrit + N qubits): |2 0...0> evolved to full transfer.
Protocol dicke_step1_weighted(const std::vector<Complex>& lambdas);

/// X(q0), DIV(theta, varphi), S(q1), S(q2) on three qubits; the default
/// angles (pi/4, arctan sqrt2) produce the W state.
Protocol w_div_protocol(double theta = kPi / 4, double varphi = std::atan(std::sqrt(2.0)));

/// Square-grid geometry for the W scale-up scheme. Sites are integer lattice
/// points; adjacency is unit distance.
struct SquareGrid {
  struct Site {
    int x = 0;
    int y = 0;
  };
  std::vector<Site> sites;
  int center = 0;

  static SquareGrid cross_pattern();            // 21 sites, four outward cells
  static SquareGrid single_cell(int neighbors); // center plus 1..4 neighbours

  std::vector<int> neighbors_of(int site) const;
  int site_at(int x, int y) const;  // -1 when absent
};

enum class WScaleupVariant { SimultaneousCz, SimultaneousIswap };

/// Excitation-spreading protocol in the single-excitation restricted
/// representation (one level per grid site). Returns the protocol plus the
/// carrier sites whose equal-weight superposition is the W target.
struct WScaleupPlan {
  Protocol protocol;
  std::vector<int> carriers;
  Vector target;  // restricted-representation W state over the carriers
};
WScaleupPlan w_scaleup_protocol(const SquareGrid& grid,
                                WScaleupVariant variant = WScaleupVariant::SimultaneousIswap,
                                double coupling = 1.0);

}  // namespace sqg
