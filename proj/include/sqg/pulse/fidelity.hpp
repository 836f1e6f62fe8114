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

#include "sqg/operator.hpp"

namespace sqg {

/// Average gate fidelity between the implemented block M and a target
/// unitary, plus leakage and the optimized phase-gauge data.
struct FidelityReport {
  double fidelity = 0.0;      // after virtual-Z and global-phase optimization
  double fidelity_raw = 0.0;  // no phase correction
  double leakage = 0.0;       // 1 - tr(M^dag M)/n
  double gate_time = 0.0;     // ns
  std::vector<double> z_pre;  // one angle per qubit, applied before the gate
  std::vector<double> z_post; // one angle per qubit, applied after the gate
  double convergence = -1.0;  // step-halving change of F when measured
};

/// Closed-form average gate fidelity (|tr(M U^dag)|^2 + tr(M^dag M)) / (n(n+1)).
/// Valid for arbitrary (also leaky, sub-unitary) M.
double average_gate_fidelity_formula(const Matrix& m, const Matrix& target);

/// 1 - tr(M^dag M)/n.
double leakage_of(const Matrix& m);

struct VirtualZResult {
  double trace_sq = 0.0;  // max over phases of |tr(Za M Zb U^dag)|^2
  std::vector<double> pre, post;
};

/// Maximize |tr(Z_post M Z_pre U^dag)|^2 over per-qubit Z phases on both
/// sides of the gate. Coordinate ascent with exact single-angle updates; the
/// objective never decreases along accepted steps.
VirtualZResult optimize_virtual_z(const Matrix& m, const Matrix& target, int restarts = 5,
                                  unsigned seed = 20231);

/// Full report for a computational block M (already in the comparison frame).
FidelityReport fidelity_report(const Matrix& m_block, const Matrix& target, double gate_time = 0.0);

/// Spec-shaped entry point: project, optimize phases, report.
FidelityReport average_gate_fidelity(const Operator& m_full, const Matrix& target,
                                     const ComputationalProjector& p, double gate_time = 0.0);

}  // namespace sqg
