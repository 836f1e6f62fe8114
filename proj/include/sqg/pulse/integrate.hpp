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

#include <functional>

#include "sqg/pulse/device.hpp"

namespace sqg {

/// Time-stepping control for the piecewise propagators.
struct StepControl {
  enum class Method {
    Midpoint,  // one exponential of H(t + dt/2) per step; exact for constant H
    Magnus4    // fourth-order two-exponential scheme on the Gauss-Legendre nodes
  };
  double dt = 0.01;  // ns
  Method method = Method::Midpoint;
  bool krylov = false;        // expm-action per column instead of dense steps
  double krylov_tol = 1e-12;
  int krylov_max_dim = 48;
};

/// Observer called after every step with the current time and propagated
/// columns.
using StepObserver = std::function<void(double t, const Matrix& cols)>;

/// Propagate the given columns from t0 to t1 under the time-dependent
/// Schroedinger equation. Dense methods compute one unitary step operator per
/// step (cached while the Hamiltonian is constant); the Krylov path applies
/// the step exponential to each column with a Lanczos expansion.
Matrix propagate_columns(const DriftHamiltonian& h, const Matrix& columns, double t0, double t1,
                         const StepControl& sc, const StepObserver& observer = {});

/// Full propagator (identity columns).
Matrix propagate_full(const DriftHamiltonian& h, double t0, double t1, const StepControl& sc);

/// Lanczos approximation of exp(-i tau H) v for hermitian H given as a
/// matvec. Used by the column propagator; exposed for tests.
Vector krylov_expm_apply(const std::function<void(const Vector&, Vector&)>& matvec, const Vector& v,
                         double tau, double tol = 1e-12, int max_dim = 48);

/// |F(dt) - F(dt/2)| style self-convergence measure: propagates the columns
/// at dt and dt/2 and returns the max-entry deviation.
double step_halving_deviation(const DriftHamiltonian& h, const Matrix& columns, double t0,
                              double t1, const StepControl& sc);

}  // namespace sqg
