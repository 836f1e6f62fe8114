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

#include <map>
#include <string>

#include "sqg/pulse/device.hpp"
#include "sqg/pulse/fidelity.hpp"
#include "sqg/pulse/integrate.hpp"

namespace sqg {

enum class TqTarget { Cz01, Cz02, Cczs, Iswap01, Iswap02, Div };
enum class TcTarget { Cz01, Cz02, Cczs };

std::string to_string(TqTarget t);
std::string to_string(TcTarget t);

struct PopulationTrace {
  std::vector<double> times;
  std::vector<std::string> states;          // basis labels
  std::vector<std::vector<double>> values;  // one series per state
};

struct GateRunResult {
  std::string target_name;
  FidelityReport report;
  double gate_time = 0.0;
  std::map<std::string, double> operating_point;  // named calibrated controls
  PopulationTrace trace;
};

struct RunSettings {
  StepControl step;
  bool refine = true;             // local search around the stored operating point
  bool convergence_check = false; // re-run final point at dt/2 and record |dF|
  bool record_trace = false;
  std::string trace_initial;      // basis label, e.g. "110"
  std::vector<std::string> trace_states;
  int trace_stride = 25;          // record every N steps
};

/// Calibrated operating points for the frequency-trajectory scheme: gate time
/// plus small additive detunings of the tuned qubits from the bare resonance.
struct TqOperatingPoint {
  double t_gate = 0.0;
  double det1 = 0.0;  // rad/ns, added to q1's target frequency
  double det2 = 0.0;
};
TqOperatingPoint tq_default_operating_point(TqTarget t);

/// Calibrated operating points for the parametric-coupler scheme.
struct TcOperatingPoint {
  double t_gate = 0.0;
  double mod_freq1 = 0.0;  // rad/ns (0 = drive off)
  double mod_freq2 = 0.0;
  double amp1 = 0.08;      // Phi0
  double amp2 = 0.08;
  double dc_bias = 0.275;  // Phi0
  double phase1 = 0.0;
  double phase2 = 0.0;
};
TcOperatingPoint tc_default_operating_point(TcTarget t);

/// Ideal target block and the projector sites for each gate.
Matrix tq_target_matrix(TqTarget t);
std::vector<int> tq_target_sites(TqTarget t);
Matrix tc_target_matrix(TcTarget t, double phi = kPi);

/// Propagate the device over one gate window and compare against the ideal
/// gate in the idle interaction frame (frame removed by the no-drive
/// propagator of the same window).
GateRunResult run_tunable_qubit_gate(const TunableQubitDevice& dev, TqTarget target,
                                     const RunSettings& settings = {},
                                     const TqOperatingPoint* override_point = nullptr);

GateRunResult run_tunable_coupler_gate(const TunableCouplerDevice& dev, TcTarget target,
                                       const RunSettings& settings = {},
                                       const TcOperatingPoint* override_point = nullptr,
                                       double target_phi = kPi);

// Headline runs with device defaults.
GateRunResult run_cczs_tunable_qubits(const RunSettings& settings = {});
GateRunResult run_div_tunable_qubits(const RunSettings& settings = {});
GateRunResult run_cczs_tunable_coupler(const RunSettings& settings = {},
                                       double phase_diff = 0.0, double target_phi = kPi);

/// Golden-section maximization of f over [lo, hi].
double golden_section_max(const std::function<double(double)>& f, double lo, double hi, int iters);

}  // namespace sqg
