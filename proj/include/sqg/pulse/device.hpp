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

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sqg/operator.hpp"
#include "sqg/pulse/pulses.hpp"

namespace sqg {

/// One transmon: lowest `levels` states with energies 0, w, 2w + a, ...
/// Frequencies in rad/ns.
struct TransmonSite {
  std::string label;
  double freq = 0.0;
  double anharm = 0.0;
  int levels = 3;
  std::optional<double> max_freq;
};

/// H(t) = offdiag + diag(static_diag + sum_c channels[c].value(t) * weights).
/// All time dependence lives on the diagonal.
struct DriftHamiltonian {
  RegisterShape shape;
  Matrix offdiag;           // zero diagonal, hermitian
  RealVector static_diag;
  struct DiagChannel {
    RealVector weights;
    std::function<double(double)> value;
  };
  std::vector<DiagChannel> channels;

  Eigen::Index dim() const { return offdiag.rows(); }
  void diagonal_at(double t, RealVector& out) const;
  void assemble(double t, Matrix& out) const;
  Matrix idle_hamiltonian() const;  // all channels at value 0
};

/// Three-qubit chain with tunable outer qubits and fixed exchange couplings
/// g1 (q0-q1), g2 (q0-q2).
struct TunableQubitDevice {
  std::array<TransmonSite, 3> sites;  // q0, q1, q2
  double g1 = 0.0;
  double g2 = 0.0;
  double pulse_sigma = 1.0;  // rect x gauss width
  double pulse_pad = 5.0;    // simulation margin on each side of the rectangle

  /// Coupling on the |11> <-> |20> transition is sqrt(2) times the exchange
  /// coupling; exposed for the analytic gate-time estimates.
  double lambda(int j) const { return std::sqrt(2.0) * (j == 1 ? g1 : g2); }

  RegisterShape shape() const;
  static TunableQubitDevice defaults();      // CZ-scheme device values
  static TunableQubitDevice defaults_div();  // q2 max frequency raised to w0
};

/// Frequency-trajectory drive: listed sites move from idle to target along a
/// rect x gauss pulse of the given length.
struct TrajectoryDrive {
  std::vector<std::pair<int, double>> targets;  // (site, target freq rad/ns)
  double t_gate = 0.0;

  double window(const TunableQubitDevice& dev) const { return t_gate + 2.0 * dev.pulse_pad; }
};

DriftHamiltonian make_hamiltonian(const TunableQubitDevice& dev, const TrajectoryDrive& drive);

/// Three fixed qubits plus two flux-modulated couplers; coupler j sits
/// between q0 and qj.
struct TunableCouplerDevice {
  std::array<TransmonSite, 3> qubits;
  std::array<TransmonSite, 2> couplers;  // freq holds wc0 (max frequency)
  double g = 0.0;                        // common capacitive coupling
  double rise = 25.0;                    // envelope rise/fall (ns)

  RegisterShape shape() const;
  static TunableCouplerDevice defaults();  // fixed design values
};

struct CouplerDriveSpec {
  bool on = false;
  double dc_bias = 0.275;   // Phi0 units
  double amp = 0.08;        // Phi0 units
  double mod_freq = 0.0;    // rad/ns
  double phase = 0.0;
};

/// t_gate = plateau + 2*rise; drives may be off (coupler parked at dc bias).
DriftHamiltonian make_hamiltonian(const TunableCouplerDevice& dev,
                                  const std::array<CouplerDriveSpec, 2>& drives, double t_gate);

// Config I/O. Frequencies are stored as freq_ghz etc. (cycles), converted to
// rad/ns in the device structs.
nlohmann::json to_json(const TunableQubitDevice& dev);
nlohmann::json to_json(const TunableCouplerDevice& dev);
TunableQubitDevice tunable_qubit_device_from_json(const nlohmann::json& j);
TunableCouplerDevice tunable_coupler_device_from_json(const nlohmann::json& j);

}  // namespace sqg
