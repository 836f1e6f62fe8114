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

#include <json.hpp>

#include "sqg/pulse/runs.hpp"

namespace sqg {

/// Sweepable control parameters. The base operating point supplies whatever a
/// given axis does not override.
enum class SweepAxisKind {
  GateTime,     // ns
  ModFreq1,     // GHz (tunable coupler)
  ModFreq2,     // GHz
  PhaseDiff,    // rad, phase1 - phase2
  FluxAmp,      // Phi0, both couplers
  DcBias,       // Phi0, both couplers
  Detuning1,    // MHz added to q1's trajectory target (tunable qubits)
  Detuning2     // MHz
};

std::string axis_name(SweepAxisKind k);
std::string axis_unit(SweepAxisKind k);

struct SweepAxis {
  SweepAxisKind kind;
  std::vector<double> values;

  static SweepAxis linspace(SweepAxisKind kind, double lo, double hi, int count);
};

struct SweepObservable {
  enum class Kind { Population, Fidelity };
  Kind kind = Kind::Population;
  std::string initial_state;   // basis label for Population
  std::string measured_state;  // basis label for Population
  std::string target;          // gate name for Fidelity (cz01|cz02|cczs|iswap01|iswap02|div)
  double target_phi = kPi;     // for cczs targets

  std::string column_name() const;
};

struct SweepSpec {
  std::string scheme;  // "tunable-qubits" | "tunable-coupler"
  std::optional<nlohmann::json> device;  // defaults when absent
  std::string base_target;               // operating point to start from
  std::vector<SweepAxis> axes;           // up to 3
  std::vector<SweepObservable> observables;
  StepControl step;
  int jobs = 0;  // 0 = hardware concurrency
};

struct SweepResult {
  std::vector<SweepAxis> axes;
  std::vector<std::string> observable_names;
  // row-major over the axis grid (last axis fastest), one column per observable
  Eigen::MatrixXd values;
  std::vector<std::string> point_errors;  // empty string = ok
  std::string provenance;                 // config hash + integrator settings

  Eigen::Index num_points() const { return values.rows(); }
  std::vector<double> point_coords(Eigen::Index flat) const;
  struct Extremum {
    Eigen::Index flat = 0;
    double value = 0.0;
    std::vector<double> coords;
  };
  Extremum argmax(int observable) const;
  Extremum argmin(int observable) const;
};

SweepResult run_sweep(const SweepSpec& spec);

/// Chevron-tip extraction: over a (frequency-like, time-like) grid pick the
/// maximal return population, ties toward smaller time then smaller
/// |frequency offset from the grid center|.
struct OperatingPointPick {
  double frequency = 0.0;
  double time = 0.0;
  double population = 0.0;
  bool edge_of_grid = false;
};
OperatingPointPick find_chevron_tip(const SweepResult& result, int freq_axis = 0,
                                    int time_axis = 1, int observable = 0);

/// Gate-fidelity map over (target phi, drive phase difference) around the
/// calibrated simultaneous-drive point.
SweepResult phi_scan(const TunableCouplerDevice& dev, const TcOperatingPoint& base, int phi_count,
                     int phase_count, const StepControl& step, int jobs = 0);

nlohmann::json to_json(const SweepSpec& spec);
SweepSpec sweep_spec_from_json(const nlohmann::json& j);
void write_csv(const SweepResult& result, const std::string& path);
std::string summary_text(const SweepResult& result);

}  // namespace sqg
