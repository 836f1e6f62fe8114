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

#include "sqg/pulse/runs.hpp"

#include <cmath>

#include "sqg/gates.hpp"

namespace sqg {

std::string to_string(TqTarget t) {
  switch (t) {
    case TqTarget::Cz01: return "cz01";
    case TqTarget::Cz02: return "cz02";
    case TqTarget::Cczs: return "cczs";
    case TqTarget::Iswap01: return "iswap01";
    case TqTarget::Iswap02: return "iswap02";
    case TqTarget::Div: return "div";
  }
  return "?";
}

std::string to_string(TcTarget t) {
  switch (t) {
    case TcTarget::Cz01: return "cz01";
    case TcTarget::Cz02: return "cz02";
    case TcTarget::Cczs: return "cczs";
  }
  return "?";
}

double golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                          int iters) {
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iters; ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = f(x1);
    }
  }
  return f1 > f2 ? x1 : x2;
}

Matrix tq_target_matrix(TqTarget t) {
  switch (t) {
    case TqTarget::Cz01:
    case TqTarget::Cz02:
      return cz_gate(0.0);
    case TqTarget::Cczs:
      return cczs({kPi / 2, kPi, 0.0}).matrix();
    case TqTarget::Iswap01:
    case TqTarget::Iswap02:
      return iswap_gate();
    case TqTarget::Div:
      return div_gate({kPi / 4, kPi / 2}).matrix();
  }
  throw std::logic_error("tq_target_matrix");
}

std::vector<int> tq_target_sites(TqTarget t) {
  switch (t) {
    case TqTarget::Cz01:
    case TqTarget::Iswap01:
      return {0, 1};
    case TqTarget::Cz02:
    case TqTarget::Iswap02:
      return {0, 2};
    case TqTarget::Cczs:
    case TqTarget::Div:
      return {0, 1, 2};
  }
  throw std::logic_error("tq_target_sites");
}

Matrix tc_target_matrix(TcTarget t, double phi) {
  switch (t) {
    case TcTarget::Cz01:
    case TcTarget::Cz02:
      return cz_gate(0.0);
    case TcTarget::Cczs:
      return cczs({kPi / 2, phi, 0.0}).matrix();
  }
  throw std::logic_error("tc_target_matrix");
}

namespace {

bool tq_is_cz_type(TqTarget t) {
  return t == TqTarget::Cz01 || t == TqTarget::Cz02 || t == TqTarget::Cczs;
}

// Calibrated controls. Gate times sit near the analytic values
// pi/lambda, pi/(sqrt2 lambda), pi/(2g), pi/(2 sqrt2 g) for the default
// couplings; the detunings absorb the dressed-frequency shifts.
constexpr double kMhz = kTwoPi * 1e-3;  // rad/ns per MHz

}  // namespace

TqOperatingPoint tq_default_operating_point(TqTarget t) {
  switch (t) {
    case TqTarget::Cz01:
      return {94.3, -0.30 * kMhz, 0.0};
    case TqTarget::Cz02:
      return {94.2, 0.0, -0.30 * kMhz};
    case TqTarget::Cczs:
      return {66.6, -0.30 * kMhz, -0.30 * kMhz};
    case TqTarget::Iswap01:
      return {66.9, -0.15 * kMhz, 0.0};
    case TqTarget::Iswap02:
      return {66.9, 0.0, -0.15 * kMhz};
    case TqTarget::Div:
      return {47.3, -0.15 * kMhz, -0.15 * kMhz};
  }
  throw std::logic_error("tq_default_operating_point");
}

TcOperatingPoint tc_default_operating_point(TcTarget t) {
  // mod freqs sit at the dressed |1_0 1_j> <-> |2_0 0_j> splittings
  TcOperatingPoint p;
  switch (t) {
    case TcTarget::Cz01:
      p.t_gate = 405.0;
      p.mod_freq1 = kTwoPi * 0.40471;
      break;
    case TcTarget::Cz02:
      p.t_gate = 396.0;
      p.mod_freq2 = kTwoPi * 0.27968;
      break;
    case TcTarget::Cczs:
      p.t_gate = 301.0;
      p.mod_freq1 = kTwoPi * 0.40471;
      p.mod_freq2 = kTwoPi * 0.27968;
      break;
  }
  return p;
}

namespace {

struct TqRun {
  const TunableQubitDevice& dev;
  TqTarget target;
  const RunSettings& settings;

  TrajectoryDrive drive_for(const TqOperatingPoint& op) const {
    TrajectoryDrive d;
    d.t_gate = op.t_gate;
    const double w0 = dev.sites[0].freq;
    const double resonance = tq_is_cz_type(target) ? w0 + dev.sites[0].anharm : w0;
    switch (target) {
      case TqTarget::Cz01:
      case TqTarget::Iswap01:
        d.targets = {{1, resonance + op.det1}};
        break;
      case TqTarget::Cz02:
      case TqTarget::Iswap02:
        d.targets = {{2, resonance + op.det2}};
        break;
      case TqTarget::Cczs:
      case TqTarget::Div:
        d.targets = {{1, resonance + op.det1}, {2, resonance + op.det2}};
        break;
    }
    return d;
  }

  // frame-removed computational block at the given operating point
  Matrix block_at(const TqOperatingPoint& op, PopulationTrace* trace) const {
    const TrajectoryDrive drive = drive_for(op);
    const DriftHamiltonian h = make_hamiltonian(dev, drive);
    const double window = drive.window(dev);
    const ComputationalProjector proj(h.shape, tq_target_sites(target));
    Matrix cols(h.dim(), proj.projected_dim());
    for (Eigen::Index c = 0; c < cols.cols(); ++c) {
      cols.col(c) = Vector::Unit(h.dim(), proj.indices()[c]);
    }
    StepObserver obs;
    std::vector<Eigen::Index> trace_ix;
    Eigen::Index trace_col = -1;
    int counter = 0;
    if (trace) {
      for (const auto& s : settings.trace_states) trace_ix.push_back(h.shape.index_of_label(s));
      const Eigen::Index init = h.shape.index_of_label(settings.trace_initial);
      for (Eigen::Index c = 0; c < proj.projected_dim(); ++c) {
        if (proj.indices()[c] == init) trace_col = c;
      }
      if (trace_col < 0) throw std::invalid_argument("trace initial state outside the block");
      trace->states = settings.trace_states;
      trace->values.assign(trace_ix.size(), {});
      obs = [&, trace_ix, trace_col](double t, const Matrix& c) mutable {
        if (counter++ % settings.trace_stride != 0) return;
        trace->times.push_back(t);
        for (size_t k = 0; k < trace_ix.size(); ++k) {
          trace->values[k].push_back(std::norm(c(trace_ix[k], trace_col)));
        }
      };
    }
    Matrix u_cols = propagate_columns(h, cols, 0.0, window, settings.step, obs);
    const Matrix u_idle = expm_hermitian(h.idle_hamiltonian(), window);
    Matrix framed = u_idle.adjoint() * u_cols;
    Matrix block(proj.projected_dim(), proj.projected_dim());
    for (Eigen::Index r = 0; r < proj.projected_dim(); ++r) {
      block.row(r) = framed.row(proj.indices()[r]);
    }
    return block;
  }

  double fidelity_at(const TqOperatingPoint& op) const {
    FidelityReport rep = fidelity_report(block_at(op, nullptr), tq_target_matrix(target));
    return rep.fidelity;
  }
};

}  // namespace

GateRunResult run_tunable_qubit_gate(const TunableQubitDevice& dev, TqTarget target,
                                     const RunSettings& settings,
                                     const TqOperatingPoint* override_point) {
  TqRun run{dev, target, settings};
  TqOperatingPoint op = override_point ? *override_point : tq_default_operating_point(target);

  if (settings.refine) {
    const bool both = target == TqTarget::Cczs || target == TqTarget::Div;
    const bool first = target == TqTarget::Cz01 || target == TqTarget::Iswap01 || both;
    const bool second = target == TqTarget::Cz02 || target == TqTarget::Iswap02 || both;
    const double w0 = dev.sites[0].freq;
    const double resonance = tq_is_cz_type(target) ? w0 + dev.sites[0].anharm : w0;
    auto det_ceiling = [&](int site) {
      // keep the tuned frequency below the site's flux sweet spot
      if (!dev.sites[site].max_freq) return 0.6 * kMhz;
      return std::min(0.6 * kMhz, *dev.sites[site].max_freq - resonance);
    };
    for (int round = 0; round < 2; ++round) {
      const int it = round == 0 ? 8 : 6;
      op.t_gate = golden_section_max(
          [&](double t) { TqOperatingPoint p = op; p.t_gate = t; return run.fidelity_at(p); },
          op.t_gate - 1.5, op.t_gate + 1.5, it);
      if (first) {
        op.det1 = golden_section_max(
            [&](double d) { TqOperatingPoint p = op; p.det1 = d; return run.fidelity_at(p); },
            op.det1 - 0.6 * kMhz, std::min(op.det1 + 0.6 * kMhz, det_ceiling(1)), it);
      }
      if (second) {
        op.det2 = golden_section_max(
            [&](double d) { TqOperatingPoint p = op; p.det2 = d; return run.fidelity_at(p); },
            op.det2 - 0.6 * kMhz, std::min(op.det2 + 0.6 * kMhz, det_ceiling(2)), it);
      }
    }
  }

  GateRunResult result;
  result.target_name = to_string(target);
  result.gate_time = op.t_gate;
  result.operating_point = {{"t_gate_ns", op.t_gate},
                            {"detuning1_mhz", op.det1 / kMhz},
                            {"detuning2_mhz", op.det2 / kMhz}};
  PopulationTrace* trace = settings.record_trace ? &result.trace : nullptr;
  const Matrix block = run.block_at(op, trace);
  result.report = fidelity_report(block, tq_target_matrix(target), op.t_gate);
  if (settings.convergence_check) {
    RunSettings halved = settings;
    halved.step.dt *= 0.5;
    halved.record_trace = false;
    TqRun rerun{dev, target, halved};
    FidelityReport rep2 = fidelity_report(rerun.block_at(op, nullptr), tq_target_matrix(target),
                                          op.t_gate);
    result.report.convergence = std::abs(rep2.fidelity - result.report.fidelity);
  }
  return result;
}

namespace {

struct TcRun {
  const TunableCouplerDevice& dev;
  TcTarget target;
  const RunSettings& settings;
  double target_phi = kPi;

  std::array<CouplerDriveSpec, 2> drives_for(const TcOperatingPoint& op) const {
    std::array<CouplerDriveSpec, 2> d;
    d[0] = {op.mod_freq1 != 0.0, op.dc_bias, op.amp1, op.mod_freq1, op.phase1};
    d[1] = {op.mod_freq2 != 0.0, op.dc_bias, op.amp2, op.mod_freq2, op.phase2};
    return d;
  }

  std::vector<int> sites() const {
    switch (target) {
      case TcTarget::Cz01: return {0, 1};
      case TcTarget::Cz02: return {0, 2};
      case TcTarget::Cczs: return {0, 1, 2};
    }
    throw std::logic_error("TcRun::sites");
  }

  Matrix block_at(const TcOperatingPoint& op, PopulationTrace* trace) const {
    const DriftHamiltonian h = make_hamiltonian(dev, drives_for(op), op.t_gate);
    const ComputationalProjector proj(h.shape, sites());
    Matrix cols(h.dim(), proj.projected_dim());
    for (Eigen::Index c = 0; c < cols.cols(); ++c) {
      cols.col(c) = Vector::Unit(h.dim(), proj.indices()[c]);
    }
    StepObserver obs;
    std::vector<Eigen::Index> trace_ix;
    Eigen::Index trace_col = -1;
    int counter = 0;
    if (trace) {
      for (const auto& s : settings.trace_states) trace_ix.push_back(h.shape.index_of_label(s));
      const Eigen::Index init = h.shape.index_of_label(settings.trace_initial);
      for (Eigen::Index c = 0; c < proj.projected_dim(); ++c) {
        if (proj.indices()[c] == init) trace_col = c;
      }
      if (trace_col < 0) throw std::invalid_argument("trace initial state outside the block");
      trace->states = settings.trace_states;
      trace->values.assign(trace_ix.size(), {});
      obs = [&, trace_ix, trace_col](double t, const Matrix& c) mutable {
        if (counter++ % settings.trace_stride != 0) return;
        trace->times.push_back(t);
        for (size_t k = 0; k < trace_ix.size(); ++k) {
          trace->values[k].push_back(std::norm(c(trace_ix[k], trace_col)));
        }
      };
    }
    Matrix u_cols = propagate_columns(h, cols, 0.0, op.t_gate, settings.step, obs);
    const Matrix u_idle = expm_hermitian(h.idle_hamiltonian(), op.t_gate);
    Matrix framed = u_idle.adjoint() * u_cols;
    Matrix block(proj.projected_dim(), proj.projected_dim());
    for (Eigen::Index r = 0; r < proj.projected_dim(); ++r) {
      block.row(r) = framed.row(proj.indices()[r]);
    }
    return block;
  }

  double fidelity_at(const TcOperatingPoint& op) const {
    return fidelity_report(block_at(op, nullptr), tc_target_matrix(target, target_phi)).fidelity;
  }
};

}  // namespace

GateRunResult run_tunable_coupler_gate(const TunableCouplerDevice& dev, TcTarget target,
                                       const RunSettings& settings,
                                       const TcOperatingPoint* override_point, double target_phi) {
  TcRun run{dev, target, settings, target_phi};
  TcOperatingPoint op = override_point ? *override_point : tc_default_operating_point(target);

  if (settings.refine) {
    // refine the drive frequency of the active coupler(s), then the gate time
    auto refine_freq = [&](double TcOperatingPoint::*field, double width, int iters) {
      if (op.*field == 0.0) return;
      op.*field = golden_section_max(
          [&](double f) {
            TcOperatingPoint p = op;
            p.*field = f;
            return run.fidelity_at(p);
          },
          op.*field - width, op.*field + width, iters);
    };
    refine_freq(&TcOperatingPoint::mod_freq1, kTwoPi * 0.0008, 6);
    refine_freq(&TcOperatingPoint::mod_freq2, kTwoPi * 0.0008, 6);
    op.t_gate = golden_section_max(
        [&](double t) { TcOperatingPoint p = op; p.t_gate = t; return run.fidelity_at(p); },
        op.t_gate - 6.0, op.t_gate + 6.0, 6);
  }

  GateRunResult result;
  result.target_name = to_string(target);
  result.gate_time = op.t_gate;
  result.operating_point = {{"t_gate_ns", op.t_gate},
                            {"plateau_ns", op.t_gate - 2.0 * dev.rise},
                            {"mod_freq1_ghz", op.mod_freq1 / kTwoPi},
                            {"mod_freq2_ghz", op.mod_freq2 / kTwoPi},
                            {"amp1_phi0", op.amp1},
                            {"amp2_phi0", op.amp2},
                            {"dc_bias_phi0", op.dc_bias},
                            {"phase_diff_rad", op.phase1 - op.phase2}};
  PopulationTrace* trace = settings.record_trace ? &result.trace : nullptr;
  const Matrix block = run.block_at(op, trace);
  result.report = fidelity_report(block, tc_target_matrix(target, target_phi), op.t_gate);
  if (settings.convergence_check) {
    RunSettings halved = settings;
    halved.step.dt *= 0.5;
    halved.record_trace = false;
    TcRun rerun{dev, target, halved, target_phi};
    FidelityReport rep2 =
        fidelity_report(rerun.block_at(op, nullptr), tc_target_matrix(target, target_phi),
                        op.t_gate);
    result.report.convergence = std::abs(rep2.fidelity - result.report.fidelity);
  }
  return result;
}

GateRunResult run_cczs_tunable_qubits(const RunSettings& settings) {
  return run_tunable_qubit_gate(TunableQubitDevice::defaults(), TqTarget::Cczs, settings);
}

GateRunResult run_div_tunable_qubits(const RunSettings& settings) {
  return run_tunable_qubit_gate(TunableQubitDevice::defaults_div(), TqTarget::Div, settings);
}

GateRunResult run_cczs_tunable_coupler(const RunSettings& settings, double phase_diff,
                                       double target_phi) {
  TcOperatingPoint op = tc_default_operating_point(TcTarget::Cczs);
  op.phase1 = phase_diff;
  op.phase2 = 0.0;
  return run_tunable_coupler_gate(TunableCouplerDevice::defaults(), TcTarget::Cczs, settings, &op,
                                  target_phi);
}

}  // namespace sqg
