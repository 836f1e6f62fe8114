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

#include "sqg/sweep.hpp"

#include <atomic>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "sqg/gates.hpp"

namespace sqg {

std::string axis_name(SweepAxisKind k) {
  switch (k) {
    case SweepAxisKind::GateTime: return "gate_time";
    case SweepAxisKind::ModFreq1: return "mod_freq1";
    case SweepAxisKind::ModFreq2: return "mod_freq2";
    case SweepAxisKind::PhaseDiff: return "phase_diff";
    case SweepAxisKind::FluxAmp: return "flux_amp";
    case SweepAxisKind::DcBias: return "dc_bias";
    case SweepAxisKind::Detuning1: return "detuning1";
    case SweepAxisKind::Detuning2: return "detuning2";
  }
  return "?";
}

std::string axis_unit(SweepAxisKind k) {
  switch (k) {
    case SweepAxisKind::GateTime: return "ns";
    case SweepAxisKind::ModFreq1:
    case SweepAxisKind::ModFreq2: return "ghz";
    case SweepAxisKind::PhaseDiff: return "rad";
    case SweepAxisKind::FluxAmp:
    case SweepAxisKind::DcBias: return "phi0";
    case SweepAxisKind::Detuning1:
    case SweepAxisKind::Detuning2: return "mhz";
  }
  return "?";
}

SweepAxis SweepAxis::linspace(SweepAxisKind kind, double lo, double hi, int count) {
  if (count < 2) throw std::invalid_argument("SweepAxis: need at least 2 grid points");
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("SweepAxis: range must be finite");
  }
  SweepAxis a{kind, {}};
  a.values.reserve(count);
  for (int i = 0; i < count; ++i) a.values.push_back(lo + (hi - lo) * i / (count - 1.0));
  return a;
}

std::string SweepObservable::column_name() const {
  if (kind == Kind::Population) return "pop_" + measured_state + "_from_" + initial_state;
  return "fidelity_" + target;
}

namespace {

constexpr double kMhz = kTwoPi * 1e-3;

TqTarget tq_target_from_name(const std::string& name) {
  if (name == "cz01") return TqTarget::Cz01;
  if (name == "cz02") return TqTarget::Cz02;
  if (name == "cczs") return TqTarget::Cczs;
  if (name == "iswap01") return TqTarget::Iswap01;
  if (name == "iswap02") return TqTarget::Iswap02;
  if (name == "div") return TqTarget::Div;
  throw std::invalid_argument("sweep: unknown base target " + name);
}

TcTarget tc_target_from_name(const std::string& name) {
  if (name == "cz01") return TcTarget::Cz01;
  if (name == "cz02") return TcTarget::Cz02;
  if (name == "cczs") return TcTarget::Cczs;
  throw std::invalid_argument("sweep: unknown base target " + name);
}

TrajectoryDrive tq_drive_for(const TunableQubitDevice& dev, TqTarget target,
                             const TqOperatingPoint& op) {
  TrajectoryDrive d;
  d.t_gate = op.t_gate;
  const bool cz_type =
      target == TqTarget::Cz01 || target == TqTarget::Cz02 || target == TqTarget::Cczs;
  const double resonance = dev.sites[0].freq + (cz_type ? dev.sites[0].anharm : 0.0);
  switch (target) {
    case TqTarget::Cz01:
    case TqTarget::Iswap01:
      d.targets = {{1, resonance + op.det1}};
      break;
    case TqTarget::Cz02:
    case TqTarget::Iswap02:
      d.targets = {{2, resonance + op.det2}};
      break;
    default:
      d.targets = {{1, resonance + op.det1}, {2, resonance + op.det2}};
  }
  return d;
}

struct PointEvaluator {
  const SweepSpec& spec;
  bool coupler = false;
  TunableQubitDevice tq;
  TunableCouplerDevice tc;
  TqTarget tq_target = TqTarget::Cczs;
  TcTarget tc_target = TcTarget::Cczs;

  explicit PointEvaluator(const SweepSpec& s) : spec(s) {
    coupler = spec.scheme == "tunable-coupler";
    if (coupler) {
      tc = spec.device ? tunable_coupler_device_from_json(*spec.device)
                       : TunableCouplerDevice::defaults();
      tc_target = tc_target_from_name(spec.base_target);
    } else if (spec.scheme == "tunable-qubits") {
      tq_target = tq_target_from_name(spec.base_target);
      if (spec.device) {
        tq = tunable_qubit_device_from_json(*spec.device);
      } else {
        const bool iswap_like = tq_target == TqTarget::Div || tq_target == TqTarget::Iswap01 ||
                                tq_target == TqTarget::Iswap02;
        tq = iswap_like ? TunableQubitDevice::defaults_div() : TunableQubitDevice::defaults();
      }
    } else {
      throw std::invalid_argument("sweep: unknown scheme " + spec.scheme);
    }
  }

  void evaluate(const std::vector<double>& coords, double* out) const {
    DriftHamiltonian h;
    double window = 0.0;
    if (coupler) {
      TcOperatingPoint op = tc_default_operating_point(tc_target);
      for (size_t a = 0; a < spec.axes.size(); ++a) {
        apply_axis_tc(op, spec.axes[a].kind, coords[a]);
      }
      std::array<CouplerDriveSpec, 2> drives;
      drives[0] = {op.mod_freq1 != 0.0, op.dc_bias, op.amp1, op.mod_freq1, op.phase1};
      drives[1] = {op.mod_freq2 != 0.0, op.dc_bias, op.amp2, op.mod_freq2, op.phase2};
      h = make_hamiltonian(tc, drives, op.t_gate);
      window = op.t_gate;
    } else {
      TqOperatingPoint op = tq_default_operating_point(tq_target);
      for (size_t a = 0; a < spec.axes.size(); ++a) {
        apply_axis_tq(op, spec.axes[a].kind, coords[a]);
      }
      const TrajectoryDrive drive = tq_drive_for(tq, tq_target, op);
      h = make_hamiltonian(tq, drive);
      window = drive.window(tq);
    }
    evaluate_observables(h, window, out);
  }

  static void apply_axis_tc(TcOperatingPoint& op, SweepAxisKind kind, double v) {
    switch (kind) {
      case SweepAxisKind::GateTime: op.t_gate = v; return;
      case SweepAxisKind::ModFreq1: op.mod_freq1 = kTwoPi * v; return;
      case SweepAxisKind::ModFreq2: op.mod_freq2 = kTwoPi * v; return;
      case SweepAxisKind::PhaseDiff: op.phase1 = v; op.phase2 = 0.0; return;
      case SweepAxisKind::FluxAmp: op.amp1 = op.amp2 = v; return;
      case SweepAxisKind::DcBias: op.dc_bias = v; return;
      default: throw std::invalid_argument("sweep axis not applicable to tunable-coupler");
    }
  }

  static void apply_axis_tq(TqOperatingPoint& op, SweepAxisKind kind, double v) {
    switch (kind) {
      case SweepAxisKind::GateTime: op.t_gate = v; return;
      case SweepAxisKind::Detuning1: op.det1 = v * kMhz; return;
      case SweepAxisKind::Detuning2: op.det2 = v * kMhz; return;
      default: throw std::invalid_argument("sweep axis not applicable to tunable-qubits");
    }
  }

  void evaluate_observables(const DriftHamiltonian& h, double window, double* out) const {
    // One propagation covers every observable: the computational block when
    // any fidelity is requested, plus population initial states outside it.
    bool need_block = false;
    for (const auto& o : spec.observables) {
      need_block |= o.kind == SweepObservable::Kind::Fidelity;
    }
    const ComputationalProjector proj(h.shape, {0, 1, 2});
    std::vector<Eigen::Index> col_ix;
    if (need_block) col_ix.assign(proj.indices().begin(), proj.indices().end());
    auto col_of = [&](const std::string& label) {
      const Eigen::Index ix = h.shape.index_of_label(label);
      for (size_t c = 0; c < col_ix.size(); ++c) {
        if (col_ix[c] == ix) return c;
      }
      col_ix.push_back(ix);
      return col_ix.size() - 1;
    };
    std::vector<size_t> obs_col(spec.observables.size(), 0);
    for (size_t o = 0; o < spec.observables.size(); ++o) {
      if (spec.observables[o].kind == SweepObservable::Kind::Population) {
        obs_col[o] = col_of(spec.observables[o].initial_state);
      }
    }
    Matrix cols = Matrix::Zero(h.dim(), static_cast<Eigen::Index>(col_ix.size()));
    for (size_t c = 0; c < col_ix.size(); ++c) {
      cols(col_ix[c], static_cast<Eigen::Index>(c)) = 1.0;
    }
    const Matrix u_cols = propagate_columns(h, cols, 0.0, window, spec.step);

    // observables are read in the idle interaction frame (the no-drive
    // propagator of the same window is divided out)
    const Matrix u_idle = expm_hermitian(h.idle_hamiltonian(), window);
    const Matrix framed = u_idle.adjoint() * u_cols;
    for (size_t o = 0; o < spec.observables.size(); ++o) {
      const SweepObservable& ob = spec.observables[o];
      if (ob.kind == SweepObservable::Kind::Population) {
        const Eigen::Index row = h.shape.index_of_label(ob.measured_state);
        out[o] = std::norm(framed(row, static_cast<Eigen::Index>(obs_col[o])));
        continue;
      }
      Matrix target;
      std::vector<int> tsites;
      if (ob.target == "identity") {
        target = Matrix::Identity(8, 8);
        tsites = {0, 1, 2};
      } else if (ob.target == "cczs") {
        target = cczs({kPi / 2, ob.target_phi, 0.0}).matrix();
        tsites = {0, 1, 2};
      } else if (ob.target == "div") {
        target = div_gate({kPi / 4, kPi / 2}).matrix();
        tsites = {0, 1, 2};
      } else if (ob.target == "cz01" || ob.target == "iswap01") {
        target = ob.target == "cz01" ? cz_gate(0.0) : iswap_gate();
        tsites = {0, 1};
      } else if (ob.target == "cz02" || ob.target == "iswap02") {
        target = ob.target == "cz02" ? cz_gate(0.0) : iswap_gate();
        tsites = {0, 2};
      } else {
        throw std::invalid_argument("sweep: unknown fidelity target " + ob.target);
      }
      const ComputationalProjector tproj(h.shape, tsites);
      Matrix block(tproj.projected_dim(), tproj.projected_dim());
      for (Eigen::Index c = 0; c < tproj.projected_dim(); ++c) {
        Eigen::Index col_pos = -1;
        for (size_t cc = 0; cc < col_ix.size(); ++cc) {
          if (col_ix[cc] == tproj.indices()[c]) col_pos = static_cast<Eigen::Index>(cc);
        }
        for (Eigen::Index r = 0; r < tproj.projected_dim(); ++r) {
          block(r, c) = framed(tproj.indices()[r], col_pos);
        }
      }
      out[o] = fidelity_report(block, target).fidelity;
    }
  }
};

}  // namespace

SweepResult run_sweep(const SweepSpec& spec) {
  if (spec.axes.empty() || spec.axes.size() > 3) {
    throw std::invalid_argument("run_sweep: need 1..3 axes");
  }
  for (const auto& a : spec.axes) {
    if (a.values.size() < 2) throw std::invalid_argument("run_sweep: axis with < 2 points");
    for (double v : a.values) {
      if (!std::isfinite(v)) throw std::invalid_argument("run_sweep: non-finite axis value");
    }
  }
  if (spec.observables.empty()) throw std::invalid_argument("run_sweep: no observables");

  SweepResult result;
  result.axes = spec.axes;
  for (const auto& o : spec.observables) result.observable_names.push_back(o.column_name());

  Eigen::Index npoints = 1;
  for (const auto& a : spec.axes) npoints *= static_cast<Eigen::Index>(a.values.size());
  result.values.resize(npoints, static_cast<Eigen::Index>(spec.observables.size()));
  result.point_errors.assign(npoints, "");

  {
    std::ostringstream prov;
    prov << "scheme=" << spec.scheme << " target=" << spec.base_target << " dt=" << spec.step.dt
         << " method="
         << (spec.step.method == StepControl::Method::Midpoint ? "midpoint" : "magnus4")
         << " krylov=" << spec.step.krylov
         << " spec_hash=" << std::hash<std::string>{}(to_json(spec).dump());
    result.provenance = prov.str();
  }

  const PointEvaluator eval(spec);
  const int jobs = spec.jobs > 0 ? spec.jobs : std::max(1u, std::thread::hardware_concurrency());
  std::atomic<Eigen::Index> next{0};
  auto worker = [&]() {
    std::vector<double> coords(spec.axes.size());
    std::vector<double> out(spec.observables.size());
    for (;;) {
      const Eigen::Index k = next.fetch_add(1);
      if (k >= npoints) break;
      Eigen::Index rem = k;
      for (int a = static_cast<int>(spec.axes.size()) - 1; a >= 0; --a) {
        const Eigen::Index n = static_cast<Eigen::Index>(spec.axes[a].values.size());
        coords[a] = spec.axes[a].values[rem % n];
        rem /= n;
      }
      try {
        eval.evaluate(coords, out.data());
        for (size_t o = 0; o < out.size(); ++o) {
          if (out[o] < -1e-9 || out[o] > 1.0 + 1e-9) {
            result.point_errors[k] = "observable outside [0,1]";
          }
          result.values(k, static_cast<Eigen::Index>(o)) = std::clamp(out[o], 0.0, 1.0);
        }
      } catch (const std::exception& e) {
        result.point_errors[k] = e.what();
        for (size_t o = 0; o < out.size(); ++o) {
          result.values(k, static_cast<Eigen::Index>(o)) = std::nan("");
        }
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return result;
}

std::vector<double> SweepResult::point_coords(Eigen::Index flat) const {
  std::vector<double> coords(axes.size());
  Eigen::Index rem = flat;
  for (int a = static_cast<int>(axes.size()) - 1; a >= 0; --a) {
    const Eigen::Index n = static_cast<Eigen::Index>(axes[a].values.size());
    coords[a] = axes[a].values[rem % n];
    rem /= n;
  }
  return coords;
}

SweepResult::Extremum SweepResult::argmax(int observable) const {
  Extremum e;
  e.value = -1e300;
  for (Eigen::Index k = 0; k < values.rows(); ++k) {
    const double v = values(k, observable);
    if (std::isfinite(v) && v > e.value) {
      e.value = v;
      e.flat = k;
    }
  }
  e.coords = point_coords(e.flat);
  return e;
}

SweepResult::Extremum SweepResult::argmin(int observable) const {
  Extremum e;
  e.value = 1e300;
  for (Eigen::Index k = 0; k < values.rows(); ++k) {
    const double v = values(k, observable);
    if (std::isfinite(v) && v < e.value) {
      e.value = v;
      e.flat = k;
    }
  }
  e.coords = point_coords(e.flat);
  return e;
}

OperatingPointPick find_chevron_tip(const SweepResult& result, int freq_axis, int time_axis,
                                    int observable) {
  if (result.axes.size() < 2) throw std::invalid_argument("find_chevron_tip: need 2 axes");
  const auto& fvals = result.axes[freq_axis].values;
  const auto& tvals = result.axes[time_axis].values;
  const double fmid = 0.5 * (fvals.front() + fvals.back());

  OperatingPointPick pick;
  pick.population = -1.0;
  pick.time = 1e300;
  for (Eigen::Index k = 0; k < result.num_points(); ++k) {
    const double v = result.values(k, observable);
    if (!std::isfinite(v)) continue;
    const auto coords = result.point_coords(k);
    const double f = coords[freq_axis], t = coords[time_axis];
    const bool better =
        v > pick.population + 1e-12 ||
        (v > pick.population - 1e-12 &&
         (t < pick.time ||
          (t == pick.time && std::abs(f - fmid) < std::abs(pick.frequency - fmid))));
    if (better) {
      pick.population = std::max(v, pick.population);
      pick.frequency = f;
      pick.time = t;
    }
  }
  pick.edge_of_grid = pick.frequency == fvals.front() || pick.frequency == fvals.back() ||
                      pick.time == tvals.front() || pick.time == tvals.back();
  return pick;
}

SweepResult phi_scan(const TunableCouplerDevice& dev, const TcOperatingPoint& base, int phi_count,
                     int phase_count, const StepControl& step, int jobs) {
  // one propagation per drive phase difference; fidelity against every phi
  SweepResult result;
  result.axes.push_back(SweepAxis::linspace(SweepAxisKind::PhaseDiff, 0.0,
                                            kTwoPi * (phase_count - 1.0) / phase_count,
                                            phase_count));
  SweepAxis phi_axis{SweepAxisKind::PhaseDiff, {}};
  for (int i = 0; i < phi_count; ++i) phi_axis.values.push_back(kTwoPi * i / phi_count);
  result.axes.push_back(phi_axis);
  result.observable_names = {"fidelity_cczs_phi"};
  result.values.resize(static_cast<Eigen::Index>(phase_count) * phi_count, 1);
  result.point_errors.assign(result.values.rows(), "");
  result.provenance = "phi_scan dt=" + std::to_string(step.dt);

  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      const int p = next.fetch_add(1);
      if (p >= phase_count) break;
      TcOperatingPoint op = base;
      op.phase1 = result.axes[0].values[p];
      op.phase2 = 0.0;
      std::array<CouplerDriveSpec, 2> drives;
      drives[0] = {op.mod_freq1 != 0.0, op.dc_bias, op.amp1, op.mod_freq1, op.phase1};
      drives[1] = {op.mod_freq2 != 0.0, op.dc_bias, op.amp2, op.mod_freq2, op.phase2};
      try {
        const DriftHamiltonian h = make_hamiltonian(dev, drives, op.t_gate);
        const ComputationalProjector proj(h.shape, {0, 1, 2});
        Matrix cols = Matrix::Zero(h.dim(), proj.projected_dim());
        for (Eigen::Index c = 0; c < proj.projected_dim(); ++c) {
          cols(proj.indices()[c], c) = 1.0;
        }
        const Matrix u_cols = propagate_columns(h, cols, 0.0, op.t_gate, step);
        const Matrix u_idle = expm_hermitian(h.idle_hamiltonian(), op.t_gate);
        const Matrix framed = u_idle.adjoint() * u_cols;
        Matrix block(proj.projected_dim(), proj.projected_dim());
        for (Eigen::Index r = 0; r < proj.projected_dim(); ++r) {
          block.row(r) = framed.row(proj.indices()[r]);
        }
        for (int i = 0; i < phi_count; ++i) {
          const double phi = result.axes[1].values[i];
          const double f = fidelity_report(block, cczs({kPi / 2, phi, 0.0}).matrix()).fidelity;
          result.values(static_cast<Eigen::Index>(p) * phi_count + i, 0) = f;
        }
      } catch (const std::exception& e) {
        for (int i = 0; i < phi_count; ++i) {
          result.values(static_cast<Eigen::Index>(p) * phi_count + i, 0) = std::nan("");
          result.point_errors[static_cast<Eigen::Index>(p) * phi_count + i] = e.what();
        }
      }
    }
  };
  const int nj = jobs > 0 ? jobs : std::max(1u, std::thread::hardware_concurrency());
  if (nj == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nj);
    for (int j = 0; j < nj; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return result;
}

nlohmann::json to_json(const SweepSpec& spec) {
  nlohmann::json j;
  j["scheme"] = spec.scheme;
  j["base_target"] = spec.base_target;
  if (spec.device) j["device"] = *spec.device;
  j["step"] = {
      {"dt_ns", spec.step.dt},
      {"method", spec.step.method == StepControl::Method::Midpoint ? "midpoint" : "magnus4"},
      {"krylov", spec.step.krylov}};
  j["jobs"] = spec.jobs;
  nlohmann::json axes = nlohmann::json::array();
  for (const auto& a : spec.axes) {
    axes.push_back(
        {{"kind", axis_name(a.kind)}, {"unit", axis_unit(a.kind)}, {"values", a.values}});
  }
  j["axes"] = axes;
  nlohmann::json obs = nlohmann::json::array();
  for (const auto& o : spec.observables) {
    nlohmann::json jo;
    if (o.kind == SweepObservable::Kind::Population) {
      jo["kind"] = "population";
      jo["initial_state"] = o.initial_state;
      jo["measured_state"] = o.measured_state;
    } else {
      jo["kind"] = "fidelity";
      jo["target"] = o.target;
      jo["target_phi_rad"] = o.target_phi;
    }
    obs.push_back(jo);
  }
  j["observables"] = obs;
  return j;
}

SweepSpec sweep_spec_from_json(const nlohmann::json& j) {
  SweepSpec spec;
  spec.scheme = j.at("scheme").get<std::string>();
  spec.base_target = j.at("base_target").get<std::string>();
  if (j.contains("device")) spec.device = j["device"];
  if (j.contains("step")) {
    spec.step.dt = j["step"].value("dt_ns", 0.01);
    spec.step.method = j["step"].value("method", std::string("midpoint")) == "magnus4"
                           ? StepControl::Method::Magnus4
                           : StepControl::Method::Midpoint;
    spec.step.krylov = j["step"].value("krylov", false);
  }
  spec.jobs = j.value("jobs", 0);
  for (const auto& ja : j.at("axes")) {
    SweepAxis a{SweepAxisKind::GateTime, {}};
    const std::string kind = ja.at("kind").get<std::string>();
    bool known = false;
    for (SweepAxisKind k :
         {SweepAxisKind::GateTime, SweepAxisKind::ModFreq1, SweepAxisKind::ModFreq2,
          SweepAxisKind::PhaseDiff, SweepAxisKind::FluxAmp, SweepAxisKind::DcBias,
          SweepAxisKind::Detuning1, SweepAxisKind::Detuning2}) {
      if (axis_name(k) == kind) {
        a.kind = k;
        known = true;
      }
    }
    if (!known) throw std::invalid_argument("sweep spec: unknown axis kind " + kind);
    if (ja.contains("values")) {
      a.values = ja["values"].get<std::vector<double>>();
    } else {
      a = SweepAxis::linspace(a.kind, ja.at("min").get<double>(), ja.at("max").get<double>(),
                              ja.at("count").get<int>());
    }
    if (a.values.size() < 2) throw std::invalid_argument("sweep spec: axis with < 2 points");
    spec.axes.push_back(a);
  }
  for (const auto& jo : j.at("observables")) {
    SweepObservable o;
    if (jo.at("kind") == "population") {
      o.kind = SweepObservable::Kind::Population;
      o.initial_state = jo.at("initial_state").get<std::string>();
      o.measured_state = jo.at("measured_state").get<std::string>();
    } else {
      o.kind = SweepObservable::Kind::Fidelity;
      o.target = jo.at("target").get<std::string>();
      o.target_phi = jo.value("target_phi_rad", kPi);
    }
    spec.observables.push_back(o);
  }
  return spec;
}

void write_csv(const SweepResult& result, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_csv: cannot open " + path);
  std::vector<std::string> headers;
  for (const auto& a : result.axes) headers.push_back(axis_name(a.kind) + "_" + axis_unit(a.kind));
  for (const auto& n : result.observable_names) headers.push_back(n);
  headers.push_back("error");
  for (size_t i = 0; i < headers.size(); ++i) out << headers[i] << (i + 1 < headers.size() ? "," : "\n");
  out.precision(6);
  for (Eigen::Index k = 0; k < result.num_points(); ++k) {
    for (double c : result.point_coords(k)) out << c << ",";
    for (Eigen::Index o = 0; o < result.values.cols(); ++o) out << result.values(k, o) << ",";
    out << result.point_errors[k] << "\n";
  }
}

std::string summary_text(const SweepResult& result) {
  std::ostringstream os;
  os << "sweep: " << result.num_points() << " points, " << result.observable_names.size()
     << " observables\n";
  os << "provenance: " << result.provenance << "\n";
  for (size_t o = 0; o < result.observable_names.size(); ++o) {
    const auto mx = result.argmax(static_cast<int>(o));
    const auto mn = result.argmin(static_cast<int>(o));
    os << "  " << result.observable_names[o] << ": max " << mx.value << " at (";
    for (size_t a = 0; a < mx.coords.size(); ++a) os << (a ? ", " : "") << mx.coords[a];
    os << "), min " << mn.value << " at (";
    for (size_t a = 0; a < mn.coords.size(); ++a) os << (a ? ", " : "") << mn.coords[a];
    os << ")\n";
  }
  int nerr = 0;
  for (const auto& e : result.point_errors) nerr += e.empty() ? 0 : 1;
  if (nerr > 0) os << "  points with errors: " << nerr << "\n";
  return os.str();
}

}  // namespace sqg
