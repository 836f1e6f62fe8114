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

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "sqg/gates.hpp"
#include "sqg/protocols.hpp"
#include "sqg/pulse/runs.hpp"
#include "sqg/serialize.hpp"
#include "sqg/sweep.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open output file " + out_path);
    f << j.dump(2) << "\n";
  }
}

std::string default_out_dir() {
  if (const char* env = std::getenv("SQG_OUT_DIR")) return env;
  return ".";
}

json report_json(const sqg::FidelityReport& rep) {
  json j;
  j["fidelity"] = rep.fidelity;
  j["fidelity_raw"] = rep.fidelity_raw;
  j["leakage"] = rep.leakage;
  j["gate_time_ns"] = rep.gate_time;
  j["virtual_z_pre_rad"] = rep.z_pre;
  j["virtual_z_post_rad"] = rep.z_post;
  if (rep.convergence >= 0.0) j["step_halving_dF"] = rep.convergence;
  return j;
}

void write_trace_csv(const sqg::PopulationTrace& trace, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open trace file " + path);
  f << "time_ns";
  for (const auto& s : trace.states) f << ",pop_" << s;
  f << "\n";
  f.precision(6);
  for (size_t i = 0; i < trace.times.size(); ++i) {
    f << trace.times[i];
    for (const auto& series : trace.values) f << "," << series[i];
    f << "\n";
  }
}

int cmd_gate_dump(const std::string& name, const std::vector<double>& angles,
                  const std::string& out) {
  const sqg::Operator op = sqg::named_gate(name, angles);
  emit(sqg::to_json(op), out);
  return kExitOk;
}

int cmd_gate_verify(const std::string& which, int grid, double tol) {
  bool all_pass = true;
  json out;
  if (which == "eq33" || which == "all") {
    const auto rep = sqg::verify_decomposition_eq33(grid, 100, tol);
    out["eq33"] = {{"pass", rep.pass}, {"max_residual", rep.max_residual}, {"cases", rep.cases}};
    all_pass &= rep.pass;
  }
  if (which == "fredkin" || which == "all") {
    const auto rep = sqg::construct_fredkin(tol);
    json cands = json::array();
    for (auto& [label, r] : rep.candidates) cands.push_back({{"wiring", label}, {"residual", r}});
    out["fredkin"] = {{"pass", rep.found}, {"placement", rep.placement},
                      {"residual", rep.residual}, {"candidates", cands}};
    all_pass &= rep.found;
  }
  if (which == "ifredkin" || which == "all") {
    const auto rep = sqg::construct_ifredkin(tol);
    json cands = json::array();
    for (auto& [label, r] : rep.candidates) cands.push_back({{"wiring", label}, {"residual", r}});
    out["ifredkin"] = {{"pass", rep.found}, {"placement", rep.placement},
                       {"residual", rep.residual}, {"candidates", cands}};
    all_pass &= rep.found;
  }
  if (which == "toffoli-scan" || which == "all") {
    const auto rep = sqg::toffoli_distance_scan(grid >= 2 ? std::max(grid, 5) : 20);
    const bool pass = rep.min_distance > 0.5;
    out["toffoli-scan"] = {{"pass", pass},
                           {"min_distance", rep.min_distance},
                           {"grid", rep.grid},
                           {"argmin_theta", rep.argmin.theta},
                           {"argmin_phi", rep.argmin.phi},
                           {"argmin_gamma", rep.argmin.gamma}};
    all_pass &= pass;
  }
  if (out.empty()) {
    std::cerr << "unknown identity '" << which
              << "' (expected eq33|fredkin|ifredkin|toffoli-scan|all)\n";
    return kExitUsage;
  }
  std::cout << out.dump(2) << "\n";
  return all_pass ? kExitOk : kExitVerifyFail;
}

int cmd_prepare(const std::string& which, bool dump_state, double lambda,
                const std::string& out) {
  sqg::Protocol protocol;
  sqg::Vector target;
  sqg::StateVector initial = sqg::StateVector::basis(sqg::RegisterShape::qubits(1), "0");
  if (which == "ghz3") {
    protocol = sqg::ghz3_protocol();
    target = sqg::ghz_target(3);
    initial = sqg::StateVector::basis(protocol.shape, "000");
  } else if (which == "dicke53") {
    protocol = sqg::dicke53_protocol(lambda);
    target = sqg::d53_target();
    initial = sqg::StateVector::basis(protocol.shape, "00");
  } else if (which == "w-div") {
    protocol = sqg::w_div_protocol();
    target = sqg::w_target(3);
    initial = sqg::StateVector::basis(protocol.shape, "000");
  } else if (which == "w-scaleup") {
    const auto plan = sqg::w_scaleup_protocol(sqg::SquareGrid::cross_pattern(),
                                              sqg::WScaleupVariant::SimultaneousIswap, lambda);
    protocol = plan.protocol;
    target = plan.target;
    std::vector<int> center_digit(1, plan.protocol.shape.dim(0));
    sqg::Vector v0 = sqg::Vector::Zero(protocol.shape.total_dim());
    v0[0] = 1.0;  // excitation at the grid center (site 0)
    initial = sqg::StateVector(protocol.shape, v0);
  } else {
    std::cerr << "unknown protocol '" << which << "' (expected ghz3|dicke53|w-div|w-scaleup)\n";
    return kExitUsage;
  }
  const sqg::StateVector final_state = sqg::run_protocol(protocol, initial);
  json j;
  j["protocol"] = protocol.name;
  j["steps"] = json::array();
  for (const auto& s : protocol.steps) {
    j["steps"].push_back({{"name", s.name}, {"duration", s.duration},
                          {"sites_touched", s.sites_touched}});
  }
  j["fidelity_to_target"] = final_state.fidelity_to(target);
  j["total_evolution_time"] = protocol.total_evolution_time();
  if (dump_state) j["state"] = sqg::to_json(final_state);
  emit(j, out);
  return kExitOk;
}

int cmd_simulate(const std::string& scheme, const std::string& target,
                 const std::string& config_path, const std::string& out_dir, double dt,
                 const std::string& method, bool refine, bool convergence, bool traces,
                 int jobs) {
  (void)jobs;
  sqg::RunSettings settings;
  settings.step.dt = dt;
  settings.step.method = method == "magnus4" ? sqg::StepControl::Method::Magnus4
                                             : sqg::StepControl::Method::Midpoint;
  settings.refine = refine;
  settings.convergence_check = convergence;

  json config;
  if (!config_path.empty()) {
    std::ifstream f(config_path);
    if (!f) {
      std::cerr << "config file not found: " << config_path << "\n";
      return kExitUsage;
    }
    f >> config;
  }

  sqg::GateRunResult result;
  if (scheme == "tunable-qubits") {
    sqg::TqTarget t;
    if (target == "cz01") t = sqg::TqTarget::Cz01;
    else if (target == "cz02") t = sqg::TqTarget::Cz02;
    else if (target == "cczs") t = sqg::TqTarget::Cczs;
    else if (target == "iswap01") t = sqg::TqTarget::Iswap01;
    else if (target == "iswap02") t = sqg::TqTarget::Iswap02;
    else if (target == "div") t = sqg::TqTarget::Div;
    else {
      std::cerr << "unknown target '" << target << "' for tunable-qubits\n";
      return kExitUsage;
    }
    sqg::TunableQubitDevice dev;
    if (!config.empty()) {
      dev = sqg::tunable_qubit_device_from_json(config);
    } else {
      const bool iswap_like =
          t == sqg::TqTarget::Div || t == sqg::TqTarget::Iswap01 || t == sqg::TqTarget::Iswap02;
      dev = iswap_like ? sqg::TunableQubitDevice::defaults_div()
                       : sqg::TunableQubitDevice::defaults();
    }
    if (traces) {
      settings.record_trace = true;
      if (t == sqg::TqTarget::Div) {
        settings.trace_initial = "010";
        settings.trace_states = {"010", "100", "001"};
      } else {
        settings.trace_initial = "110";
        settings.trace_states = {"110", "200", "101"};
      }
    }
    result = sqg::run_tunable_qubit_gate(dev, t, settings);
  } else if (scheme == "tunable-coupler") {
    sqg::TcTarget t;
    if (target == "cz01") t = sqg::TcTarget::Cz01;
    else if (target == "cz02") t = sqg::TcTarget::Cz02;
    else if (target == "cczs") t = sqg::TcTarget::Cczs;
    else {
      std::cerr << "unknown target '" << target << "' for tunable-coupler\n";
      return kExitUsage;
    }
    sqg::TunableCouplerDevice dev = config.empty()
                                        ? sqg::TunableCouplerDevice::defaults()
                                        : sqg::tunable_coupler_device_from_json(config);
    settings.step.krylov = true;
    if (traces) {
      settings.record_trace = true;
      settings.trace_initial = "11000";
      settings.trace_states = {"11000", "20000", "10100"};
    }
    result = sqg::run_tunable_coupler_gate(dev, t, settings);
  } else {
    std::cerr << "unknown scheme '" << scheme << "' (expected tunable-qubits|tunable-coupler)\n";
    return kExitUsage;
  }

  json j;
  j["scheme"] = scheme;
  j["target"] = result.target_name;
  j["report"] = report_json(result.report);
  j["operating_point"] = result.operating_point;
  std::cout << j.dump(2) << "\n";
  if (traces && !result.trace.times.empty()) {
    const fs::path p = fs::path(out_dir) / (scheme + "_" + target + "_trace.csv");
    write_trace_csv(result.trace, p.string());
    std::cerr << "trace written to " << p.string() << "\n";
  }
  return kExitOk;
}

int cmd_sweep(const std::string& spec_path, const std::string& out_dir, int jobs) {
  std::ifstream f(spec_path);
  if (!f) {
    std::cerr << "sweep spec not found: " << spec_path << "\n";
    return kExitUsage;
  }
  json jspec;
  f >> jspec;
  sqg::SweepSpec spec = sqg::sweep_spec_from_json(jspec);
  if (jobs > 0) spec.jobs = jobs;
  const sqg::SweepResult result = sqg::run_sweep(spec);
  fs::create_directories(out_dir);
  const fs::path csv = fs::path(out_dir) / "sweep.csv";
  sqg::write_csv(result, csv.string());
  std::cout << sqg::summary_text(result);
  std::cout << "csv: " << csv.string() << "\n";
  return kExitOk;
}

int cmd_fidelity(const std::string& actual_path, const std::string& target_path,
                 const std::string& sites_csv) {
  auto load = [](const std::string& p) {
    std::ifstream f(p);
    if (!f) throw std::runtime_error("file not found: " + p);
    json j;
    f >> j;
    return sqg::operator_from_json(j);
  };
  const sqg::Operator actual = load(actual_path);
  const sqg::Operator target = load(target_path);
  std::vector<int> sites;
  if (!sites_csv.empty()) {
    std::stringstream ss(sites_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) sites.push_back(std::stoi(tok));
  } else {
    for (int i = 0; i < actual.shape().num_sites(); ++i) sites.push_back(i);
  }
  const sqg::ComputationalProjector proj(actual.shape(), sites);
  const sqg::FidelityReport rep =
      sqg::average_gate_fidelity(actual, target.matrix(), proj);
  std::cout << report_json(rep).dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int sqg_main(int argc, char** argv) {
  CLI::App app{"simultaneous two-qubit-gate simulator"};
  app.require_subcommand(1);

  // gate-dump
  auto* dump = app.add_subcommand("gate-dump", "print a gate matrix as structured text");
  std::string dump_name;
  std::vector<double> dump_angles;
  std::string dump_out;
  double theta = NAN, phi = NAN, gamma = NAN, varphi = NAN, beta = NAN;
  dump->add_option("name", dump_name, "gate name")->required();
  dump->add_option("--theta", theta, "theta angle (rad)");
  dump->add_option("--phi", phi, "phi angle (rad)");
  dump->add_option("--gamma", gamma, "gamma angle (rad)");
  dump->add_option("--varphi", varphi, "varphi angle (rad)");
  dump->add_option("--beta", beta, "beta angle (rad)");
  dump->add_option("--out", dump_out, "output file (stdout when omitted)");

  // gate-verify
  auto* verify = app.add_subcommand("gate-verify", "verify a gate identity and report residuals");
  std::string verify_name;
  int verify_grid = 5;
  double verify_tol = 1e-10;
  verify->add_option("identity", verify_name, "eq33|fredkin|ifredkin|toffoli-scan|all")->required();
  verify->add_option("--grid", verify_grid, "grid points per axis");
  verify->add_option("--tol", verify_tol, "residual tolerance");

  // prepare
  auto* prepare = app.add_subcommand("prepare", "run a state-preparation protocol");
  std::string prep_name, prep_out;
  bool prep_dump = false;
  double prep_lambda = 1.0;
  prepare->add_option("protocol", prep_name, "ghz3|dicke53|w-div|w-scaleup")->required();
  prepare->add_flag("--dump-state", prep_dump, "include final amplitudes in the output");
  prepare->add_option("--lambda", prep_lambda, "interaction strength (rad/ns)");
  prepare->add_option("--out", prep_out, "output file (stdout when omitted)");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "pulse-level device simulation");
  std::string sim_scheme, sim_target, sim_config, sim_out = default_out_dir();
  std::string sim_method = "midpoint";
  double sim_dt = 0.01;
  bool sim_refine = true, sim_conv = false, sim_traces = false;
  int sim_jobs = 0;
  simulate->add_option("scheme", sim_scheme, "tunable-qubits|tunable-coupler")->required();
  simulate->add_option("--target", sim_target, "gate to calibrate against")->required();
  simulate->add_option("--config", sim_config, "device parameter file (JSON)");
  simulate->add_option("--out", sim_out, "output directory for traces");
  simulate->add_option("--dt", sim_dt, "integrator step (ns)");
  simulate->add_option("--method", sim_method, "midpoint|magnus4");
  simulate->add_flag("--no-refine{false}", sim_refine, "skip the local calibration search");
  simulate->add_flag("--check-convergence", sim_conv, "re-run at dt/2 and report |dF|");
  simulate->add_flag("--traces", sim_traces, "write population traces CSV");
  simulate->add_option("--jobs", sim_jobs, "worker cap");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "grid sweep over drive parameters");
  std::string sweep_spec, sweep_out = default_out_dir();
  int sweep_jobs = 0;
  sweep->add_option("--spec", sweep_spec, "sweep spec file (JSON)")->required();
  sweep->add_option("--out", sweep_out, "output directory");
  sweep->add_option("--jobs", sweep_jobs, "worker cap");

  // fidelity
  auto* fid = app.add_subcommand("fidelity", "average gate fidelity between dumped operators");
  std::string fid_actual, fid_target, fid_sites;
  fid->add_option("--actual", fid_actual, "implemented operator (JSON dump)")->required();
  fid->add_option("--target", fid_target, "ideal operator (JSON dump)")->required();
  fid->add_option("--sites", fid_sites, "comma-separated qubit sites of the computational block");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (dump->parsed()) {
      std::vector<double> angles;
      if (dump_name == "xy") {
        angles = {std::isnan(theta) ? sqg::kPi : theta, std::isnan(phi) ? 0.0 : phi};
      } else if (dump_name == "cz") {
        angles = {std::isnan(gamma) ? 0.0 : gamma};
      } else if (dump_name == "iswap-beta") {
        angles = {std::isnan(beta) ? 0.0 : beta};
      } else if (dump_name == "div" || dump_name == "u-div") {
        angles = {std::isnan(theta) ? sqg::kPi / 4 : theta,
                  std::isnan(varphi) ? sqg::kPi / 2 : varphi};
      } else {
        angles = {std::isnan(theta) ? sqg::kPi / 2 : theta, std::isnan(phi) ? sqg::kPi : phi,
                  std::isnan(gamma) ? 0.0 : gamma};
      }
      return cmd_gate_dump(dump_name, angles, dump_out);
    }
    if (verify->parsed()) return cmd_gate_verify(verify_name, verify_grid, verify_tol);
    if (prepare->parsed()) return cmd_prepare(prep_name, prep_dump, prep_lambda, prep_out);
    if (simulate->parsed()) {
      return cmd_simulate(sim_scheme, sim_target, sim_config, sim_out, sim_dt, sim_method,
                          sim_refine, sim_conv, sim_traces, sim_jobs);
    }
    if (sweep->parsed()) return cmd_sweep(sweep_spec, sweep_out, sweep_jobs);
    if (fid->parsed()) return cmd_fidelity(fid_actual, fid_target, fid_sites);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFail;
  }
  return kExitUsage;
}

#ifndef SQG_CLI_NO_MAIN
int main(int argc, char** argv) { return sqg_main(argc, argv); }
#endif
