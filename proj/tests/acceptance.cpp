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

// Acceptance suite: one numbered criterion per function, each printing a
// single PASS/FAIL line (plus indented detail lines). Run all with no
// arguments or a single criterion by number.

#include <cstring>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "sqg/effective.hpp"
#include "sqg/gates.hpp"
#include "sqg/protocols.hpp"
#include "sqg/pulse/runs.hpp"
#include "sqg/sweep.hpp"
#include "support/oracles.hpp"

using namespace sqg;

namespace {

struct Criterion {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    pass &= ok;
    detail << "    [" << (ok ? "ok" : "FAIL") << "] " << what << "\n";
  }
};

std::mt19937_64 make_rng(unsigned salt) { return std::mt19937_64(0xC0FFEE ^ salt); }

Complex random_coupling(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  return {g(rng), g(rng)};
}

// ---------------------------------------------------------------- criterion 1
Criterion criterion1() {
  Criterion c;
  const auto eq33 = verify_decomposition_eq33(/*grid=*/2, /*random_triples=*/100, 1e-10);
  {
    std::ostringstream os;
    os << "three-gate decomposition residual " << eq33.max_residual << " over " << eq33.cases
       << " parameter triples (tol 1e-10)";
    c.check(eq33.max_residual <= 1e-10, os.str());
  }
  const auto fred = construct_fredkin();
  c.check(fred.found && fred.residual <= 1e-10,
          "Fredkin from CCZS(pi/2,0,0) + CCZ, residual " + std::to_string(fred.residual) +
              " via " + fred.placement);
  const auto ifred = construct_ifredkin();
  c.check(ifred.found && ifred.residual <= 1e-10,
          "iFredkin from CCZS(pi/2,pi/2,0) + CZ, residual " + std::to_string(ifred.residual) +
              " via " + ifred.placement);
  const auto toff = toffoli_distance_scan(20);
  {
    std::ostringstream os;
    os << "Toffoli non-equivalence: min distance " << toff.min_distance << " on a 20^3 grid (> 0.5)";
    c.check(toff.min_distance > 0.5, os.str());
  }
  return c;
}

// ---------------------------------------------------------------- criterion 2
Criterion criterion2() {
  Criterion c;
  auto rng = make_rng(2);
  std::normal_distribution<double> g(0.0, 1.0);
  const RegisterShape s = RegisterShape::qutrits(3);
  const ComputationalProjector p(s, {0, 1, 2});

  double worst_gate = 0.0, worst_gate_resonant = 0.0, worst_leak = 0.0, worst_dark = 0.0;
  for (int k = 0; k < 50; ++k) {
    CzPairModel m{random_coupling(rng), random_coupling(rng), g(rng)};
    if (k < 10) m.delta = 0.0;  // the set includes resonant and detuned drives
    auto [params, tg] = params_from_drive({m.lambda1, m.lambda2, m.delta});
    const Matrix u = propagate(m, tg).matrix();
    const double dev = max_abs_diff(p.project(u), cczs(params).matrix());
    worst_gate = std::max(worst_gate, dev);
    if (m.delta == 0.0) worst_gate_resonant = std::max(worst_gate_resonant, dev);
    // leakage out of the computational block
    for (Eigen::Index col : p.indices()) {
      for (Eigen::Index row = 0; row < s.total_dim(); ++row) {
        bool comp = false;
        for (Eigen::Index ci : p.indices()) comp |= ci == row;
        if (!comp) worst_leak = std::max(worst_leak, std::abs(u(row, col)));
      }
    }
    const Vector d = m.dark_state();
    worst_dark = std::max(worst_dark, (u * d - d).cwiseAbs().maxCoeff());
  }
  {
    std::ostringstream os;
    os << "propagator vs closed-form gate, 50 random drives incl. nonzero detuning: max residual "
       << worst_gate << " (tol 1e-8; resonant-only subset " << worst_gate_resonant << ")";
    c.check(worst_gate <= 1e-8, os.str());
  }
  {
    std::ostringstream os;
    os << "leakage out of the computational subspace " << worst_leak << " (tol 1e-10)";
    c.check(worst_leak <= 1e-10, os.str());
  }
  {
    std::ostringstream os;
    os << "dark-state stationarity " << worst_dark << " (tol 1e-10)";
    c.check(worst_dark <= 1e-10, os.str());
  }

  double worst_div = 0.0;
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int k = 0; k < 50; ++k) {
    const IswapPairModel m{2.0 * u01(rng) + 0.02, 2.0 * u01(rng)};
    const double t = 10.0 * u01(rng);
    worst_div = std::max(
        worst_div, max_abs_diff(propagate(m, t).matrix(), div_gate(m.div_params(t)).matrix()));
  }
  {
    std::ostringstream os;
    os << "simultaneous-iSWAP propagator vs divider gate at arbitrary t: max residual "
       << worst_div << " (tol 1e-8)";
    c.check(worst_div <= 1e-8, os.str());
  }
  return c;
}

// ---------------------------------------------------------------- criterion 3
Criterion criterion3() {
  Criterion c;
  auto rng = make_rng(3);
  std::uniform_real_distribution<double> u(0.1, 2.0);
  double worst = 0.0, worst_leak = 0.0;
  for (int k = 0; k < 40; ++k) {
    DeltaSystemModel m;
    m.alpha12 = m.alpha23 = u(rng);
    m.alpha13 = u(rng) - 0.1;
    const double t = kPi / m.omega();
    const Matrix closed = delta_system_propagator(m, t);
    const Matrix exact = expm_hermitian(build_hamiltonian(m).matrix(), t);
    worst = std::max(worst, max_abs_diff(closed, exact));
    worst_leak = std::max(worst_leak, std::abs(exact(1, 0)));
  }
  {
    std::ostringstream os;
    os << "closed form vs exponential at the no-leakage window: max residual " << worst
       << " (tol 1e-9)";
    c.check(worst <= 1e-9, os.str());
  }
  {
    std::ostringstream os;
    os << "no transfer into the intermediate level at the window: " << worst_leak << " (tol 1e-9)";
    c.check(worst_leak <= 1e-9, os.str());
  }

  // full transfer: t = 4 pi / a13 inside a no-leakage window, and a13 = 0
  {
    DeltaSystemModel m;
    const double omega = 1.0;
    m.alpha13 = 4.0 * omega / 3.0;
    m.alpha12 = m.alpha23 = std::sqrt((omega * omega - 0.25 * m.alpha13 * m.alpha13) / 2.0);
    const double t = 4.0 * kPi / m.alpha13;
    const Matrix u3 = expm_hermitian(build_hamiltonian(m).matrix(), t);
    std::ostringstream os;
    os << "full 1->3 transfer at t = 4 pi / a13: probability " << std::setprecision(12)
       << std::norm(u3(2, 0));
    c.check(std::norm(u3(2, 0)) >= 1.0 - 1e-9, os.str());
  }
  {
    DeltaSystemModel m;
    m.alpha12 = m.alpha23 = 0.8;
    m.alpha13 = 0.0;
    const Matrix u3 = expm_hermitian(build_hamiltonian(m).matrix(), kPi / m.omega());
    std::ostringstream os;
    os << "full 1->3 transfer at a13 = 0: probability " << std::setprecision(12)
       << std::norm(u3(2, 0));
    c.check(std::norm(u3(2, 0)) >= 1.0 - 1e-9, os.str());
  }
  return c;
}

// ---------------------------------------------------------------- criterion 4
std::pair<int, double> w_scaleupprotocol_cross();

Criterion criterion4() {
  Criterion c;
  {
    const Protocol p = ghz3_protocol();
    const double f =
        run_protocol(p, StateVector::basis(p.shape, "000")).fidelity_to(ghz_target(3));
    std::ostringstream os;
    os << "GHZ3 protocol fidelity " << std::setprecision(12) << f;
    c.check(f >= 1.0 - 1e-9, os.str());
  }
  {
    const double lam = 1.0;
    const Protocol p = dicke53_protocol(lam);
    const double f = run_protocol(p, StateVector::basis(p.shape, "00")).fidelity_to(d53_target());
    const bool times_ok =
        std::abs(p.steps[1].duration - kPi / (4 * lam)) < 1e-12 &&
        std::abs(p.steps[4].duration - kPi / (2 * std::sqrt(6.0) * lam)) < 1e-12;
    std::ostringstream os;
    os << "five-qubit Dicke superposition fidelity " << std::setprecision(12) << f
       << " with step times pi/(4 l), pi/(2 sqrt6 l)";
    c.check(f >= 1.0 - 1e-9 && times_ok, os.str());
  }
  {
    const Protocol p = w_div_protocol();
    const double f = run_protocol(p, StateVector::basis(p.shape, "000")).fidelity_to(w_target(3));
    std::ostringstream os;
    os << "W3 via the divider gate: fidelity " << std::setprecision(12) << f;
    c.check(f >= 1.0 - 1e-9, os.str());
  }
  {
    const auto plan = w_scaleupprotocol_cross();
    std::ostringstream os;
    os << "16-qubit W scale-up (restricted subspace) fidelity " << std::setprecision(12)
       << plan.second;
    c.check(plan.second >= 1.0 - 1e-8, os.str());
  }
  return c;
}

std::pair<int, double> w_scaleupprotocol_cross() {
  const auto plan = w_scaleup_protocol(SquareGrid::cross_pattern());
  Vector v0 = Vector::Zero(plan.protocol.shape.total_dim());
  v0[0] = 1.0;
  const StateVector out = run_protocol(plan.protocol, StateVector(plan.protocol.shape, v0));
  return {static_cast<int>(plan.carriers.size()), out.fidelity_to(plan.target)};
}

// ---------------------------------------------------------------- criterion 5
Criterion criterion5() {
  Criterion c;
  auto rng = make_rng(5);
  int agree = 0, total = 0;
  double worst_sigma_ratio = 0.0;
  for (const Eigen::Index n : {4, 8}) {
    for (int rep = 0; rep < 10; ++rep) {
      const Matrix u = test::random_unitary(n, rng);
      Matrix m = test::random_unitary(n, rng);
      if (rep % 2 == 1) {
        // leaky map: drain amplitude from a few columns
        m.col(0) *= 0.93;
        m.col(n - 1) *= 0.98;
      }
      const double f = average_gate_fidelity_formula(m, u);
      const auto [mc, err] = test::haar_average_fidelity(m, u, 100000, rng);
      ++total;
      const double ratio = std::abs(f - mc) / std::max(err, 1e-300);
      worst_sigma_ratio = std::max(worst_sigma_ratio, ratio);
      if (ratio <= 3.0) ++agree;
    }
  }
  std::ostringstream os;
  os << "closed form vs Haar Monte-Carlo (1e5 samples): " << agree << "/" << total
     << " pairs within 3 sigma (worst " << worst_sigma_ratio << " sigma)";
  // with 20 pairs a single ~3.2-sigma fluctuation is plausible; require all
  // within 3 sigma as specified
  c.check(agree == total, os.str());
  return c;
}

// ---------------------------------------------------------------- criterion 6
Criterion criterion6() {
  Criterion c;
  RunSettings settings;
  settings.refine = true;
  settings.step.dt = 0.01;

  const GateRunResult cz02 =
      run_tunable_qubit_gate(TunableQubitDevice::defaults(), TqTarget::Cz02, settings);
  {
    std::ostringstream os;
    os << "CZ02: F = " << std::setprecision(6) << cz02.report.fidelity << " at "
       << cz02.gate_time << " ns (need >= 0.999 near 93 ns)";
    c.check(cz02.report.fidelity >= 0.999 && std::abs(cz02.gate_time - 93.0) <= 4.0, os.str());
  }

  const GateRunResult cczs_run = run_cczs_tunable_qubits(settings);
  {
    std::ostringstream os;
    os << "CCZS(pi/2,pi,0): F = " << std::setprecision(6) << cczs_run.report.fidelity << " at "
       << cczs_run.gate_time << " ns (need >= 0.99 at 66.8 +- 3 ns)";
    c.check(cczs_run.report.fidelity >= 0.99 && std::abs(cczs_run.gate_time - 66.8) <= 3.0,
            os.str());
  }
  {
    const double ratio = cczs_run.gate_time / cz02.gate_time;
    std::ostringstream os;
    os << "gate-time ratio t_CCZS/t_CZ = " << std::setprecision(5) << ratio
       << " (need 1/sqrt2 within 5%)";
    c.check(std::abs(ratio * std::sqrt(2.0) - 1.0) <= 0.05, os.str());
  }
  return c;
}

// ---------------------------------------------------------------- criterion 7
Criterion criterion7() {
  Criterion c;
  const TunableCouplerDevice dev = TunableCouplerDevice::defaults();
  RunSettings settings;
  settings.refine = false;
  settings.step.dt = 0.01;
  settings.step.krylov = true;

  const GateRunResult cz01 = run_tunable_coupler_gate(dev, TcTarget::Cz01, settings);
  {
    std::ostringstream os;
    os << "CZ01: F = " << std::setprecision(6) << cz01.report.fidelity << " at " << cz01.gate_time
       << " ns (need >= 0.995 near 405 ns)";
    c.check(cz01.report.fidelity >= 0.995 && std::abs(cz01.gate_time - 405.0) <= 0.05 * 405.0,
            os.str());
  }
  const GateRunResult cz02 = run_tunable_coupler_gate(dev, TcTarget::Cz02, settings);
  {
    std::ostringstream os;
    os << "CZ02: F = " << std::setprecision(6) << cz02.report.fidelity << " at " << cz02.gate_time
       << " ns (need >= 0.995 near 396 ns)";
    c.check(cz02.report.fidelity >= 0.995 && std::abs(cz02.gate_time - 396.0) <= 0.05 * 396.0,
            os.str());
  }
  const GateRunResult cc = run_tunable_coupler_gate(dev, TcTarget::Cczs, settings);
  {
    std::ostringstream os;
    os << "CCZS(pi/2,pi,0): F = " << std::setprecision(6) << cc.report.fidelity << " at "
       << cc.gate_time << " ns (need >= 0.99)";
    c.check(cc.report.fidelity >= 0.99, os.str());
  }
  {
    const double plateau_cz = 0.5 * ((cz01.gate_time - 50.0) + (cz02.gate_time - 50.0));
    const double plateau_cc = cc.gate_time - 50.0;
    const double ratio = plateau_cc / plateau_cz;
    std::ostringstream os;
    os << "plateau ratio " << std::setprecision(5) << ratio << " (need 1/sqrt2 within 10%)";
    c.check(std::abs(ratio * std::sqrt(2.0) - 1.0) <= 0.10, os.str());
  }

  // phi scan: ridge at phi = pi + (phi1 - phi2) mod 2pi, every column >= 0.99
  {
    StepControl step = settings.step;
    const int nphase = 8, nphi = 8;
    const SweepResult scan =
        phi_scan(dev, tc_default_operating_point(TcTarget::Cczs), nphi, nphase, step);
    bool ridge_ok = true, columns_ok = true;
    double worst_col = 1.0;
    for (int i = 0; i < nphi; ++i) {
      const double phi = scan.axes[1].values[i];
      double best = -1.0, best_phase = 0.0;
      for (int p = 0; p < nphase; ++p) {
        const double f = scan.values(static_cast<Eigen::Index>(p) * nphi + i, 0);
        if (f > best) {
          best = f;
          best_phase = scan.axes[0].values[p];
        }
      }
      worst_col = std::min(worst_col, best);
      columns_ok &= best >= 0.99;
      const double expected = wrap_angle(phi - kPi);
      const double got = wrap_angle(best_phase);
      const double cell = kTwoPi / nphase;
      double diff = std::abs(wrap_angle(got - expected));
      ridge_ok &= diff <= 0.51 * cell + 1e-9;
    }
    std::ostringstream os;
    os << "phi-scan (" << nphase << " drive phases x " << nphi
       << " targets): ridge at phi = pi + (phi1-phi2) within one grid cell, worst column best-F = "
       << std::setprecision(6) << worst_col;
    c.check(ridge_ok && columns_ok, os.str());
  }
  return c;
}

// ---------------------------------------------------------------- criterion 8
Criterion criterion8() {
  Criterion c;
  RunSettings settings;
  settings.refine = true;
  settings.step.dt = 0.01;
  const TunableQubitDevice dev = TunableQubitDevice::defaults_div();

  const GateRunResult is01 = run_tunable_qubit_gate(dev, TqTarget::Iswap01, settings);
  {
    std::ostringstream os;
    os << "iSWAP01: F = " << std::setprecision(6) << is01.report.fidelity << " at "
       << is01.gate_time << " ns (need >= 0.995 near 66.8 ns)";
    c.check(is01.report.fidelity >= 0.995 && std::abs(is01.gate_time - 66.8) <= 4.0, os.str());
  }

  RunSettings div_settings = settings;
  div_settings.record_trace = true;
  div_settings.trace_initial = "010";
  div_settings.trace_states = {"010", "100", "001"};
  const GateRunResult dv = run_tunable_qubit_gate(dev, TqTarget::Div, div_settings);
  {
    std::ostringstream os;
    os << "DIV(pi/4,pi/2): F = " << std::setprecision(6) << dv.report.fidelity << " at "
       << dv.gate_time << " ns (need >= 0.985 at 47.5 +- 3 ns)";
    c.check(dv.report.fidelity >= 0.985 && std::abs(dv.gate_time - 47.5) <= 3.0, os.str());
  }
  {
    // final populations from |010>: (q1, q0, q2) sites -> (|010>, |100>, |001>)
    const auto& v = dv.trace.values;
    const double p010 = v[0].back(), p100 = v[1].back(), p001 = v[2].back();
    std::ostringstream os;
    os << "populations from |010>: (" << std::setprecision(4) << p010 << ", " << p100 << ", "
       << p001 << ") (need (0.25, 0.5, 0.25) +- 0.02)";
    c.check(std::abs(p010 - 0.25) <= 0.02 && std::abs(p100 - 0.5) <= 0.02 &&
                std::abs(p001 - 0.25) <= 0.02,
            os.str());
  }
  return c;
}

// ---------------------------------------------------------------- criterion 9
Criterion criterion9() {
  Criterion c;
  auto rng = make_rng(9);
  std::uniform_real_distribution<double> u01(0.0, 1.0);

  // unitarity of every gate constructor
  {
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
      const CczsParams p{kPi * u01(rng), kTwoPi * u01(rng) - kPi,
                         (kTwoPi * u01(rng) - kPi) * 0.999};
      worst = std::max(worst, unitarity_defect(cczs(p).matrix()));
      worst = std::max(worst,
                       unitarity_defect(div_gate({kPi / 2 * u01(rng), 8 * u01(rng)}).matrix()));
      worst = std::max(worst, unitarity_defect(xy_gate(kPi * u01(rng), kPi * u01(rng))));
    }
    for (const auto& name : named_gate_list()) {
      worst = std::max(worst, unitarity_defect(named_gate(name).matrix()));
    }
    std::ostringstream os;
    os << "constructor unitarity: worst defect " << worst << " (tol 1e-12)";
    c.check(worst <= 1e-12, os.str());
  }

  // excitation conservation / block structure
  {
    bool ok = true;
    for (int k = 0; k < 20; ++k) {
      const Matrix m = cczs({kPi * u01(rng), kTwoPi * u01(rng) - kPi, kTwoPi * u01(rng) - kPi})
                           .matrix();
      const Matrix d = div_gate({kPi / 2 * u01(rng), 8 * u01(rng)}).matrix();
      for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
          if (std::popcount(unsigned(i)) != std::popcount(unsigned(j))) {
            ok &= m(i, j) == Complex{} && d(i, j) == Complex{};
          }
        }
      }
    }
    c.check(ok, "excitation-number block structure of the three-qubit gates");
  }

  // sweep determinism with fixed inputs
  {
    SweepSpec spec;
    spec.scheme = "tunable-qubits";
    spec.base_target = "cczs";
    spec.step.dt = 0.02;
    spec.jobs = 2;
    spec.axes.push_back(SweepAxis::linspace(SweepAxisKind::GateTime, 10.0, 14.0, 3));
    spec.axes.push_back(SweepAxis::linspace(SweepAxisKind::Detuning1, -1.0, 1.0, 2));
    SweepObservable pop;
    pop.kind = SweepObservable::Kind::Population;
    pop.initial_state = "110";
    pop.measured_state = "200";
    spec.observables.push_back(pop);
    const SweepResult a = run_sweep(spec);
    const SweepResult b = run_sweep(spec);
    const bool identical =
        std::memcmp(a.values.data(), b.values.data(), sizeof(double) * a.values.size()) == 0;
    c.check(identical, "sweep determinism: repeated runs are bit-identical");
    bool in_range = true;
    for (Eigen::Index k = 0; k < a.num_points(); ++k) {
      in_range &= a.values(k, 0) >= 0.0 && a.values(k, 0) <= 1.0;
    }
    c.check(in_range, "sweep outputs clamped to [0, 1]");
  }

  // integrator self-convergence at a reported operating point
  {
    RunSettings settings;
    settings.refine = false;
    settings.convergence_check = true;
    settings.step.dt = 0.01;
    TqOperatingPoint op = tq_default_operating_point(TqTarget::Cczs);
    const GateRunResult r = run_tunable_qubit_gate(TunableQubitDevice::defaults(), TqTarget::Cczs,
                                                   settings, &op);
    std::ostringstream os;
    os << "step-halving fidelity change at the CCZS point: " << r.report.convergence
       << " (tol 1e-6)";
    c.check(r.report.convergence < 1e-6, os.str());
  }

  // virtual-Z monotonicity: optimized value never below the raw value
  {
    auto rng2 = make_rng(99);
    bool ok = true;
    for (int k = 0; k < 20; ++k) {
      Matrix m = test::random_unitary(8, rng2);
      const Matrix t = cczs({kPi / 2, kPi, 0.0}).matrix();
      const FidelityReport rep = fidelity_report(m, t);
      ok &= rep.fidelity >= rep.fidelity_raw - 1e-12;
    }
    c.check(ok, "virtual-Z optimization never decreases the fidelity");
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);

  struct Entry {
    int number;
    const char* title;
    Criterion (*run)();
  };
  const Entry entries[] = {
      {1, "analytic identity suite", criterion1},
      {2, "effective-dynamics oracle equivalence", criterion2},
      {3, "three-level Delta-system suite", criterion3},
      {4, "state-preparation suite", criterion4},
      {5, "average-gate-fidelity formula validation", criterion5},
      {6, "tunable-qubit CCZS reproduction", criterion6},
      {7, "tunable-coupler CCZS reproduction", criterion7},
      {8, "divider-gate reproduction", criterion8},
      {9, "property suite", criterion9},
  };

  bool all_pass = true;
  for (const auto& e : entries) {
    if (only != 0 && e.number != only) continue;
    Criterion c = e.run();
    std::cout << (c.pass ? "[PASS]" : "[FAIL]") << " criterion " << e.number << ": " << e.title
              << "\n"
              << c.detail.str();
    all_pass &= c.pass;
  }
  return all_pass ? 0 : 1;
}
