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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sqg/protocols.hpp"
#include "support/oracles.hpp"

using namespace sqg;

TEST_CASE("target states are normalized with the right support") {
  CHECK(ghz_target(3).norm() == doctest::Approx(1.0));
  const Vector d42 = dicke_target(4, 2);
  int nonzero = 0;
  for (Eigen::Index k = 0; k < d42.size(); ++k) {
    if (std::abs(d42[k]) > 0) {
      ++nonzero;
      CHECK(std::abs(d42[k] - 1.0 / std::sqrt(6.0)) < 1e-15);
    }
  }
  CHECK(nonzero == 6);
  CHECK(w_target(5).cwiseAbs().maxCoeff() == doctest::Approx(1.0 / std::sqrt(5.0)));
  CHECK(d53_target().norm() == doctest::Approx(1.0));
  CHECK_THROWS_AS(dicke_target(3, 5), std::invalid_argument);

  TargetState t{TargetState::Kind::Dicke, 4, 2};
  CHECK((t.amplitudes() - d42).norm() < 1e-15);
}

TEST_CASE("run_protocol: empty protocol and single-gate steps") {
  Protocol p;
  p.shape = RegisterShape::qubits(3);
  const StateVector init = StateVector::basis(p.shape, "000");
  const StateVector out = run_protocol(p, init);
  CHECK((out.amplitudes() - init.amplitudes()).norm() == 0.0);

  Protocol px = ghz3_protocol();
  px.steps.resize(0);
  const int site0[1] = {0};
  px.steps.push_back({"X(q0)", Operator(px.shape, embed_matrix(pauli_x(), RegisterShape::qubits(1),
                                                               px.shape, site0)),
                      0.0, 1});
  const StateVector out2 = run_protocol(px, init);
  CHECK(std::abs(out2.amplitude("100") - 1.0) < 1e-15);

  CHECK_THROWS_AS(run_protocol(px, StateVector::basis(RegisterShape::qubits(2), "00")),
                  std::invalid_argument);
}

TEST_CASE("GHZ3 protocol hits the target exactly") {
  const Protocol p = ghz3_protocol();
  const StateVector init = StateVector::basis(p.shape, "000");
  const StateVector out = run_protocol(p, init);
  CHECK(out.fidelity_to(ghz_target(3)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(out.norm() == doctest::Approx(1.0).epsilon(1e-12));

  // intermediate state after the three-qubit step: (|010> + |101>)/sqrt2
  Protocol upto = p;
  upto.steps.resize(3);
  const StateVector mid = run_protocol(upto, init);
  CHECK(std::abs(mid.amplitude("010") - 1.0 / std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(mid.amplitude("101") - 1.0 / std::sqrt(2.0)) < 1e-12);

  // wrong input state: fidelity to GHZ below 1
  const StateVector wrong = run_protocol(p, StateVector::basis(p.shape, "111"));
  CHECK(wrong.fidelity_to(ghz_target(3)) < 0.999);

  // structural claim: exactly one multi-qubit step, and the timing arithmetic
  CHECK(p.multi_site_step_count() == 1);
  const double lam = 1.0;
  const double t_cczs_path = p.total_evolution_time();       // pi/(sqrt2 lam)
  const double t_two_cz_path = 2.0 * kPi / lam;              // two sequential CZ
  CHECK(t_two_cz_path == doctest::Approx(2.0 * std::sqrt(2.0) * t_cczs_path));
}

TEST_CASE("Dicke D53 protocol reaches the five-qubit target") {
  const double lam = 1.3;
  const Protocol p = dicke53_protocol(lam);
  const StateVector init = StateVector::basis(p.shape, "00");
  const StateVector out = run_protocol(p, init);
  CHECK(out.fidelity_to(d53_target()) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(out.norm() == doctest::Approx(1.0).epsilon(1e-12));

  // step times
  CHECK(p.steps[1].duration == doctest::Approx(kPi / (4 * lam)));
  CHECK(p.steps[4].duration == doctest::Approx(kPi / (2 * std::sqrt(6.0) * lam)));

  // after step 1 the state is |1_0>|D_4^1> up to phase
  Protocol upto = p;
  upto.steps.resize(2);
  const StateVector mid = run_protocol(upto, init);
  CHECK(std::norm(mid.amplitudes()[1 * 5 + 1]) == doctest::Approx(1.0).epsilon(1e-12));

  // output lies in the three-excitation sector: q0 digit + k
  for (Eigen::Index ix = 0; ix < out.amplitudes().size(); ++ix) {
    const auto d = p.shape.digits(ix);
    if (d[0] + d[1] != 3) CHECK(std::abs(out.amplitudes()[ix]) < 1e-12);
  }
}

TEST_CASE("weighted tripod variant spreads amplitudes proportional to couplings") {
  const std::vector<Complex> lams = {0.3, 0.9, 0.5, 0.2};
  const Protocol p = dicke_step1_weighted(lams);
  // initial |2 0000> on the full register
  std::vector<int> digits = {2, 0, 0, 0, 0};
  const StateVector init = StateVector::basis(p.shape, digits);
  const StateVector out = run_protocol(p, init);
  double strength = 0.0;
  for (auto& l : lams) strength += std::norm(l);
  strength = std::sqrt(strength);
  for (int j = 0; j < 4; ++j) {
    std::vector<int> d = {1, 0, 0, 0, 0};
    d[1 + j] = 1;
    const Complex amp = out.amplitudes()[p.shape.index(d)];
    // amplitude = -i conj(lambda_j)/Lambda for the quarter-period transfer
    CHECK(std::abs(amp + kI * std::conj(lams[j]) / strength) < 1e-12);
  }
}

TEST_CASE("W state via the divider gate") {
  const Protocol p = w_div_protocol();
  const StateVector init = StateVector::basis(p.shape, "000");
  const StateVector out = run_protocol(p, init);
  CHECK(out.fidelity_to(w_target(3)) == doctest::Approx(1.0).epsilon(1e-12));

  // varphi = 0 leaves |100| in place
  const Protocol p0 = w_div_protocol(kPi / 4, 0.0);
  const StateVector out0 = run_protocol(p0, init);
  CHECK(std::norm(out0.amplitude("100")) == doctest::Approx(1.0).epsilon(1e-12));

  // theta = 0, varphi = pi/2 is a plain iSWAP01: |100> -> -i |010> (then S)
  const Protocol p1 = w_div_protocol(0.0, kPi / 2);
  const StateVector out1 = run_protocol(p1, init);
  CHECK(std::norm(out1.amplitude("010")) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("W scale-up: single cell and degenerate grid") {
  // single 4-neighbour cell: the center excitation spreads into D_4^1
  const auto plan = w_scaleup_protocol(SquareGrid::single_cell(4));
  Vector v0 = Vector::Zero(plan.protocol.shape.total_dim());
  v0[0] = 1.0;
  const StateVector out = run_protocol(plan.protocol, StateVector(plan.protocol.shape, v0));
  CHECK(out.fidelity_to(plan.target) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(plan.carriers.size() == 4);
  CHECK(std::abs(out.amplitudes()[0]) < 1e-12);  // center empties

  // one neighbour: a plain two-site transfer
  const auto plan1 = w_scaleup_protocol(SquareGrid::single_cell(1));
  Vector w0 = Vector::Zero(2);
  w0[0] = 1.0;
  const StateVector out1 = run_protocol(plan1.protocol, StateVector(plan1.protocol.shape, w0));
  CHECK(std::norm(out1.amplitudes()[1]) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("W scale-up reaches the 16-qubit W state on the cross pattern") {
  const SquareGrid grid = SquareGrid::cross_pattern();
  CHECK(grid.sites.size() == 21);
  for (auto variant : {WScaleupVariant::SimultaneousIswap, WScaleupVariant::SimultaneousCz}) {
    const auto plan = w_scaleup_protocol(grid, variant);
    CHECK(plan.carriers.size() == 16);
    Vector v0 = Vector::Zero(plan.protocol.shape.total_dim());
    v0[grid.center] = 1.0;
    const StateVector out = run_protocol(plan.protocol, StateVector(plan.protocol.shape, v0));
    CHECK(out.fidelity_to(plan.target) >= 1.0 - 1e-9);
    CHECK(out.norm() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("W scale-up full-register cross-check on a small cell") {
  // restricted-representation result matches a full multi-qubit simulation
  // for the iSWAP variant on center + 3 neighbours
  const int n = 3;
  const auto plan = w_scaleup_protocol(SquareGrid::single_cell(n));
  Vector v0 = Vector::Zero(plan.protocol.shape.total_dim());
  v0[0] = 1.0;
  const StateVector restricted = run_protocol(plan.protocol, StateVector(plan.protocol.shape, v0));

  // full register: N+1 qubits, exchange couplings center-neighbour
  const RegisterShape full = RegisterShape::qubits(n + 1);
  Matrix h = Matrix::Zero(full.total_dim(), full.total_dim());
  for (int j = 1; j <= n; ++j) {
    for (Eigen::Index col = 0; col < full.total_dim(); ++col) {
      const auto d = full.digits(col);
      if (d[0] == 1 && d[j] == 0) {
        const Eigen::Index row = col - full.stride(0) + full.stride(j);
        h(row, col) += 1.0;
        h(col, row) += 1.0;
      }
    }
  }
  const double t = kPi / (2.0 * std::sqrt(static_cast<double>(n)));
  const Matrix u = expm_hermitian(h, t);
  Vector psi0 = Vector::Zero(full.total_dim());
  psi0[full.index(std::vector<int>{1, 0, 0, 0})] = 1.0;
  const Vector psi = u * psi0;
  // compare per-site single-excitation amplitudes
  for (int site = 0; site <= n; ++site) {
    std::vector<int> d(n + 1, 0);
    d[site] = 1;
    CHECK(std::abs(psi[full.index(d)] - restricted.amplitudes()[site]) < 1e-12);
  }
}

TEST_CASE("insufficient adjacency is rejected") {
  SquareGrid g;
  g.sites = {{0, 0}};
  g.center = 0;
  CHECK_THROWS_AS(w_scaleup_protocol(g), std::invalid_argument);
  CHECK_THROWS_AS(SquareGrid::single_cell(5), std::invalid_argument);
}
