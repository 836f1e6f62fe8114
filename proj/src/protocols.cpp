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

#include "sqg/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sqg {

int Protocol::multi_site_step_count() const {
  int c = 0;
  for (const auto& s : steps) c += (s.sites_touched > 1) ? 1 : 0;
  return c;
}

double Protocol::total_evolution_time() const {
  double t = 0.0;
  for (const auto& s : steps) t += s.duration;
  return t;
}

StateVector run_protocol(const Protocol& p, const StateVector& initial) {
  if (initial.shape() != p.shape) throw std::invalid_argument("run_protocol: shape mismatch");
  StateVector psi = initial;
  for (const auto& s : p.steps) psi = s.op.apply(psi);
  return psi;
}

RegisterShape TargetState::shape() const {
  if (kind == Kind::D53Superposition) return RegisterShape({3, 5}, {"q0", "D"});
  return RegisterShape::qubits(n);
}

Vector TargetState::amplitudes() const {
  switch (kind) {
    case Kind::Ghz:
      return ghz_target(n);
    case Kind::W:
      return w_target(n);
    case Kind::Dicke:
      return dicke_target(n, k);
    case Kind::D53Superposition:
      return d53_target();
  }
  throw std::logic_error("TargetState: bad kind");
}

Vector ghz_target(int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Vector v = Vector::Zero(dim);
  v[0] = v[dim - 1] = 1.0 / std::sqrt(2.0);
  return v;
}

Vector dicke_target(int n, int k) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Vector v = Vector::Zero(dim);
  int count = 0;
  for (Eigen::Index s = 0; s < dim; ++s) {
    int pop = 0;
    for (int b = 0; b < n; ++b) pop += (s >> b) & 1;
    if (pop == k) {
      v[s] = 1.0;
      ++count;
    }
  }
  if (count == 0) throw std::invalid_argument("dicke_target: k out of range");
  v /= std::sqrt(static_cast<double>(count));
  return v;
}

Vector w_target(int n) { return dicke_target(n, 1); }

Vector d53_target() {
  Vector v = Vector::Zero(15);
  v[1 * 5 + 2] = std::sqrt(3.0 / 5.0);  // |1_0>|D_4^2>
  v[0 * 5 + 3] = std::sqrt(2.0 / 5.0);  // |0_0>|D_4^3>
  return v;
}

namespace {

ProtocolStep single_qubit_step(const std::string& name, const Matrix& u2, int site,
                               const RegisterShape& shape) {
  const int sites[1] = {site};
  return {name, Operator(shape, embed_matrix(u2, RegisterShape::qubits(1), shape, sites)), 0.0, 1};
}

}  // namespace

Protocol ghz3_protocol() {
  Protocol p;
  p.name = "ghz3";
  p.shape = RegisterShape::qubits(3);
  p.steps.push_back(single_qubit_step("H(q0)", hadamard(), 0, p.shape));
  p.steps.push_back(single_qubit_step("X(q1)", pauli_x(), 1, p.shape));
  const CzPairModel model{1.0, -1.0, 0.0};  // CCZS(pi/2, 0, 0)
  p.steps.push_back({"CCZS(pi/2,0,0)", cczs({kPi / 2, 0.0, 0.0}), model.gate_time(), 3});
  p.steps.push_back(single_qubit_step("X(q1)", pauli_x(), 1, p.shape));
  return p;
}

Protocol dicke53_protocol(double lambda) {
  if (lambda <= 0.0) throw std::invalid_argument("dicke53_protocol: lambda must be positive");
  Protocol p;
  p.name = "dicke53";
  p.shape = RegisterShape({3, 5}, {"q0", "D"});
  const DickeModel model{4, {lambda}};
  const Matrix id5 = Matrix::Identity(5, 5);

  auto qutrit_step = [&](const std::string& name, const Matrix& u3) {
    p.steps.push_back({name, Operator(p.shape, kron(u3, id5)), 0.0, 1});
  };

  // raise |0> -> |2>
  Matrix raise02 = Matrix::Zero(3, 3);
  raise02(2, 0) = 1.0;
  raise02(0, 2) = 1.0;
  raise02(1, 1) = 1.0;
  qutrit_step("prepare |2_0>", raise02);

  p.steps.push_back({"evolve pi/(4 lambda)", propagate(model, kPi / (4.0 * lambda)),
                     kPi / (4.0 * lambda), 5});

  // |1> -> sqrt(2/5)|0> + i sqrt(3/5)|1>, then |1> -> |2>; the i compensates
  // the -i collected by the resonant transfer that follows.
  const double a = std::sqrt(2.0 / 5.0), b = std::sqrt(3.0 / 5.0);
  Matrix rot = Matrix::Zero(3, 3);
  rot(0, 1) = a;
  rot(1, 1) = kI * b;
  rot(0, 0) = -kI * b;
  rot(1, 0) = -a;
  rot(2, 2) = 1.0;
  Matrix flip12 = Matrix::Zero(3, 3);
  flip12(0, 0) = 1.0;
  flip12(2, 1) = 1.0;
  flip12(1, 2) = 1.0;
  qutrit_step("rotate q0 superposition", rot);
  qutrit_step("flip |1_0> -> |2_0>", flip12);

  const double t2 = kPi / (2.0 * std::sqrt(6.0) * lambda);
  p.steps.push_back({"evolve pi/(2 sqrt6 lambda)", propagate(model, t2), t2, 5});

  // X on all four neighbours: |D_4^k> -> |D_4^{4-k}>
  Matrix xall = Matrix::Zero(5, 5);
  for (int k = 0; k < 5; ++k) xall(4 - k, k) = 1.0;
  p.steps.push_back({"X on neighbours", Operator(p.shape, kron(Matrix::Identity(3, 3), xall)),
                     0.0, 4});
  return p;
}

Protocol dicke_step1_weighted(const std::vector<Complex>& lambdas) {
  const int n = static_cast<int>(lambdas.size());
  if (n < 1) throw std::invalid_argument("dicke_step1_weighted: no couplings");
  DickeModel model{n, lambdas};
  Protocol p;
  p.name = "dicke-step1-weighted";
  p.shape = model.shape();
  double strength = 0.0;
  for (const Complex& l : lambdas) strength += std::norm(l);
  strength = std::sqrt(strength);
  const double t = kPi / (2.0 * strength);
  p.steps.push_back({"evolve to full transfer", propagate(model, t), t, n + 1});
  return p;
}

Protocol w_div_protocol(double theta, double varphi) {
  Protocol p;
  p.name = "w-div";
  p.shape = RegisterShape::qubits(3);
  p.steps.push_back(single_qubit_step("X(q0)", pauli_x(), 0, p.shape));
  const IswapPairModel model{std::cos(theta), std::sin(theta)};
  const double t = varphi / model.omega();
  p.steps.push_back({"DIV", div_gate({theta, varphi}), t, 3});
  p.steps.push_back(single_qubit_step("S(q1)", s_gate(), 1, p.shape));
  p.steps.push_back(single_qubit_step("S(q2)", s_gate(), 2, p.shape));
  return p;
}

SquareGrid SquareGrid::cross_pattern() {
  SquareGrid g;
  auto add = [&](int x, int y) { g.sites.push_back({x, y}); };
  add(0, 0);
  // inner neighbours, outward-swap partners, and the partners' outer neighbours
  const int dirs[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  for (auto& d : dirs) add(d[0], d[1]);
  for (auto& d : dirs) add(2 * d[0], 2 * d[1]);
  for (auto& d : dirs) {
    const int cx = 2 * d[0], cy = 2 * d[1];
    for (auto& e : dirs) {
      const int x = cx + e[0], y = cy + e[1];
      bool exists = false;
      for (const auto& s : g.sites) exists |= (s.x == x && s.y == y);
      if (!exists) g.sites.push_back({x, y});
    }
  }
  g.center = 0;
  return g;
}

SquareGrid SquareGrid::single_cell(int neighbors) {
  if (neighbors < 1 || neighbors > 4) {
    throw std::invalid_argument("single_cell: need 1..4 neighbours");
  }
  SquareGrid g;
  g.sites.push_back({0, 0});
  const int dirs[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  for (int k = 0; k < neighbors; ++k) g.sites.push_back({dirs[k][0], dirs[k][1]});
  g.center = 0;
  return g;
}

std::vector<int> SquareGrid::neighbors_of(int site) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(sites.size()); ++i) {
    const int dx = sites[i].x - sites[site].x, dy = sites[i].y - sites[site].y;
    if (std::abs(dx) + std::abs(dy) == 1) out.push_back(i);
  }
  return out;
}

int SquareGrid::site_at(int x, int y) const {
  for (int i = 0; i < static_cast<int>(sites.size()); ++i) {
    if (sites[i].x == x && sites[i].y == y) return i;
  }
  return -1;
}

namespace {

// Cell evolution in the restricted representation: excitation hops between
// the cell center and its neighbours with equal couplings.
Matrix cell_transfer(int nsites, int center, const std::vector<int>& nbrs, double coupling,
                     double* t_out) {
  Matrix h = Matrix::Zero(nsites, nsites);
  for (int nb : nbrs) {
    h(nb, center) = coupling;
    h(center, nb) = coupling;
  }
  const double rate = coupling * std::sqrt(static_cast<double>(nbrs.size()));
  const double t = kPi / (2.0 * rate);
  if (t_out) *t_out = t;
  return expm_hermitian(h, t);
}

}  // namespace

WScaleupPlan w_scaleup_protocol(const SquareGrid& grid, WScaleupVariant variant, double coupling) {
  if (coupling <= 0.0) throw std::invalid_argument("w_scaleup_protocol: coupling must be positive");
  const int n = static_cast<int>(grid.sites.size());
  WScaleupPlan plan;
  plan.protocol.name = variant == WScaleupVariant::SimultaneousCz ? "w-scaleup-cz" : "w-scaleup-iswap";
  plan.protocol.shape = RegisterShape({n}, {"exc"});

  const auto inner = grid.neighbors_of(grid.center);
  if (inner.empty()) throw std::invalid_argument("w_scaleup_protocol: adjacency insufficient");

  // Round 1: spread the center excitation over the inner neighbours. In the
  // restricted representation the CZ and iSWAP variants differ only in which
  // ladder carries the excitation, not in the matrix.
  double t1 = 0.0;
  Matrix u1 = cell_transfer(n, grid.center, inner, coupling, &t1);
  plan.protocol.steps.push_back({"cell transfer (center)", Operator(plan.protocol.shape, u1), t1,
                                 static_cast<int>(inner.size()) + 1});

  // Outward swaps: each inner neighbour exchanges with the site twice as far
  // from the center along the same axis, when present.
  std::vector<std::pair<int, int>> swaps;
  for (int nb : inner) {
    const int px = 2 * (grid.sites[nb].x - grid.sites[grid.center].x) + grid.sites[grid.center].x;
    const int py = 2 * (grid.sites[nb].y - grid.sites[grid.center].y) + grid.sites[grid.center].y;
    const int partner = grid.site_at(px, py);
    if (partner >= 0) swaps.emplace_back(nb, partner);
  }

  std::vector<int> cell_centers;
  if (swaps.empty()) {
    // degenerate single-cell grid: protocol reduces to the first transfer
    plan.carriers = inner;
  } else {
    if (swaps.size() != inner.size()) {
      throw std::invalid_argument("w_scaleup_protocol: adjacency insufficient (missing partner)");
    }
    Matrix sw = Matrix::Identity(n, n);
    for (auto& [a, b] : swaps) {
      sw(a, a) = sw(b, b) = 0.0;
      sw(a, b) = sw(b, a) = 1.0;
    }
    plan.protocol.steps.push_back({"outward swaps", Operator(plan.protocol.shape, sw), 0.0,
                                   2 * static_cast<int>(swaps.size())});
    for (auto& [a, b] : swaps) cell_centers.push_back(b);

    // Round 2: simultaneous transfers in all outer cells.
    Matrix h = Matrix::Zero(n, n);
    int cell_neighbors = -1;
    for (int c : cell_centers) {
      auto nbrs = grid.neighbors_of(c);
      if (nbrs.empty()) throw std::invalid_argument("w_scaleup_protocol: adjacency insufficient");
      if (cell_neighbors < 0) cell_neighbors = static_cast<int>(nbrs.size());
      if (static_cast<int>(nbrs.size()) != cell_neighbors) {
        throw std::invalid_argument("w_scaleup_protocol: unequal cells");
      }
      for (int nb : nbrs) {
        h(nb, c) = coupling;
        h(c, nb) = coupling;
        plan.carriers.push_back(nb);
      }
    }
    const double rate = coupling * std::sqrt(static_cast<double>(cell_neighbors));
    const double t2 = kPi / (2.0 * rate);
    plan.protocol.steps.push_back({"cell transfers (outer)",
                                   Operator(plan.protocol.shape, expm_hermitian(h, t2)), t2,
                                   static_cast<int>(cell_centers.size()) * (cell_neighbors + 1)});
  }

  std::sort(plan.carriers.begin(), plan.carriers.end());
  plan.carriers.erase(std::unique(plan.carriers.begin(), plan.carriers.end()),
                      plan.carriers.end());
  plan.target = Vector::Zero(n);
  for (int c : plan.carriers) plan.target[c] = 1.0;
  plan.target.normalize();
  return plan;
}

}  // namespace sqg
