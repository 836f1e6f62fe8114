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

#include "sqg/effective.hpp"

#include <cmath>

namespace sqg {

namespace {

void add_pair(Matrix& h, Eigen::Index a, Eigen::Index b, Complex amp) {
  h(a, b) += amp;
  h(b, a) += std::conj(amp);
}

Vector two_state_combo(const RegisterShape& s, const std::string& k1, Complex a1,
                       const std::string& k2, Complex a2) {
  Vector v = Vector::Zero(s.total_dim());
  v[s.index_of_label(k1)] = a1;
  v[s.index_of_label(k2)] = a2;
  v.normalize();
  return v;
}

}  // namespace

Vector CzPairModel::bright_state() const {
  // couples to |200> with amplitude Omega; orthogonal to the dark state
  return two_state_combo(shape(), "101", lambda2, "110", lambda1);
}

Vector CzPairModel::dark_state() const {
  return two_state_combo(shape(), "101", -std::conj(lambda1), "110", std::conj(lambda2));
}

Vector CzPairModel::bright_state_v() const {
  return two_state_combo(shape(), "210", std::conj(lambda2), "201", std::conj(lambda1));
}

Vector CzPairModel::dark_state_v() const {
  return two_state_combo(shape(), "210", lambda1, "201", -lambda2);
}

Operator build_hamiltonian(const CzPairModel& m) {
  const RegisterShape s = m.shape();
  Matrix h = Matrix::Zero(27, 27);
  add_pair(h, s.index_of_label("110"), s.index_of_label("200"), m.lambda1);
  add_pair(h, s.index_of_label("111"), s.index_of_label("201"), m.lambda1);
  add_pair(h, s.index_of_label("101"), s.index_of_label("200"), m.lambda2);
  add_pair(h, s.index_of_label("111"), s.index_of_label("210"), m.lambda2);
  h(s.index_of_label("200"), s.index_of_label("200")) += m.delta;
  h(s.index_of_label("111"), s.index_of_label("111")) -= m.delta;
  return Operator(s, std::move(h));
}

bool DickeModel::uniform() const {
  if (couplings.size() <= 1) return true;
  for (const Complex& c : couplings) {
    if (std::abs(c - couplings[0]) > 1e-15 * (1.0 + std::abs(couplings[0]))) return false;
  }
  return true;
}

RegisterShape DickeModel::shape() const {
  if (uniform()) {
    // |x0> x |D_N^k>: central qutrit plus the symmetric-sector index k.
    return RegisterShape({3, neighbors + 1}, {"q0", "D"});
  }
  std::vector<int> dims(neighbors + 1, 2);
  dims[0] = 3;
  return RegisterShape(dims);
}

double dicke_ladder_factor(int n, int k) {
  if (k < 0 || k >= n) throw std::out_of_range("dicke_ladder_factor: k outside [0, N-1]");
  return std::sqrt(static_cast<double>(n - k) * (k + 1));
}

Operator build_hamiltonian(const DickeModel& m) {
  const RegisterShape s = m.shape();
  const int n = m.neighbors;
  if (m.couplings.empty()) throw std::invalid_argument("DickeModel: no couplings");
  if (!m.uniform() && static_cast<int>(m.couplings.size()) != n) {
    throw std::invalid_argument("DickeModel: need one coupling or one per neighbour");
  }
  Matrix h = Matrix::Zero(s.total_dim(), s.total_dim());
  if (m.uniform()) {
    const Complex lam = m.coupling(0);
    // <2,k|H|1,k+1> = lam * G_N^k
    for (int k = 0; k < n; ++k) {
      add_pair(h, 2 * (n + 1) + k, 1 * (n + 1) + (k + 1), lam * dicke_ladder_factor(n, k));
    }
  } else {
    // full register: sigma0^{21} sum_j lam_j sigma_j^{01} + h.c.
    std::vector<int> dig(s.num_sites());
    for (Eigen::Index col = 0; col < s.total_dim(); ++col) {
      s.digits_into(col, dig);
      if (dig[0] != 1) continue;
      for (int j = 1; j <= n; ++j) {
        if (dig[j] != 1) continue;
        // |2_0 0_j><1_0 1_j| with amplitude lam_j
        const Eigen::Index row = col + s.stride(0) - s.stride(j);
        add_pair(h, row, col, m.coupling(j - 1));
      }
    }
  }
  return Operator(s, std::move(h));
}

Operator build_hamiltonian(const IswapPairModel& m) {
  const RegisterShape s = m.shape();
  Matrix h = Matrix::Zero(8, 8);
  std::vector<int> dig(3);
  for (Eigen::Index col = 0; col < 8; ++col) {
    s.digits_into(col, dig);
    if (dig[0] == 0 && dig[1] == 1) add_pair(h, col + 4 - 2, col, m.g1);
    if (dig[0] == 0 && dig[2] == 1) add_pair(h, col + 4 - 1, col, m.g2);
  }
  return Operator(s, std::move(h));
}

Operator build_hamiltonian(const DeltaSystemModel& m) {
  Matrix h = Matrix::Zero(3, 3);
  add_pair(h, 0, 1, m.alpha12);
  add_pair(h, 1, 2, m.alpha23);
  add_pair(h, 0, 2, m.alpha13 * std::polar(1.0, m.phase));
  h(0, 0) += m.delta1;
  h(2, 2) += m.delta3;
  return Operator(m.shape(), std::move(h));
}

Operator propagate(const CzPairModel& m, double t) { return expm(build_hamiltonian(m), t); }
Operator propagate(const DickeModel& m, double t) { return expm(build_hamiltonian(m), t); }
Operator propagate(const IswapPairModel& m, double t) { return expm(build_hamiltonian(m), t); }
Operator propagate(const DeltaSystemModel& m, double t) { return expm(build_hamiltonian(m), t); }

Matrix dicke_step(int n, int k, double lambda, double t) {
  const double x = t * lambda * dicke_ladder_factor(n, k);
  Matrix u(2, 2);
  u(0, 0) = u(1, 1) = std::cos(x);
  u(0, 1) = u(1, 0) = -kI * std::sin(x);
  return u;
}

Matrix delta_system_propagator(const DeltaSystemModel& m, double t) {
  const bool closed_form_valid = m.delta1 == 0.0 && m.delta3 == 0.0 && m.phase == 0.0 &&
                                 m.alpha12 == m.alpha23;
  const double om = m.omega();
  const double cycles = om * t / kPi;
  if (closed_form_valid && std::abs(cycles - std::round(cycles)) < 1e-12 &&
      std::llround(cycles) % 2 == 1) {
    // At Omega t = pi (mod 2 pi) the bright state and |2> both pick up
    // -e^{-i a13 t / 2} while the dark state evolves with phase e^{+i a13 t}.
    const Complex a = -std::polar(1.0, -0.5 * m.alpha13 * t);
    const Complex d = std::polar(1.0, m.alpha13 * t);
    Matrix u = Matrix::Zero(3, 3);
    u(0, 0) = u(2, 2) = 0.5 * (a + d);
    u(0, 2) = u(2, 0) = 0.5 * (a - d);
    u(1, 1) = a;
    return u;
  }
  return propagate(m, t).matrix();
}

}  // namespace sqg
