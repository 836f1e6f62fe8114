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

#include "sqg/pulse/fidelity.hpp"

#include <cmath>
#include <random>

namespace sqg {

double average_gate_fidelity_formula(const Matrix& m, const Matrix& target) {
  const double n = static_cast<double>(m.rows());
  const Complex tr = (m * target.adjoint()).trace();
  const double gram = (m.adjoint() * m).trace().real();
  return (std::norm(tr) + gram) / (n * (n + 1.0));
}

double leakage_of(const Matrix& m) {
  const double n = static_cast<double>(m.rows());
  return 1.0 - (m.adjoint() * m).trace().real() / n;
}

namespace {

int qubit_count(Eigen::Index n) {
  int nq = 0;
  while ((Eigen::Index{1} << nq) < n) ++nq;
  if ((Eigen::Index{1} << nq) != n) {
    throw std::invalid_argument("virtual-Z optimization: dimension is not a power of two");
  }
  return nq;
}

}  // namespace

VirtualZResult optimize_virtual_z(const Matrix& m, const Matrix& target, int restarts,
                                  unsigned seed) {
  const Eigen::Index n = m.rows();
  const int nq = qubit_count(n);
  // tr(Za M Zb U^dag) = sum_{k,l} e^{i za.bits(k)} W(k,l) e^{i zb.bits(l)},
  // W = M .* conj(U)
  const Matrix w = m.cwiseProduct(target.conjugate());
  Eigen::MatrixXi bits(n, nq);
  for (Eigen::Index k = 0; k < n; ++k)
    for (int j = 0; j < nq; ++j) bits(k, j) = static_cast<int>((k >> (nq - 1 - j)) & 1);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-kPi, kPi);

  VirtualZResult best;
  std::vector<double> za(nq), zb(nq);
  Vector pa(n), pb(n);
  auto phases = [&](const std::vector<double>& z, Vector& p) {
    for (Eigen::Index k = 0; k < n; ++k) {
      double s = 0.0;
      for (int j = 0; j < nq; ++j) s += z[j] * bits(k, j);
      p[k] = std::polar(1.0, s);
    }
  };

  for (int trial = 0; trial < std::max(1, restarts); ++trial) {
    for (int j = 0; j < nq; ++j) {
      za[j] = trial == 0 ? 0.0 : u(rng);
      zb[j] = trial == 0 ? 0.0 : u(rng);
    }
    for (int iter = 0; iter < 400; ++iter) {
      double moved = 0.0;
      // rows (post) then columns (pre); each single-angle update is exact
      for (int side = 0; side < 2; ++side) {
        for (int j = 0; j < nq; ++j) {
          phases(za, pa);
          phases(zb, pb);
          Complex with = 0.0, without = 0.0;
          for (Eigen::Index k = 0; k < n; ++k) {
            for (Eigen::Index l = 0; l < n; ++l) {
              const Complex term = pa[k] * w(k, l) * pb[l];
              const bool sel = side == 0 ? bits(k, j) == 1 : bits(l, j) == 1;
              (sel ? with : without) += term;
            }
          }
          double& z = side == 0 ? za[j] : zb[j];
          const Complex stripped = with * std::polar(1.0, -z);
          if (std::abs(stripped) > 1e-300) {
            const double nz = std::arg(without * std::conj(stripped));
            moved = std::max(moved, std::abs(std::polar(1.0, nz) - std::polar(1.0, z)));
            z = nz;
          }
        }
      }
      if (moved < 1e-15) break;
    }
    phases(za, pa);
    phases(zb, pb);
    const Complex tr = pa.transpose() * w * pb;
    if (std::norm(tr) > best.trace_sq) {
      best.trace_sq = std::norm(tr);
      best.post = za;
      best.pre = zb;
    }
  }
  return best;
}

FidelityReport fidelity_report(const Matrix& m_block, const Matrix& target, double gate_time) {
  FidelityReport rep;
  rep.gate_time = gate_time;
  rep.fidelity_raw = average_gate_fidelity_formula(m_block, target);
  rep.leakage = leakage_of(m_block);
  const VirtualZResult vz = optimize_virtual_z(m_block, target);
  const double n = static_cast<double>(m_block.rows());
  const double gram = (m_block.adjoint() * m_block).trace().real();
  rep.fidelity = (vz.trace_sq + gram) / (n * (n + 1.0));
  rep.z_pre = vz.pre;
  rep.z_post = vz.post;
  return rep;
}

FidelityReport average_gate_fidelity(const Operator& m_full, const Matrix& target,
                                     const ComputationalProjector& p, double gate_time) {
  return fidelity_report(p.project(m_full.matrix()), target, gate_time);
}

}  // namespace sqg
