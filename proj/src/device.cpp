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

#include "sqg/pulse/device.hpp"

#include <cmath>

namespace sqg {

void DriftHamiltonian::diagonal_at(double t, RealVector& out) const {
  out = static_diag;
  for (const auto& ch : channels) {
    const double v = ch.value(t);
    if (v != 0.0) out += v * ch.weights;
  }
}

void DriftHamiltonian::assemble(double t, Matrix& out) const {
  out = offdiag;
  RealVector d(static_diag.size());
  diagonal_at(t, d);
  out.diagonal() = d.cast<Complex>();
}

Matrix DriftHamiltonian::idle_hamiltonian() const {
  Matrix h = offdiag;
  h.diagonal() = static_diag.cast<Complex>();
  return h;
}

namespace {

// diag weights and static energies for a register of transmons
RealVector number_weights(const RegisterShape& s, int site) {
  RealVector w(s.total_dim());
  std::vector<int> dig(s.num_sites());
  for (Eigen::Index k = 0; k < s.total_dim(); ++k) {
    s.digits_into(k, dig);
    w[k] = dig[site];
  }
  return w;
}

RealVector transmon_static_diag(const RegisterShape& s, const std::vector<const TransmonSite*>& sites) {
  RealVector d = RealVector::Zero(s.total_dim());
  std::vector<int> dig(s.num_sites());
  for (Eigen::Index k = 0; k < s.total_dim(); ++k) {
    s.digits_into(k, dig);
    double e = 0.0;
    for (size_t i = 0; i < sites.size(); ++i) {
      const int n = dig[i];
      e += sites[i]->freq * n + 0.5 * sites[i]->anharm * n * (n - 1);
    }
    d[k] = e;
  }
  return d;
}

Matrix lowering(int levels) {
  Matrix a = Matrix::Zero(levels, levels);
  for (int n = 1; n < levels; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

constexpr double kGhzToRad = kTwoPi;  // GHz -> rad/ns

}  // namespace

RegisterShape TunableQubitDevice::shape() const {
  std::vector<int> dims = {sites[0].levels, sites[1].levels, sites[2].levels};
  return RegisterShape(dims, {"q0", "q1", "q2"});
}

TunableQubitDevice TunableQubitDevice::defaults() {
  TunableQubitDevice d;
  d.sites[0] = {"q0", kGhzToRad * 5.202, -kGhzToRad * 0.2752, 3, kGhzToRad * 5.202};
  d.sites[1] = {"q1", kGhzToRad * 5.708, -kGhzToRad * 0.2611, 3, kGhzToRad * 5.708};
  d.sites[2] = {"q2", kGhzToRad * 4.350, -kGhzToRad * 0.2773, 3, kGhzToRad * 4.927};
  d.g1 = d.g2 = kGhzToRad * 0.0038;
  return d;
}

TunableQubitDevice TunableQubitDevice::defaults_div() {
  TunableQubitDevice d = defaults();
  d.sites[2].max_freq = d.sites[0].freq;  // q2 must reach w0 for the iSWAP resonance
  return d;
}

DriftHamiltonian make_hamiltonian(const TunableQubitDevice& dev, const TrajectoryDrive& drive) {
  DriftHamiltonian h;
  h.shape = dev.shape();
  const Eigen::Index n = h.shape.total_dim();

  const Matrix a = lowering(3);
  const RegisterShape one({3});
  auto embed_pair = [&](int i, int j, double g) {
    const int si[1] = {i}, sj[1] = {j};
    const Matrix ai = embed_matrix(a, one, h.shape, si);
    const Matrix aj = embed_matrix(a, one, h.shape, sj);
    return Matrix(g * (ai.adjoint() * aj + aj.adjoint() * ai));
  };
  h.offdiag = embed_pair(0, 1, dev.g1) + embed_pair(0, 2, dev.g2);
  h.static_diag =
      transmon_static_diag(h.shape, {&dev.sites[0], &dev.sites[1], &dev.sites[2]});

  for (const auto& [site, target] : drive.targets) {
    if (site < 0 || site > 2) throw std::invalid_argument("TrajectoryDrive: bad site");
    if (dev.sites[site].max_freq && target > *dev.sites[site].max_freq + 1e-12) {
      throw std::invalid_argument("TrajectoryDrive: target above the site's maximum frequency");
    }
    const double swing = target - dev.sites[site].freq;
    RectGaussPulse pulse{dev.pulse_pad, drive.t_gate, dev.pulse_sigma};
    h.channels.push_back({swing * number_weights(h.shape, site),
                          [pulse](double t) { return pulse.value(t); }});
  }
  return h;
}

RegisterShape TunableCouplerDevice::shape() const {
  std::vector<int> dims = {qubits[0].levels, qubits[1].levels, qubits[2].levels,
                           couplers[0].levels, couplers[1].levels};
  return RegisterShape(dims, {"q0", "q1", "q2", "c1", "c2"});
}

TunableCouplerDevice TunableCouplerDevice::defaults() {
  TunableCouplerDevice d;
  d.qubits[0] = {"q0", kGhzToRad * 4.8, -kGhzToRad * 0.17, 3, std::nullopt};
  d.qubits[1] = {"q1", kGhzToRad * 4.225, -kGhzToRad * 0.18, 3, std::nullopt};
  d.qubits[2] = {"q2", kGhzToRad * 4.35, -kGhzToRad * 0.18, 3, std::nullopt};
  d.couplers[0] = {"c1", kGhzToRad * 7.8, -kGhzToRad * 0.12, 3, std::nullopt};
  d.couplers[1] = {"c2", kGhzToRad * 8.0, -kGhzToRad * 0.12, 3, std::nullopt};
  d.g = kGhzToRad * 0.07;
  return d;
}

DriftHamiltonian make_hamiltonian(const TunableCouplerDevice& dev,
                                  const std::array<CouplerDriveSpec, 2>& drives, double t_gate) {
  DriftHamiltonian h;
  h.shape = dev.shape();

  // capacitive couplings (a + a^dag)(b + b^dag) between q0,qj and coupler j
  const Matrix a = lowering(3);
  const Matrix x1 = a + a.adjoint().eval();
  const RegisterShape one({3});
  auto x_op = [&](int site) {
    const int s[1] = {site};
    return embed_matrix(x1, one, h.shape, s);
  };
  const Matrix x0 = x_op(0), xq1 = x_op(1), xq2 = x_op(2), xc1 = x_op(3), xc2 = x_op(4);
  h.offdiag = dev.g * (x0 * xc1 + xq1 * xc1 + x0 * xc2 + xq2 * xc2);
  h.offdiag.diagonal().setZero();  // (a+a^dag)(b+b^dag) has no diagonal part here

  // static energies: qubits at fixed freq, couplers at their dc-bias freq
  std::array<TransmonSite, 2> parked = dev.couplers;
  for (int j = 0; j < 2; ++j) {
    parked[j].freq = coupler_frequency(dev.couplers[j].freq, drives[j].dc_bias);
  }
  h.static_diag = transmon_static_diag(
      h.shape, {&dev.qubits[0], &dev.qubits[1], &dev.qubits[2], &parked[0], &parked[1]});

  const double plateau = t_gate - 2.0 * dev.rise;
  if (plateau < 0.0) throw std::invalid_argument("make_hamiltonian: t_gate below 2*rise");
  for (int j = 0; j < 2; ++j) {
    if (!drives[j].on) continue;
    FluxDrive fd;
    fd.dc_bias = drives[j].dc_bias;
    fd.envelope = {0.0, plateau, dev.rise, drives[j].amp};
    fd.mod_freq = drives[j].mod_freq;
    fd.phase = drives[j].phase;
    const double wc0 = dev.couplers[j].freq;
    const double parked_freq = parked[j].freq;
    h.channels.push_back({number_weights(h.shape, 3 + j), [fd, wc0, parked_freq](double t) {
                            return coupler_frequency(wc0, fd.flux(t)) - parked_freq;
                          }});
  }
  return h;
}

namespace {

nlohmann::json site_json(const TransmonSite& s) {
  nlohmann::json j;
  j["label"] = s.label;
  j["freq_ghz"] = s.freq / kGhzToRad;
  j["anharm_ghz"] = s.anharm / kGhzToRad;
  j["levels"] = s.levels;
  if (s.max_freq) j["max_freq_ghz"] = *s.max_freq / kGhzToRad;
  return j;
}

TransmonSite site_from_json(const nlohmann::json& j) {
  TransmonSite s;
  s.label = j.value("label", "");
  s.freq = j.at("freq_ghz").get<double>() * kGhzToRad;
  s.anharm = j.at("anharm_ghz").get<double>() * kGhzToRad;
  s.levels = j.value("levels", 3);
  if (j.contains("max_freq_ghz")) s.max_freq = j["max_freq_ghz"].get<double>() * kGhzToRad;
  return s;
}

}  // namespace

nlohmann::json to_json(const TunableQubitDevice& dev) {
  nlohmann::json j;
  j["scheme"] = "tunable-qubits";
  j["qubits"] = {site_json(dev.sites[0]), site_json(dev.sites[1]), site_json(dev.sites[2])};
  j["coupling_g1_ghz"] = dev.g1 / kGhzToRad;
  j["coupling_g2_ghz"] = dev.g2 / kGhzToRad;
  j["pulse_sigma_ns"] = dev.pulse_sigma;
  j["pulse_pad_ns"] = dev.pulse_pad;
  return j;
}

TunableQubitDevice tunable_qubit_device_from_json(const nlohmann::json& j) {
  TunableQubitDevice d;
  const auto& q = j.at("qubits");
  if (q.size() != 3) throw std::invalid_argument("tunable-qubits config: need 3 qubits");
  for (int i = 0; i < 3; ++i) d.sites[i] = site_from_json(q[i]);
  d.g1 = j.at("coupling_g1_ghz").get<double>() * kGhzToRad;
  d.g2 = j.at("coupling_g2_ghz").get<double>() * kGhzToRad;
  d.pulse_sigma = j.value("pulse_sigma_ns", 1.0);
  d.pulse_pad = j.value("pulse_pad_ns", 5.0);
  return d;
}

nlohmann::json to_json(const TunableCouplerDevice& dev) {
  nlohmann::json j;
  j["scheme"] = "tunable-coupler";
  j["qubits"] = {site_json(dev.qubits[0]), site_json(dev.qubits[1]), site_json(dev.qubits[2])};
  j["couplers"] = {site_json(dev.couplers[0]), site_json(dev.couplers[1])};
  j["coupling_ghz"] = dev.g / kGhzToRad;
  j["rise_fall_ns"] = dev.rise;
  return j;
}

TunableCouplerDevice tunable_coupler_device_from_json(const nlohmann::json& j) {
  TunableCouplerDevice d;
  const auto& q = j.at("qubits");
  const auto& c = j.at("couplers");
  if (q.size() != 3 || c.size() != 2) {
    throw std::invalid_argument("tunable-coupler config: need 3 qubits and 2 couplers");
  }
  for (int i = 0; i < 3; ++i) d.qubits[i] = site_from_json(q[i]);
  for (int i = 0; i < 2; ++i) d.couplers[i] = site_from_json(c[i]);
  d.g = j.at("coupling_ghz").get<double>() * kGhzToRad;
  d.rise = j.value("rise_fall_ns", 25.0);
  return d;
}

}  // namespace sqg
