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

#include "sqg/serialize.hpp"

#include <cmath>

namespace sqg {

double round_sig(double x, int digits) {
  if (x == 0.0 || !std::isfinite(x)) return x;
  const double mag = std::pow(10.0, digits - 1 - static_cast<int>(std::floor(std::log10(std::abs(x)))));
  return std::round(x * mag) / mag;
}

namespace {

nlohmann::json shape_json(const RegisterShape& s) {
  nlohmann::json j;
  j["dims"] = s.dims();
  j["labels"] = s.labels();
  return j;
}

RegisterShape shape_from_json(const nlohmann::json& j) {
  return RegisterShape(j.at("dims").get<std::vector<int>>(),
                       j.value("labels", std::vector<std::string>{}));
}

nlohmann::json entries_json(const Complex* data, Eigen::Index count, int sig) {
  nlohmann::json e = nlohmann::json::array();
  for (Eigen::Index k = 0; k < count; ++k) {
    e.push_back({round_sig(data[k].real(), sig), round_sig(data[k].imag(), sig)});
  }
  return e;
}

}  // namespace

nlohmann::json to_json(const Operator& op, int sig_digits) {
  nlohmann::json j = shape_json(op.shape());
  j["kind"] = "operator";
  j["rows"] = op.dim();
  j["cols"] = op.dim();
  // row-major entry order
  Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> rm = op.matrix();
  j["entries"] = entries_json(rm.data(), rm.size(), sig_digits);
  return j;
}

nlohmann::json to_json(const StateVector& psi, int sig_digits) {
  nlohmann::json j = shape_json(psi.shape());
  j["kind"] = "state";
  j["rows"] = psi.amplitudes().size();
  j["cols"] = 1;
  j["entries"] = entries_json(psi.amplitudes().data(), psi.amplitudes().size(), sig_digits);
  return j;
}

Operator operator_from_json(const nlohmann::json& j) {
  RegisterShape shape = shape_from_json(j);
  const Eigen::Index n = shape.total_dim();
  const auto& e = j.at("entries");
  if (static_cast<Eigen::Index>(e.size()) != n * n) {
    throw std::invalid_argument("operator_from_json: entry count mismatch");
  }
  Matrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) {
      const auto& pair = e[r * n + c];
      m(r, c) = Complex(pair.at(0).get<double>(), pair.at(1).get<double>());
    }
  return Operator(std::move(shape), std::move(m));
}

StateVector state_from_json(const nlohmann::json& j) {
  RegisterShape shape = shape_from_json(j);
  const Eigen::Index n = shape.total_dim();
  const auto& e = j.at("entries");
  if (static_cast<Eigen::Index>(e.size()) != n) {
    throw std::invalid_argument("state_from_json: entry count mismatch");
  }
  Vector v(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    v[k] = Complex(e[k].at(0).get<double>(), e[k].at(1).get<double>());
  }
  return StateVector(std::move(shape), std::move(v));
}

}  // namespace sqg
