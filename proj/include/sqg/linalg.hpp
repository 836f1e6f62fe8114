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

#pragma once

#include <Eigen/Dense>
#include <cmath>

#include "sqg/types.hpp"

namespace sqg {

/// Kronecker product, first factor slowest.
template <typename DerivedA, typename DerivedB>
Matrix kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b.derived();
  return out;
}

template <typename DerivedA, typename DerivedB, typename... Rest>
Matrix kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b,
            const Rest&... rest) {
  return kron(kron(a, b), rest...);
}

template <typename DerivedA, typename DerivedB>
double max_abs_diff(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  return (a.derived() - b.derived()).cwiseAbs().maxCoeff();
}

template <typename Derived>
double hermiticity_defect(const Eigen::MatrixBase<Derived>& h) {
  return (h.derived() - h.derived().adjoint()).cwiseAbs().maxCoeff();
}

template <typename Derived>
double unitarity_defect(const Eigen::MatrixBase<Derived>& u) {
  return (u.derived().adjoint() * u.derived() - Matrix::Identity(u.cols(), u.cols()))
      .cwiseAbs()
      .maxCoeff();
}

/// Global phase aligning b to a: e^{i arg tr(a^dag b)}.
template <typename DerivedA, typename DerivedB>
Complex alignment_phase(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  Complex t = (a.derived().adjoint() * b.derived()).trace();
  if (std::abs(t) < 1e-300) return Complex{1.0, 0.0};
  return std::polar(1.0, -std::arg(t));
}

/// Max-entry deviation after optimizing a global phase on b.
template <typename DerivedA, typename DerivedB>
double max_abs_diff_upto_phase(const Eigen::MatrixBase<DerivedA>& a,
                               const Eigen::MatrixBase<DerivedB>& b) {
  return (a.derived() - alignment_phase(a, b) * b.derived()).cwiseAbs().maxCoeff();
}

/// Frobenius distance minimized over a global phase: sqrt(2n - 2|tr(a^dag b)|)
/// for unitaries of dimension n.
template <typename DerivedA, typename DerivedB>
double frobenius_distance_upto_phase(const Eigen::MatrixBase<DerivedA>& a,
                                     const Eigen::MatrixBase<DerivedB>& b) {
  const double n = static_cast<double>(a.rows());
  const double t = std::abs((a.derived().adjoint() * b.derived()).trace());
  return std::sqrt(std::max(0.0, 2.0 * n - 2.0 * t));
}

/// e^{-i H t} for hermitian H, via eigendecomposition. Throws on non-hermitian
/// input (tolerance scaled to the matrix norm).
Matrix expm_hermitian(const Matrix& h, double t);

/// e^{A} for a general square matrix via scaling-and-squaring Pade (order 13).
Matrix expm_pade(const Matrix& a);

}  // namespace sqg
