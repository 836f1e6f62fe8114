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

#include <span>
#include <stdexcept>
#include <vector>

#include "sqg/linalg.hpp"
#include "sqg/register_shape.hpp"
#include "sqg/types.hpp"

namespace sqg {

/// Normalized state over a register. Immutable after construction apart from
/// whole-value assignment.
class StateVector {
 public:
  StateVector(RegisterShape shape, Vector amplitudes);

  /// Basis state |digits>.
  static StateVector basis(const RegisterShape& shape, std::span<const int> digits);
  static StateVector basis(const RegisterShape& shape, const std::string& digit_string);

  const RegisterShape& shape() const { return shape_; }
  const Vector& amplitudes() const { return amp_; }
  Complex amplitude(Eigen::Index i) const { return amp_[i]; }
  Complex amplitude(const std::string& digit_string) const {
    return amp_[shape_.index_of_label(digit_string)];
  }
  double norm() const { return amp_.norm(); }

  /// |<target|this>|^2 (global-phase insensitive).
  double fidelity_to(const Vector& target) const;

 private:
  RegisterShape shape_;
  Vector amp_;
};

/// Dense square operator over a register, with lazily checked hermitian and
/// unitary flags.
class Operator {
 public:
  Operator() = default;
  Operator(RegisterShape shape, Matrix entries);

  static Operator identity(const RegisterShape& shape);

  const RegisterShape& shape() const { return shape_; }
  const Matrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

  bool is_hermitian(double tol = 1e-12) const;
  bool is_unitary(double tol = kAlgebraTol) const;
  Tristate hermitian_flag() const { return hermitian_; }
  Tristate unitary_flag() const { return unitary_; }
  /// Mark the operator as verified unitary; throws if the check fails.
  Operator& assert_unitary(double tol = kAlgebraTol);

  Operator adjoint() const;
  Operator operator*(const Operator& other) const;
  StateVector apply(const StateVector& psi) const;

 private:
  RegisterShape shape_;
  Matrix m_;
  mutable Tristate hermitian_ = Tristate::Unchecked;
  mutable Tristate unitary_ = Tristate::Unchecked;
};

/// Tensor product of operators on disjoint registers, in argument order.
Operator kron(std::span<const Operator> ops);
Operator kron(std::initializer_list<Operator> ops);

/// Embed an operator acting on `sites` (ordered as in op) into the full
/// register, identity elsewhere.
Operator embed(const Operator& op, const RegisterShape& full, std::span<const int> sites);
Matrix embed_matrix(const Matrix& op, const RegisterShape& op_shape, const RegisterShape& full,
                    std::span<const int> sites);

/// e^{-i H t} as an Operator; requires hermitian input.
Operator expm(const Operator& h, double t);

/// Restriction of the register to qubit levels {0,1} on `qubit_sites`, all
/// other sites pinned to level 0. Projected dimension n = 2^#sites.
class ComputationalProjector {
 public:
  ComputationalProjector(RegisterShape shape, std::vector<int> qubit_sites);

  const RegisterShape& shape() const { return shape_; }
  const std::vector<int>& qubit_sites() const { return sites_; }
  Eigen::Index projected_dim() const { return static_cast<Eigen::Index>(indices_.size()); }
  const std::vector<Eigen::Index>& indices() const { return indices_; }

  /// P as a full-dimension matrix (diagonal 0/1).
  Matrix full_matrix() const;
  /// The n x n computational block P^dag M P.
  Matrix project(const Matrix& full) const;
  /// Lift an n-vector into the full space.
  Vector lift(const Vector& compact) const;

 private:
  RegisterShape shape_;
  std::vector<int> sites_;
  std::vector<Eigen::Index> indices_;
};

/// Computational block of a full-register operator; not generally unitary
/// (leakage shows up as sub-unitarity).
Matrix project_computational(const Operator& m_full, const ComputationalProjector& p);

}  // namespace sqg
