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

#include "sqg/operator.hpp"

#include <algorithm>

namespace sqg {

StateVector::StateVector(RegisterShape shape, Vector amplitudes)
    : shape_(std::move(shape)), amp_(std::move(amplitudes)) {
  if (amp_.size() != shape_.total_dim()) {
    throw std::invalid_argument("StateVector: amplitude count does not match register");
  }
}

StateVector StateVector::basis(const RegisterShape& shape, std::span<const int> digits) {
  Vector v = Vector::Zero(shape.total_dim());
  v[shape.index(digits)] = 1.0;
  return StateVector(shape, std::move(v));
}

StateVector StateVector::basis(const RegisterShape& shape, const std::string& digit_string) {
  Vector v = Vector::Zero(shape.total_dim());
  v[shape.index_of_label(digit_string)] = 1.0;
  return StateVector(shape, std::move(v));
}

double StateVector::fidelity_to(const Vector& target) const {
  if (target.size() != amp_.size()) throw std::invalid_argument("fidelity_to: size mismatch");
  return std::norm(target.dot(amp_));
}

Operator::Operator(RegisterShape shape, Matrix entries)
    : shape_(std::move(shape)), m_(std::move(entries)) {
  if (m_.rows() != m_.cols() || m_.rows() != shape_.total_dim()) {
    throw std::invalid_argument("Operator: matrix does not match register dimension");
  }
}

Operator Operator::identity(const RegisterShape& shape) {
  return Operator(shape, Matrix::Identity(shape.total_dim(), shape.total_dim()));
}

bool Operator::is_hermitian(double tol) const {
  if (hermitian_ == Tristate::Unchecked) {
    hermitian_ = hermiticity_defect(m_) <= tol * std::max(1.0, m_.cwiseAbs().maxCoeff())
                     ? Tristate::Yes
                     : Tristate::No;
  }
  return hermitian_ == Tristate::Yes;
}

bool Operator::is_unitary(double tol) const {
  if (unitary_ == Tristate::Unchecked) {
    unitary_ = unitarity_defect(m_) <= tol ? Tristate::Yes : Tristate::No;
  }
  return unitary_ == Tristate::Yes;
}

Operator& Operator::assert_unitary(double tol) {
  if (!is_unitary(tol)) throw std::logic_error("Operator: unitarity check failed");
  return *this;
}

Operator Operator::adjoint() const { return Operator(shape_, m_.adjoint()); }

Operator Operator::operator*(const Operator& other) const {
  if (shape_ != other.shape_) throw std::invalid_argument("Operator product: shape mismatch");
  return Operator(shape_, m_ * other.m_);
}

StateVector Operator::apply(const StateVector& psi) const {
  if (psi.shape() != shape_) throw std::invalid_argument("apply: shape mismatch");
  return StateVector(shape_, m_ * psi.amplitudes());
}

Operator kron(std::span<const Operator> ops) {
  if (ops.empty()) throw std::invalid_argument("kron: empty operator list");
  std::vector<int> dims;
  std::vector<std::string> labels;
  Matrix m = ops[0].matrix();
  for (size_t k = 1; k < ops.size(); ++k) m = kron(m, ops[k].matrix());
  for (const Operator& op : ops) {
    dims.insert(dims.end(), op.shape().dims().begin(), op.shape().dims().end());
    labels.insert(labels.end(), op.shape().labels().begin(), op.shape().labels().end());
  }
  return Operator(RegisterShape(std::move(dims), std::move(labels)), std::move(m));
}

Operator kron(std::initializer_list<Operator> ops) {
  return kron(std::span<const Operator>(ops.begin(), ops.size()));
}

Matrix embed_matrix(const Matrix& op, const RegisterShape& op_shape, const RegisterShape& full,
                    std::span<const int> sites) {
  if (static_cast<int>(sites.size()) != op_shape.num_sites()) {
    throw std::invalid_argument("embed: site count mismatch");
  }
  for (size_t k = 0; k < sites.size(); ++k) {
    if (sites[k] < 0 || sites[k] >= full.num_sites()) throw std::invalid_argument("embed: bad site");
    if (full.dim(sites[k]) != op_shape.dim(static_cast<int>(k))) {
      throw std::invalid_argument("embed: site dimension mismatch");
    }
  }
  const Eigen::Index n = full.total_dim();
  const Eigen::Index m = op_shape.total_dim();
  Matrix out = Matrix::Zero(n, n);
  std::vector<int> dig(full.num_sites());
  std::vector<int> sub(sites.size());
  for (Eigen::Index col = 0; col < n; ++col) {
    full.digits_into(col, dig);
    for (size_t k = 0; k < sites.size(); ++k) sub[k] = dig[sites[k]];
    const Eigen::Index opcol = op_shape.index(sub);
    for (Eigen::Index oprow = 0; oprow < m; ++oprow) {
      const Complex a = op(oprow, opcol);
      if (a == Complex{0.0, 0.0}) continue;
      op_shape.digits_into(oprow, sub);
      Eigen::Index row = col;
      for (size_t k = 0; k < sites.size(); ++k) {
        row += (sub[k] - dig[sites[k]]) * full.stride(sites[k]);
      }
      out(row, col) += a;
    }
  }
  return out;
}

Operator embed(const Operator& op, const RegisterShape& full, std::span<const int> sites) {
  return Operator(full, embed_matrix(op.matrix(), op.shape(), full, sites));
}

Operator expm(const Operator& h, double t) {
  if (!h.is_hermitian()) throw std::invalid_argument("expm: non-hermitian generator");
  return Operator(h.shape(), expm_hermitian(h.matrix(), t));
}

ComputationalProjector::ComputationalProjector(RegisterShape shape, std::vector<int> qubit_sites)
    : shape_(std::move(shape)), sites_(std::move(qubit_sites)) {
  if (sites_.empty()) throw std::invalid_argument("ComputationalProjector: no qubit sites");
  for (int s : sites_) {
    if (s < 0 || s >= shape_.num_sites()) {
      throw std::invalid_argument("ComputationalProjector: bad site");
    }
  }
  const size_t nq = sites_.size();
  indices_.resize(size_t{1} << nq);
  std::vector<int> dig(shape_.num_sites(), 0);
  for (size_t q = 0; q < indices_.size(); ++q) {
    std::fill(dig.begin(), dig.end(), 0);
    for (size_t j = 0; j < nq; ++j) dig[sites_[j]] = (q >> (nq - 1 - j)) & 1;
    indices_[q] = shape_.index(dig);
  }
}

Matrix ComputationalProjector::full_matrix() const {
  Matrix p = Matrix::Zero(shape_.total_dim(), shape_.total_dim());
  for (Eigen::Index ix : indices_) p(ix, ix) = 1.0;
  return p;
}

Matrix ComputationalProjector::project(const Matrix& full) const {
  if (full.rows() != shape_.total_dim()) throw std::invalid_argument("project: shape mismatch");
  const Eigen::Index n = projected_dim();
  Matrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = full(indices_[i], indices_[j]);
  return out;
}

Vector ComputationalProjector::lift(const Vector& compact) const {
  if (compact.size() != projected_dim()) throw std::invalid_argument("lift: size mismatch");
  Vector out = Vector::Zero(shape_.total_dim());
  for (Eigen::Index i = 0; i < compact.size(); ++i) out[indices_[i]] = compact[i];
  return out;
}

Matrix project_computational(const Operator& m_full, const ComputationalProjector& p) {
  if (m_full.shape() != p.shape()) throw std::invalid_argument("project_computational: shape mismatch");
  return p.project(m_full.matrix());
}

}  // namespace sqg
