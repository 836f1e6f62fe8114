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

#include "sqg/pulse/integrate.hpp"

#include <cmath>
#include <stdexcept>

#include "sqg/linalg.hpp"

namespace sqg {

namespace {

// Gauss-Legendre two-point nodes and the fourth-order two-exponential weights.
constexpr double kGlShift = 0.28867513459481287;  // sqrt(3)/6
constexpr double kAlpha1 = 0.25 + kGlShift;
constexpr double kAlpha2 = 0.25 - kGlShift;

struct DenseStepper {
  const DriftHamiltonian& h;
  StepControl::Method method;
  double dt;
  Matrix work;
  RealVector d1, d2;
  RealVector prev_key;
  Matrix cached_step;
  bool has_cache = false;
  Eigen::SelfAdjointEigenSolver<Matrix> es;

  DenseStepper(const DriftHamiltonian& ham, const StepControl& sc)
      : h(ham), method(sc.method), dt(sc.dt) {
    const Eigen::Index n = h.dim();
    work.resize(n, n);
    d1.resize(n);
    d2.resize(n);
    prev_key.resize(2 * n);
  }

  Matrix exp_of(const RealVector& diag, double tau) {
    work = h.offdiag;
    work.diagonal() = diag.cast<Complex>();
    es.compute(work);
    Vector phases(diag.size());
    for (Eigen::Index k = 0; k < diag.size(); ++k) {
      phases[k] = std::polar(1.0, -es.eigenvalues()[k] * tau);
    }
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
  }

  const Matrix& step_operator(double t) {
    RealVector key(prev_key.size());
    if (method == StepControl::Method::Midpoint) {
      h.diagonal_at(t + 0.5 * dt, d1);
      key.head(d1.size()) = d1;
      key.tail(d1.size()) = d1;
      if (has_cache && (key - prev_key).cwiseAbs().maxCoeff() < 1e-12) return cached_step;
      cached_step = exp_of(d1, dt);
    } else {
      h.diagonal_at(t + (0.5 - kGlShift) * dt, d1);
      h.diagonal_at(t + (0.5 + kGlShift) * dt, d2);
      key.head(d1.size()) = d1;
      key.tail(d1.size()) = d2;
      if (has_cache && (key - prev_key).cwiseAbs().maxCoeff() < 1e-12) return cached_step;
      // generators A = c * offdiag + diag combo; c = alpha1 + alpha2 = 1/2
      // absorbed by exponentiating with tau = dt and half-weight diagonals
      RealVector gen1 = 2.0 * (kAlpha1 * d1 + kAlpha2 * d2);
      RealVector gen2 = 2.0 * (kAlpha2 * d1 + kAlpha1 * d2);
      cached_step = exp_of(gen2, 0.5 * dt) * exp_of(gen1, 0.5 * dt);
    }
    prev_key = key;
    has_cache = true;
    return cached_step;
  }
};

class Lanczos {
 public:
  Lanczos(Eigen::Index n, int max_dim) : max_dim_(max_dim) {
    basis_.resize(n, max_dim + 1);
    alpha_.resize(max_dim);
    beta_.resize(max_dim);
    w_.resize(n);
  }

  // y = exp(-i tau A) v for hermitian A given by matvec, with adaptive
  // subspace growth until the residual estimate drops below tol.
  Vector apply(const std::function<void(const Vector&, Vector&)>& matvec, const Vector& v,
               double tau, double tol) {
    const double vnorm = v.norm();
    if (vnorm == 0.0) return v;
    basis_.col(0) = v / vnorm;
    int m = 0;
    double err = 1.0;
    for (; m < max_dim_; ++m) {
      matvec(basis_.col(m), w_);
      if (m > 0) w_ -= beta_[m - 1] * basis_.col(m - 1);
      alpha_[m] = std::real(basis_.col(m).dot(w_));
      w_ -= alpha_[m] * basis_.col(m);
      // full reorthogonalization; the subspace stays small
      for (int r = 0; r <= m; ++r) w_ -= basis_.col(r).dot(w_) * basis_.col(r);
      beta_[m] = w_.norm();
      if (m >= 2 || beta_[m] < 1e-14) {
        err = expm_small(m + 1, tau);
        if (err < tol || beta_[m] < 1e-14) {
          ++m;
          break;
        }
      }
      basis_.col(m + 1) = w_ / beta_[m];
    }
    if (err >= tol) expm_small(m, tau);
    return vnorm * (basis_.leftCols(m) * small_exp_);
  }

 private:
  // exp(-i tau T_m) e1 for the tridiagonal T; returns the residual estimate
  // beta_m * |last entry|.
  double expm_small(int m, double tau) {
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
      t(i, i) = alpha_[i];
      if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = beta_[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    Vector phases(m);
    for (int k = 0; k < m; ++k) phases[k] = std::polar(1.0, -es.eigenvalues()[k] * tau);
    small_exp_ = es.eigenvectors().cast<Complex>() *
                 (phases.array() * es.eigenvectors().row(0).transpose().cast<Complex>().array())
                     .matrix();
    return std::abs(beta_[m - 1] * tau) * std::abs(small_exp_[m - 1]);
  }

  int max_dim_;
  Matrix basis_;
  Vector small_exp_;
  std::vector<double> alpha_, beta_;
  Vector w_;
};

struct KrylovStepper {
  const DriftHamiltonian& h;
  StepControl sc;
  RealVector d1, d2, dcur;
  double shift = 0.0;
  Lanczos lanczos;
  Vector tmp_in, tmp_out;

  KrylovStepper(const DriftHamiltonian& ham, const StepControl& control)
      : h(ham), sc(control), lanczos(ham.dim(), control.krylov_max_dim) {
    d1.resize(h.dim());
    d2.resize(h.dim());
    dcur.resize(h.dim());
  }

  void apply_exp(const RealVector& diag, double tau, Matrix& cols) {
    shift = 0.5 * (diag.maxCoeff() + diag.minCoeff());
    dcur = diag.array() - shift;
    auto matvec = [this](const Vector& x, Vector& y) {
      y.noalias() = h.offdiag * x;
      y.array() += dcur.array().cast<Complex>() * x.array();
    };
    const Complex phase = std::polar(1.0, -shift * tau);
    for (Eigen::Index c = 0; c < cols.cols(); ++c) {
      cols.col(c) = phase * lanczos.apply(matvec, cols.col(c), tau, sc.krylov_tol);
    }
  }

  void step(double t, Matrix& cols) {
    if (sc.method == StepControl::Method::Midpoint) {
      h.diagonal_at(t + 0.5 * sc.dt, d1);
      apply_exp(d1, sc.dt, cols);
    } else {
      h.diagonal_at(t + (0.5 - kGlShift) * sc.dt, d1);
      h.diagonal_at(t + (0.5 + kGlShift) * sc.dt, d2);
      RealVector gen1 = 2.0 * (kAlpha1 * d1 + kAlpha2 * d2);
      RealVector gen2 = 2.0 * (kAlpha2 * d1 + kAlpha1 * d2);
      apply_exp(gen1, 0.5 * sc.dt, cols);
      apply_exp(gen2, 0.5 * sc.dt, cols);
    }
  }
};

}  // namespace

Matrix propagate_columns(const DriftHamiltonian& h, const Matrix& columns, double t0, double t1,
                         const StepControl& sc, const StepObserver& observer) {
  if (columns.rows() != h.dim()) throw std::invalid_argument("propagate_columns: bad column size");
  if (t1 < t0) throw std::invalid_argument("propagate_columns: t1 < t0");
  if (sc.dt <= 0.0) throw std::invalid_argument("propagate_columns: dt must be positive");
  const int nsteps = std::max(1, static_cast<int>(std::ceil((t1 - t0) / sc.dt)));
  StepControl local = sc;
  local.dt = (t1 - t0) / nsteps;

  Matrix cols = columns;
  if (sc.krylov) {
    KrylovStepper stepper(h, local);
    for (int k = 0; k < nsteps; ++k) {
      stepper.step(t0 + k * local.dt, cols);
      if (observer) observer(t0 + (k + 1) * local.dt, cols);
    }
  } else {
    DenseStepper stepper(h, local);
    for (int k = 0; k < nsteps; ++k) {
      cols = stepper.step_operator(t0 + k * local.dt) * cols;
      if (observer) observer(t0 + (k + 1) * local.dt, cols);
    }
  }
  return cols;
}

Matrix propagate_full(const DriftHamiltonian& h, double t0, double t1, const StepControl& sc) {
  return propagate_columns(h, Matrix::Identity(h.dim(), h.dim()), t0, t1, sc);
}

Vector krylov_expm_apply(const std::function<void(const Vector&, Vector&)>& matvec, const Vector& v,
                         double tau, double tol, int max_dim) {
  Lanczos l(v.size(), max_dim);
  return l.apply(matvec, v, tau, tol);
}

double step_halving_deviation(const DriftHamiltonian& h, const Matrix& columns, double t0,
                              double t1, const StepControl& sc) {
  StepControl half = sc;
  half.dt = 0.5 * sc.dt;
  const Matrix a = propagate_columns(h, columns, t0, t1, sc);
  const Matrix b = propagate_columns(h, columns, t0, t1, half);
  return max_abs_diff(a, b);
}

}  // namespace sqg
