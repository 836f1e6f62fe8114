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

#include "sqg/effective.hpp"
#include "sqg/gates.hpp"
#include "sqg/serialize.hpp"
#include "support/oracles.hpp"

using namespace sqg;

TEST_CASE("basis index round-trips for random register shapes") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> nsites(1, 5), dim(2, 4);
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<int> dims(nsites(rng));
    for (auto& d : dims) d = dim(rng);
    const RegisterShape s(dims);
    REQUIRE(s.total_dim() >= 2);
    for (Eigen::Index i = 0; i < s.total_dim(); ++i) {
      CHECK(s.index(s.digits(i)) == i);
    }
  }
}

TEST_CASE("digit-string labels follow the |q0 q1 q2> convention") {
  const RegisterShape s = RegisterShape::qutrits(3);
  CHECK(s.index_of_label("000") == 0);
  CHECK(s.index_of_label("110") == 12);
  CHECK(s.index_of_label("200") == 18);
  CHECK(s.label(0) == "q0");
}

TEST_CASE("kron: identities, X x X, and the controlled embedding") {
  const RegisterShape q1 = RegisterShape::qubits(1);
  const Operator i2 = Operator::identity(q1);
  const Operator i4 = kron({i2, i2});
  CHECK(max_abs_diff(i4.matrix(), Matrix::Identity(4, 4)) == 0.0);

  // |0><0| x I4 + |1><1| x u_czs = the controlled gate
  Matrix p0 = Matrix::Zero(2, 2), p1 = Matrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  const Matrix block = u_czs({kPi / 2, kPi, 0.0});
  const Matrix built = kron(p0, Matrix::Identity(4, 4)) + kron(p1, block);
  CHECK(max_abs_diff(built, cczs({kPi / 2, kPi, 0.0}).matrix()) < 1e-15);

  const Operator xx = kron({Operator(q1, pauli_x()), Operator(q1, pauli_x())});
  const StateVector out = xx.apply(StateVector::basis(RegisterShape::qubits(2), "00"));
  CHECK(std::abs(out.amplitude("11") - 1.0) < 1e-15);

  // oracle cross-check on random factors
  std::mt19937_64 rng(3);
  const Matrix a = test::random_hermitian(2, rng);
  const Matrix b = test::random_hermitian(3, rng);
  const Matrix c = test::random_hermitian(2, rng);
  CHECK(max_abs_diff(kron(a, b, c), test::kron_oracle({a, b, c})) < 1e-14);
}

TEST_CASE("kron rejects dimension mismatches") {
  CHECK_THROWS_AS(kron(std::span<const Operator>{}), std::invalid_argument);
  const Operator i2 = Operator::identity(RegisterShape::qubits(1));
  CHECK_THROWS_AS(Operator(RegisterShape::qubits(2), Matrix::Identity(3, 3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(i2.apply(StateVector::basis(RegisterShape::qubits(2), "00")),
                  std::invalid_argument);
}

TEST_CASE("expm basics: zero generator, Rabi half period") {
  const RegisterShape q1 = RegisterShape::qubits(1);
  const Operator h0(q1, Matrix::Zero(2, 2));
  CHECK(max_abs_diff(expm(h0, 3.7).matrix(), Matrix::Identity(2, 2)) < 1e-15);

  const double lam = 0.83;
  Matrix sx(2, 2);
  sx << 0, 1, 1, 0;
  const Matrix u = expm_hermitian(lam * sx, kPi / (2.0 * lam));
  CHECK(max_abs_diff(u, Matrix(-kI * sx)) < 1e-14);
}

TEST_CASE("expm rejects non-hermitian generators") {
  Matrix bad(2, 2);
  bad << 0, 1, 0, 0;
  CHECK_THROWS_AS(expm_hermitian(bad, 1.0), std::invalid_argument);
}

TEST_CASE("expm properties: unitarity and additivity on random hermitians") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 12; ++rep) {
    const Eigen::Index n = 2 + rep % 6;
    const Matrix h = test::random_hermitian(n, rng, 2.0);
    const double t = 50.0 / std::max(1.0, h.cwiseAbs().maxCoeff() * n);
    const Matrix u = expm_hermitian(h, t);
    CHECK(unitarity_defect(u) < 1e-10);
    const double t1 = 0.3 * t, t2 = 0.7 * t;
    CHECK(max_abs_diff(expm_hermitian(h, t1 + t2), expm_hermitian(h, t1) * expm_hermitian(h, t2)) <
          1e-9);
    // cross-route check against the Pade exponential
    CHECK(max_abs_diff(u, test::expm_oracle(h, t)) < 1e-10);
  }
}

TEST_CASE("embedding locality: embedded single-site gates act on their site only") {
  std::mt19937_64 rng(11);
  const RegisterShape s({2, 3, 2});
  for (int site = 0; site < 3; ++site) {
    Matrix u = test::random_unitary(s.dim(site), rng);
    const int sites[1] = {site};
    const Matrix full = embed_matrix(u, RegisterShape({s.dim(site)}), s, sites);
    CHECK(unitarity_defect(full) < 1e-12);
    // a product basis state maps to a superposition varying only in `site`
    const Eigen::Index start = s.index_of_label("010");
    Vector out = full * Vector::Unit(s.total_dim(), start);
    for (Eigen::Index k = 0; k < s.total_dim(); ++k) {
      if (std::abs(out[k]) < 1e-14) continue;
      const auto dk = s.digits(k), d0 = s.digits(start);
      for (int j = 0; j < 3; ++j) {
        if (j != site) CHECK(dk[j] == d0[j]);
      }
    }
  }
}

TEST_CASE("embed of a product equals the product of embeddings on disjoint sites") {
  std::mt19937_64 rng(13);
  const RegisterShape full = RegisterShape::qutrits(3);
  const Matrix a = test::random_unitary(3, rng);
  const Matrix b = test::random_unitary(3, rng);
  const RegisterShape one({3});
  const int s0[1] = {0}, s2[1] = {2};
  const int s02[2] = {0, 2};
  const Matrix ab = kron(a, b);
  const Matrix lhs = embed_matrix(ab, RegisterShape({3, 3}), full, s02);
  const Matrix rhs = embed_matrix(a, one, full, s0) * embed_matrix(b, one, full, s2);
  CHECK(max_abs_diff(lhs, rhs) < 1e-13);
}

TEST_CASE("computational projector: dimensions, idempotence, leakage blocks") {
  const RegisterShape s = RegisterShape::qutrits(3);
  const ComputationalProjector p(s, {0, 1, 2});
  CHECK(p.projected_dim() == 8);
  const Matrix pm = p.full_matrix();
  CHECK(max_abs_diff(pm * pm, pm) == 0.0);
  CHECK(std::llround(pm.trace().real()) == 8);

  // identity on the full register projects to the identity block
  CHECK(max_abs_diff(project_computational(Operator::identity(s), p), Matrix::Identity(8, 8)) ==
        0.0);

  // a full swap |110> <-> |200> leaves a zero row and column at |110>
  Matrix swap = Matrix::Identity(27, 27);
  const Eigen::Index a = s.index_of_label("110"), b = s.index_of_label("200");
  swap(a, a) = swap(b, b) = 0.0;
  swap(a, b) = swap(b, a) = 1.0;
  const Matrix blk = p.project(swap);
  const Eigen::Index ix110 = 0b110;
  CHECK(blk.row(ix110).cwiseAbs().maxCoeff() == 0.0);
  CHECK(blk.col(ix110).cwiseAbs().maxCoeff() == 0.0);

  // propagator at gate time is block-unitary
  const CzPairModel model{0.9, Complex(0.2, 0.7), 0.4};
  const Matrix gate_blk = p.project(propagate(model, model.gate_time()).matrix());
  CHECK(unitarity_defect(gate_blk) < 1e-8);
}

TEST_CASE("serialization round-trips operators and states") {
  std::mt19937_64 rng(17);
  const RegisterShape s({2, 3});
  Operator op(s, test::random_unitary(6, rng));
  const Operator back = operator_from_json(to_json(op, 15));
  CHECK(back.shape() == op.shape());
  CHECK(max_abs_diff(back.matrix(), op.matrix()) < 1e-12);

  const StateVector psi(s, test::random_haar_state(6, rng));
  const StateVector loaded = state_from_json(to_json(psi, 15));
  CHECK((loaded.amplitudes() - psi.amplitudes()).norm() < 1e-12);

  // 12 significant digits by default
  Operator tiny(RegisterShape({2}), (Matrix(2, 2) << 1.0 / 3.0, 0, 0, 1).finished());
  const auto j = to_json(tiny);
  CHECK(j["entries"][0][0].get<double>() == doctest::Approx(1.0 / 3.0).epsilon(1e-11));
}

TEST_CASE("unitary flag is tri-state and checked lazily") {
  const RegisterShape q1 = RegisterShape::qubits(1);
  Operator h(q1, hadamard());
  CHECK(h.unitary_flag() == Tristate::Unchecked);
  CHECK(h.is_unitary());
  CHECK(h.unitary_flag() == Tristate::Yes);
  Operator leaky(q1, 0.5 * hadamard());
  CHECK_FALSE(leaky.is_unitary());
  CHECK_THROWS_AS(leaky.assert_unitary(), std::logic_error);
}
