// Copyright 2026 The pidisc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include "pidisc/ensemble.hpp"
#include "pidisc/hermitian.hpp"
#include "test_support.hpp"

using namespace pidisc;
using namespace pidisc::testing;

namespace {

Matrix swap_gate() {
  // SWAP(ij,kl) = delta_il delta_jk in the row-major A-major basis.
  Matrix s = Matrix::Zero(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          if (i == l && j == k) s(i * 2 + j, k * 2 + l) = 1.0;
  return s;
}

}  // namespace

TEST_CASE("construction validates shape and Hermiticity") {
  Matrix bad(3, 3);
  bad.setZero();
  CHECK_THROWS_AS(HermitianOperator(2, 2, bad), ValidationError);

  Matrix skew(2, 2);
  skew << Complex(0, 0), Complex(1, 0), Complex(0.5, 0), Complex(0, 0);
  CHECK_THROWS_AS(HermitianOperator(2, 1, skew), ValidationError);

  // Asymmetry below the 1e-12 threshold is symmetrized away.
  Matrix near(2, 2);
  near << Complex(1, 0), Complex(0.5, 1e-13), Complex(0.5, 0), Complex(2, 0);
  const HermitianOperator h(2, 1, near);
  CHECK(std::abs(h.entry(0, 1) - std::conj(h.entry(1, 0))) == 0.0);
}

TEST_CASE("unit vectors are normalized and reject zero input") {
  Vector v(2);
  v << Complex(3, 0), Complex(4, 0);
  CHECK(std::abs(UnitVector(v).amplitudes().norm() - 1.0) <= 1e-12);
  CHECK_THROWS_AS(UnitVector{Vector(Vector::Zero(2))}, ValidationError);
}

TEST_CASE("eig: identity and diagonal cases") {
  const Eigensystem id = eig_hermitian(HermitianOperator::identity(2, 2));
  for (int k = 0; k < 4; ++k) CHECK(id.eigenvalues(k) == doctest::Approx(1.0).epsilon(1e-14));

  Matrix d(2, 2);
  d << Complex(3, 0), Complex(0, 0), Complex(0, 0), Complex(-1, 0);
  const Eigensystem es = eig_hermitian(HermitianOperator(2, 1, d));
  CHECK(es.eigenvalues(0) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(es.eigenvalues(1) == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("eig: partial transpose of the Phi+ projector") {
  const HermitianOperator pt = bell::phi_plus_pt();

  // Independent route 1: the operator is SWAP/2, entry by entry.
  CHECK((pt.matrix() - 0.5 * swap_gate()).cwiseAbs().maxCoeff() <= 1e-15);

  // Independent route 2: characteristic polynomial. The spectrum
  // (-1/2, 1/2, 1/2, 1/2) means p(x) = (x + 1/2)(x - 1/2)^3
  //                                  = x^4 - x^3 + x/4 - 1/16.
  const std::vector<double> coeff = char_poly(pt.matrix());
  const std::vector<double> expected{-1.0 / 16, 0.25, 0.0, -1.0, 1.0};
  REQUIRE(coeff.size() == expected.size());
  for (size_t k = 0; k < coeff.size(); ++k) CHECK(std::abs(coeff[k] - expected[k]) <= 1e-13);

  const Eigensystem es = eig_hermitian(pt);
  CHECK(std::abs(es.eigenvalues(0) + 0.5) <= 1e-12);
  for (int k = 1; k < 4; ++k) CHECK(std::abs(es.eigenvalues(k) - 0.5) <= 1e-12);
  for (int k = 0; k < 4; ++k) CHECK(std::abs(eval_poly(coeff, es.eigenvalues(k))) <= 1e-12);

  // Lowest eigenvector is |Psi-> up to phase.
  const Vector psim = bell::psi_minus().amplitudes();
  CHECK(std::abs((psim.adjoint() * es.eigenvectors.col(0))(0, 0)) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("eig: reconstruction, residuals, orthonormality on random input") {
  SplitMix64 rng(0x11e5);
  for (int trial = 0; trial < 1000; ++trial) {
    const HermitianOperator h = random_hermitian(2, 2, rng);
    const Eigensystem es = eig_hermitian(h);
    const double spectral = std::max(std::abs(es.eigenvalues(0)), std::abs(es.eigenvalues(3)));

    Matrix rebuilt = Matrix::Zero(4, 4);
    for (int k = 0; k < 4; ++k) {
      rebuilt += es.eigenvalues(k) * (es.eigenvectors.col(k) * es.eigenvectors.col(k).adjoint());
      const double residual =
          (h.matrix() * es.eigenvectors.col(k) - es.eigenvalues(k) * es.eigenvectors.col(k))
              .norm();
      CHECK(residual <= 1e-10 * std::max(1.0, spectral));
    }
    CHECK((rebuilt - h.matrix()).cwiseAbs().maxCoeff() <= 1e-9);
    CHECK((es.eigenvectors.adjoint() * es.eigenvectors - Matrix::Identity(4, 4))
              .cwiseAbs()
              .maxCoeff() <= 1e-10);

    // Ascending order.
    for (int k = 1; k < 4; ++k) CHECK(es.eigenvalues(k) >= es.eigenvalues(k - 1));
  }
}

TEST_CASE("eig: Kronecker spectra multiply (16-dimensional check)") {
  SplitMix64 rng(0x16d);
  const HermitianOperator a = random_hermitian(2, 2, rng);
  const HermitianOperator b = random_hermitian(2, 2, rng);
  const Eigensystem ea = eig_hermitian(a);
  const Eigensystem eb = eig_hermitian(b);

  std::vector<double> products;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) products.push_back(ea.eigenvalues(i) * eb.eigenvalues(j));
  std::sort(products.begin(), products.end());

  const Eigensystem et = eig_hermitian(tensor(a, b));
  for (int k = 0; k < 16; ++k)
    CHECK(std::abs(et.eigenvalues(k) - products[k]) <= 1e-10);
}

TEST_CASE("tensor: basis ordering and exact scalar compatibility") {
  const HermitianOperator i2 = HermitianOperator::identity(2, 1);
  CHECK((tensor(i2, i2).matrix() - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);

  Matrix p0(2, 2), p1(2, 2);
  p0 << 1, 0, 0, 0;
  p1 << 0, 0, 0, 1;
  const HermitianOperator t =
      tensor(HermitianOperator(2, 1, p0), HermitianOperator(2, 1, p1));
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      CHECK(t.entry(r, c) == Complex(r == 1 && c == 1 ? 1.0 : 0.0, 0.0));

  const HermitianOperator pp = HermitianOperator::projector(2, 1, bell::plus());
  const HermitianOperator pppp = tensor(pp, pp);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      CHECK(std::abs(pppp.entry(r, c) - Complex(0.25, 0)) <= 1e-15);

  SplitMix64 rng(0x7e45);
  const HermitianOperator a = random_hermitian(2, 1, rng);
  const HermitianOperator b = random_hermitian(2, 1, rng);
  for (double c : {2.0, 0.5, -4.0}) {
    // Power-of-two scalars commute with the product exactly.
    CHECK((tensor(c * a, b).matrix() - c * tensor(a, b).matrix()).cwiseAbs().maxCoeff() ==
          0.0);
  }
}

TEST_CASE("partial transpose: product rule, Phi+ -> SWAP/2, involution") {
  SplitMix64 rng(0xbeef);
  const HermitianOperator a = random_hermitian(2, 1, rng);
  const HermitianOperator b = random_hermitian(2, 1, rng);
  const HermitianOperator bt(2, 1, b.matrix().transpose().eval());
  CHECK((partial_transpose(tensor(a, b)).matrix() - tensor(a, bt).matrix())
            .cwiseAbs()
            .maxCoeff() <= 1e-15);

  CHECK((partial_transpose(bell::phi_plus_projector()).matrix() - 0.5 * swap_gate())
            .cwiseAbs()
            .maxCoeff() <= 1e-15);

  const HermitianOperator id = HermitianOperator::identity(2, 2);
  CHECK((partial_transpose(id).matrix() - id.matrix()).cwiseAbs().maxCoeff() == 0.0);

  for (int trial = 0; trial < 50; ++trial) {
    const HermitianOperator h = random_hermitian(2, 2, rng);
    const HermitianOperator twice = partial_transpose(partial_transpose(h));
    CHECK((twice.matrix() - h.matrix()).cwiseAbs().maxCoeff() == 0.0);  // bit-exact
  }
}

TEST_CASE("partial contractions") {
  SplitMix64 rng(0xc0de);
  const UnitVector b = random_unit_vector(2, rng);

  const HermitianOperator id4 = HermitianOperator::identity(2, 2);
  CHECK((partial_contraction_b(id4, b).matrix() - Matrix::Identity(2, 2))
            .cwiseAbs()
            .maxCoeff() <= 1e-14);

  const HermitianOperator a_op = random_hermitian(2, 1, rng);
  const HermitianOperator b_op = random_hermitian(2, 1, rng);
  const double bexp = expectation(b_op, b);
  CHECK((partial_contraction_b(tensor(a_op, b_op), b).matrix() - bexp * a_op.matrix())
            .cwiseAbs()
            .maxCoeff() <= 1e-13);

  const HermitianOperator swap_half(2, 2, swap_gate());
  Vector e0(2);
  e0 << 1, 0;
  Matrix expected(2, 2);
  expected << 1, 0, 0, 0;
  CHECK((partial_contraction_b(swap_half, UnitVector(e0)).matrix() - expected)
            .cwiseAbs()
            .maxCoeff() <= 1e-15);

  CHECK_THROWS_AS(partial_contraction_b(id4, random_unit_vector(3, rng)), ValidationError);
}

TEST_CASE("trace norm and inner products") {
  Matrix d(2, 2);
  d << 1, 0, 0, -1;
  CHECK(trace_norm(HermitianOperator(2, 1, d)) == doctest::Approx(2.0).epsilon(1e-14));

  CHECK(trace_norm(bell::phi_plus_pt()) == doctest::Approx(2.0).epsilon(1e-13));

  // Tr(Phi+ * Phi+^PT) by brute-force matrix product.
  const Matrix prod = bell::phi_plus_projector().matrix() * bell::phi_plus_pt().matrix();
  CHECK(prod.trace().real() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(inner(bell::phi_plus_projector(), bell::phi_plus_pt()) ==
        doctest::Approx(0.5).epsilon(1e-14));

  SplitMix64 rng(0xabc1);
  for (int trial = 0; trial < 200; ++trial) {
    const HermitianOperator x = random_hermitian(2, 2, rng);
    const HermitianOperator y = random_hermitian(2, 2, rng);
    const Complex raw = (x.matrix() * y.matrix()).trace();
    CHECK(std::abs(raw.imag()) <= 1e-12);
    CHECK(inner(x, y) == doctest::Approx(inner(y, x)).epsilon(1e-12));
    CHECK(trace_norm(x) >= std::abs(x.trace()) - 1e-12);
  }
}
