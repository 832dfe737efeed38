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

#include "pidisc/cones.hpp"
#include "pidisc/ensemble.hpp"
#include "test_support.hpp"

using namespace pidisc;
using namespace pidisc::testing;

namespace {

// Faster see-saw settings for property loops; verdict quality on 2x2 inputs
// is unaffected (cross-checked against the grid oracle below).
SeesawParams quick_params(std::uint64_t seed = 0) {
  SeesawParams p;
  p.starts = 24;
  p.seed = seed;
  return p;
}

}  // namespace

TEST_CASE("in_psd: identity, Phi+^PT, and the example-3 PSD difference") {
  const ConeVerdict id = in_psd(HermitianOperator::identity(2, 2));
  CHECK(id.in());
  CHECK(id.margin == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(id.confidence == Confidence::kCertified);

  const ConeVerdict pt = in_psd(bell::phi_plus_pt());
  CHECK(!pt.in());
  CHECK(std::abs(pt.margin + 0.5) <= 1e-12);
  REQUIRE(pt.witness.has_value());
  CHECK(std::abs(expectation(bell::phi_plus_pt(), *pt.witness) - pt.margin) <= 1e-12);
  CHECK(std::abs((bell::psi_minus().amplitudes().adjoint() * pt.witness->amplitudes())(0, 0)) ==
        doctest::Approx(1.0).epsilon(1e-12));

  const StateEnsemble e3 = build_example3();
  CHECK(in_psd(e3.weighted(1) - e3.weighted(2)).in());
}

TEST_CASE("min_product_expectation: identity, Phi+^PT, shifted projector") {
  const ProductMinResult id = min_product_expectation(HermitianOperator::identity(2, 2));
  CHECK(id.value == doctest::Approx(1.0).epsilon(1e-10));

  const ProductMinResult pt = min_product_expectation(bell::phi_plus_pt());
  CHECK(std::abs(pt.value) <= 1e-9);
  // The minimizer has orthogonal local parts: <a (x) b|SWAP|a (x) b> = |<a|b>|^2.
  CHECK(std::abs((pt.a.amplitudes().adjoint() * pt.b.amplitudes())(0, 0)) <= 1e-5);

  // Phi+ - (3/4)1: the product minimum is -3/4, achieved on products
  // orthogonal to Phi+ (grid oracle agrees).
  const HermitianOperator shifted =
      bell::phi_plus_projector() - 0.75 * HermitianOperator::identity(2, 2);
  const double oracle = grid_min_product(shifted);
  CHECK(oracle == doctest::Approx(-0.75).epsilon(1e-7));
  const ProductMinResult sm = min_product_expectation(shifted);
  CHECK(sm.value == doctest::Approx(-0.75).epsilon(1e-9));
}

TEST_CASE("see-saw tracks the dense-grid oracle on random operators") {
  SplitMix64 rng(0x5ee5a);
  for (int trial = 0; trial < 40; ++trial) {
    const HermitianOperator h = random_hermitian(2, 2, rng);
    const double grid = grid_min_product(h);
    SeesawParams params;
    params.seed = trial;
    const double seesaw = min_product_expectation(h, params).value;
    CHECK(seesaw <= grid + 1e-6);   // never worse than the grid
    CHECK(seesaw >= grid - 1e-6);   // never implausibly better either
  }
}

TEST_CASE("min_product_expectation beyond qubits: 3x3 product operators") {
  // With dim_b != 2 every start is random; the product minimum of a PSD
  // Kronecker product factorizes as lambda_min(A) * lambda_min(B).
  SplitMix64 rng(0x3b3);
  const Matrix ga = random_ginibre(3, rng);
  const Matrix gb = random_ginibre(3, rng);
  const HermitianOperator a(3, 1, (ga * ga.adjoint()).eval());
  const HermitianOperator b(3, 1, (gb * gb.adjoint()).eval());
  const double expected =
      eig_hermitian(a).min_eigenvalue() * eig_hermitian(b).min_eigenvalue();
  const ProductMinResult pm = min_product_expectation(tensor(a, b));
  CHECK(pm.value == doctest::Approx(expected).epsilon(1e-8));

  const ProductMinResult id9 = min_product_expectation(HermitianOperator::identity(3, 3));
  CHECK(id9.value == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("in_sep_star: PSD inputs, boundary witness, negative identity") {
  SplitMix64 rng(0xded1);
  const ConeVerdict psd_case = in_sep_star(random_density(2, 2, rng), 1e-9, quick_params());
  CHECK(psd_case.in());
  CHECK(psd_case.confidence == Confidence::kHeuristic);

  const ConeVerdict pt = in_sep_star(bell::phi_plus_pt());
  CHECK(pt.in());
  CHECK(std::abs(pt.margin) <= 1e-9);

  const ConeVerdict neg = in_sep_star(-1.0 * HermitianOperator::identity(2, 2));
  CHECK(!neg.in());
  CHECK(neg.margin == doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(neg.confidence == Confidence::kCertified);
  REQUIRE(neg.witness.has_value());
  CHECK(std::abs(expectation(-1.0 * HermitianOperator::identity(2, 2), *neg.witness) -
                 neg.margin) <= 1e-9);
}

TEST_CASE("is_ew: Phi+^PT is a witness, identity and example differences behave") {
  const ConeVerdict ew = is_ew(bell::phi_plus_pt());
  CHECK(ew.in());
  CHECK(ew.confidence == Confidence::kHeuristic);
  REQUIRE(ew.witness.has_value());
  CHECK(std::abs(expectation(bell::phi_plus_pt(), *ew.witness) + 0.5) <= 1e-12);

  CHECK(!is_ew(HermitianOperator::identity(2, 2)).in());

  const StateEnsemble e3 = build_example3();
  const ConeVerdict diff = is_ew(e3.weighted(1) - e3.weighted(3));
  CHECK(diff.in());
  CHECK(std::abs(diff.margin + 1.0 / 28) <= 1e-12);
}

TEST_CASE("positive_part_split: spectral split of Phi+^PT and degenerate cases") {
  const PositivePartSplit split = positive_part_split(bell::phi_plus_pt());
  CHECK(split.plus.trace() == doctest::Approx(1.5).epsilon(1e-13));
  CHECK(split.minus.trace() == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(std::abs(inner(split.plus, split.minus)) <= 1e-12);
  CHECK((split.plus.matrix() - split.minus.matrix() - bell::phi_plus_pt().matrix())
            .cwiseAbs()
            .maxCoeff() <= 1e-10);
  // W- is half the Psi- projector.
  CHECK((split.minus.matrix() - 0.5 * bell::psi_minus_projector().matrix())
            .cwiseAbs()
            .maxCoeff() <= 1e-12);
  CHECK(in_psd(split.plus).in());
  CHECK(in_psd(split.minus).in());

  SplitMix64 rng(0x9a7);
  const HermitianOperator rho = random_density(2, 2, rng);
  const PositivePartSplit psd_split = positive_part_split(rho);
  CHECK((psd_split.plus.matrix() - rho.matrix()).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(psd_split.minus.matrix().cwiseAbs().maxCoeff() <= 1e-12);

  Matrix d(2, 2);
  d << 1, 0, 0, -2;
  const PositivePartSplit ds = positive_part_split(HermitianOperator(2, 1, d));
  CHECK(ds.plus.entry(0, 0) == Complex(1, 0));
  CHECK(ds.minus.entry(1, 1) == Complex(2, 0));
}

TEST_CASE("property: every OUT witness reproduces its margin") {
  SplitMix64 rng(0x0c7);
  for (int trial = 0; trial < 60; ++trial) {
    const HermitianOperator h = random_hermitian(2, 2, rng);
    const ConeVerdict psd = in_psd(h);
    if (!psd.in())
      CHECK(std::abs(expectation(h, *psd.witness) - psd.margin) <= 1e-9);
    const ConeVerdict sep = in_sep_star(h, 1e-9, quick_params(trial));
    if (!sep.in())
      CHECK(std::abs(expectation(h, *sep.witness) - sep.margin) <= 1e-9);
  }
}

namespace {

// Partial transposes of PSD operators are always block positive, and for
// random PSD input they are usually not PSD themselves, so they probe the
// interesting region of SEP*.
HermitianOperator random_block_positive(SplitMix64& rng) {
  const Matrix g = random_ginibre(4, rng);
  return partial_transpose(HermitianOperator(2, 2, (0.25 * (g * g.adjoint())).eval()));
}

}  // namespace

TEST_CASE("property: SEP* is closed under PSD addition") {
  SplitMix64 rng(0xadd);
  for (int trial = 0; trial < 500; ++trial) {
    const HermitianOperator h = random_block_positive(rng);
    const Matrix g = random_ginibre(4, rng);
    const HermitianOperator p(2, 2, (0.25 * (g * g.adjoint())).eval());
    CHECK(in_sep_star(h, 1e-9, quick_params(trial)).in());
    CHECK(in_sep_star(h + p, 1e-9, quick_params(trial + 1000)).in());
  }
}

TEST_CASE("property: SEP* midpoints stay inside (convexity spot-check)") {
  SplitMix64 rng(0xc07e);
  for (int trial = 0; trial < 120; ++trial) {
    const HermitianOperator h1 = random_block_positive(rng);
    const HermitianOperator h2 = random_block_positive(rng);
    CHECK(in_sep_star(h1, 1e-9, quick_params(trial)).in());
    CHECK(in_sep_star(h2, 1e-9, quick_params(trial + 7)).in());
    CHECK(in_sep_star(0.5 * (h1 + h2), 1e-9, quick_params(trial + 21)).in());
  }
}
