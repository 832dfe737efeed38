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

// Shared fixtures and independent oracles. Everything here computes through
// raw matrix arithmetic (or a deliberately different algorithm) so it can
// cross-check the library without sharing its code paths.

#ifndef PIDISC_TEST_SUPPORT_HPP
#define PIDISC_TEST_SUPPORT_HPP

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "pidisc/hermitian.hpp"
#include "pidisc/rng.hpp"

namespace pidisc::testing {

inline Matrix random_ginibre(int n, SplitMix64& rng) {
  Matrix g(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) g(r, c) = Complex(rng.normal(), rng.normal());
  return g;
}

inline HermitianOperator random_hermitian(int dim_a, int dim_b, SplitMix64& rng) {
  const int n = dim_a * dim_b;
  const Matrix g = random_ginibre(n, rng);
  return HermitianOperator(dim_a, dim_b, 0.5 * (g + g.adjoint().eval()));
}

inline HermitianOperator random_density(int dim_a, int dim_b, SplitMix64& rng) {
  const int n = dim_a * dim_b;
  const Matrix g = random_ginibre(n, rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return HermitianOperator(dim_a, dim_b, rho);
}

inline UnitVector random_unit_vector(int n, SplitMix64& rng) {
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = Complex(rng.normal(), rng.normal());
  return UnitVector(v);
}

// ---------------------------------------------------------------------------
// Dense-grid product-minimum oracle for 2 (x) 2 operators.
//
// Scans a Fibonacci grid of Bloch angles on both sides, then refines locally
// with shrinking angular steps. Uses only the raw quadratic form, so it is
// independent of both the eigensolver and the see-saw.

inline double product_expectation_angles(const Matrix& h, double ta, double pa, double tb,
                                         double pb) {
  const Complex a0(std::cos(ta / 2), 0.0);
  const Complex a1 = std::polar(std::sin(ta / 2), pa);
  const Complex b0(std::cos(tb / 2), 0.0);
  const Complex b1 = std::polar(std::sin(tb / 2), pb);
  const std::array<Complex, 4> v{a0 * b0, a0 * b1, a1 * b0, a1 * b1};
  Complex acc(0, 0);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) acc += std::conj(v[r]) * h(r, c) * v[c];
  return acc.real();
}

inline double refine_pattern_search(const Matrix& h, std::array<double, 4> at, double value) {
  // Full 3^4 stencil so diagonal valleys cannot stall the search.
  double step = 0.35;
  while (step > 2e-7) {
    bool improved = false;
    std::array<double, 4> best_cand = at;
    double best_value = value;
    for (int mask = 0; mask < 81; ++mask) {
      int digits = mask;
      std::array<double, 4> cand = at;
      bool moves = false;
      for (int k = 0; k < 4; ++k) {
        const int d = digits % 3;
        digits /= 3;
        if (d == 1) {
          cand[k] += step;
          moves = true;
        } else if (d == 2) {
          cand[k] -= step;
          moves = true;
        }
      }
      if (!moves) continue;
      const double v = product_expectation_angles(h, cand[0], cand[1], cand[2], cand[3]);
      if (v < best_value - 1e-18) {
        best_value = v;
        best_cand = cand;
        improved = true;
      }
    }
    if (improved) {
      at = best_cand;
      value = best_value;
    } else {
      step *= 0.5;
    }
  }
  return value;
}

inline double grid_min_product(const HermitianOperator& op, int grid = 64) {
  const Matrix& h = op.matrix();
  constexpr double kGolden = 2.399963229728653;

  // Coarse scan; keep several basins, not just the single best point.
  constexpr int kKeep = 6;
  std::array<std::pair<double, std::array<double, 4>>, kKeep> top;
  top.fill({std::numeric_limits<double>::infinity(), {0, 0, 0, 0}});
  for (int i = 0; i < grid; ++i) {
    const double za = 1.0 - 2.0 * (i + 0.5) / grid;
    const double ta = std::acos(za);
    const double pa = kGolden * i;
    for (int j = 0; j < grid; ++j) {
      const double zb = 1.0 - 2.0 * (j + 0.5) / grid;
      const double tb = std::acos(zb);
      const double pb = kGolden * j;
      const double value = product_expectation_angles(h, ta, pa, tb, pb);
      if (value < top.back().first) {
        top.back() = {value, {ta, pa, tb, pb}};
        std::sort(top.begin(), top.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
      }
    }
  }

  double best = std::numeric_limits<double>::infinity();
  for (const auto& [value, at] : top)
    if (std::isfinite(value)) best = std::min(best, refine_pattern_search(h, at, value));
  return best;
}

// ---------------------------------------------------------------------------
// Characteristic polynomial via Faddeev-LeVerrier. Coefficients are real for
// Hermitian input; p(lambda) = sum_k coeff[k] lambda^k with coeff[n] = 1.

inline std::vector<double> char_poly(const Matrix& h) {
  const int n = static_cast<int>(h.rows());
  std::vector<double> coeff(n + 1, 0.0);
  coeff[n] = 1.0;
  Matrix m = Matrix::Identity(n, n);
  for (int k = 1; k <= n; ++k) {
    if (k > 1) m = (h * m + coeff[n - k + 1] * Matrix::Identity(n, n)).eval();
    coeff[n - k] = -(h * m).trace().real() / k;
  }
  return coeff;
}

inline double eval_poly(const std::vector<double>& coeff, double x) {
  double acc = 0.0;
  for (int k = static_cast<int>(coeff.size()) - 1; k >= 0; --k) acc = acc * x + coeff[k];
  return acc;
}

}  // namespace pidisc::testing

#endif  // PIDISC_TEST_SUPPORT_HPP
