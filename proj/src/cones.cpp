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

#include "pidisc/cones.hpp"

#include <cmath>
#include <limits>

#include "pidisc/rng.hpp"

namespace pidisc {

std::string to_string(Cone c) {
  switch (c) {
    case Cone::kPsd: return "PSD";
    case Cone::kSepStar: return "SEP_STAR";
    case Cone::kEw: return "EW";
  }
  return "?";
}

std::string to_string(Membership m) { return m == Membership::kIn ? "IN" : "OUT"; }

std::string to_string(Confidence c) {
  return c == Confidence::kCertified ? "CERTIFIED" : "HEURISTIC";
}

ConeVerdict in_psd(const HermitianOperator& h, double tol) {
  const Eigensystem es = eig_hermitian(h);
  const double lambda_min = es.min_eigenvalue();
  ConeVerdict verdict;
  verdict.cone = Cone::kPsd;
  verdict.margin = lambda_min;
  verdict.confidence = Confidence::kCertified;
  if (lambda_min >= -tol) {
    verdict.status = Membership::kIn;
  } else {
    verdict.status = Membership::kOut;
    verdict.witness = es.eigenvector(0);
  }
  return verdict;
}

namespace {

Vector random_unit(int dim, SplitMix64& rng) {
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(rng.normal(), rng.normal());
  return v;
}

// Qubit state at the k-th of m Fibonacci-sphere points on the Bloch sphere.
Vector fibonacci_qubit(int k, int m) {
  const double z = 1.0 - 2.0 * (k + 0.5) / m;
  const double theta = std::acos(std::clamp(z, -1.0, 1.0));
  const double golden = 2.399963229728653;  // 2*pi*(2 - phi)
  const double phi = golden * k;
  Vector v(2);
  v(0) = Complex(std::cos(theta / 2.0), 0.0);
  v(1) = std::polar(std::sin(theta / 2.0), phi);
  return v;
}

}  // namespace

ProductMinResult min_product_expectation(const HermitianOperator& h,
                                         const SeesawParams& params) {
  const int db = h.dim_b();
  const int starts = std::max(1, params.starts);
  const int max_iters = std::max(1, params.max_iters);
  const int grid_starts = (db == 2) ? starts / 2 : 0;

  double best = std::numeric_limits<double>::infinity();
  std::optional<UnitVector> best_a, best_b;

  for (int s = 0; s < starts; ++s) {
    SplitMix64 rng = SplitMix64::stream(params.seed, static_cast<std::uint64_t>(s));
    UnitVector b = (s < grid_starts) ? UnitVector(fibonacci_qubit(s, grid_starts))
                                     : UnitVector(random_unit(db, rng));
    std::optional<UnitVector> a;
    double value = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < max_iters; ++iter) {
      a = jacobi_eigensystem(partial_contraction_b(h, b).matrix()).eigenvector(0);
      const Eigensystem eb = jacobi_eigensystem(partial_contraction_a(h, *a).matrix());
      b = eb.eigenvector(0);
      const double next = eb.min_eigenvalue();
      if (value - next < params.convergence_tol) {
        value = next;
        break;
      }
      value = next;
    }
    if (!a) continue;
    // Re-evaluate through plain matrix arithmetic; this is the number any
    // OUT witness must reproduce.
    const double checked = expectation(h, tensor(*a, b));
    if (checked < best) {
      best = checked;
      best_a = *a;
      best_b = b;
    }
  }
  return ProductMinResult{best, *best_a, *best_b};
}

ConeVerdict in_sep_star(const HermitianOperator& h, double tol, const SeesawParams& params) {
  const ProductMinResult pm = min_product_expectation(h, params);
  ConeVerdict verdict;
  verdict.cone = Cone::kSepStar;
  verdict.margin = pm.value;
  if (pm.value < -tol) {
    verdict.status = Membership::kOut;
    verdict.witness = tensor(pm.a, pm.b);
    verdict.confidence = Confidence::kCertified;
  } else {
    verdict.status = Membership::kIn;
    verdict.confidence = Confidence::kHeuristic;
  }
  return verdict;
}

ConeVerdict is_ew(const HermitianOperator& h, double tol, const SeesawParams& params) {
  const ConeVerdict psd = in_psd(h, tol);
  if (psd.in()) {
    // PSD operators are not witnesses; report OUT with the spectral margin.
    ConeVerdict verdict;
    verdict.cone = Cone::kEw;
    verdict.status = Membership::kOut;
    verdict.margin = psd.margin;
    verdict.witness = eig_hermitian(h).eigenvector(0);
    verdict.confidence = Confidence::kCertified;
    return verdict;
  }
  const ConeVerdict sep = in_sep_star(h, tol, params);
  ConeVerdict verdict;
  verdict.cone = Cone::kEw;
  if (sep.in()) {
    verdict.status = Membership::kIn;
    verdict.margin = psd.margin;      // negative expectation on the witness state
    verdict.witness = psd.witness;    // entangled state the operator detects
    verdict.confidence = Confidence::kHeuristic;
  } else {
    verdict.status = Membership::kOut;  // not even block positive
    verdict.margin = sep.margin;
    verdict.witness = sep.witness;
    verdict.confidence = Confidence::kCertified;
  }
  return verdict;
}

PositivePartSplit positive_part_split(const HermitianOperator& w) {
  constexpr double kCut = 1e-12;
  const Eigensystem es = eig_hermitian(w);
  const int n = w.side();
  Matrix plus = Matrix::Zero(n, n);
  Matrix minus = Matrix::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    const double lambda = es.eigenvalues(k);
    if (lambda > kCut)
      plus += lambda * (es.eigenvectors.col(k) * es.eigenvectors.col(k).adjoint());
    else if (lambda < -kCut)
      minus += (-lambda) * (es.eigenvectors.col(k) * es.eigenvectors.col(k).adjoint());
  }
  return PositivePartSplit{HermitianOperator(w.dim_a(), w.dim_b(), plus),
                           HermitianOperator(w.dim_a(), w.dim_b(), minus)};
}

}  // namespace pidisc
