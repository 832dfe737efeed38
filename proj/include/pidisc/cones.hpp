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

#ifndef PIDISC_CONES_HPP
#define PIDISC_CONES_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "pidisc/hermitian.hpp"

namespace pidisc {

enum class Cone { kPsd, kSepStar, kEw };
enum class Membership { kIn, kOut };
enum class Confidence { kCertified, kHeuristic };

std::string to_string(Cone c);
std::string to_string(Membership m);
std::string to_string(Confidence c);

/// Decision for one cone membership question.
///
/// margin is the smallest eigenvalue for the PSD cone and the smallest
/// product expectation found for SEP*. Whenever status is kOut the witness
/// vector is present and <witness|H|witness> reproduces margin.
///
/// Confidence semantics: PSD verdicts are always certified (spectral).
/// SEP*-IN is heuristic — the see-saw can only fail to find a violating
/// product state, it cannot prove none exists. SEP*-OUT is certified by the
/// explicit product witness.
struct ConeVerdict {
  Cone cone;
  Membership status;
  double margin;
  std::optional<UnitVector> witness;
  Confidence confidence;

  bool in() const { return status == Membership::kIn; }
};

/// Multi-start see-saw configuration. Half the starts are random, half come
/// from a Fibonacci-sphere grid on the B Bloch sphere when dim_b == 2
/// (all random otherwise). Runs are reproducible for a fixed seed.
struct SeesawParams {
  int starts = 64;
  int max_iters = 200;
  double convergence_tol = 1e-12;
  std::uint64_t seed = 0;
};

/// PSD cone test: IN iff the smallest eigenvalue is >= -tol.
ConeVerdict in_psd(const HermitianOperator& h, double tol = 1e-9);

struct ProductMinResult {
  double value;
  UnitVector a;
  UnitVector b;
};

/// Best product expectation <a (x) b|H|a (x) b> found by alternating
/// eigenvector descent (fix b, minimize over a; then fix a, minimize over b).
/// The result is an upper bound on the true product minimum.
ProductMinResult min_product_expectation(const HermitianOperator& h,
                                         const SeesawParams& params = {});

/// Block-positivity (SEP*) test. OUT is certified by the product witness;
/// IN means the see-saw found no product expectation below -tol.
ConeVerdict in_sep_star(const HermitianOperator& h, double tol = 1e-9,
                        const SeesawParams& params = {});

/// Entanglement-witness test: IN iff SEP*-IN and PSD-OUT. An IN verdict
/// carries the negative-eigenvalue eigenvector (an entangled state the
/// operator detects).
ConeVerdict is_ew(const HermitianOperator& h, double tol = 1e-9,
                  const SeesawParams& params = {});

/// Spectral split W = W_plus - W_minus with both parts PSD and
/// Tr(W_plus W_minus) = 0. Eigenvalues within 1e-12 of zero join neither part.
struct PositivePartSplit {
  HermitianOperator plus;
  HermitianOperator minus;
};
PositivePartSplit positive_part_split(const HermitianOperator& w);

}  // namespace pidisc

#endif  // PIDISC_CONES_HPP
