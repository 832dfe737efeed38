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

#ifndef PIDISC_DISCRIMINATION_HPP
#define PIDISC_DISCRIMINATION_HPP

#include <optional>
#include <utility>
#include <vector>

#include "pidisc/cones.hpp"
#include "pidisc/ensemble.hpp"
#include "pidisc/hermitian.hpp"

namespace pidisc {

/// Outcome of the iterative minimum-error solver.
///
/// value is the success probability of the returned POVM, hence always a
/// valid lower bound on the optimum. converged means every dual margin
/// lambda_min(Y - eta_i rho_i) cleared -tol, which certifies global
/// optimality of value up to dim*tol (Y is the symmetrized Sum_i
/// eta_i rho_i M_i; the margins are the Holevo-Yuen-Kennedy-Lax test).
struct DiscriminationResult {
  double value = 0.0;
  std::vector<HermitianOperator> measurement;
  HermitianOperator dual_operator = HermitianOperator::zero(1, 1);
  std::vector<double> dual_margins;
  bool converged = false;
  int iterations = 0;
  std::vector<double> objective_trace;  // success probability per iteration

  double min_dual_margin() const;
};

/// Closed-form two-state optimum on the weighted operators eta_i rho_i:
///   (Tr(eta1 rho1) + Tr(eta2 rho2))/2 + ||eta1 rho1 - eta2 rho2||_1 / 2.
/// Inputs must be PSD with traces summing to 1.
double helstrom_two(const HermitianOperator& eta1_rho1, const HermitianOperator& eta2_rho2);

/// Iterative minimum-error discrimination. Fixed-point POVM update
///   M_i <- G^{-1/2} (eta_i rho_i) M_i (eta_i rho_i) G^{-1/2},
///   G = Sum_j (eta_j rho_j) M_j (eta_j rho_j),
/// seeded from the uniform POVM M_i = 1/n, with pseudo-inverse square roots
/// (eigenvalues below 1e-12 treated as zero) and the support complement
/// redistributed so completeness holds on rank-deficient ensembles.
/// Non-convergence is reported, never thrown.
DiscriminationResult solve_me(const StateEnsemble& ensemble, int max_iters = 20000,
                              double tol = 1e-8);

/// Label mu with eta_mu rho_mu - eta_i rho_i PSD for every i, if one exists
/// (smallest label wins ties). When present, always-guess-mu is globally
/// optimal and LOCC, so p_L = p_G = eta_mu.
std::optional<int> psd_dominant_index(const StateEnsemble& ensemble, double tol = 1e-9);

struct SepStarDominance {
  int mu;
  bool ew_found;
  std::vector<int> ew_labels;
  /// Per-label cone information for the differences eta_mu rho_mu - eta_i rho_i.
  std::vector<std::pair<int, ConeVerdict>> psd_verdicts;
  std::vector<std::pair<int, ConeVerdict>> sep_star_verdicts;
  Confidence confidence;
};

/// Label mu whose differences are all block positive, if one exists. Under
/// that premise p_SEP = eta_mu, and an EW among the differences holds iff
/// p_SEP < p_G.
std::optional<SepStarDominance> sep_star_dominant_index(const StateEnsemble& ensemble,
                                                        double tol = 1e-9,
                                                        const SeesawParams& params = {});

struct PiValues {
  double pg_pi;  // 2 * p_G(tilde)
  DiscriminationResult result;
  PiContext context;
};

/// p_G with postmeasurement information about S: twice the plain optimum of
/// the averaged ensemble, measurement indexed by Omega_S.
PiValues pi_values(const StateEnsemble& ensemble, const std::vector<int>& subset,
                   int max_iters = 20000, double tol = 1e-8);

/// Certified lower bound on p_G^PI from a two-outcome measurement built on
/// the most negative eigenvector u of D = eta~_mu rho~_mu - eta~_w* rho~_w*:
///   bound = 2 eta~_mu - 2 lambda_min(D),
/// achieved by {M_mu = 1 - |u><u|, M_w* = |u><u|}. Empty when D is PSD
/// (no bound available from this pair, which is a signal, not a failure).
struct WitnessBound {
  double bound;
  double lambda_min;
  UnitVector u;
  std::pair<int, int> mu;
  std::pair<int, int> omega_star;
};
std::optional<WitnessBound> pi_witness_lower_bound(const PiContext& context,
                                                   std::pair<int, int> mu,
                                                   std::pair<int, int> omega_star);

}  // namespace pidisc

#endif  // PIDISC_DISCRIMINATION_HPP
