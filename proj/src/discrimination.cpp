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

#include "pidisc/discrimination.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pidisc {

namespace {

constexpr double kPinvCut = 1e-12;  // eigenvalues below this count as zero

// Pseudo-inverse square root plus the projector onto the support.
struct InvSqrt {
  Matrix inv_sqrt;
  Matrix support;
};

InvSqrt pseudo_inv_sqrt(const Matrix& g) {
  const Eigensystem es = jacobi_eigensystem(g);
  const int n = static_cast<int>(g.rows());
  Matrix inv_sqrt = Matrix::Zero(n, n);
  Matrix support = Matrix::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    const double lambda = es.eigenvalues(k);
    if (lambda > kPinvCut) {
      const Matrix vv = es.eigenvectors.col(k) * es.eigenvectors.col(k).adjoint();
      inv_sqrt += vv / std::sqrt(lambda);
      support += vv;
    }
  }
  return {std::move(inv_sqrt), std::move(support)};
}

}  // namespace

double DiscriminationResult::min_dual_margin() const {
  double m = std::numeric_limits<double>::infinity();
  for (double margin : dual_margins) m = std::min(m, margin);
  return m;
}

double helstrom_two(const HermitianOperator& eta1_rho1, const HermitianOperator& eta2_rho2) {
  if (eta1_rho1.dim_a() != eta2_rho2.dim_a() || eta1_rho1.dim_b() != eta2_rho2.dim_b())
    throw ValidationError("helstrom_two: dimension mismatch");
  for (const HermitianOperator* op : {&eta1_rho1, &eta2_rho2})
    if (eig_hermitian(*op).min_eigenvalue() < -1e-9)
      throw ValidationError("helstrom_two: inputs must be PSD");
  const double t1 = eta1_rho1.trace();
  const double t2 = eta2_rho2.trace();
  if (std::abs(t1 + t2 - 1.0) > 1e-8)
    throw ValidationError("helstrom_two: traces must sum to 1");
  return 0.5 * (t1 + t2) + 0.5 * trace_norm(eta1_rho1 - eta2_rho2);
}

DiscriminationResult solve_me(const StateEnsemble& ensemble, int max_iters, double tol) {
  const int n = ensemble.size();
  const int d = ensemble.dim_a() * ensemble.dim_b();
  const Matrix id = Matrix::Identity(d, d);

  std::vector<Matrix> p(n);
  for (int i = 0; i < n; ++i)
    p[i] = ensemble.items()[i].prior * ensemble.items()[i].state.matrix();

  std::vector<Matrix> m(n, id / static_cast<double>(n));

  // The trivial always-guess strategy pins the floor of the sandwich
  // max eta <= value <= 1; convergence requires clearing it as well.
  int max_prior_index = 0;
  for (int i = 1; i < n; ++i)
    if (ensemble.items()[i].prior > ensemble.items()[max_prior_index].prior)
      max_prior_index = i;
  const double trivial_floor = ensemble.items()[max_prior_index].prior;

  DiscriminationResult result;
  auto evaluate = [&](bool final_pass) {
    Matrix y = Matrix::Zero(d, d);
    for (int i = 0; i < n; ++i) y += p[i] * m[i];
    y = 0.5 * (y + y.adjoint().eval());
    result.value = y.trace().real();
    result.dual_margins.resize(n);
    bool ok = true;
    for (int i = 0; i < n; ++i) {
      result.dual_margins[i] = jacobi_eigensystem(y - p[i]).min_eigenvalue();
      ok = ok && result.dual_margins[i] >= -tol;
    }
    if (final_pass) {
      result.dual_operator = HermitianOperator(ensemble.dim_a(), ensemble.dim_b(), y);
      result.measurement.clear();
      result.measurement.reserve(n);
      for (int i = 0; i < n; ++i)
        result.measurement.push_back(
            HermitianOperator(ensemble.dim_a(), ensemble.dim_b(), m[i]));
    }
    return ok;
  };

  int iter = 0;
  for (; iter < max_iters; ++iter) {
    const bool margins_ok = evaluate(false);
    result.objective_trace.push_back(result.value);
    if (margins_ok && result.value >= trivial_floor - 1e-10) {
      result.converged = true;
      break;
    }
    Matrix g = Matrix::Zero(d, d);
    for (int i = 0; i < n; ++i) g += p[i] * m[i] * p[i];
    g = 0.5 * (g + g.adjoint().eval());
    const InvSqrt gi = pseudo_inv_sqrt(g);
    const Matrix rest = (id - gi.support) / static_cast<double>(n);
    for (int i = 0; i < n; ++i) {
      Matrix next = gi.inv_sqrt * (p[i] * m[i] * p[i]) * gi.inv_sqrt + rest;
      m[i] = 0.5 * (next + next.adjoint().eval());
    }
  }
  evaluate(true);
  if (!result.converged && result.value < trivial_floor) {
    // The iteration cap left a worse-than-trivial answer; return the trivial
    // strategy instead, with its own margins.
    for (int i = 0; i < n; ++i) m[i] = (i == max_prior_index) ? id : Matrix::Zero(d, d);
    evaluate(true);
  }
  if (!result.converged)
    result.converged =
        result.min_dual_margin() >= -tol && result.value >= trivial_floor - 1e-10;
  result.iterations = iter;
  return result;
}

std::optional<int> psd_dominant_index(const StateEnsemble& ensemble, double tol) {
  for (int mu : ensemble.labels()) {
    bool dominant = true;
    for (int i : ensemble.labels()) {
      if (i == mu) continue;
      if (!in_psd(ensemble.weighted(mu) - ensemble.weighted(i), tol).in()) {
        dominant = false;
        break;
      }
    }
    if (dominant) return mu;
  }
  return std::nullopt;
}

std::optional<SepStarDominance> sep_star_dominant_index(const StateEnsemble& ensemble,
                                                        double tol,
                                                        const SeesawParams& params) {
  for (int mu : ensemble.labels()) {
    SepStarDominance dom;
    dom.mu = mu;
    dom.ew_found = false;
    dom.confidence = Confidence::kCertified;
    bool dominant = true;
    for (int i : ensemble.labels()) {
      if (i == mu) continue;
      const HermitianOperator diff = ensemble.weighted(mu) - ensemble.weighted(i);
      const ConeVerdict psd = in_psd(diff, tol);
      dom.psd_verdicts.emplace_back(i, psd);
      if (psd.in()) {
        // H+ is inside SEP*, so this leg is certified without the see-saw.
        ConeVerdict sep = psd;
        sep.cone = Cone::kSepStar;
        dom.sep_star_verdicts.emplace_back(i, sep);
        continue;
      }
      const ConeVerdict sep = in_sep_star(diff, tol, params);
      dom.sep_star_verdicts.emplace_back(i, sep);
      if (!sep.in()) {
        dominant = false;
        break;
      }
      dom.ew_found = true;
      dom.ew_labels.push_back(i);
      dom.confidence = Confidence::kHeuristic;
    }
    if (dominant) return dom;
  }
  return std::nullopt;
}

PiValues pi_values(const StateEnsemble& ensemble, const std::vector<int>& subset,
                   int max_iters, double tol) {
  PiContext context = make_pi_context(ensemble, subset);
  DiscriminationResult result = solve_me(context.tilde, max_iters, tol);
  const double pg_pi = 2.0 * result.value;
  return PiValues{pg_pi, std::move(result), std::move(context)};
}

std::optional<WitnessBound> pi_witness_lower_bound(const PiContext& context,
                                                   std::pair<int, int> mu,
                                                   std::pair<int, int> omega_star) {
  const HermitianOperator d = context.tilde_weighted(mu) - context.tilde_weighted(omega_star);
  const Eigensystem es = eig_hermitian(d);
  const double lambda_min = es.min_eigenvalue();
  if (lambda_min >= -1e-12) return std::nullopt;  // PSD up to numerical zero: no bound
  const double bound = 2.0 * context.tilde_prior(mu) - 2.0 * lambda_min;
  return WitnessBound{bound, lambda_min, es.eigenvector(0), mu, omega_star};
}

}  // namespace pidisc
