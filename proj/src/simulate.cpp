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

#include "pidisc/simulate.hpp"

#include <algorithm>
#include <cmath>

#include "pidisc/rng.hpp"

namespace pidisc {

namespace {

constexpr double kPovmTol = 1e-9;

void validate_strategy(const PiContext& context, const PiStrategy& strategy) {
  const size_t n = context.omega.size();
  if (strategy.povm.size() != n)
    throw ValidationError("PiStrategy: expected one POVM element per Omega_S outcome");
  const HermitianOperator& first = strategy.povm.front();
  Matrix sum = Matrix::Zero(first.side(), first.side());
  for (const HermitianOperator& m : strategy.povm) {
    if (m.dim_a() != first.dim_a() || m.dim_b() != first.dim_b())
      throw ValidationError("PiStrategy: POVM elements on mismatched spaces");
    if (eig_hermitian(m).min_eigenvalue() < -kPovmTol)
      throw ValidationError("PiStrategy: POVM element has a negative eigenvalue");
    sum += m.matrix();
  }
  if ((sum - Matrix::Identity(first.side(), first.side())).cwiseAbs().maxCoeff() > kPovmTol)
    throw ValidationError("PiStrategy: POVM elements do not sum to the identity");
}

}  // namespace

PiStrategy trivial_strategy(const PiContext& context, std::pair<int, int> mu) {
  const int mu_index = context.omega_index(mu);
  const int da = context.tilde.dim_a();
  const int db = context.tilde.dim_b();
  PiStrategy strategy;
  for (size_t k = 0; k < context.omega.size(); ++k)
    strategy.povm.push_back(static_cast<int>(k) == mu_index
                                ? HermitianOperator::identity(da, db)
                                : HermitianOperator::zero(da, db));
  return strategy;
}

PiStrategy witness_strategy(const PiContext& context, const WitnessBound& bound) {
  const int mu_index = context.omega_index(bound.mu);
  const int star_index = context.omega_index(bound.omega_star);
  if (mu_index == star_index)
    throw ValidationError("witness_strategy: mu and omega_star must differ");
  const int da = context.tilde.dim_a();
  const int db = context.tilde.dim_b();
  const HermitianOperator uu = HermitianOperator::projector(da, db, bound.u);
  PiStrategy strategy;
  for (size_t k = 0; k < context.omega.size(); ++k) {
    if (static_cast<int>(k) == mu_index)
      strategy.povm.push_back(HermitianOperator::identity(da, db) - uu);
    else if (static_cast<int>(k) == star_index)
      strategy.povm.push_back(uu);
    else
      strategy.povm.push_back(HermitianOperator::zero(da, db));
  }
  return strategy;
}

PiStrategy measurement_strategy(const DiscriminationResult& result) {
  return PiStrategy{result.measurement};
}

double strategy_success_probability(const StateEnsemble& ensemble, const PiContext& context,
                                    const PiStrategy& strategy) {
  validate_strategy(context, strategy);
  double total = 0.0;
  for (int label : ensemble.labels()) {
    const bool bit_zero = context.pi_bit_is_zero(label);
    double win = 0.0;
    for (size_t k = 0; k < context.omega.size(); ++k) {
      const auto& w = context.omega[k];
      if ((bit_zero && w.first == label) || (!bit_zero && w.second == label))
        win += inner(ensemble.state(label), strategy.povm[k]);
    }
    total += ensemble.prior(label) * win;
  }
  return total;
}

SimulationResult simulate(const StateEnsemble& ensemble, const PiContext& context,
                          const PiStrategy& strategy, std::int64_t trials,
                          std::uint64_t seed) {
  if (trials <= 0) throw ValidationError("simulate: trials must be positive");
  validate_strategy(context, strategy);

  const int n = ensemble.size();
  const int m = static_cast<int>(context.omega.size());

  // Cumulative prior distribution and per-state cumulative outcome tables.
  std::vector<double> prior_cdf(n);
  std::vector<std::vector<double>> outcome_cdf(n, std::vector<double>(m));
  std::vector<std::vector<bool>> wins(n, std::vector<bool>(m));
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const int label = ensemble.labels()[i];
    acc += ensemble.items()[i].prior;
    prior_cdf[i] = acc;
    double run = 0.0;
    for (int k = 0; k < m; ++k) {
      run += std::max(0.0, inner(ensemble.items()[i].state, strategy.povm[k]));
      outcome_cdf[i][k] = run;
      const auto& w = context.omega[k];
      wins[i][k] = context.pi_bit_is_zero(label) ? (w.first == label) : (w.second == label);
    }
    // run equals Tr(rho_i) = 1 up to roundoff; renormalize the tail.
    for (int k = 0; k < m; ++k) outcome_cdf[i][k] /= run;
  }
  prior_cdf[n - 1] = 1.0;

  constexpr std::int64_t kBlock = 1 << 16;
  std::int64_t successes = 0;
  std::int64_t done = 0;
  for (std::uint64_t block = 0; done < trials; ++block) {
    SplitMix64 rng = SplitMix64::stream(seed, block);
    const std::int64_t count = std::min(kBlock, trials - done);
    for (std::int64_t t = 0; t < count; ++t) {
      const double u = rng.uniform();
      int i = 0;
      while (i < n - 1 && u >= prior_cdf[i]) ++i;
      const double v = rng.uniform();
      int k = 0;
      while (k < m - 1 && v >= outcome_cdf[i][k]) ++k;
      successes += wins[i][k] ? 1 : 0;
    }
    done += count;
  }

  SimulationResult result;
  result.trials = trials;
  result.successes = successes;
  result.estimate = static_cast<double>(successes) / static_cast<double>(trials);
  result.standard_error =
      std::sqrt(std::max(0.0, result.estimate * (1.0 - result.estimate)) /
                static_cast<double>(trials));
  result.analytic = strategy_success_probability(ensemble, context, strategy);
  result.seed = seed;
  return result;
}

}  // namespace pidisc
