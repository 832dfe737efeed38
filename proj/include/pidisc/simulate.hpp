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

#ifndef PIDISC_SIMULATE_HPP
#define PIDISC_SIMULATE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "pidisc/discrimination.hpp"
#include "pidisc/ensemble.hpp"

namespace pidisc {

/// A guessing strategy for the PI game: one POVM element per Omega_S outcome
/// (aligned with context.omega). The guess rule is fixed by the game —
/// outcome w answers rho_{w0} when the PI bit is 0 and rho_{w1} when it is 1.
struct PiStrategy {
  std::vector<HermitianOperator> povm;
};

/// Always-guess-mu: M_mu = 1, every other element zero.
PiStrategy trivial_strategy(const PiContext& context, std::pair<int, int> mu);

/// Two-outcome witness measurement {M_mu = 1 - |u><u|, M_w* = |u><u|} built
/// from a pi_witness_lower_bound result; attains exactly that bound.
PiStrategy witness_strategy(const PiContext& context, const WitnessBound& bound);

/// Wraps a solve_me measurement on the tilde ensemble as an Omega_S strategy.
PiStrategy measurement_strategy(const DiscriminationResult& result);

/// Exact success probability of a strategy in the PI game,
///   Sum_{i in S} eta_i Tr[rho_i Sum_j M_(i,j)] + Sum_{i in S^c} eta_i Tr[rho_i Sum_j M_(j,i)].
double strategy_success_probability(const StateEnsemble& ensemble, const PiContext& context,
                                    const PiStrategy& strategy);

struct SimulationResult {
  std::int64_t trials = 0;
  std::int64_t successes = 0;
  double estimate = 0.0;
  double standard_error = 0.0;
  double analytic = 0.0;
  std::uint64_t seed = 0;
};

/// Monte Carlo run of the PI guessing game: sample i ~ eta, reveal the PI
/// bit, sample w ~ Tr(rho_i M_w), score a success when w_b = i. Trial blocks
/// draw from split SplitMix64 streams, so results replay exactly per seed.
SimulationResult simulate(const StateEnsemble& ensemble, const PiContext& context,
                          const PiStrategy& strategy, std::int64_t trials,
                          std::uint64_t seed);

}  // namespace pidisc

#endif  // PIDISC_SIMULATE_HPP
