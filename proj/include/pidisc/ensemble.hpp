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

#ifndef PIDISC_ENSEMBLE_HPP
#define PIDISC_ENSEMBLE_HPP

#include <utility>
#include <vector>

#include "pidisc/cones.hpp"
#include "pidisc/hermitian.hpp"

namespace pidisc {

/// Prior/state pairs {eta_i, rho_i} over an ordered label set.
///
/// Validation at construction: priors in (0, 1] summing to 1 within 1e-10,
/// every state PSD (lambda_min >= -1e-10) with unit trace within 1e-10, all
/// states on the same declared bipartite split. Immutable afterwards.
class StateEnsemble {
 public:
  struct Item {
    double prior;
    HermitianOperator state;
  };

  StateEnsemble(std::vector<Item> items, std::vector<int> labels = {});

  int size() const { return static_cast<int>(items_.size()); }
  const std::vector<Item>& items() const { return items_; }
  const std::vector<int>& labels() const { return labels_; }

  /// Index of a label in the ordered label list; throws if absent.
  int index_of(int label) const;
  double prior(int label) const { return items_[index_of(label)].prior; }
  const HermitianOperator& state(int label) const { return items_[index_of(label)].state; }
  /// eta_i * rho_i for a label.
  HermitianOperator weighted(int label) const;

  int dim_a() const { return items_.front().state.dim_a(); }
  int dim_b() const { return items_.front().state.dim_b(); }

 private:
  std::vector<Item> items_;
  std::vector<int> labels_;
};

/// One PI partition of an ensemble: subset S, its complement, the outcome
/// grid Omega_S = S x S^c in lexicographic order, and the averaged (tilde)
/// ensemble over Omega_S with
///   eta~_w  = (eta_w0 + eta_w1) / 2,
///   rho~_w  = (eta_w0 rho_w0 + eta_w1 rho_w1) / (eta_w0 + eta_w1).
/// Only balanced partitions (|S| = |S^c|) produce a normalized tilde
/// ensemble, so others are rejected at construction.
struct PiContext {
  std::vector<int> s;
  std::vector<int> s_complement;
  std::vector<std::pair<int, int>> omega;
  StateEnsemble tilde;

  int omega_index(std::pair<int, int> w) const;
  double tilde_prior(std::pair<int, int> w) const { return tilde.items()[omega_index(w)].prior; }
  /// eta~_w * rho~_w.
  HermitianOperator tilde_weighted(std::pair<int, int> w) const;
  /// True when the label belongs to S (PI bit 0).
  bool pi_bit_is_zero(int label) const;
};

PiContext make_pi_context(const StateEnsemble& ensemble, const std::vector<int>& subset);

/// The standard two-qubit fixtures: Bell projectors, |+->, and the
/// pi/4-phase states xi+- and zeta+- used by the separable-state examples.
namespace bell {

UnitVector phi_plus();
UnitVector phi_minus();
UnitVector psi_plus();
UnitVector psi_minus();
UnitVector plus();
UnitVector minus();
UnitVector xi(int sign);    // (|0> + sign e^{+i pi/4}|1>)/sqrt(2)
UnitVector zeta(int sign);  // (|0> + sign e^{-i pi/4}|1>)/sqrt(2)

HermitianOperator phi_plus_projector();
HermitianOperator phi_minus_projector();
HermitianOperator psi_plus_projector();
HermitianOperator psi_minus_projector();
/// Partial transpose of the Phi+ projector: the canonical two-qubit witness.
HermitianOperator phi_plus_pt();

}  // namespace bell

/// Four-state ensemble derived from an entanglement witness W = W+ - W-,
/// built so that PI_{1,2} annihilates nonlocality while PI_{1,3} does not.
/// Throws unless W certifies as an EW.
StateEnsemble build_example1(const HermitianOperator& w, double tol = 1e-9,
                             const SeesawParams& params = {});

/// Companion construction where PI_{1,2} creates nonlocality while PI_{1,3}
/// does not. Same witness requirement.
StateEnsemble build_example2(const HermitianOperator& w, double tol = 1e-9,
                             const SeesawParams& params = {});

/// Separable two-qubit ensemble with priors (3/7, 3/14, 3/14, 1/7) whose
/// nonlocality is annihilated by PI_{1,2} but not by PI_{1,3}.
StateEnsemble build_example3();

/// Separable two-qubit ensemble with priors (1/3, 1/4, 1/4, 1/6) where
/// PI_{1,2} creates nonlocality but PI_{1,3} does not.
StateEnsemble build_example4();

}  // namespace pidisc

#endif  // PIDISC_ENSEMBLE_HPP
