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

#include "pidisc/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace pidisc {

namespace {

constexpr double kPriorSumTol = 1e-10;
constexpr double kStateTol = 1e-10;

Vector qubit(Complex c0, Complex c1) {
  Vector v(2);
  v << c0, c1;
  return v;
}

HermitianOperator qubit_projector(const UnitVector& v) {
  return HermitianOperator::projector(2, 1, v);
}

/// |u><u| (x) |v><v| on C^2 (x) C^2.
HermitianOperator product_projector(const UnitVector& u, const UnitVector& v) {
  return tensor(qubit_projector(u), qubit_projector(v));
}

}  // namespace

StateEnsemble::StateEnsemble(std::vector<Item> items, std::vector<int> labels)
    : items_(std::move(items)), labels_(std::move(labels)) {
  if (items_.empty()) throw ValidationError("StateEnsemble: no states");
  if (labels_.empty()) {
    labels_.resize(items_.size());
    std::iota(labels_.begin(), labels_.end(), 1);
  }
  if (labels_.size() != items_.size())
    throw ValidationError("StateEnsemble: label count does not match state count");
  if (std::set<int>(labels_.begin(), labels_.end()).size() != labels_.size())
    throw ValidationError("StateEnsemble: duplicate labels");

  const int da = items_.front().state.dim_a();
  const int db = items_.front().state.dim_b();
  double prior_sum = 0.0;
  for (const Item& item : items_) {
    if (item.state.dim_a() != da || item.state.dim_b() != db)
      throw ValidationError("StateEnsemble: states live on different spaces");
    if (!(item.prior > 0.0) || item.prior > 1.0 + kPriorSumTol)
      throw ValidationError("StateEnsemble: priors must lie in (0, 1]");
    if (std::abs(item.state.trace() - 1.0) > kStateTol)
      throw ValidationError("StateEnsemble: state trace differs from 1");
    const double lambda_min = eig_hermitian(item.state).min_eigenvalue();
    if (lambda_min < -kStateTol)
      throw ValidationError("StateEnsemble: state has negative eigenvalue " +
                            std::to_string(lambda_min));
    prior_sum += item.prior;
  }
  if (std::abs(prior_sum - 1.0) > kPriorSumTol)
    throw ValidationError("StateEnsemble: priors sum to " + std::to_string(prior_sum) +
                          ", expected 1");
}

int StateEnsemble::index_of(int label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end())
    throw ValidationError("StateEnsemble: unknown label " + std::to_string(label));
  return static_cast<int>(it - labels_.begin());
}

HermitianOperator StateEnsemble::weighted(int label) const {
  const Item& item = items_[index_of(label)];
  return item.prior * item.state;
}

int PiContext::omega_index(std::pair<int, int> w) const {
  const auto it = std::find(omega.begin(), omega.end(), w);
  if (it == omega.end())
    throw ValidationError("PiContext: (" + std::to_string(w.first) + "," +
                          std::to_string(w.second) + ") is not in Omega_S");
  return static_cast<int>(it - omega.begin());
}

HermitianOperator PiContext::tilde_weighted(std::pair<int, int> w) const {
  const StateEnsemble::Item& item = tilde.items()[omega_index(w)];
  return item.prior * item.state;
}

bool PiContext::pi_bit_is_zero(int label) const {
  return std::find(s.begin(), s.end(), label) != s.end();
}

PiContext make_pi_context(const StateEnsemble& ensemble, const std::vector<int>& subset) {
  std::set<int> labels(ensemble.labels().begin(), ensemble.labels().end());
  std::set<int> s_set(subset.begin(), subset.end());
  if (s_set.empty()) throw ValidationError("make_pi_context: S is empty");
  if (s_set.size() != subset.size())
    throw ValidationError("make_pi_context: S contains duplicates");
  for (int label : s_set)
    if (!labels.count(label))
      throw ValidationError("make_pi_context: label " + std::to_string(label) +
                            " is not in the ensemble");
  if (s_set.size() == labels.size()) throw ValidationError("make_pi_context: S is all of Lambda");

  std::vector<int> s, sc;
  for (int label : ensemble.labels()) {
    if (s_set.count(label))
      s.push_back(label);
    else
      sc.push_back(label);
  }
  if (s.size() != sc.size())
    throw ValidationError(
        "make_pi_context: subensembles must have equal size (got |S| = " +
        std::to_string(s.size()) + ", |S^c| = " + std::to_string(sc.size()) +
        "); the averaged ensemble is normalized only for balanced partitions");

  std::vector<std::pair<int, int>> omega;
  std::vector<StateEnsemble::Item> tilde_items;
  for (int i : s) {
    for (int j : sc) {
      omega.emplace_back(i, j);
      const double ei = ensemble.prior(i);
      const double ej = ensemble.prior(j);
      const HermitianOperator mix =
          (1.0 / (ei + ej)) * (ensemble.weighted(i) + ensemble.weighted(j));
      tilde_items.push_back({0.5 * (ei + ej), mix});
    }
  }
  return PiContext{std::move(s), std::move(sc), std::move(omega),
                   StateEnsemble(std::move(tilde_items))};
}

namespace bell {

UnitVector phi_plus() {
  Vector v(4);
  v << 1, 0, 0, 1;
  return UnitVector(v);
}

UnitVector phi_minus() {
  Vector v(4);
  v << 1, 0, 0, -1;
  return UnitVector(v);
}

UnitVector psi_plus() {
  Vector v(4);
  v << 0, 1, 1, 0;
  return UnitVector(v);
}

UnitVector psi_minus() {
  Vector v(4);
  v << 0, 1, -1, 0;
  return UnitVector(v);
}

UnitVector plus() { return UnitVector(qubit(1, 1)); }
UnitVector minus() { return UnitVector(qubit(1, -1)); }

UnitVector xi(int sign) {
  return UnitVector(qubit(1, static_cast<double>(sign) * std::polar(1.0, M_PI / 4)));
}

UnitVector zeta(int sign) {
  return UnitVector(qubit(1, static_cast<double>(sign) * std::polar(1.0, -M_PI / 4)));
}

HermitianOperator phi_plus_projector() { return HermitianOperator::projector(2, 2, phi_plus()); }
HermitianOperator phi_minus_projector() { return HermitianOperator::projector(2, 2, phi_minus()); }
HermitianOperator psi_plus_projector() { return HermitianOperator::projector(2, 2, psi_plus()); }
HermitianOperator psi_minus_projector() { return HermitianOperator::projector(2, 2, psi_minus()); }

HermitianOperator phi_plus_pt() { return partial_transpose(phi_plus_projector()); }

}  // namespace bell

namespace {

StateEnsemble build_from_witness(const HermitianOperator& w, bool creating, double tol,
                                 const SeesawParams& params) {
  const ConeVerdict ew = is_ew(w, tol, params);
  if (!ew.in())
    throw ValidationError("example builder: the supplied operator is not an entanglement witness");

  const PositivePartSplit split = positive_part_split(w);
  const HermitianOperator& wp = split.plus;
  const HermitianOperator& wm = split.minus;
  const double tp = wp.trace();
  const double tm = wm.trace();

  // Unnormalized state bodies shared by both constructions.
  const HermitianOperator body1 = 2.0 * wp + wm;
  const HermitianOperator body3_annihilating = wp + 2.0 * wm;
  const HermitianOperator body2_creating = wp + wm;

  std::vector<StateEnsemble::Item> items;
  if (!creating) {
    const double denom = 4.0 * (tp + tm);
    items = {
        {body1.trace() / denom, (1.0 / body1.trace()) * body1},
        {tp / denom, (1.0 / tp) * wp},
        {body3_annihilating.trace() / denom, (1.0 / body3_annihilating.trace()) * body3_annihilating},
        {tm / denom, (1.0 / tm) * wm},
    };
  } else {
    const double denom = 4.0 * tp + 3.0 * tm;
    items = {
        {body1.trace() / denom, (1.0 / body1.trace()) * body1},
        {body2_creating.trace() / denom, (1.0 / body2_creating.trace()) * body2_creating},
        {tp / denom, (1.0 / tp) * wp},
        {tm / denom, (1.0 / tm) * wm},
    };
  }
  return StateEnsemble(std::move(items));
}

}  // namespace

StateEnsemble build_example1(const HermitianOperator& w, double tol, const SeesawParams& params) {
  return build_from_witness(w, /*creating=*/false, tol, params);
}

StateEnsemble build_example2(const HermitianOperator& w, double tol, const SeesawParams& params) {
  return build_from_witness(w, /*creating=*/true, tol, params);
}

StateEnsemble build_example3() {
  const UnitVector k0 = UnitVector(qubit(1, 0));
  const UnitVector k1 = UnitVector(qubit(0, 1));
  const HermitianOperator id = HermitianOperator::identity(2, 2);

  const HermitianOperator pp = product_projector(bell::plus(), bell::plus());
  const HermitianOperator mm = product_projector(bell::minus(), bell::minus());
  const HermitianOperator p00 = product_projector(k0, k0);
  const HermitianOperator p11 = product_projector(k1, k1);

  const HermitianOperator rho1 = (1.0 / 3) * pp + (1.0 / 3) * mm + (1.0 / 12) * id;
  const HermitianOperator rho2 = (1.0 / 6) * p00 + (1.0 / 6) * p11 + (1.0 / 3) * pp + (1.0 / 3) * mm;
  const HermitianOperator rho3 =
      (1.0 / 6) * (p00 + p11 + product_projector(bell::xi(+1), bell::xi(+1)) +
                   product_projector(bell::xi(-1), bell::xi(-1)) +
                   product_projector(bell::zeta(+1), bell::zeta(+1)) +
                   product_projector(bell::zeta(-1), bell::zeta(-1)));
  const HermitianOperator rho4 = 0.5 * pp + 0.5 * mm;

  return StateEnsemble({{3.0 / 7, rho1}, {3.0 / 14, rho2}, {3.0 / 14, rho3}, {1.0 / 7, rho4}});
}

StateEnsemble build_example4() {
  const UnitVector k0 = UnitVector(qubit(1, 0));
  const UnitVector k1 = UnitVector(qubit(0, 1));
  const HermitianOperator id = HermitianOperator::identity(2, 2);

  const HermitianOperator pp = product_projector(bell::plus(), bell::plus());
  const HermitianOperator mm = product_projector(bell::minus(), bell::minus());

  const HermitianOperator rho1 = 0.25 * pp + 0.25 * mm + 0.125 * id;
  const HermitianOperator rho2 = (1.0 / 6) * product_projector(k0, k1) +
                                 (1.0 / 6) * product_projector(k1, k0) + (1.0 / 3) * pp +
                                 (1.0 / 3) * mm;
  const HermitianOperator rho3 = (1.0 / 6) * product_projector(k0, k0) +
                                 (1.0 / 6) * product_projector(k1, k1) + (1.0 / 3) * pp +
                                 (1.0 / 3) * mm;
  const HermitianOperator rho4 = 0.25 * (product_projector(bell::xi(+1), bell::zeta(+1)) +
                                         product_projector(bell::xi(-1), bell::zeta(-1)) +
                                         product_projector(bell::zeta(+1), bell::xi(+1)) +
                                         product_projector(bell::zeta(-1), bell::xi(-1)));

  return StateEnsemble({{1.0 / 3, rho1}, {0.25, rho2}, {0.25, rho3}, {1.0 / 6, rho4}});
}

}  // namespace pidisc
