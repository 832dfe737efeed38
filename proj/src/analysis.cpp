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

#include "pidisc/analysis.hpp"

#include <algorithm>
#include <sstream>

namespace pidisc {

std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::kT1SepValue: return "T1_SEP_VALUE";
    case TheoremId::kT2Gap: return "T2_GAP";
    case TheoremId::kT3Premise: return "T3_PREMISE";
    case TheoremId::kT4Premise: return "T4_PREMISE";
    case TheoremId::kProp1: return "PROP1";
  }
  return "?";
}

std::string to_string(TriState t) {
  switch (t) {
    case TriState::kCertifiedYes: return "CERTIFIED_YES";
    case TriState::kCertifiedNo: return "CERTIFIED_NO";
    case TriState::kUnknown: return "UNKNOWN";
  }
  return "?";
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::kAnnihilates: return "ANNIHILATES";
    case Classification::kCreates: return "CREATES";
    case Classification::kPreservesNonlocality: return "PRESERVES_NONLOCALITY";
    case Classification::kPreservesLocality: return "PRESERVES_LOCALITY";
    case Classification::kInconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

namespace {

std::string pair_str(std::pair<int, int> w) {
  return "(" + std::to_string(w.first) + "," + std::to_string(w.second) + ")";
}

DifferenceCheck check_difference(const HermitianOperator& diff, std::vector<int> to,
                                 double tol, const SeesawParams& params) {
  DifferenceCheck check;
  check.to = std::move(to);
  check.psd = in_psd(diff, tol);
  if (!check.psd.in()) check.sep_star = in_sep_star(diff, tol, params);
  return check;
}

Confidence combine(Confidence a, Confidence b) {
  return (a == Confidence::kHeuristic || b == Confidence::kHeuristic)
             ? Confidence::kHeuristic
             : Confidence::kCertified;
}

// Shared evaluation of all tilde differences from mu.
std::vector<DifferenceCheck> tilde_checks(const PiContext& context, std::pair<int, int> mu,
                                          double tol, const SeesawParams& params) {
  const HermitianOperator mu_weighted = context.tilde_weighted(mu);
  std::vector<DifferenceCheck> checks;
  checks.reserve(context.omega.size());
  for (const auto& w : context.omega)
    checks.push_back(check_difference(mu_weighted - context.tilde_weighted(w),
                                      {w.first, w.second}, tol, params));
  return checks;
}

Confidence checks_confidence(const std::vector<DifferenceCheck>& checks) {
  Confidence c = Confidence::kCertified;
  for (const DifferenceCheck& check : checks)
    if (check.sep_star && check.sep_star->in()) c = Confidence::kHeuristic;
  return c;
}

}  // namespace

TheoremCertificate check_theorem1(const PiContext& context, std::pair<int, int> mu,
                                  double tol, const SeesawParams& params) {
  context.omega_index(mu);  // throws when mu is outside Omega_S
  TheoremCertificate cert;
  cert.theorem = TheoremId::kT1SepValue;
  cert.mu = {mu.first, mu.second};
  cert.checks = tilde_checks(context, mu, tol, params);
  cert.holds =
      std::all_of(cert.checks.begin(), cert.checks.end(),
                  [](const DifferenceCheck& c) { return c.sep_star_in(); });
  cert.confidence = checks_confidence(cert.checks);
  if (cert.holds) {
    std::ostringstream note;
    note << "all differences from mu=" << pair_str(mu)
         << " are block positive, so p_SEP^PI = 2*eta~_mu = "
         << 2.0 * context.tilde_prior(mu);
    cert.notes.push_back(note.str());
  }
  return cert;
}

TheoremCertificate check_theorem2(const PiContext& context, std::pair<int, int> mu,
                                  double tol, const SeesawParams& params) {
  TheoremCertificate cert = check_theorem1(context, mu, tol, params);
  if (!cert.holds)
    throw ValidationError("check_theorem2: the theorem-1 premise fails for mu=" + pair_str(mu));
  cert.theorem = TheoremId::kT2Gap;
  cert.notes.clear();

  std::vector<std::string> ew_names;
  for (const DifferenceCheck& check : cert.checks)
    if (check.is_ew()) ew_names.push_back(pair_str({check.to[0], check.to[1]}));

  cert.holds = !ew_names.empty();
  if (cert.holds) {
    std::string names;
    for (const std::string& n : ew_names) names += (names.empty() ? "" : ", ") + n;
    cert.notes.push_back("EW difference(s) at omega = " + names +
                         "; the witness measurement gives p_G^PI > 2*eta~_mu = p_SEP^PI");
    cert.confidence = Confidence::kHeuristic;  // p_SEP^PI = 2*eta~_mu rests on SEP*-IN legs
  } else {
    cert.notes.push_back(
        "no EW among the differences: all are PSD, hence "
        "p_L^PI = p_SEP^PI = p_G^PI = 2*eta~_mu");
    cert.confidence = Confidence::kCertified;  // PSD verdicts only
  }
  return cert;
}

namespace {

// Premise patterns for the two four-state theorems, expressed over the
// positional labels (l1, l2, l3, l4).
enum class Pattern { kPsd, kSepStar, kEwStrict };

TheoremCertificate check_four_state_premises(const StateEnsemble& ensemble, TheoremId id,
                                             const std::vector<std::pair<std::pair<int, int>, Pattern>>& premises,
                                             double tol, const SeesawParams& params) {
  if (ensemble.size() != 4)
    throw ValidationError(to_string(id) + ": the premise is stated for four-state ensembles");
  TheoremCertificate cert;
  cert.theorem = id;
  cert.holds = true;
  for (const auto& [pair, pattern] : premises) {
    const int li = ensemble.labels()[pair.first];
    const int lj = ensemble.labels()[pair.second];
    const HermitianOperator diff = ensemble.weighted(li) - ensemble.weighted(lj);
    DifferenceCheck check;
    check.to = {li, lj};
    check.psd = in_psd(diff, tol);
    bool ok = false;
    switch (pattern) {
      case Pattern::kPsd:
        ok = check.psd.in();
        break;
      case Pattern::kSepStar:
        if (!check.psd.in()) check.sep_star = in_sep_star(diff, tol, params);
        ok = check.sep_star_in();
        break;
      case Pattern::kEwStrict:
        if (!check.psd.in()) check.sep_star = in_sep_star(diff, tol, params);
        ok = check.is_ew();
        break;
    }
    cert.holds = cert.holds && ok;
    cert.checks.push_back(std::move(check));
  }
  cert.confidence = checks_confidence(cert.checks);
  return cert;
}

}  // namespace

TheoremCertificate check_theorem3_premises(const StateEnsemble& ensemble, double tol,
                                           const SeesawParams& params) {
  return check_four_state_premises(ensemble, TheoremId::kT3Premise,
                                   {{{0, 1}, Pattern::kPsd},
                                    {{0, 2}, Pattern::kEwStrict},
                                    {{1, 3}, Pattern::kSepStar},
                                    {{2, 3}, Pattern::kPsd}},
                                   tol, params);
}

TheoremCertificate check_theorem4_premises(const StateEnsemble& ensemble, double tol,
                                           const SeesawParams& params) {
  return check_four_state_premises(ensemble, TheoremId::kT4Premise,
                                   {{{0, 1}, Pattern::kPsd},
                                    {{0, 2}, Pattern::kPsd},
                                    {{1, 3}, Pattern::kPsd},
                                    {{2, 3}, Pattern::kEwStrict}},
                                   tol, params);
}

namespace {

// Base game: decide whether p_L < p_G, with certificates. The only certified
// locality route is PSD dominance (always-guess-mu is LOCC and optimal); the
// nonlocality route is Proposition-1 dominance with an EW difference.
SideReport analyze_base(const StateEnsemble& ensemble, const AnalysisOptions& options,
                        std::optional<double>* p_sep_out) {
  SideReport side;

  if (std::optional<int> mu = psd_dominant_index(ensemble, options.tol)) {
    TheoremCertificate cert;
    cert.theorem = TheoremId::kProp1;
    cert.mu = {*mu};
    for (int i : ensemble.labels()) {
      if (i == *mu) continue;
      DifferenceCheck check;
      check.to = {i};
      check.psd = in_psd(ensemble.weighted(*mu) - ensemble.weighted(i), options.tol);
      cert.checks.push_back(std::move(check));
    }
    cert.holds = true;
    cert.confidence = Confidence::kCertified;
    side.nonlocal = TriState::kCertifiedNo;
    side.certificate = std::move(cert);
    side.confidence = Confidence::kCertified;
    const double eta = ensemble.prior(*mu);
    side.chain = {
        "every eta_mu rho_mu - eta_i rho_i for mu=" + std::to_string(*mu) +
            " is PSD (certified), so always-guess-" + std::to_string(*mu) +
            " attains p_G = eta_mu = " + std::to_string(eta),
        "that strategy is the trivial measurement {M_mu = 1}, which is LOCC",
        "hence p_L = p_SEP = p_G = eta_mu and no nonlocality occurs"};
    *p_sep_out = eta;
    return side;
  }

  if (std::optional<SepStarDominance> dom =
          sep_star_dominant_index(ensemble, options.tol, options.seesaw)) {
    TheoremCertificate cert;
    cert.theorem = TheoremId::kProp1;
    cert.mu = {dom->mu};
    for (size_t k = 0; k < dom->psd_verdicts.size(); ++k) {
      DifferenceCheck check;
      check.to = {dom->psd_verdicts[k].first};
      check.psd = dom->psd_verdicts[k].second;
      if (!check.psd.in()) check.sep_star = dom->sep_star_verdicts[k].second;
      cert.checks.push_back(std::move(check));
    }
    cert.holds = dom->ew_found;
    cert.confidence = dom->confidence;
    const double eta = ensemble.prior(dom->mu);
    if (dom->ew_found) {
      std::string ew_names;
      for (int l : dom->ew_labels)
        ew_names += (ew_names.empty() ? "" : ", ") + std::to_string(l);
      cert.notes.push_back("EW difference(s) vs label(s) " + ew_names);
      side.nonlocal = TriState::kCertifiedYes;
      side.confidence = dom->confidence;
      side.chain = {
          "every eta_mu rho_mu - eta_i rho_i for mu=" + std::to_string(dom->mu) +
              " is block positive, so p_SEP = eta_mu = " + std::to_string(eta),
          "the EW difference admits an entangled |u> with negative expectation; "
          "the measurement {1 - |u><u|, |u><u|} gives p_G > eta_mu",
          "hence p_L <= p_SEP = eta_mu < p_G and nonlocality occurs"};
      side.certificate = std::move(cert);
      *p_sep_out = eta;
      return side;
    }
    // All differences PSD would have been caught above; reaching here with no
    // EW means nothing conclusive about p_L.
  }

  side.nonlocal = TriState::kUnknown;
  side.chain = {"no dominance pattern found: neither locality nor nonlocality certified"};
  return side;
}

// PI game: search Omega_S lexicographically for the first mu whose
// differences complete a theorem-1 pattern, then read the gap off theorem 2.
SideReport analyze_pi(const PiContext& context, const AnalysisOptions& options,
                      std::optional<double>* p_sep_pi_out,
                      std::optional<double>* witness_bound_out) {
  SideReport side;
  for (const auto& mu : context.omega) {
    std::vector<DifferenceCheck> checks =
        tilde_checks(context, mu, options.tol, options.seesaw);
    const bool all_sep = std::all_of(checks.begin(), checks.end(),
                                     [](const DifferenceCheck& c) { return c.sep_star_in(); });
    if (!all_sep) continue;
    const bool all_psd = std::all_of(checks.begin(), checks.end(),
                                     [](const DifferenceCheck& c) { return c.psd.in(); });

    TheoremCertificate cert;
    cert.theorem = TheoremId::kT2Gap;
    cert.mu = {mu.first, mu.second};
    cert.confidence = checks_confidence(checks);
    cert.checks = std::move(checks);
    const double two_eta = 2.0 * context.tilde_prior(mu);
    *p_sep_pi_out = two_eta;

    if (all_psd) {
      cert.holds = false;
      cert.notes.push_back("all differences from mu=" + pair_str(mu) + " are PSD");
      side.nonlocal = TriState::kCertifiedNo;
      side.confidence = Confidence::kCertified;
      side.chain = {
          "every tilde difference from mu=" + pair_str(mu) +
              " is PSD (certified), so p_G^PI = 2*eta~_mu = " + std::to_string(two_eta),
          "always-guess-" + pair_str(mu) + " is the trivial measurement {M_mu = 1}, which is LOCC",
          "hence p_L^PI = p_SEP^PI = p_G^PI and no nonlocality occurs with PI"};
      side.certificate = std::move(cert);
      return side;
    }

    // Theorem-1 pattern with at least one EW: a gap is certified modulo the
    // heuristic SEP*-IN legs. Pick the strongest witness bound.
    cert.holds = true;
    std::optional<WitnessBound> best;
    std::string ew_names;
    for (const DifferenceCheck& check : cert.checks) {
      if (!check.is_ew()) continue;
      const std::pair<int, int> w{check.to[0], check.to[1]};
      ew_names += (ew_names.empty() ? "" : ", ") + pair_str(w);
      if (std::optional<WitnessBound> b = pi_witness_lower_bound(context, mu, w))
        if (!best || b->bound > best->bound) best = b;
    }
    cert.notes.push_back("EW difference(s) at omega = " + ew_names);
    side.nonlocal = TriState::kCertifiedYes;
    side.confidence = cert.confidence;
    side.chain = {
        "every tilde difference from mu=" + pair_str(mu) +
            " is block positive, so p_SEP^PI = 2*eta~_mu = " + std::to_string(two_eta),
        "EW at omega in {" + ew_names +
            "}: the measurement {1 - |u><u|, |u><u|} on its negative eigenvector "
            "gives p_G^PI >= " +
            (best ? std::to_string(best->bound) : std::string("2*eta~_mu - 2*lambda_min")) +
            " > 2*eta~_mu",
        "hence p_L^PI <= p_SEP^PI < p_G^PI and nonlocality occurs with PI"};
    side.certificate = std::move(cert);
    if (best) *witness_bound_out = best->bound;
    return side;
  }

  side.nonlocal = TriState::kUnknown;
  side.chain = {"no mu in Omega_S satisfies the theorem-1 pattern: PI side undecided"};
  return side;
}

Classification classify_from_sides(TriState base, TriState pi) {
  if (base == TriState::kUnknown || pi == TriState::kUnknown)
    return Classification::kInconclusive;
  const bool base_nl = base == TriState::kCertifiedYes;
  const bool pi_nl = pi == TriState::kCertifiedYes;
  if (base_nl && !pi_nl) return Classification::kAnnihilates;
  if (!base_nl && pi_nl) return Classification::kCreates;
  if (base_nl && pi_nl) return Classification::kPreservesNonlocality;
  return Classification::kPreservesLocality;
}

}  // namespace

PiReport classify(const StateEnsemble& ensemble, const std::vector<int>& subset,
                  const AnalysisOptions& options) {
  PiReport report;
  report.subset = subset;

  report.base = analyze_base(ensemble, options, &report.p_sep);

  const PiContext context = make_pi_context(ensemble, subset);
  report.pi = analyze_pi(context, options, &report.p_sep_pi, &report.witness_bound);

  report.classification = classify_from_sides(report.base.nonlocal, report.pi.nonlocal);
  report.confidence = combine(report.base.confidence, report.pi.confidence);

  const DiscriminationResult base_solution =
      solve_me(ensemble, options.solver_max_iters, options.solver_tol);
  report.p_g = base_solution.value;
  report.p_g_certified = base_solution.converged;

  const DiscriminationResult tilde_solution =
      solve_me(context.tilde, options.solver_max_iters, options.solver_tol);
  report.p_g_pi = 2.0 * tilde_solution.value;
  report.p_g_pi_certified = tilde_solution.converged;

  return report;
}

}  // namespace pidisc
