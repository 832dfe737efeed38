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

#ifndef PIDISC_ANALYSIS_HPP
#define PIDISC_ANALYSIS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pidisc/discrimination.hpp"
#include "pidisc/ensemble.hpp"

namespace pidisc {

enum class TheoremId { kT1SepValue, kT2Gap, kT3Premise, kT4Premise, kProp1 };
std::string to_string(TheoremId id);

/// Cone information for one difference operator of a dominance pattern.
struct DifferenceCheck {
  std::vector<int> to;  // the subtracted index: one label (base) or a pair (tilde)
  ConeVerdict psd;
  std::optional<ConeVerdict> sep_star;  // runs only when the PSD check fails

  /// Block positive: PSD, or see-saw found no violating product state.
  bool sep_star_in() const { return psd.in() || (sep_star && sep_star->in()); }
  /// EW pattern: not PSD yet block positive.
  bool is_ew() const { return !psd.in() && sep_star && sep_star->in(); }
};

struct TheoremCertificate {
  TheoremId theorem;
  std::vector<int> mu;  // one label (base dominance) or an Omega_S pair
  std::vector<DifferenceCheck> checks;
  bool holds = false;
  Confidence confidence = Confidence::kCertified;
  std::vector<std::string> notes;
};

/// Necessary-and-sufficient dominance test for p_SEP^PI = 2 eta~_mu:
/// every difference eta~_mu rho~_mu - eta~_w rho~_w must be block positive.
TheoremCertificate check_theorem1(const PiContext& context, std::pair<int, int> mu,
                                  double tol = 1e-9, const SeesawParams& params = {});

/// Under the theorem-1 premise (throws if it fails): p_SEP^PI < p_G^PI iff
/// some difference is an EW. HOLDS = gap; FAILS = all differences PSD, which
/// certifies p_L^PI = p_SEP^PI = p_G^PI outright.
TheoremCertificate check_theorem2(const PiContext& context, std::pair<int, int> mu,
                                  double tol = 1e-9, const SeesawParams& params = {});

/// Four-inclusion premise under which PI_{1,2} annihilates nonlocality while
/// PI_{1,3} does not (labels taken in ensemble order; requires four states).
TheoremCertificate check_theorem3_premises(const StateEnsemble& ensemble, double tol = 1e-9,
                                           const SeesawParams& params = {});

/// Mirror premise: PI_{1,2} creates nonlocality while PI_{1,3} does not.
TheoremCertificate check_theorem4_premises(const StateEnsemble& ensemble, double tol = 1e-9,
                                           const SeesawParams& params = {});

enum class TriState { kCertifiedYes, kCertifiedNo, kUnknown };
enum class Classification {
  kAnnihilates,
  kCreates,
  kPreservesNonlocality,
  kPreservesLocality,
  kInconclusive
};
std::string to_string(TriState t);
std::string to_string(Classification c);

/// One leg (plain game or PI game) of a report: does nonlocality occur?
struct SideReport {
  TriState nonlocal = TriState::kUnknown;
  std::optional<TheoremCertificate> certificate;
  std::vector<std::string> chain;  // the p_L reasoning, step by step
  Confidence confidence = Confidence::kCertified;
};

struct PiReport {
  std::vector<int> subset;
  SideReport base;
  SideReport pi;
  Classification classification = Classification::kInconclusive;
  Confidence confidence = Confidence::kCertified;

  double p_g = 0.0;
  bool p_g_certified = false;
  std::optional<double> p_sep;
  double p_g_pi = 0.0;
  bool p_g_pi_certified = false;
  std::optional<double> p_sep_pi;
  std::optional<double> witness_bound;
};

struct AnalysisOptions {
  double tol = 1e-9;
  SeesawParams seesaw{};
  int solver_max_iters = 20000;
  double solver_tol = 1e-8;
};

/// Full annihilation/creation analysis of one PI partition. p_L is never
/// computed directly: every p_L statement in the report is a consequence of
/// the sandwich max eta <= p_L <= p_SEP <= p_G, a trivial LOCC strategy, or
/// an explicit witness measurement, and the chain records which.
/// Verdicts resting on a heuristic SEP* leg are marked HEURISTIC.
PiReport classify(const StateEnsemble& ensemble, const std::vector<int>& subset,
                  const AnalysisOptions& options = {});

}  // namespace pidisc

#endif  // PIDISC_ANALYSIS_HPP
