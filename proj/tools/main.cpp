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

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pidisc/analysis.hpp"
#include "pidisc/discrimination.hpp"
#include "pidisc/ensemble.hpp"
#include "pidisc/io.hpp"
#include "pidisc/simulate.hpp"

namespace {

using nlohmann::json;
using namespace pidisc;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitInternal = 3;

struct CommonOpts {
  std::string input;
  std::vector<int> subset;
  double tol = 1e-9;
  int starts = 64;
  std::uint64_t seed = 0;
  int iters = 20000;
  std::string format = "human";
};

AnalysisOptions analysis_options(const CommonOpts& opts) {
  AnalysisOptions options;
  options.tol = opts.tol;
  options.seesaw.starts = opts.starts;
  options.seesaw.seed = opts.seed;
  options.solver_max_iters = opts.iters;
  return options;
}

std::vector<std::vector<int>> all_pair_subsets(const StateEnsemble& ensemble) {
  std::vector<std::vector<int>> out;
  const auto& labels = ensemble.labels();
  for (size_t i = 0; i < labels.size(); ++i)
    for (size_t j = i + 1; j < labels.size(); ++j)
      out.push_back({labels[i], labels[j]});
  return out;
}

int cmd_analyze(const CommonOpts& opts) {
  const StateEnsemble ensemble = load_ensemble(opts.input);
  std::vector<std::vector<int>> subsets;
  if (!opts.subset.empty()) {
    subsets.push_back(opts.subset);
  } else {
    if (ensemble.size() != 4)
      throw ValidationError(
          "pass --subset explicitly: automatic enumeration of two-element "
          "subsets applies to four-state ensembles only");
    subsets = all_pair_subsets(ensemble);
  }

  const AnalysisOptions options = analysis_options(opts);
  json reports = json::array();
  for (const auto& subset : subsets) {
    const PiReport report = classify(ensemble, subset, options);
    if (opts.format == "json")
      reports.push_back(report_to_json(report));
    else
      std::cout << render_report_human(report) << "\n";
  }
  if (opts.format == "json") std::cout << reports.dump(2) << "\n";
  return kExitOk;
}

int cmd_examples(const std::string& which, const std::string& output_dir,
                 const std::string& witness_path, const CommonOpts& opts) {
  std::optional<HermitianOperator> witness;
  if (!witness_path.empty()) witness = load_matrix(witness_path);
  const HermitianOperator w = witness ? *witness : bell::phi_plus_pt();

  std::error_code ec;
  std::filesystem::create_directories(output_dir, ec);

  SeesawParams seesaw;
  seesaw.starts = opts.starts;
  seesaw.seed = opts.seed;

  const auto emit = [&](const std::string& name, const StateEnsemble& ensemble) {
    const std::string path = output_dir + "/" + name + ".json";
    save_ensemble(ensemble, path);
    std::cout << path << "\n";
  };

  bool matched = false;
  if (which == "all" || which == "example1") {
    emit("example1", build_example1(w, opts.tol, seesaw));
    matched = true;
  }
  if (which == "all" || which == "example2") {
    emit("example2", build_example2(w, opts.tol, seesaw));
    matched = true;
  }
  if (which == "all" || which == "example3") {
    emit("example3", build_example3());
    matched = true;
  }
  if (which == "all" || which == "example4") {
    emit("example4", build_example4());
    matched = true;
  }
  if (!matched)
    throw ValidationError("unknown example '" + which +
                          "' (expected example1..example4 or all)");
  return kExitOk;
}

// First mu in lexicographic Omega_S order whose differences are all block
// positive, together with its theorem-2 gap certificate.
std::optional<TheoremCertificate> find_dominant_mu(const PiContext& context,
                                                   const AnalysisOptions& options) {
  for (const auto& mu : context.omega) {
    TheoremCertificate t1 = check_theorem1(context, mu, options.tol, options.seesaw);
    if (!t1.holds) continue;
    return check_theorem2(context, mu, options.tol, options.seesaw);
  }
  return std::nullopt;
}

int cmd_pi(const CommonOpts& opts, const std::vector<int>& mu_arg) {
  const StateEnsemble ensemble = load_ensemble(opts.input);
  const AnalysisOptions options = analysis_options(opts);
  const PiContext context = make_pi_context(ensemble, opts.subset);

  std::optional<TheoremCertificate> cert;
  if (!mu_arg.empty()) {
    if (mu_arg.size() != 2) throw ValidationError("--mu expects a pair, e.g. --mu 1,3");
    const std::pair<int, int> mu{mu_arg[0], mu_arg[1]};
    TheoremCertificate t1 = check_theorem1(context, mu, options.tol, options.seesaw);
    cert = t1.holds ? check_theorem2(context, mu, options.tol, options.seesaw) : t1;
  } else {
    cert = find_dominant_mu(context, options);
  }

  const PiValues values = pi_values(ensemble, opts.subset, options.solver_max_iters);

  std::optional<WitnessBound> bound;
  if (cert && cert->theorem == TheoremId::kT2Gap && cert->holds) {
    const std::pair<int, int> mu{cert->mu[0], cert->mu[1]};
    for (const DifferenceCheck& check : cert->checks) {
      if (!check.is_ew()) continue;
      auto b = pi_witness_lower_bound(context, mu, {check.to[0], check.to[1]});
      if (b && (!bound || b->bound > bound->bound)) bound = b;
    }
  }

  if (opts.format == "json") {
    json out{{"subset", opts.subset},
             {"omega", json::array()},
             {"p_G_PI", values.pg_pi},
             {"p_G_PI_certified", values.result.converged}};
    for (size_t k = 0; k < context.omega.size(); ++k)
      out["omega"].push_back(json{{"pair", {context.omega[k].first, context.omega[k].second}},
                                  {"tilde_prior", context.tilde.items()[k].prior}});
    if (cert) {
      out["certificate"] = certificate_to_json(*cert);
      if (cert->holds || cert->theorem == TheoremId::kT2Gap)
        out["p_SEP_PI"] = 2.0 * context.tilde_prior({cert->mu[0], cert->mu[1]});
    }
    if (bound) out["pi_witness_bound"] = bound->bound;
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }

  std::cout << "Omega_S and averaged priors:\n";
  for (size_t k = 0; k < context.omega.size(); ++k)
    std::cout << "  (" << context.omega[k].first << "," << context.omega[k].second
              << ")  eta~ = " << context.tilde.items()[k].prior << "\n";
  std::cout << "p_G^PI = " << values.pg_pi
            << (values.result.converged ? "  (dual-certified)" : "  (not certified)") << "\n";
  if (cert) {
    const std::pair<int, int> mu{cert->mu[0], cert->mu[1]};
    if (cert->theorem == TheoremId::kT2Gap) {
      std::cout << "p_SEP^PI = " << 2.0 * context.tilde_prior(mu) << "  via mu = ("
                << mu.first << "," << mu.second << ")\n";
      std::cout << (cert->holds ? "gap: p_SEP^PI < p_G^PI" : "equality: p_SEP^PI = p_G^PI")
                << "  [" << to_string(cert->confidence) << "]\n";
    } else {
      std::cout << "theorem-1 premise fails at mu = (" << mu.first << "," << mu.second
                << ")\n";
    }
    for (const std::string& note : cert->notes) std::cout << "  " << note << "\n";
  } else {
    std::cout << "no mu in Omega_S satisfies the theorem-1 pattern\n";
  }
  if (bound) std::cout << "witness lower bound on p_G^PI: " << bound->bound << "\n";
  return kExitOk;
}

int cmd_simulate(const CommonOpts& opts, const std::string& strategy_name,
                 const std::vector<int>& mu_arg, const std::vector<int>& omega_arg,
                 std::int64_t trials) {
  const StateEnsemble ensemble = load_ensemble(opts.input);
  const AnalysisOptions options = analysis_options(opts);
  const PiContext context = make_pi_context(ensemble, opts.subset);

  auto pick_mu = [&]() -> std::pair<int, int> {
    if (!mu_arg.empty()) {
      if (mu_arg.size() != 2) throw ValidationError("--mu expects a pair, e.g. --mu 1,3");
      return {mu_arg[0], mu_arg[1]};
    }
    for (const auto& mu : context.omega)
      if (check_theorem1(context, mu, options.tol, options.seesaw).holds) return mu;
    throw ValidationError(
        "no mu satisfies the theorem-1 pattern; pass --mu explicitly");
  };

  PiStrategy strategy;
  if (strategy_name == "trivial") {
    strategy = trivial_strategy(context, pick_mu());
  } else if (strategy_name == "witness") {
    const std::pair<int, int> mu = pick_mu();
    std::optional<WitnessBound> bound;
    if (!omega_arg.empty()) {
      if (omega_arg.size() != 2)
        throw ValidationError("--omega-star expects a pair, e.g. --omega-star 1,4");
      bound = pi_witness_lower_bound(context, mu, {omega_arg[0], omega_arg[1]});
      if (!bound)
        throw ValidationError("the chosen difference is PSD: no witness bound there");
    } else {
      for (const auto& w : context.omega) {
        if (w == mu) continue;
        auto b = pi_witness_lower_bound(context, mu, w);
        if (b && (!bound || b->bound > bound->bound)) bound = b;
      }
      if (!bound)
        throw ValidationError(
            "every difference from mu is PSD: no witness strategy available");
    }
    strategy = witness_strategy(context, *bound);
  } else if (strategy_name == "optimal") {
    strategy = measurement_strategy(solve_me(context.tilde, opts.iters));
  } else {
    throw ValidationError("unknown strategy '" + strategy_name +
                          "' (expected trivial|witness|optimal)");
  }

  const SimulationResult result = simulate(ensemble, context, strategy, trials, opts.seed);
  if (opts.format == "json") {
    json out = simulation_to_json(result);
    out["strategy"] = strategy_name;
    out["subset"] = opts.subset;
    std::cout << out.dump(2) << "\n";
  } else {
    const double sigma = result.standard_error > 0
                             ? (result.estimate - result.analytic) / result.standard_error
                             : 0.0;
    std::cout << "strategy  : " << strategy_name << "\n"
              << "trials    : " << result.trials << "  (seed " << result.seed << ")\n"
              << "estimate  : " << result.estimate << " +/- " << result.standard_error
              << "\n"
              << "analytic  : " << result.analytic << "\n"
              << "deviation : " << sigma << " sigma\n";
  }
  return kExitOk;
}

int cmd_certify(const CommonOpts& opts) {
  const HermitianOperator h = load_matrix(opts.input);
  SeesawParams seesaw;
  seesaw.starts = opts.starts;
  seesaw.seed = opts.seed;

  const ConeVerdict psd = in_psd(h, opts.tol);
  const ConeVerdict sep = in_sep_star(h, opts.tol, seesaw);
  const ConeVerdict ew = is_ew(h, opts.tol, seesaw);

  if (opts.format == "json") {
    std::cout << json{{"psd", verdict_to_json(psd)},
                      {"sep_star", verdict_to_json(sep)},
                      {"ew", verdict_to_json(ew)}}
                     .dump(2)
              << "\n";
  } else {
    const auto show = [](const ConeVerdict& v) {
      std::cout << "  " << to_string(v.cone) << ": " << to_string(v.status)
                << "  margin = " << v.margin << "  [" << to_string(v.confidence) << "]\n";
    };
    show(psd);
    show(sep);
    show(ew);
    if (ew.in()) std::cout << "  the operator is an entanglement witness\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bipartite minimum-error state discrimination with postmeasurement information"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string which = "all";
  std::string output_dir = ".";
  std::string witness_path;
  std::string strategy_name = "trivial";
  std::vector<int> mu_arg, omega_arg;
  std::int64_t trials = 1000000;

  const auto add_common = [&](CLI::App* cmd, bool needs_input, bool needs_subset) {
    auto* in = cmd->add_option("--input", opts.input, "ensemble or matrix document");
    if (needs_input) in->required();
    auto* sub = cmd->add_option("--subset", opts.subset,
                                "labels of the subensemble S, e.g. --subset 1,2")
                    ->delimiter(',');
    if (needs_subset) sub->required();
    cmd->add_option("--tol", opts.tol, "cone boundary tolerance");
    cmd->add_option("--starts", opts.starts, "see-saw multi-starts");
    cmd->add_option("--seed", opts.seed, "seed for see-saw starts / simulation");
    cmd->add_option("--iters", opts.iters, "solver iteration cap");
    cmd->add_option("--format", opts.format, "human or json")
        ->check(CLI::IsMember({"human", "json"}));
  };

  CLI::App* analyze = app.add_subcommand("analyze", "classify one PI partition (or all pairs)");
  add_common(analyze, true, false);

  CLI::App* examples = app.add_subcommand("examples", "write the built-in ensembles to files");
  examples->add_option("--which", which, "example1..example4 or all");
  examples->add_option("--output-dir", output_dir, "directory for the files");
  examples->add_option("--witness", witness_path, "matrix document with the EW to build from");
  examples->add_option("--tol", opts.tol, "cone boundary tolerance");
  examples->add_option("--starts", opts.starts, "see-saw multi-starts");
  examples->add_option("--seed", opts.seed, "seed for see-saw starts");

  CLI::App* pi = app.add_subcommand("pi", "PI context, dominance certificates, p^PI values");
  add_common(pi, true, true);
  pi->add_option("--mu", mu_arg, "outcome pair to test, e.g. --mu 1,3")->delimiter(',');

  CLI::App* sim = app.add_subcommand("simulate", "Monte Carlo run of the PI guessing game");
  add_common(sim, true, true);
  sim->add_option("--strategy", strategy_name, "trivial|witness|optimal");
  sim->add_option("--mu", mu_arg, "outcome pair for trivial/witness strategies")->delimiter(',');
  sim->add_option("--omega-star", omega_arg, "witness outcome pair")->delimiter(',');
  sim->add_option("--trials", trials, "number of trials")->check(CLI::PositiveNumber);

  CLI::App* certify = app.add_subcommand("certify", "cone verdicts for one Hermitian operator");
  add_common(certify, true, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(opts);
    if (examples->parsed()) return cmd_examples(which, output_dir, witness_path, opts);
    if (pi->parsed()) return cmd_pi(opts, mu_arg);
    if (sim->parsed()) return cmd_simulate(opts, strategy_name, mu_arg, omega_arg, trials);
    if (certify->parsed()) return cmd_certify(opts);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
