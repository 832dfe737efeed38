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

#include "pidisc/io.hpp"

#include <fstream>
#include <sstream>

namespace pidisc {

using nlohmann::json;

namespace {

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ValidationError("matrix entry is not a [re, im] pair");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

json dims_to_json(const HermitianOperator& h) {
  return json{{"dA", h.dim_a()}, {"dB", h.dim_b()}};
}

std::pair<int, int> dims_from_json(const json& j) {
  if (!j.contains("dims") || !j["dims"].contains("dA") || !j["dims"].contains("dB"))
    throw ValidationError("document lacks dims {dA, dB}");
  const int da = j["dims"]["dA"].get<int>();
  const int db = j["dims"]["dB"].get<int>();
  if (da <= 0 || db <= 0) throw ValidationError("dims must be positive");
  return {da, db};
}

json vector_to_json(const UnitVector& v) {
  json out = json::array();
  for (int i = 0; i < v.dim(); ++i) out.push_back(complex_to_json(v[i]));
  return out;
}

}  // namespace

json matrix_to_json(const HermitianOperator& h) {
  json rows = json::array();
  for (int r = 0; r < h.side(); ++r) {
    json row = json::array();
    for (int c = 0; c < h.side(); ++c) row.push_back(complex_to_json(h.entry(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

HermitianOperator matrix_from_json(int dim_a, int dim_b, const json& j) {
  const int side = dim_a * dim_b;
  if (!j.is_array() || static_cast<int>(j.size()) != side)
    throw ValidationError("matrix has wrong number of rows");
  Matrix m(side, side);
  for (int r = 0; r < side; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != side)
      throw ValidationError("matrix row " + std::to_string(r) + " has wrong length");
    for (int c = 0; c < side; ++c) m(r, c) = complex_from_json(j[r][c]);
  }
  return HermitianOperator(dim_a, dim_b, m);
}

json ensemble_to_json(const StateEnsemble& ensemble) {
  json states = json::array();
  for (const auto& item : ensemble.items())
    states.push_back(json{{"prior", item.prior}, {"matrix", matrix_to_json(item.state)}});
  return json{{"dims", dims_to_json(ensemble.items().front().state)},
              {"labels", ensemble.labels()},
              {"states", std::move(states)}};
}

StateEnsemble ensemble_from_json(const json& j) {
  const auto [da, db] = dims_from_json(j);
  if (!j.contains("states") || !j["states"].is_array() || j["states"].empty())
    throw ValidationError("document lacks a nonempty states array");
  std::vector<StateEnsemble::Item> items;
  for (const json& s : j["states"]) {
    if (!s.contains("prior") || !s["prior"].is_number())
      throw ValidationError("state entry lacks a numeric prior");
    if (!s.contains("matrix")) throw ValidationError("state entry lacks a matrix");
    items.push_back({s["prior"].get<double>(), matrix_from_json(da, db, s["matrix"])});
  }
  std::vector<int> labels;
  if (j.contains("labels")) labels = j["labels"].get<std::vector<int>>();
  return StateEnsemble(std::move(items), std::move(labels));
}

void save_ensemble(const StateEnsemble& ensemble, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot open " + path + " for writing");
  out << ensemble_to_json(ensemble).dump(2) << "\n";
}

StateEnsemble load_ensemble(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON in ") + path + ": " + e.what());
  }
  return ensemble_from_json(j);
}

void save_matrix(const HermitianOperator& h, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot open " + path + " for writing");
  out << json{{"dims", dims_to_json(h)}, {"matrix", matrix_to_json(h)}}.dump(2) << "\n";
}

HermitianOperator load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON in ") + path + ": " + e.what());
  }
  const auto [da, db] = dims_from_json(j);
  if (!j.contains("matrix")) throw ValidationError("document lacks a matrix");
  return matrix_from_json(da, db, j["matrix"]);
}

json verdict_to_json(const ConeVerdict& verdict) {
  json out{{"cone", to_string(verdict.cone)},
           {"status", to_string(verdict.status)},
           {"margin", verdict.margin},
           {"confidence", to_string(verdict.confidence)}};
  if (verdict.witness) out["witness"] = vector_to_json(*verdict.witness);
  return out;
}

json certificate_to_json(const TheoremCertificate& certificate) {
  json checks = json::array();
  for (const DifferenceCheck& check : certificate.checks) {
    json c{{"vs", check.to}, {"psd", verdict_to_json(check.psd)}};
    if (check.sep_star) c["sep_star"] = verdict_to_json(*check.sep_star);
    c["is_ew"] = check.is_ew();
    checks.push_back(std::move(c));
  }
  return json{{"theorem", to_string(certificate.theorem)},
              {"mu", certificate.mu},
              {"holds", certificate.holds},
              {"confidence", to_string(certificate.confidence)},
              {"checks", std::move(checks)},
              {"notes", certificate.notes}};
}

namespace {

json side_to_json(const SideReport& side) {
  json out{{"nonlocal", to_string(side.nonlocal)},
           {"confidence", to_string(side.confidence)},
           {"chain", side.chain}};
  if (side.certificate) out["certificate"] = certificate_to_json(*side.certificate);
  return out;
}

}  // namespace

json report_to_json(const PiReport& report) {
  json values{{"p_G", report.p_g},
              {"p_G_certified", report.p_g_certified},
              {"p_G_PI", report.p_g_pi},
              {"p_G_PI_certified", report.p_g_pi_certified}};
  if (report.p_sep) values["p_SEP"] = *report.p_sep;
  if (report.p_sep_pi) values["p_SEP_PI"] = *report.p_sep_pi;
  if (report.witness_bound) values["pi_witness_bound"] = *report.witness_bound;
  return json{{"subset", report.subset},
              {"classification", to_string(report.classification)},
              {"confidence", to_string(report.confidence)},
              {"base", side_to_json(report.base)},
              {"pi", side_to_json(report.pi)},
              {"values", std::move(values)}};
}

json simulation_to_json(const SimulationResult& result) {
  return json{{"trials", result.trials},       {"successes", result.successes},
              {"estimate", result.estimate},   {"standard_error", result.standard_error},
              {"analytic", result.analytic},   {"seed", result.seed}};
}

std::string render_report_human(const PiReport& report) {
  std::ostringstream out;
  out << "S = {";
  for (size_t i = 0; i < report.subset.size(); ++i)
    out << (i ? "," : "") << report.subset[i];
  out << "}  ->  " << to_string(report.classification) << "  ["
      << to_string(report.confidence) << "]\n";
  out << "  base game: " << to_string(report.base.nonlocal)
      << "   PI game: " << to_string(report.pi.nonlocal) << "\n";
  out << "  p_G       = " << report.p_g
      << (report.p_g_certified ? "  (dual-certified)" : "  (lower bound, not certified)")
      << "\n";
  if (report.p_sep) out << "  p_SEP     = " << *report.p_sep << "\n";
  out << "  p_G^PI    = " << report.p_g_pi
      << (report.p_g_pi_certified ? "  (dual-certified)" : "  (lower bound, not certified)")
      << "\n";
  if (report.p_sep_pi) out << "  p_SEP^PI  = " << *report.p_sep_pi << "\n";
  if (report.witness_bound) out << "  witness lower bound on p_G^PI = " << *report.witness_bound << "\n";
  for (const std::string& line : report.base.chain) out << "  [base] " << line << "\n";
  for (const std::string& line : report.pi.chain) out << "  [PI]   " << line << "\n";
  return out.str();
}

}  // namespace pidisc
