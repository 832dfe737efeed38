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

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pidisc/analysis.hpp"
#include "pidisc/cones.hpp"
#include "pidisc/discrimination.hpp"
#include "pidisc/ensemble.hpp"
#include "pidisc/hermitian.hpp"
#include "pidisc/io.hpp"
#include "pidisc/simulate.hpp"

namespace py = pybind11;
using namespace pidisc;

namespace {

StateEnsemble make_ensemble(int dim_a, int dim_b,
                            const std::vector<std::pair<double, Matrix>>& states,
                            const std::vector<int>& labels) {
  std::vector<StateEnsemble::Item> items;
  items.reserve(states.size());
  for (const auto& [prior, matrix] : states)
    items.push_back({prior, HermitianOperator(dim_a, dim_b, matrix)});
  return StateEnsemble(std::move(items), labels);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Minimum-error bipartite state discrimination with postmeasurement "
      "information: cone oracles, dominance certificates, and the "
      "annihilation/creation classifier.";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

  py::class_<UnitVector>(m, "UnitVector")
      .def(py::init<Vector>(), py::arg("amplitudes"))
      .def_property_readonly("dim", &UnitVector::dim)
      .def_property_readonly("amplitudes",
                             [](const UnitVector& v) { return Vector(v.amplitudes()); });

  py::class_<HermitianOperator>(m, "HermitianOperator")
      .def(py::init<int, int, const Matrix&>(), py::arg("dim_a"), py::arg("dim_b"),
           py::arg("entries"))
      .def_property_readonly("dim_a", &HermitianOperator::dim_a)
      .def_property_readonly("dim_b", &HermitianOperator::dim_b)
      .def_property_readonly("matrix",
                             [](const HermitianOperator& h) { return Matrix(h.matrix()); })
      .def("trace", &HermitianOperator::trace)
      .def_static("identity", &HermitianOperator::identity)
      .def_static("zero", &HermitianOperator::zero)
      .def_static("projector", &HermitianOperator::projector)
      .def("__add__", &HermitianOperator::operator+)
      .def("__sub__", &HermitianOperator::operator-)
      .def("__mul__", &HermitianOperator::operator*)
      .def("__rmul__", [](const HermitianOperator& h, double s) { return h * s; });

  py::class_<Eigensystem>(m, "Eigensystem")
      .def_property_readonly("eigenvalues",
                             [](const Eigensystem& e) { return e.eigenvalues; })
      .def_property_readonly("eigenvectors",
                             [](const Eigensystem& e) { return Matrix(e.eigenvectors); });

  m.def("eig_hermitian", &eig_hermitian);
  m.def("tensor", py::overload_cast<const HermitianOperator&, const HermitianOperator&>(&tensor));
  m.def("tensor_vec", py::overload_cast<const UnitVector&, const UnitVector&>(&tensor));
  m.def("partial_transpose", &partial_transpose);
  m.def("partial_contraction_b", &partial_contraction_b);
  m.def("partial_contraction_a", &partial_contraction_a);
  m.def("trace_norm", &trace_norm);
  m.def("inner", &inner);
  m.def("expectation", &expectation);

  py::enum_<Cone>(m, "Cone")
      .value("PSD", Cone::kPsd)
      .value("SEP_STAR", Cone::kSepStar)
      .value("EW", Cone::kEw);
  py::enum_<Membership>(m, "Membership")
      .value("IN", Membership::kIn)
      .value("OUT", Membership::kOut);
  py::enum_<Confidence>(m, "Confidence")
      .value("CERTIFIED", Confidence::kCertified)
      .value("HEURISTIC", Confidence::kHeuristic);

  py::class_<ConeVerdict>(m, "ConeVerdict")
      .def_readonly("cone", &ConeVerdict::cone)
      .def_readonly("status", &ConeVerdict::status)
      .def_readonly("margin", &ConeVerdict::margin)
      .def_readonly("witness", &ConeVerdict::witness)
      .def_readonly("confidence", &ConeVerdict::confidence)
      .def("__bool__", &ConeVerdict::in)
      .def("__repr__", [](const ConeVerdict& v) {
        return "<ConeVerdict " + to_string(v.cone) + " " + to_string(v.status) +
               " margin=" + std::to_string(v.margin) + " " + to_string(v.confidence) + ">";
      });

  py::class_<SeesawParams>(m, "SeesawParams")
      .def(py::init<>())
      .def_readwrite("starts", &SeesawParams::starts)
      .def_readwrite("max_iters", &SeesawParams::max_iters)
      .def_readwrite("convergence_tol", &SeesawParams::convergence_tol)
      .def_readwrite("seed", &SeesawParams::seed);

  py::class_<ProductMinResult>(m, "ProductMinResult")
      .def_readonly("value", &ProductMinResult::value)
      .def_readonly("a", &ProductMinResult::a)
      .def_readonly("b", &ProductMinResult::b);

  m.def("in_psd", &in_psd, py::arg("h"), py::arg("tol") = 1e-9);
  m.def("min_product_expectation", &min_product_expectation, py::arg("h"),
        py::arg("params") = SeesawParams{});
  m.def("in_sep_star", &in_sep_star, py::arg("h"), py::arg("tol") = 1e-9,
        py::arg("params") = SeesawParams{});
  m.def("is_ew", &is_ew, py::arg("h"), py::arg("tol") = 1e-9,
        py::arg("params") = SeesawParams{});

  py::class_<PositivePartSplit>(m, "PositivePartSplit")
      .def_readonly("plus", &PositivePartSplit::plus)
      .def_readonly("minus", &PositivePartSplit::minus);
  m.def("positive_part_split", &positive_part_split);

  py::class_<StateEnsemble::Item>(m, "EnsembleItem")
      .def_readonly("prior", &StateEnsemble::Item::prior)
      .def_readonly("state", &StateEnsemble::Item::state);

  py::class_<StateEnsemble>(m, "StateEnsemble")
      .def(py::init(&make_ensemble), py::arg("dim_a"), py::arg("dim_b"), py::arg("states"),
           py::arg("labels") = std::vector<int>{})
      .def_property_readonly("size", &StateEnsemble::size)
      .def_property_readonly("labels", &StateEnsemble::labels)
      .def_property_readonly("items", &StateEnsemble::items)
      .def("prior", &StateEnsemble::prior)
      .def("state", &StateEnsemble::state)
      .def("weighted", &StateEnsemble::weighted);

  py::class_<PiContext>(m, "PiContext")
      .def_readonly("s", &PiContext::s)
      .def_readonly("s_complement", &PiContext::s_complement)
      .def_readonly("omega", &PiContext::omega)
      .def_readonly("tilde", &PiContext::tilde)
      .def("tilde_prior", &PiContext::tilde_prior)
      .def("tilde_weighted", &PiContext::tilde_weighted);
  m.def("make_pi_context", &make_pi_context);

  m.def("phi_plus", &bell::phi_plus);
  m.def("phi_minus", &bell::phi_minus);
  m.def("psi_plus", &bell::psi_plus);
  m.def("psi_minus", &bell::psi_minus);
  m.def("phi_plus_projector", &bell::phi_plus_projector);
  m.def("phi_minus_projector", &bell::phi_minus_projector);
  m.def("psi_plus_projector", &bell::psi_plus_projector);
  m.def("psi_minus_projector", &bell::psi_minus_projector);
  m.def("phi_plus_pt", &bell::phi_plus_pt);

  m.def("build_example1", &build_example1, py::arg("w"), py::arg("tol") = 1e-9,
        py::arg("params") = SeesawParams{});
  m.def("build_example2", &build_example2, py::arg("w"), py::arg("tol") = 1e-9,
        py::arg("params") = SeesawParams{});
  m.def("build_example3", &build_example3);
  m.def("build_example4", &build_example4);

  py::class_<DiscriminationResult>(m, "DiscriminationResult")
      .def_readonly("value", &DiscriminationResult::value)
      .def_readonly("measurement", &DiscriminationResult::measurement)
      .def_readonly("dual_operator", &DiscriminationResult::dual_operator)
      .def_readonly("dual_margins", &DiscriminationResult::dual_margins)
      .def_readonly("converged", &DiscriminationResult::converged)
      .def_readonly("iterations", &DiscriminationResult::iterations)
      .def_readonly("objective_trace", &DiscriminationResult::objective_trace)
      .def("min_dual_margin", &DiscriminationResult::min_dual_margin);

  m.def("helstrom_two", &helstrom_two);
  m.def("solve_me", &solve_me, py::arg("ensemble"), py::arg("max_iters") = 20000,
        py::arg("tol") = 1e-8);
  m.def("psd_dominant_index", &psd_dominant_index, py::arg("ensemble"), py::arg("tol") = 1e-9);

  py::class_<SepStarDominance>(m, "SepStarDominance")
      .def_readonly("mu", &SepStarDominance::mu)
      .def_readonly("ew_found", &SepStarDominance::ew_found)
      .def_readonly("ew_labels", &SepStarDominance::ew_labels)
      .def_readonly("confidence", &SepStarDominance::confidence);
  m.def("sep_star_dominant_index", &sep_star_dominant_index, py::arg("ensemble"),
        py::arg("tol") = 1e-9, py::arg("params") = SeesawParams{});

  py::class_<PiValues>(m, "PiValues")
      .def_readonly("pg_pi", &PiValues::pg_pi)
      .def_readonly("result", &PiValues::result)
      .def_readonly("context", &PiValues::context);
  m.def("pi_values", &pi_values, py::arg("ensemble"), py::arg("subset"),
        py::arg("max_iters") = 20000, py::arg("tol") = 1e-8);

  py::class_<WitnessBound>(m, "WitnessBound")
      .def_readonly("bound", &WitnessBound::bound)
      .def_readonly("lambda_min", &WitnessBound::lambda_min)
      .def_readonly("u", &WitnessBound::u)
      .def_readonly("mu", &WitnessBound::mu)
      .def_readonly("omega_star", &WitnessBound::omega_star);
  m.def("pi_witness_lower_bound", &pi_witness_lower_bound);

  py::enum_<TheoremId>(m, "TheoremId")
      .value("T1_SEP_VALUE", TheoremId::kT1SepValue)
      .value("T2_GAP", TheoremId::kT2Gap)
      .value("T3_PREMISE", TheoremId::kT3Premise)
      .value("T4_PREMISE", TheoremId::kT4Premise)
      .value("PROP1", TheoremId::kProp1);

  py::class_<DifferenceCheck>(m, "DifferenceCheck")
      .def_readonly("to", &DifferenceCheck::to)
      .def_readonly("psd", &DifferenceCheck::psd)
      .def_readonly("sep_star", &DifferenceCheck::sep_star)
      .def("sep_star_in", &DifferenceCheck::sep_star_in)
      .def("is_ew", &DifferenceCheck::is_ew);

  py::class_<TheoremCertificate>(m, "TheoremCertificate")
      .def_readonly("theorem", &TheoremCertificate::theorem)
      .def_readonly("mu", &TheoremCertificate::mu)
      .def_readonly("checks", &TheoremCertificate::checks)
      .def_readonly("holds", &TheoremCertificate::holds)
      .def_readonly("confidence", &TheoremCertificate::confidence)
      .def_readonly("notes", &TheoremCertificate::notes);

  m.def("check_theorem1", &check_theorem1, py::arg("context"), py::arg("mu"),
        py::arg("tol") = 1e-9, py::arg("params") = SeesawParams{});
  m.def("check_theorem2", &check_theorem2, py::arg("context"), py::arg("mu"),
        py::arg("tol") = 1e-9, py::arg("params") = SeesawParams{});
  m.def("check_theorem3_premises", &check_theorem3_premises, py::arg("ensemble"),
        py::arg("tol") = 1e-9, py::arg("params") = SeesawParams{});
  m.def("check_theorem4_premises", &check_theorem4_premises, py::arg("ensemble"),
        py::arg("tol") = 1e-9, py::arg("params") = SeesawParams{});

  py::enum_<TriState>(m, "TriState")
      .value("CERTIFIED_YES", TriState::kCertifiedYes)
      .value("CERTIFIED_NO", TriState::kCertifiedNo)
      .value("UNKNOWN", TriState::kUnknown);

  py::enum_<Classification>(m, "Classification")
      .value("ANNIHILATES", Classification::kAnnihilates)
      .value("CREATES", Classification::kCreates)
      .value("PRESERVES_NONLOCALITY", Classification::kPreservesNonlocality)
      .value("PRESERVES_LOCALITY", Classification::kPreservesLocality)
      .value("INCONCLUSIVE", Classification::kInconclusive);

  py::class_<SideReport>(m, "SideReport")
      .def_readonly("nonlocal", &SideReport::nonlocal)
      .def_readonly("certificate", &SideReport::certificate)
      .def_readonly("chain", &SideReport::chain)
      .def_readonly("confidence", &SideReport::confidence);

  py::class_<AnalysisOptions>(m, "AnalysisOptions")
      .def(py::init<>())
      .def_readwrite("tol", &AnalysisOptions::tol)
      .def_readwrite("seesaw", &AnalysisOptions::seesaw)
      .def_readwrite("solver_max_iters", &AnalysisOptions::solver_max_iters)
      .def_readwrite("solver_tol", &AnalysisOptions::solver_tol);

  py::class_<PiReport>(m, "PiReport")
      .def_readonly("subset", &PiReport::subset)
      .def_readonly("base", &PiReport::base)
      .def_readonly("pi", &PiReport::pi)
      .def_readonly("classification", &PiReport::classification)
      .def_readonly("confidence", &PiReport::confidence)
      .def_readonly("p_g", &PiReport::p_g)
      .def_readonly("p_g_certified", &PiReport::p_g_certified)
      .def_readonly("p_sep", &PiReport::p_sep)
      .def_readonly("p_g_pi", &PiReport::p_g_pi)
      .def_readonly("p_g_pi_certified", &PiReport::p_g_pi_certified)
      .def_readonly("p_sep_pi", &PiReport::p_sep_pi)
      .def_readonly("witness_bound", &PiReport::witness_bound)
      .def("to_json", [](const PiReport& r) { return report_to_json(r).dump(2); })
      .def("__repr__", [](const PiReport& r) {
        return "<PiReport " + to_string(r.classification) + " [" +
               to_string(r.confidence) + "]>";
      });

  m.def("classify", &classify, py::arg("ensemble"), py::arg("subset"),
        py::arg("options") = AnalysisOptions{});

  py::class_<PiStrategy>(m, "PiStrategy").def_readonly("povm", &PiStrategy::povm);
  m.def("trivial_strategy", &trivial_strategy);
  m.def("witness_strategy", &witness_strategy);
  m.def("measurement_strategy", &measurement_strategy);
  m.def("strategy_success_probability", &strategy_success_probability);

  py::class_<SimulationResult>(m, "SimulationResult")
      .def_readonly("trials", &SimulationResult::trials)
      .def_readonly("successes", &SimulationResult::successes)
      .def_readonly("estimate", &SimulationResult::estimate)
      .def_readonly("standard_error", &SimulationResult::standard_error)
      .def_readonly("analytic", &SimulationResult::analytic)
      .def_readonly("seed", &SimulationResult::seed);
  m.def("simulate", &simulate, py::arg("ensemble"), py::arg("context"), py::arg("strategy"),
        py::arg("trials"), py::arg("seed") = 0);

  m.def("load_ensemble", &load_ensemble);
  m.def("save_ensemble", &save_ensemble);
  m.def("load_matrix", &load_matrix);
  m.def("save_matrix", &save_matrix);
  m.def("render_report", &render_report_human);
}
