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

#ifndef PIDISC_IO_HPP
#define PIDISC_IO_HPP

#include <string>

#include <json.hpp>

#include "pidisc/analysis.hpp"
#include "pidisc/ensemble.hpp"
#include "pidisc/simulate.hpp"

namespace pidisc {

// Matrix literal format: complex entries as [re, im] pairs, row-major nested
// arrays, dims declared alongside. Doubles round-trip bit-exactly through
// the serializer.
//
// Ensemble document:
//   { "dims": {"dA": 2, "dB": 2},
//     "labels": [1, 2, 3, 4],                 // optional
//     "states": [ {"prior": 0.25, "matrix": [[[re,im], ...], ...]}, ... ] }
//
// Matrix document: { "dims": {...}, "matrix": [...] }.

nlohmann::json matrix_to_json(const HermitianOperator& h);
HermitianOperator matrix_from_json(int dim_a, int dim_b, const nlohmann::json& j);

nlohmann::json ensemble_to_json(const StateEnsemble& ensemble);
StateEnsemble ensemble_from_json(const nlohmann::json& j);

void save_ensemble(const StateEnsemble& ensemble, const std::string& path);
StateEnsemble load_ensemble(const std::string& path);

void save_matrix(const HermitianOperator& h, const std::string& path);
HermitianOperator load_matrix(const std::string& path);

nlohmann::json verdict_to_json(const ConeVerdict& verdict);
nlohmann::json certificate_to_json(const TheoremCertificate& certificate);
nlohmann::json report_to_json(const PiReport& report);
nlohmann::json simulation_to_json(const SimulationResult& result);

std::string render_report_human(const PiReport& report);

}  // namespace pidisc

#endif  // PIDISC_IO_HPP
