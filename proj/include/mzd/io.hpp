// Copyright 2026 The mzduality Authors
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

// File formats. Matrices are row-major nested arrays of [re, im] pairs,
// vectors are arrays of [re, im] pairs. All parse failures throw ParseError.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "mzd/duality_harness.hpp"
#include "mzd/interferometer.hpp"
#include "mzd/operator_core.hpp"
#include "mzd/unsharp_joint.hpp"
#include "mzd/which_path.hpp"

namespace mzd::io {

using nlohmann::json;

ComplexMatrix parse_matrix(const json& j);
json matrix_to_json(const ComplexMatrix& m);

ComplexVector parse_vector(const json& j);
json vector_to_json(const ComplexVector& v);

/// {"r", "phi", "port", "particle_state", "detector_state", "detector_unitary"}.
InterferometerConfig parse_scenario(const json& j);
json scenario_to_json(const InterferometerConfig& config);

/// {"basis": [vector, ...], "subset": [indices]}; vectors become basis columns.
Strategy parse_strategy(const json& j);
json strategy_to_json(const Strategy& strategy);

/// {"bias": real, "direction": [x, y, z]}.
UnsharpObservable parse_observable(const json& j);
json observable_to_json(const UnsharpObservable& obs);

/// Reads and parses a JSON document, wrapping I/O and syntax failures in ParseError.
json load_json(const std::filesystem::path& path);

/// %.17g, which round-trips every double.
std::string format_double(double v);

/// Header line of the per-trial CSV.
std::string trial_csv_header();
std::string trial_csv_row(const TrialRecord& rec);
void write_report_csv(const DualityReport& report, std::ostream& out);
json report_summary(const DualityReport& report);

}  // namespace mzd::io
