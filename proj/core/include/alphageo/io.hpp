// Copyright 2026 The alphageo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "alphageo/divergence.hpp"
#include "alphageo/families.hpp"
#include "alphageo/geometry.hpp"
#include "alphageo/projection.hpp"
#include "alphageo/simplex.hpp"

namespace alphageo::io {

using nlohmann::json;

// Parsers throw Error(ParseError) naming the offending field; validation
// failures of the constructed objects keep their own error codes.

/// {"labels": [...], "mass": [...]}
FiniteDistribution distribution_from_json(const json& j);
json to_json(const FiniteDistribution& p);

/// {"labels": [...], "rows": [[...], ...], "order": "linear" | number}
ConstraintFamily family_from_json(const json& j);
json to_json(const ConstraintFamily& family);

/// {"generator": <distribution>, "functions": [[...]], "theta": [...],
///  "alpha": number, "kind": "power-law" | "exponential"}
FamilySpec family_spec_from_json(const json& j);
json to_json(const FamilySpec& spec);

/// {"target": <distribution>, "family": <family>, "divergence":
///  "i-alpha" | "renyi", "alpha": number, "tolerance": number,
///  "max_iterations": integer (optional)}
ProjectionProblem problem_from_json(const json& j);
json to_json(const ProjectionProblem& problem);

json to_json(const ProjectionResult& result);
json to_json(const DivergenceValue& value);
json to_json(const MetricMatrix& metric);
json matrix_to_json(const Eigen::MatrixXd& m);
json vector_to_json(const Eigen::VectorXd& v);

/// Row-major CSV, one matrix row per line, 17 significant digits.
std::string to_csv(const Eigen::MatrixXd& m);

/// Formats a double with 17 significant digits; non-finite values become
/// "inf", "-inf" or "nan".
std::string format_double(double v);

/// Serializes like json::dump but writes every floating-point number with 17
/// significant digits. indent < 0 gives the compact form.
std::string dump(const json& j, int indent = 2);

json read_json_file(const std::string& path);

}  // namespace alphageo::io
