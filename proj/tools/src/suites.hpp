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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace alphageo::cli {

/// Outcome of a randomized property suite. Each failed check appends one
/// entry to `counterexamples` holding the offending inputs verbatim.
struct SuiteOutcome {
  nlohmann::json summary = nlohmann::json::object();
  nlohmann::json counterexamples = nlohmann::json::array();
  std::size_t checks = 0;

  bool passed() const { return counterexamples.empty(); }
};

const std::vector<std::string>& suite_names();

/// Runs `trials` seeded trials of the named suite. Throws InvalidArgument
/// for an unknown suite or trials < 1.
SuiteOutcome run_suite(std::string_view suite, int trials, std::uint64_t seed);

}  // namespace alphageo::cli
