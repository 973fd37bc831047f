// Copyright 2026 The mcwit Authors
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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcwit/scenario.hpp"

namespace mcwit {

/// pass/fail count toward the exit status. flagged marks a documented
/// disagreement with a printed value; info records a value without asserting.
enum class CheckStatus { pass, fail, flagged, info };

const char *check_status_name(CheckStatus s);

struct Check {
    std::string id;
    double value = 0;
    std::optional<double> expected;
    double tolerance = 0;
    /// "eq" (|value - expected| <= tolerance), "ge" (value >= expected),
    /// "lt" (value < expected), or "none".
    std::string relation;
    CheckStatus status = CheckStatus::info;
    std::string note;
};

struct Reproduction {
    std::string id;
    std::uint64_t seed = 0;
    std::vector<Check> checks;
    Bundle figures;

    bool all_pass() const;
    std::vector<const Check *> failures() const;
};

std::vector<std::string> reproduction_ids();

/// Runs one worked example end to end. Deterministic for a fixed seed.
Reproduction reproduce(const std::string &id, std::uint64_t seed);

std::string reproduction_json(const Reproduction &r);

/// `<id>_report.json` followed by the figure CSVs.
Bundle reproduction_bundle(const Reproduction &r);

}  // namespace mcwit
