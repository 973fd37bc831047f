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
#include <string_view>
#include <utility>
#include <vector>

#include "mcwit/detection.hpp"

namespace mcwit {

/// Named text outputs produced by one command, in a fixed order.
struct Bundle {
    std::vector<std::pair<std::string, std::string>> files;
    /// False when a check behind the outputs failed.
    bool all_pass = true;

    void add(std::string name, std::string text) {
        files.emplace_back(std::move(name), std::move(text));
    }
};

/// Scenario file, version 1. JSON with these members (unknown members are
/// rejected at every level):
///
///   version       1
///   family        {name, value?} or {name, range: [lo, hi], points}
///   wiring        {copies, base_dims: [...], assignments: [{witness, b?, slots}]}
///   witness_grid  optional {param: "b", values: [...]}; fills b of every
///                 assignment whose witness takes b and leaves it unset
///   outputs       [{format: "csv" | "json", path}]
///   seed          integer
struct ScenarioFamily {
    std::string name;
    std::optional<double> value;
    std::optional<ParamRange> range;
    std::optional<std::size_t> points;
};

struct ScenarioAssignment {
    std::string witness;
    std::optional<double> b;
    std::string slots;
};

struct ScenarioWiring {
    std::size_t copies = 1;
    std::vector<std::size_t> base_dims;
    std::vector<ScenarioAssignment> assignments;
};

struct ScenarioOutput {
    std::string format;
    std::string path;
};

struct WitnessGrid {
    std::string param;
    std::vector<double> values;
};

struct Scenario {
    int version = 1;
    ScenarioFamily family;
    ScenarioWiring wiring;
    std::optional<WitnessGrid> witness_grid;
    std::vector<ScenarioOutput> outputs;
    std::uint64_t seed = 0;
};

/// Throws parse_error with line and column for malformed JSON, and with the
/// JSON path for schema violations.
Scenario parse_scenario(std::string_view text);
/// Canonical text: two-space indent, sorted keys, trailing newline.
std::string serialize_scenario(const Scenario &scenario);

WiringSpec build_wiring(const ScenarioWiring &wiring, std::optional<double> grid_b = std::nullopt);

/// Evaluates the scenario. Produces one CSV (`param,value`, or
/// `<param>,<witness param>,value` with a witness grid) and one JSON with the
/// thresholds, named after the scenario's outputs (sweep.csv / sweep.json by
/// default).
Bundle run_scenario(const Scenario &scenario, std::optional<std::size_t> points_override = std::nullopt);

std::string report_csv(const DetectionReport &report);
std::string report_json(const DetectionReport &report);
std::string report_csv(const Sweep2dReport &report);
std::string report_json(const Sweep2dReport &report);

}  // namespace mcwit
