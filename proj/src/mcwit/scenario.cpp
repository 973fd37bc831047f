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

#include "mcwit/scenario.hpp"

#include <algorithm>
#include <cmath>

#include "mcwit/error.hpp"
#include "mcwit/numfmt.hpp"
#include "mcwit/witnesses.hpp"
#include "json.hpp"

namespace mcwit {

namespace {

using nlohmann::json;

constexpr int kScenarioVersion = 1;

[[noreturn]] void schema_error(const std::string &where, const std::string &what) {
    throw Error(ErrorCode::parse_error, "scenario " + where + ": " + what);
}

void reject_unknown(const json &obj, const std::string &where, std::initializer_list<const char *> allowed) {
    if (!obj.is_object()) {
        schema_error(where, "expected an object");
    }
    for (const auto &[key, value] : obj.items()) {
        (void)value;
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char *a) { return key == a; })) {
            schema_error(where, "unknown field '" + key + "'");
        }
    }
}

const json &required(const json &obj, const std::string &where, const char *key) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        schema_error(where, std::string("missing field '") + key + "'");
    }
    return *it;
}

double as_number(const json &v, const std::string &where) {
    if (!v.is_number()) {
        schema_error(where, "expected a number");
    }
    double x = v.get<double>();
    if (!std::isfinite(x)) {
        schema_error(where, "expected a finite number");
    }
    return x;
}

std::size_t as_count(const json &v, const std::string &where) {
    if (!v.is_number_unsigned()) {
        schema_error(where, "expected a non-negative integer");
    }
    return v.get<std::size_t>();
}

std::string as_string(const json &v, const std::string &where) {
    if (!v.is_string()) {
        schema_error(where, "expected a string");
    }
    return v.get<std::string>();
}

// nlohmann reports a byte offset; convert it to 1-based line and column.
std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

ScenarioFamily parse_family(const json &j) {
    const std::string where = "family";
    reject_unknown(j, where, {"name", "value", "range", "points"});
    ScenarioFamily f;
    f.name = as_string(required(j, where, "name"), where + ".name");
    if (j.contains("value")) {
        f.value = as_number(j["value"], where + ".value");
    }
    if (j.contains("range")) {
        const auto &r = j["range"];
        if (!r.is_array() || r.size() != 2) {
            schema_error(where + ".range", "expected [lo, hi]");
        }
        f.range = ParamRange{as_number(r[0], where + ".range[0]"), as_number(r[1], where + ".range[1]")};
        if (!(f.range->lo < f.range->hi)) {
            schema_error(where + ".range", "lo must be below hi");
        }
        f.points = as_count(required(j, where, "points"), where + ".points");
        if (*f.points < 2) {
            schema_error(where + ".points", "need at least 2 points");
        }
    } else if (j.contains("points")) {
        schema_error(where + ".points", "points given without range");
    }
    if (f.value && f.range) {
        schema_error(where, "give either value or range, not both");
    }
    return f;
}

ScenarioWiring parse_wiring(const json &j) {
    const std::string where = "wiring";
    reject_unknown(j, where, {"copies", "base_dims", "assignments"});
    ScenarioWiring w;
    w.copies = as_count(required(j, where, "copies"), where + ".copies");
    const auto &dims = required(j, where, "base_dims");
    if (!dims.is_array() || dims.empty()) {
        schema_error(where + ".base_dims", "expected a non-empty array");
    }
    for (std::size_t i = 0; i < dims.size(); ++i) {
        w.base_dims.push_back(as_count(dims[i], where + ".base_dims[" + std::to_string(i) + "]"));
    }
    const auto &list = required(j, where, "assignments");
    if (!list.is_array() || list.empty()) {
        schema_error(where + ".assignments", "expected a non-empty array");
    }
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string at = where + ".assignments[" + std::to_string(i) + "]";
        reject_unknown(list[i], at, {"witness", "b", "slots"});
        ScenarioAssignment a;
        a.witness = as_string(required(list[i], at, "witness"), at + ".witness");
        if (list[i].contains("b")) {
            a.b = as_number(list[i]["b"], at + ".b");
        }
        a.slots = as_string(required(list[i], at, "slots"), at + ".slots");
        w.assignments.push_back(std::move(a));
    }
    return w;
}

WitnessGrid parse_witness_grid(const json &j) {
    const std::string where = "witness_grid";
    reject_unknown(j, where, {"param", "values"});
    WitnessGrid g;
    g.param = as_string(required(j, where, "param"), where + ".param");
    if (g.param != "b") {
        schema_error(where + ".param", "only 'b' is supported");
    }
    const auto &values = required(j, where, "values");
    if (!values.is_array() || values.empty()) {
        schema_error(where + ".values", "expected a non-empty array");
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        g.values.push_back(as_number(values[i], where + ".values[" + std::to_string(i) + "]"));
    }
    return g;
}

json root_json(const Root &r) {
    return json{{"value", round_significant(r.value)},
                {"lo", round_significant(r.lo)},
                {"hi", round_significant(r.hi)},
                {"f_value", round_significant(r.f_value)}};
}

json roots_json(const std::vector<Root> &roots) {
    json out = json::array();
    for (const auto &r : roots) {
        out.push_back(root_json(r));
    }
    return out;
}

StateFamily resolve_family(const ScenarioFamily &spec) {
    StateFamily family = state_family(spec.name);
    if (family.parameterized()) {
        if (!spec.value && !spec.range) {
            schema_error("family", "'" + spec.name + "' needs a value or a range");
        }
    } else if (spec.value || spec.range) {
        schema_error("family", "'" + spec.name + "' takes no parameter");
    }
    if (spec.range) {
        if (spec.range->lo < family.range.lo || spec.range->hi > family.range.hi) {
            throw Error(ErrorCode::out_of_range, "scenario family.range: outside [" + format_number(family.range.lo) +
                                                     ", " + format_number(family.range.hi) + "]");
        }
        family.range = *spec.range;
    }
    return family;
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
    json j;
    try {
        j = json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        auto [line, col] = line_column(text, e.byte);
        std::string msg = e.what();
        // Strip nlohmann's "[json.exception.parse_error.101] parse error at line x, column y: " prefix.
        if (auto pos = msg.find(": "); pos != std::string::npos) {
            if (auto second = msg.find(": ", pos + 2); second != std::string::npos) {
                msg = msg.substr(second + 2);
            }
        }
        throw Error(ErrorCode::parse_error,
                    "scenario line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
    }
    reject_unknown(j, "root", {"version", "family", "wiring", "witness_grid", "outputs", "seed"});
    Scenario s;
    const auto &version = required(j, "root", "version");
    if (!version.is_number_integer() || version.get<int>() != kScenarioVersion) {
        schema_error("version", "unsupported version (expected 1)");
    }
    s.family = parse_family(required(j, "root", "family"));
    s.wiring = parse_wiring(required(j, "root", "wiring"));
    if (j.contains("witness_grid")) {
        s.witness_grid = parse_witness_grid(j["witness_grid"]);
    }
    const auto &outputs = required(j, "root", "outputs");
    if (!outputs.is_array()) {
        schema_error("outputs", "expected an array");
    }
    for (std::size_t i = 0; i < outputs.size(); ++i) {
        const std::string at = "outputs[" + std::to_string(i) + "]";
        reject_unknown(outputs[i], at, {"format", "path"});
        ScenarioOutput o;
        o.format = as_string(required(outputs[i], at, "format"), at + ".format");
        if (o.format != "csv" && o.format != "json") {
            schema_error(at + ".format", "expected 'csv' or 'json'");
        }
        o.path = as_string(required(outputs[i], at, "path"), at + ".path");
        if (o.path.empty()) {
            schema_error(at + ".path", "empty path");
        }
        s.outputs.push_back(std::move(o));
    }
    const auto &seed = required(j, "root", "seed");
    if (!seed.is_number_unsigned()) {
        schema_error("seed", "expected a non-negative integer");
    }
    s.seed = seed.get<std::uint64_t>();
    return s;
}

std::string serialize_scenario(const Scenario &s) {
    json family{{"name", s.family.name}};
    if (s.family.value) {
        family["value"] = *s.family.value;
    }
    if (s.family.range) {
        family["range"] = json::array({s.family.range->lo, s.family.range->hi});
        family["points"] = s.family.points.value_or(kDefaultGridPoints);
    }
    json assignments = json::array();
    for (const auto &a : s.wiring.assignments) {
        json item{{"witness", a.witness}, {"slots", a.slots}};
        if (a.b) {
            item["b"] = *a.b;
        }
        assignments.push_back(std::move(item));
    }
    json j{{"version", s.version},
           {"family", std::move(family)},
           {"wiring", json{{"copies", s.wiring.copies}, {"base_dims", s.wiring.base_dims}, {"assignments", assignments}}},
           {"seed", s.seed}};
    if (s.witness_grid) {
        j["witness_grid"] = json{{"param", s.witness_grid->param}, {"values", s.witness_grid->values}};
    }
    json outputs = json::array();
    for (const auto &o : s.outputs) {
        outputs.push_back(json{{"format", o.format}, {"path", o.path}});
    }
    j["outputs"] = std::move(outputs);
    return j.dump(2) + "\n";
}

WiringSpec build_wiring(const ScenarioWiring &wiring, std::optional<double> grid_b) {
    WiringSpec spec(wiring.copies, SubsystemShape(wiring.base_dims));
    for (const auto &a : wiring.assignments) {
        std::optional<double> b = a.b;
        if (!b && grid_b && witness_takes_b(a.witness)) {
            b = grid_b;
        }
        spec.add(WitnessRef(a.witness, b), a.slots);
    }
    return spec;
}

std::string report_csv(const DetectionReport &report) {
    std::string out = "param,value\n";
    for (const auto &p : report.grid) {
        out += (report.param_name.empty() ? std::string() : format_number(p.param)) + "," + format_number(p.value) + "\n";
    }
    return out;
}

std::string report_json(const DetectionReport &report) {
    json grid_range = json::array();
    if (!report.grid.empty()) {
        grid_range = {round_significant(report.grid.front().param), round_significant(report.grid.back().param)};
    }
    double lo = 0;
    double hi = 0;
    if (!report.grid.empty()) {
        auto [mn, mx] = std::minmax_element(report.grid.begin(), report.grid.end(),
                                            [](const GridPoint &a, const GridPoint &b) { return a.value < b.value; });
        lo = mn->value;
        hi = mx->value;
    }
    json j{{"family", report.family},
           {"param_name", report.param_name},
           {"wiring", report.wiring},
           {"points", report.grid.size()},
           {"range", grid_range},
           {"min_value", round_significant(lo)},
           {"max_value", round_significant(hi)},
           {"thresholds", roots_json(report.thresholds)}};
    return j.dump(2) + "\n";
}

std::string report_csv(const Sweep2dReport &report) {
    std::string out = report.param_name + "," + report.witness_param_name + ",value\n";
    for (const auto &r : report.rows) {
        out += format_number(r.param) + "," + format_number(r.witness_param) + "," + format_number(r.value) + "\n";
    }
    return out;
}

std::string report_json(const Sweep2dReport &report) {
    json thresholds = json::array();
    for (const auto &[b, roots] : report.thresholds) {
        thresholds.push_back(json{{report.witness_param_name, round_significant(b)}, {"roots", roots_json(roots)}});
    }
    json j{{"family", report.family},
           {"param_name", report.param_name},
           {"witness_param_name", report.witness_param_name},
           {"rows", report.rows.size()},
           {"thresholds", std::move(thresholds)}};
    return j.dump(2) + "\n";
}

Bundle run_scenario(const Scenario &scenario, std::optional<std::size_t> points_override) {
    std::string csv;
    std::string js;
    try {
        StateFamily family = resolve_family(scenario.family);
        std::size_t points = points_override.value_or(scenario.family.points.value_or(kDefaultGridPoints));
        if (scenario.witness_grid) {
            if (!scenario.family.range) {
                schema_error("witness_grid", "needs a family range");
            }
            auto report = sweep_2d([&](double b) { return build_wiring(scenario.wiring, b); }, family,
                                   scenario.witness_grid->param, scenario.witness_grid->values, points);
            csv = report_csv(report);
            js = report_json(report);
        } else {
            WiringSpec wiring = build_wiring(scenario.wiring);
            DetectionReport report;
            if (scenario.family.range) {
                report = sweep(wiring, family, points);
            } else {
                double param = scenario.family.value.value_or(0.0);
                report.family = family.name;
                report.param_name = family.param_name;
                report.wiring = wiring.describe();
                report.grid.push_back({param, expectation(wiring, family(param))});
            }
            csv = report_csv(report);
            js = report_json(report);
        }
    } catch (const Error &e) {
        if (e.code() == ErrorCode::parse_error) {
            throw;
        }
        throw Error(e.code(), "scenario '" + scenario.family.name + "': " + e.what());
    }
    Bundle out;
    if (scenario.outputs.empty()) {
        out.add("sweep.csv", std::move(csv));
        out.add("sweep.json", std::move(js));
        return out;
    }
    for (const auto &o : scenario.outputs) {
        out.add(o.path, o.format == "csv" ? csv : js);
    }
    return out;
}

}  // namespace mcwit
