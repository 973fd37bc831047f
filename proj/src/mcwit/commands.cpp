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

#include "mcwit/commands.hpp"

#include <cmath>
#include <random>

#include "json.hpp"
#include "mcwit/error.hpp"
#include "mcwit/numfmt.hpp"
#include "mcwit/ppt.hpp"
#include "mcwit/witnesses.hpp"

namespace mcwit {

namespace {

using nlohmann::json;

void require_format(const std::string &format) {
    if (format != "csv" && format != "json") {
        throw Error(ErrorCode::invalid_argument, "format must be csv or json, got '" + format + "'");
    }
}

std::string join_slots(const std::vector<std::size_t> &slots) {
    std::string out;
    for (std::size_t s : slots) {
        out += (out.empty() ? "" : " ") + std::to_string(s);
    }
    return out;
}

}  // namespace

Bundle ppt_command(const std::string &family_name, const std::vector<std::size_t> &slots,
                   std::optional<double> value, const std::string &format) {
    require_format(format);
    auto family = state_family(family_name);
    Bundle out;
    std::string stem = "ppt_" + family_name;
    if (value || !family.parameterized()) {
        double p = value.value_or(0.0);
        auto verdict = ppt_check(family(p), slots);
        if (format == "csv") {
            out.add(stem + ".csv", "family,param,slots,min_eigenvalue,verdict\n" + family_name + "," +
                                       (family.parameterized() ? format_number(p) : std::string()) + "," +
                                       join_slots(slots) + "," + format_number(verdict.min_eigenvalue) + "," +
                                       ppt_outcome_name(verdict.verdict) + "\n");
        } else {
            json j{{"family", family_name},
                   {"slots", slots},
                   {"min_eigenvalue", round_significant(verdict.min_eigenvalue)},
                   {"verdict", ppt_outcome_name(verdict.verdict)}};
            if (family.parameterized()) {
                j[family.param_name] = round_significant(p);
            }
            out.add(stem + ".json", j.dump(2) + "\n");
        }
        return out;
    }
    auto root = ppt_threshold(family, slots);
    if (format == "csv") {
        out.add(stem + ".csv", "family,param_name,slots,threshold,lo,hi\n" + family_name + "," + family.param_name +
                                   "," + join_slots(slots) + "," + format_number(root.value) + "," +
                                   format_number(root.lo) + "," + format_number(root.hi) + "\n");
    } else {
        json j{{"family", family_name},
               {"param_name", family.param_name},
               {"slots", slots},
               {"threshold", round_significant(root.value)},
               {"lo", round_significant(root.lo)},
               {"hi", round_significant(root.hi)}};
        out.add(stem + ".json", j.dump(2) + "\n");
    }
    return out;
}

Bundle validate_command(const std::string &witness, std::optional<double> b, std::size_t samples, std::uint64_t seed,
                        const std::string &format) {
    require_format(format);
    auto spec = witness_catalog(witness, b);
    auto rep = validate_witness(spec, samples, seed);
    const char *kind = rep.kind == WitnessKind::witness ? "witness" : "positive_semidefinite";
    Bundle out;
    out.all_pass = rep.pass;
    std::string stem = "validate_" + witness;
    if (format == "csv") {
        out.add(stem + ".csv", "name,kind,min_eigenvalue,min_product_expectation,samples,seed,pass\n" + witness + "," +
                                   kind + "," + format_number(rep.min_eigenvalue) + "," +
                                   format_number(rep.min_product_expectation) + "," + std::to_string(rep.samples) +
                                   "," + std::to_string(rep.seed) + "," + (rep.pass ? "true" : "false") + "\n");
    } else {
        json j{{"name", witness},
               {"kind", kind},
               {"min_eigenvalue", round_significant(rep.min_eigenvalue)},
               {"min_product_expectation", round_significant(rep.min_product_expectation)},
               {"samples", rep.samples},
               {"seed", rep.seed},
               {"pass", rep.pass}};
        if (b) {
            j["b"] = round_significant(*b);
        }
        out.add(stem + ".json", j.dump(2) + "\n");
    }
    return out;
}

Bundle concentrate_command(std::size_t d, MeasurementKind kind, std::size_t samples, std::uint64_t seed,
                           const std::string &format) {
    require_format(format);
    if (samples == 0) {
        throw Error(ErrorCode::invalid_argument, "concentrate: samples must be positive");
    }
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(d)};
    std::mt19937_64 rng(seq);
    Bundle out;
    std::string csv = "index,probability,fidelity,bookkeeping_probability,bookkeeping_ratio,consistency_delta\n";
    json rows = json::array();
    for (std::size_t i = 0; i < samples; ++i) {
        auto psi = random_schmidt_matrix(d, rng);
        auto r = concentrate(psi, kind);
        auto pc = probability_consistency(psi, kind);
        if (std::abs(r.fidelity_with_target - 1) > 1e-9 || pc.delta > 1e-9) {
            out.all_pass = false;
        }
        csv += std::to_string(i) + "," + format_number(r.probability) + "," + format_number(r.fidelity_with_target) +
               "," + format_number(r.bookkeeping_probability) + "," + format_number(r.bookkeeping_ratio) + "," +
               format_number(pc.delta) + "\n";
        rows.push_back(json{{"index", i},
                            {"probability", round_significant(r.probability)},
                            {"fidelity", round_significant(r.fidelity_with_target)},
                            {"bookkeeping_probability", round_significant(r.bookkeeping_probability)},
                            {"bookkeeping_ratio", round_significant(r.bookkeeping_ratio)},
                            {"consistency_delta", round_significant(pc.delta)}});
    }
    std::string stem = "concentrate_d" + std::to_string(d) + "_" + measurement_kind_name(kind);
    if (format == "csv") {
        out.add(stem + ".csv", std::move(csv));
    } else {
        json j{{"d", d}, {"kind", measurement_kind_name(kind)}, {"seed", seed}, {"samples", rows}};
        out.add(stem + ".json", j.dump(2) + "\n");
    }
    return out;
}

}  // namespace mcwit
