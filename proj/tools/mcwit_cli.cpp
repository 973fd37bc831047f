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

// Command-line front end. Talks to the library only through the C API.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mcwit/mcwit.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitChecksFailed = 1;
constexpr int kExitError = 2;

struct BundleDeleter {
    void operator()(mcwit_bundle *b) const {
        mcwit_bundle_destroy(b);
    }
};
using BundlePtr = std::unique_ptr<mcwit_bundle, BundleDeleter>;

struct Failure {
    std::string message;
};

void check(mcwit_status status) {
    if (status != MCWIT_OK) {
        throw Failure{std::string(mcwit_status_name(status)) + ": " + mcwit_last_error()};
    }
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Failure{"io_error: cannot open '" + path + "'"};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path &path, const std::string &text) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        throw Failure{"io_error: cannot write '" + path.string() + "'"};
    }
}

bool ends_with(const std::string &s, const std::string &suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// With --out every entry is written below that directory; otherwise the
// first entry in the requested format goes to stdout.
void emit(const mcwit_bundle *bundle, const std::string &out_dir, const std::string &format) {
    std::size_t n = mcwit_bundle_count(bundle);
    if (!out_dir.empty()) {
        for (std::size_t i = 0; i < n; ++i) {
            auto path = std::filesystem::path(out_dir) / mcwit_bundle_name(bundle, i);
            write_file(path, mcwit_bundle_text(bundle, i));
            std::cerr << "wrote " << path.string() << "\n";
        }
        return;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (format.empty() || ends_with(mcwit_bundle_name(bundle, i), "." + format)) {
            std::cout << mcwit_bundle_text(bundle, i);
            return;
        }
    }
    if (n > 0) {
        std::cout << mcwit_bundle_text(bundle, 0);
    }
}

int report_reproduction(const mcwit_bundle *bundle) {
    auto report = nlohmann::json::parse(mcwit_bundle_text(bundle, 0));
    std::size_t passed = 0;
    std::size_t flagged = 0;
    for (const auto &c : report["checks"]) {
        passed += c["status"] == "pass";
        flagged += c["status"] == "flagged";
    }
    const auto &failures = report["failures"];
    std::cerr << report["id"].get<std::string>() << ": " << passed << " passed, " << failures.size() << " failed, "
              << flagged << " flagged\n";
    for (const auto &c : report["checks"]) {
        if (c["status"] == "fail" || c["status"] == "flagged") {
            std::cerr << "  " << c["status"].get<std::string>() << " " << c["id"].get<std::string>() << " value="
                      << c["value"].dump();
            if (c.contains("expected")) {
                std::cerr << " expected=" << c["expected"].dump();
            }
            std::cerr << "\n";
        }
    }
    return failures.empty() ? kExitPass : kExitChecksFailed;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Multi-copy entanglement witness toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", mcwit_version());

    std::uint64_t seed = 0;
    std::size_t points = 0;
    std::string out_dir;
    std::string format;
    auto add_common = [&](CLI::App *cmd, bool with_points, const std::string &default_format) {
        cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
        if (with_points) {
            cmd->add_option("--points", points, "Grid points (0 keeps the default)");
        }
        cmd->add_option("--out", out_dir, "Write all outputs into this directory");
        format = default_format;
        cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    };

    std::string reproduce_id;
    auto *reproduce = app.add_subcommand("reproduce", "Run a worked example and check it");
    reproduce->add_option("id", reproduce_id, "ex1, ex2, ex3, ex4, ex5, ghz, concentration or all")->required();
    add_common(reproduce, false, "json");

    std::string scenario_path;
    bool canonical = false;
    auto *sweep = app.add_subcommand("sweep", "Evaluate a scenario file");
    sweep->add_option("file", scenario_path, "Scenario file")->required()->check(CLI::ExistingFile);
    sweep->add_flag("--canonical", canonical, "Print the scenario in canonical form instead");
    add_common(sweep, true, "csv");

    std::string family;
    std::vector<std::size_t> slots{1};
    std::optional<double> value;
    auto *ppt = app.add_subcommand("ppt", "PPT threshold or verdict for a state family");
    ppt->add_option("family", family, "State family")->required();
    ppt->add_option("--slots", slots, "Transposed slots")->capture_default_str();
    ppt->add_option("--value", value, "Parameter value (threshold when omitted)");
    add_common(ppt, false, "json");

    std::string witness;
    std::optional<double> b;
    std::uint64_t samples = 100000;
    auto *validate = app.add_subcommand("validate", "Check a catalog witness");
    validate->add_option("witness", witness, "Witness name")->required();
    validate->add_option("--b", b, "Parameter of P_b");
    validate->add_option("--samples", samples, "Sampled product states")->capture_default_str();
    add_common(validate, false, "json");

    std::size_t dim = 2;
    std::string kind = "M";
    std::size_t conc_samples = 10;
    auto *concentrate = app.add_subcommand("concentrate", "Concentration protocol on random Psi");
    concentrate->add_option("--d", dim, "Local dimension")->capture_default_str();
    concentrate->add_option("--kind", kind, "Measurement vector")->check(CLI::IsMember({"m", "M"}))->capture_default_str();
    concentrate->add_option("--samples", conc_samples, "Number of random Psi")->capture_default_str();
    add_common(concentrate, false, "csv");

    CLI11_PARSE(app, argc, argv);

    try {
        if (reproduce->parsed()) {
            std::vector<std::string> ids;
            if (reproduce_id == "all") {
                std::istringstream list(mcwit_reproduction_ids());
                for (std::string line; std::getline(list, line);) {
                    ids.push_back(line);
                }
            } else {
                ids.push_back(reproduce_id);
            }
            int code = kExitPass;
            for (const auto &id : ids) {
                mcwit_bundle *raw = nullptr;
                check(mcwit_reproduce(id.c_str(), seed, &raw));
                BundlePtr bundle(raw);
                emit(bundle.get(), out_dir, format);
                if (report_reproduction(bundle.get()) != kExitPass) {
                    code = kExitChecksFailed;
                }
            }
            return code;
        }
        mcwit_bundle *raw = nullptr;
        if (sweep->parsed()) {
            std::string text = read_file(scenario_path);
            if (canonical) {
                check(mcwit_scenario_canonical(text.c_str(), &raw));
            } else {
                mcwit_status st = mcwit_sweep_scenario(text.c_str(), points, &raw);
                if (st != MCWIT_OK) {
                    throw Failure{scenario_path + ": " + mcwit_status_name(st) + ": " + mcwit_last_error()};
                }
            }
        } else if (ppt->parsed()) {
            check(mcwit_ppt_report(family.c_str(), slots.data(), slots.size(), value.has_value(), value.value_or(0),
                                   format.c_str(), &raw));
        } else if (validate->parsed()) {
            check(mcwit_validate_report(witness.c_str(), b.has_value(), b.value_or(0), samples, seed, format.c_str(),
                                        &raw));
        } else if (concentrate->parsed()) {
            auto k = kind == "m" ? MCWIT_MEASUREMENT_M_SMALL : MCWIT_MEASUREMENT_M_LARGE;
            check(mcwit_concentrate_report(dim, k, conc_samples, seed, format.c_str(), &raw));
        }
        BundlePtr bundle(raw);
        emit(bundle.get(), out_dir, canonical ? std::string() : format);
        return mcwit_bundle_all_pass(bundle.get()) ? kExitPass : kExitChecksFailed;
    } catch (const Failure &f) {
        std::cerr << "error: " << f.message << "\n";
        return kExitError;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
