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

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest_util.hpp"
#include "mcwit/scenario.hpp"

namespace mcwit {
namespace {

using testing::code_of;

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::filesystem::path> shipped() {
    std::vector<std::filesystem::path> out;
    for (const auto &e : std::filesystem::directory_iterator(MCWIT_SCENARIO_DIR)) {
        if (e.path().extension() == ".json") out.push_back(e.path());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t count_lines(const std::string &s) {
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

const std::string &find(const Bundle &b, const std::string &suffix) {
    for (const auto &[name, text] : b.files) {
        if (name.size() >= suffix.size() && name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0) {
            return text;
        }
    }
    throw std::runtime_error("no output ending in " + suffix);
}

constexpr const char *kMinimal = R"({
  "family": {"name": "werner_a", "range": [0.0, 1.0], "points": 2},
  "outputs": [],
  "seed": 0,
  "version": 1,
  "wiring": {"assignments": [{"slots": "AB", "witness": "W3"}], "base_dims": [2, 2], "copies": 1}
})";

TEST(Scenario, ShippedFilesRoundTrip) {
    auto files = shipped();
    ASSERT_GE(files.size(), 8u);
    for (const auto &p : files) {
        std::string text = slurp(p);
        EXPECT_EQ(serialize_scenario(parse_scenario(text)), text) << p;
    }
}

TEST(Scenario, RejectsUnknownFields) {
    std::string base = kMinimal;
    auto with = [&](const std::string &from, const std::string &to) {
        std::string s = base;
        s.replace(s.find(from), from.size(), to);
        return s;
    };
    for (const auto &bad : {with("\"seed\": 0", "\"seed\": 0, \"extra\": 1"),
                            with("\"points\": 2", "\"points\": 2, \"step\": 0.1"),
                            with("\"copies\": 1", "\"copies\": 1, \"label\": \"x\""),
                            with("\"witness\": \"W3\"", "\"witness\": \"W3\", \"weight\": 2")}) {
        try {
            parse_scenario(bad);
            ADD_FAILURE() << "accepted " << bad;
        } catch (const Error &e) {
            EXPECT_EQ(e.code(), ErrorCode::parse_error);
            EXPECT_NE(std::string(e.what()).find("unknown field"), std::string::npos) << e.what();
        }
    }
}

TEST(Scenario, SchemaErrors) {
    std::string base = kMinimal;
    auto with = [&](const std::string &from, const std::string &to) {
        std::string s = base;
        s.replace(s.find(from), from.size(), to);
        return s;
    };
    EXPECT_EQ(code_of([&] { parse_scenario(with("\"version\": 1", "\"version\": 2")); }), ErrorCode::parse_error);
    EXPECT_EQ(code_of([&] { parse_scenario(with("\"seed\": 0", "\"seed\": -1")); }), ErrorCode::parse_error);
    EXPECT_EQ(code_of([&] { parse_scenario(with("\"points\": 2", "\"points\": 1")); }), ErrorCode::parse_error);
    EXPECT_EQ(code_of([&] { parse_scenario(with("\"outputs\": []", "\"outputs\": [{\"format\": \"xml\", \"path\": \"a\"}]")); }),
              ErrorCode::parse_error);
    EXPECT_EQ(code_of([&] { parse_scenario(with(", \"points\": 2", "")); }), ErrorCode::parse_error);
}

TEST(Scenario, ParseErrorsCarryLineAndColumn) {
    std::string text = "{\n  \"version\": 1,\n  \"family\": {\"name\": \"werner_a\",, }\n}\n";
    try {
        parse_scenario(text);
        FAIL() << "accepted malformed text";
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::parse_error);
        EXPECT_NE(std::string(e.what()).find("line 3, column 33"), std::string::npos) << e.what();
    }
}

TEST(Scenario, DegenerateTwoPointGrid) {
    auto out = run_scenario(parse_scenario(kMinimal));
    ASSERT_EQ(out.files.size(), 2u);
    EXPECT_EQ(out.files[0].first, "sweep.csv");
    EXPECT_EQ(out.files[0].second, "param,value\n0,0.5\n1,1\n");
    EXPECT_NE(out.files[1].second.find("\"thresholds\": []"), std::string::npos);
}

TEST(Scenario, CyclicWernerSweep) {
    auto out = run_scenario(parse_scenario(slurp(std::filesystem::path(MCWIT_SCENARIO_DIR) / "ex3_cyclic_werner_w.json")));
    const auto &csv = find(out, ".csv");
    EXPECT_EQ(count_lines(csv), 202u);
    EXPECT_EQ(csv.substr(0, 12), "param,value\n");
    const auto &json = find(out, ".json");
    EXPECT_NE(json.find("\"value\": 0.2062994"), std::string::npos) << json;
    EXPECT_EQ(count_lines(find(run_scenario(parse_scenario(slurp(std::filesystem::path(MCWIT_SCENARIO_DIR) /
                                                                      "ex3_cyclic_werner_w.json")),
                                            11),
                               ".csv")),
              12u);
}

TEST(Scenario, TwoDimensionalGridHeader) {
    auto out =
        run_scenario(parse_scenario(slurp(std::filesystem::path(MCWIT_SCENARIO_DIR) / "ex4_cross_p_b_werner_a.json")));
    const auto &csv = find(out, ".csv");
    EXPECT_EQ(csv.substr(0, 12), "a,b,value\n0,");
    EXPECT_EQ(count_lines(csv), 1u + 201u * 7u);
}

TEST(Scenario, FixedStateSingleRow) {
    auto out = run_scenario(parse_scenario(slurp(std::filesystem::path(MCWIT_SCENARIO_DIR) / "ex1_cross_psi_plus.json")));
    EXPECT_EQ(find(out, ".csv"), "param,value\n,-0.5\n");
}

TEST(Scenario, EvaluationErrorsNameTheScenario) {
    std::string s = kMinimal;
    s.replace(s.find("\"W3\""), 4, "\"P_b\"");
    try {
        run_scenario(parse_scenario(s));
        FAIL();
    } catch (const Error &e) {
        EXPECT_NE(std::string(e.what()).find("scenario 'werner_a'"), std::string::npos) << e.what();
    }
}

TEST(Scenario, DeterministicOutput) {
    for (const auto &p : shipped()) {
        auto sc = parse_scenario(slurp(p));
        EXPECT_EQ(run_scenario(sc).files, run_scenario(sc).files) << p;
    }
}

}  // namespace
}  // namespace mcwit
