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

#include "gtest_util.hpp"
#include "mcwit/reproduce.hpp"

namespace mcwit {
namespace {

using testing::code_of;

const Check *by_id(const Reproduction &r, const std::string &id) {
    for (const auto &c : r.checks) {
        if (c.id == id) return &c;
    }
    return nullptr;
}

TEST(Reproduce, Ids) {
    EXPECT_EQ(reproduction_ids(), (std::vector<std::string>{"ex1", "ex2", "ex3", "ex4", "ex5", "ghz", "concentration"}));
    EXPECT_EQ(code_of([] { reproduce("ex9", 0); }), ErrorCode::invalid_argument);
}

TEST(Reproduce, BellCrossWiring) {
    auto r = reproduce("ex1", 0);
    EXPECT_TRUE(r.all_pass());
    const Check *c = by_id(r, "cross_W_V_psi_plus");
    ASSERT_NE(c, nullptr);
    EXPECT_EQ(c->status, CheckStatus::pass);
    EXPECT_NEAR(c->value, -0.5, 1e-12);
    auto json = reproduction_json(r);
    EXPECT_NE(json.find("\"value\": -0.5"), std::string::npos);
    EXPECT_NE(json.find("\"all_pass\": true"), std::string::npos);
}

TEST(Reproduce, WernerARoots) {
    auto r = reproduce("ex4", 0);
    EXPECT_TRUE(r.all_pass());
    ASSERT_NE(by_id(r, "cross_P_W3_root"), nullptr);
    EXPECT_NEAR(by_id(r, "cross_P_W3_root")->value, 0.7745966692, 1e-8);
    ASSERT_NE(by_id(r, "cross_P_b_W3(b=10).root"), nullptr);
    EXPECT_EQ(r.figures.files.size(), 2u);
}

TEST(Reproduce, NoisyWFlagsTabulatedDiscrepancy) {
    auto r = reproduce("ex5", 0);
    EXPECT_TRUE(r.all_pass());
    const Check *root = by_id(r, "cross_root_dense");
    ASSERT_NE(root, nullptr);
    EXPECT_NEAR(root->value, 0.4, 1e-6);
    const Check *flag = by_id(r, "cross_root_vs_0.406");
    ASSERT_NE(flag, nullptr);
    EXPECT_EQ(flag->status, CheckStatus::flagged);
    EXPECT_EQ(by_id(r, "cross_tabulated_polynomial_max_deviation")->status, CheckStatus::flagged);
    EXPECT_NEAR(by_id(r, "WW1_root")->value, 8.0 / 21.0, 1e-6);
    auto n_flagged = std::count_if(r.checks.begin(), r.checks.end(),
                                   [](const Check &c) { return c.status == CheckStatus::flagged; });
    EXPECT_EQ(n_flagged, 3);
}

TEST(Reproduce, FailuresAreListed) {
    Reproduction r;
    r.id = "x";
    r.checks.push_back({"a", 1, 0.0, 0, "eq", CheckStatus::fail, ""});
    r.checks.push_back({"b", 1, 1.0, 0, "eq", CheckStatus::pass, ""});
    EXPECT_FALSE(r.all_pass());
    ASSERT_EQ(r.failures().size(), 1u);
    EXPECT_EQ(r.failures()[0]->id, "a");
    EXPECT_NE(reproduction_json(r).find("\"failures\": [\n    \"a\"\n  ]"), std::string::npos);
}

TEST(Reproduce, RemainingExamplesPass) {
    for (const char *id : {"ex2", "ex3", "ghz", "concentration"}) {
        auto r = reproduce(id, 3);
        EXPECT_TRUE(r.all_pass()) << id;
        auto b = reproduction_bundle(r);
        EXPECT_EQ(b.files.front().first, std::string(id) + "_report.json");
    }
}

}  // namespace
}  // namespace mcwit
