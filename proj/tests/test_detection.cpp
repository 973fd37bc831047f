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

#include <array>
#include <cmath>

#include "gtest_util.hpp"
#include "mcwit/detection.hpp"
#include "support.hpp"

namespace mcwit {
namespace {

using testing::code_of;

TEST(SlotNotation, Parses) {
    auto s = parse_slot_notation("A1B2", 2, 2);
    ASSERT_EQ(s.size(), 2u);
    EXPECT_EQ(s[0], (Slot{0, 0}));
    EXPECT_EQ(s[1], (Slot{1, 1}));
    EXPECT_EQ(parse_slot_notation("AB'", 2, 2), s);
    EXPECT_EQ(parse_slot_notation("C''", 3, 3), (std::vector<Slot>{{2, 2}}));
    EXPECT_EQ(format_slot_notation(parse_slot_notation("BA'", 2, 2)), "B1A2");
}

TEST(SlotNotation, Rejects) {
    for (const char *bad : {"", "a1", "A0", "A3", "C1", "A1 B2", "1A"}) {
        EXPECT_EQ(code_of([&] { parse_slot_notation(bad, 2, 2); }), ErrorCode::parse_error) << bad;
    }
}

TEST(WiringSpec, ValidatesAssignments) {
    WiringSpec w(2, {2, 2});
    w.add("W", "A1B2");
    EXPECT_EQ(code_of([&] { w.add("V", "B2A1"); }), ErrorCode::invalid_argument);  // slot reused
    EXPECT_EQ(code_of([&] { w.add("V", "B1B1"); }), ErrorCode::invalid_argument);
    EXPECT_EQ(code_of([&] { w.add("V", "B1"); }), ErrorCode::dimension_mismatch);
    WiringSpec q(1, {3, 3});
    EXPECT_EQ(code_of([&] { q.add("W", "AB"); }), ErrorCode::dimension_mismatch);
    EXPECT_EQ(code_of([] { WiringSpec z(0, {2, 2}); }), ErrorCode::invalid_argument);
    EXPECT_EQ(code_of([] { WiringSpec big(5, {2, 2}); }), ErrorCode::dimension_mismatch);
    w.add("V", "B1A2");
    EXPECT_EQ(w.describe(), "W[A1B2] x V[B1A2]");
    EXPECT_EQ(w.full_shape(), (SubsystemShape{2, 2, 2, 2}));
    EXPECT_EQ(w.flat({1, 1}), 3u);
}

TEST(Assemble, MatchesPlacedReference) {
    auto w = orderings::cyclic_three_copy("W1", "W2", "W3");
    auto ref_op = oracle::place(
        {{ref::witness("W1"), {0, 3}}, {ref::witness("W2"), {2, 5}}, {ref::witness("W3"), {1, 4}}},
        {2, 2, 2, 2, 2, 2});
    EXPECT_LE(ref::diff(ref_op, assemble(w).matrix), 1e-15);
}

TEST(Expectation, CrossWiringOnBell) {
    auto rho = state_family("psi_plus")(0);
    EXPECT_NEAR(expectation(orderings::cross_two_copy("W", "V"), rho), -0.5, 1e-12);
    EXPECT_EQ(code_of([&] { expectation(orderings::cross_two_copy("W", "V"), state_family("ghz")(0)); }),
              ErrorCode::dimension_mismatch);
}

TEST(Expectation, InvariantUnderCopyRelabeling) {
    auto fam = state_family("werner_w");
    auto w = orderings::cyclic_three_copy("W1", "W2", "W3");
    std::array<std::size_t, 3> perm{2, 0, 1};
    auto moved = w.relabel_copies(perm);
    for (double p : {0.0, 0.3, 0.9}) {
        EXPECT_NEAR(expectation(w, fam(p)), expectation(moved, fam(p)), 1e-13);
    }
}

TEST(ClosedForms, AgreeWithDense) {
    auto cyc = orderings::cyclic_three_copy("W1", "W2", "W3");
    auto ww = WiringSpec(1, {2, 2, 2});
    ww.add("WW1", "ABC");
    for (double p : {0.0, 0.37, 1.0}) {
        EXPECT_NEAR(expectation(cyc, werner_w(p)), expectation_closed_form("cyclic_werner_w", p), 1e-12);
        EXPECT_NEAR(expectation(orderings::cross_two_copy("P", "W3"), werner_a(p)),
                    expectation_closed_form("cross_p_werner_a", p), 1e-12);
        EXPECT_NEAR(expectation(orderings::cross_two_copy(WitnessRef("P_b", 7.0), "W3"), werner_a(p)),
                    expectation_closed_form("cross_pb_werner_a", p, 7.0), 1e-12);
        EXPECT_NEAR(expectation(ww, noisy_w(p)), expectation_closed_form("ww1_noisy_w", p), 1e-12);
    }
    EXPECT_EQ(code_of([] { expectation_closed_form("nope", 0.5); }), ErrorCode::invalid_argument);
    EXPECT_EQ(code_of([] { expectation_closed_form("cross_pb_werner_a", 0.5); }), ErrorCode::out_of_range);
}

TEST(Threshold, Bisection) {
    auto r = find_threshold([](double x) { return x * x - 2; }, 0, 2, 1e-12);
    EXPECT_NEAR(r.value, std::sqrt(2.0), 1e-11);
    EXPECT_LE(r.lo, r.value);
    EXPECT_GE(r.hi, r.value);
    EXPECT_EQ(code_of([] { find_threshold([](double x) { return x * x + 1; }, -1, 1); }), ErrorCode::no_sign_change);
    EXPECT_EQ(code_of([] { find_threshold([](double x) { return x; }, 1, 0); }), ErrorCode::invalid_argument);
}

TEST(Threshold, GridLocatesEverySignChange) {
    auto f = [](double x) { return (x - 0.25) * (x - 0.5) * (x - 0.8); };
    std::vector<GridPoint> grid;
    for (double x : uniform_grid({0, 1}, 11)) grid.push_back({x, f(x)});
    auto roots = locate_thresholds(grid, f);
    ASSERT_EQ(roots.size(), 3u);
    EXPECT_NEAR(roots[0].value, 0.25, 1e-8);
    EXPECT_DOUBLE_EQ(roots[1].value, 0.5);  // lands on a grid point
    EXPECT_NEAR(roots[2].value, 0.8, 1e-8);
}

TEST(Grid, Uniform) {
    auto g = uniform_grid({0, 1}, 201);
    ASSERT_EQ(g.size(), 201u);
    EXPECT_EQ(g.front(), 0.0);
    EXPECT_EQ(g.back(), 1.0);
    EXPECT_DOUBLE_EQ(g[100], 0.5);
    EXPECT_EQ(code_of([] { uniform_grid({0, 1}, 1); }), ErrorCode::invalid_argument);
}

TEST(Sweep, CyclicWiringOnWernerW) {
    auto report = sweep(orderings::cyclic_three_copy("W1", "W2", "W3"), state_family("werner_w"));
    EXPECT_EQ(report.grid.size(), kDefaultGridPoints);
    ASSERT_EQ(report.thresholds.size(), 1u);
    EXPECT_NEAR(report.thresholds[0].value, 0.2063, 1e-4);
    EXPECT_EQ(code_of([] { sweep(orderings::cross_two_copy("W", "V"), state_family("sigma")); }),
              ErrorCode::invalid_argument);
}

TEST(Sweep2d, RowsAndThresholds) {
    auto rep = sweep_2d([](double b) { return orderings::cross_two_copy(WitnessRef("P_b", b), "W3"); },
                        state_family("werner_a"), "b", {1, 10}, 11);
    EXPECT_EQ(rep.rows.size(), 22u);
    ASSERT_EQ(rep.thresholds.size(), 2u);
    EXPECT_NEAR(rep.thresholds[1].second.at(0).value, std::sqrt(21.0 / 59.0), 1e-8);
}

TEST(OrderingMatrix, FullTableIsDeterministic) {
    std::vector<Ordering> ords{{"cross", 2, {"A1B2", "B1A2"}}, {"parallel", 2, {"A1A2", "B1B2"}}};
    auto t1 = ordering_matrix({"W1", "W2", "W3"}, state_family("werner_w"), 0.1, ords);
    auto t2 = ordering_matrix({"W1", "W2", "W3"}, state_family("werner_w"), 0.1, ords);
    ASSERT_EQ(t1.size(), 18u);
    for (std::size_t i = 0; i < t1.size(); ++i) {
        EXPECT_EQ(t1[i].value, t2[i].value);
        EXPECT_EQ(t1[i].ordering, t2[i].ordering);
        if (t1[i].ordering == "cross") EXPECT_GE(t1[i].value, -1e-9);
    }
}

}  // namespace
}  // namespace mcwit
