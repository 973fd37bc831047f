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

#include "gtest_util.hpp"
#include "mcwit/ppt.hpp"

namespace mcwit {
namespace {

using testing::code_of;

constexpr std::array<std::size_t, 1> kSecond{1};

TEST(PptCheck, BellIsNpt) {
    auto v = ppt_check(state_family("psi_plus")(0), kSecond);
    EXPECT_EQ(v.verdict, PptOutcome::npt_entangled);
    EXPECT_NEAR(v.min_eigenvalue, -0.5, 1e-12);
    EXPECT_EQ(v.transposed_slots, (std::vector<std::size_t>{1}));
}

TEST(PptCheck, ProductAndMixedArePpt) {
    EXPECT_EQ(ppt_check(werner_w(1.0), kSecond).verdict, PptOutcome::ppt_inconclusive);
    EXPECT_EQ(ppt_check(state_family("sigma_real")(0), kSecond).verdict, PptOutcome::ppt_inconclusive);
    EXPECT_EQ(ppt_check(state_family("sigma")(0), kSecond).verdict, PptOutcome::npt_entangled);
}

TEST(PptCheck, RejectsNonStates) {
    MultipartiteOperator w(scale(ComplexMatrix::identity(4), 2.0), SubsystemShape{2, 2});
    EXPECT_EQ(code_of([&] { ppt_check(w, kSecond); }), ErrorCode::invalid_argument);
}

TEST(PptThreshold, WernerFamilies) {
    EXPECT_NEAR(ppt_threshold(state_family("werner_w"), kSecond).value, 2.0 / 3.0, 1e-10);
    EXPECT_NEAR(ppt_threshold(state_family("werner_a"), kSecond).value, 1.0 / 3.0, 1e-10);
    std::array<std::size_t, 1> first{0};
    EXPECT_NEAR(ppt_threshold(state_family("werner_w"), first).value, 2.0 / 3.0, 1e-10);
    EXPECT_EQ(code_of([] { ppt_threshold(state_family("ghz"), kSecond); }), ErrorCode::invalid_argument);
}

// For the noisy W family the single-party partial transpose stays negative
// far above the witness thresholds; 0.790411 is the root of the resulting
// eigenvalue condition found by an independent numpy computation.
TEST(PptThreshold, NoisyW) {
    std::array<std::size_t, 1> first{0};
    EXPECT_NEAR(ppt_threshold(state_family("noisy_w"), first).value, 0.790411, 1e-5);
}

TEST(PptOutcome, Names) {
    EXPECT_STREQ(ppt_outcome_name(PptOutcome::npt_entangled), "npt_entangled");
    EXPECT_STREQ(ppt_outcome_name(PptOutcome::ppt_inconclusive), "ppt_inconclusive");
}

}  // namespace
}  // namespace mcwit
