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

#include <cmath>

#include "gtest_util.hpp"
#include "mcwit/states.hpp"
#include "support.hpp"

namespace mcwit {
namespace {

using testing::code_of;

TEST(Bell, MatchesReferenceKets) {
    EXPECT_LE(ref::diff(ref::ket_projector(ref::psi_plus()), bell(BellKind::psi_plus).projector().matrix), 1e-15);
    EXPECT_LE(ref::diff(ref::ket_projector(ref::psi_minus()), bell(BellKind::psi_minus).projector().matrix), 1e-15);
    EXPECT_LE(ref::diff(ref::ket_projector(ref::phi_plus()), bell(BellKind::phi_plus).projector().matrix), 1e-15);
    auto b3 = bell(BellKind::psi_plus, 3);
    EXPECT_EQ(b3.shape, (SubsystemShape{3, 3}));
    EXPECT_NEAR(b3.amplitudes[4].real(), 1 / std::sqrt(3.0), 1e-15);
    EXPECT_EQ(code_of([] { bell(BellKind::psi_minus, 3); }), ErrorCode::invalid_argument);
}

TEST(PureState, RequiresUnitNorm) {
    EXPECT_EQ(code_of([] { PureState p({1, 1, 0, 0}, SubsystemShape{2, 2}); }), ErrorCode::invalid_argument);
    EXPECT_EQ(code_of([] { PureState p({1, 0}, SubsystemShape{2, 2}); }), ErrorCode::dimension_mismatch);
}

TEST(Families, MatchReferenceAndAreDensityMatrices) {
    for (double p : {0.0, 0.25, 0.5, 1.0}) {
        EXPECT_LE(ref::diff(ref::werner_w(p), werner_w(p).matrix), 1e-15);
        EXPECT_LE(ref::diff(ref::werner_a(p), werner_a(p).matrix), 1e-15);
        EXPECT_LE(ref::diff(ref::noisy_w(p), noisy_w(p).matrix), 1e-15);
        EXPECT_TRUE(check_density_matrix(noisy_w(p).matrix).valid);
    }
    EXPECT_LE(ref::diff(ref::ket_projector(ref::ghz3()), ghz_state().projector().matrix), 1e-15);
    EXPECT_LE(ref::diff(ref::sigma(), sigma_imaginarity().matrix), 1e-15);
}

TEST(Families, RejectOutOfRangeParameters) {
    EXPECT_EQ(code_of([] { werner_w(-0.01); }), ErrorCode::out_of_range);
    EXPECT_EQ(code_of([] { werner_a(1.5); }), ErrorCode::out_of_range);
    EXPECT_EQ(code_of([] { noisy_w(std::nan("")); }), ErrorCode::out_of_range);
}

TEST(Families, Registry) {
    for (const auto &name : state_family_names()) {
        auto fam = state_family(name);
        EXPECT_EQ(fam.name, name);
        auto rho = fam(fam.parameterized() ? 0.5 : 0.0);
        EXPECT_EQ(rho.shape, fam.shape) << name;
        EXPECT_TRUE(check_density_matrix(rho.matrix).valid) << name;
    }
    EXPECT_EQ(state_family("werner_w").param_name, "w");
    EXPECT_FALSE(state_family("ghz").parameterized());
    EXPECT_EQ(code_of([] { state_family("nope"); }), ErrorCode::invalid_argument);
}

TEST(SchmidtState, MaximallyEntangledInput) {
    for (std::size_t d : {2, 3, 4}) {
        auto psi = scale(ComplexMatrix::identity(d), 1 / std::sqrt(static_cast<double>(d)));
        auto phi = schmidt_state(psi);
        auto target = bell(BellKind::psi_plus, d);
        for (std::size_t k = 0; k < d * d; ++k) EXPECT_NEAR(std::abs(phi.amplitudes[k] - target.amplitudes[k]), 0, 1e-15);
    }
}

TEST(SchmidtState, DiagonalInput) {
    std::vector<Complex> diag{std::sqrt(0.9), std::sqrt(0.1)};
    auto phi = schmidt_state(ComplexMatrix::diagonal(diag));
    EXPECT_NEAR(phi.amplitudes[0].real(), std::sqrt(0.9), 1e-15);
    EXPECT_NEAR(phi.amplitudes[3].real(), std::sqrt(0.1), 1e-15);
    EXPECT_EQ(phi.amplitudes[1], Complex(0));
}

TEST(SchmidtState, Rejects) {
    EXPECT_EQ(code_of([] { schmidt_state(ComplexMatrix::identity(2)); }), ErrorCode::invalid_argument);
    ComplexMatrix rank1{{1, 0}, {0, 0}};
    EXPECT_EQ(code_of([&] { schmidt_state(rank1); }), ErrorCode::singular);
}

}  // namespace
}  // namespace mcwit
