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
#include <random>

#include "gtest_util.hpp"
#include "mcwit/concentration.hpp"
#include "mcwit/states.hpp"

namespace mcwit {
namespace {

using testing::code_of;

ComplexMatrix maximally_entangled_psi(std::size_t d) {
    return scale(ComplexMatrix::identity(d), 1 / std::sqrt(static_cast<double>(d)));
}

// With Psi = 1/sqrt(d) both copies are already |psi+>; the m outcome keeps it.
TEST(Concentrate, MaximallyEntangledInput) {
    for (std::size_t d : {2, 3}) {
        auto r = concentrate(maximally_entangled_psi(d), MeasurementKind::m);
        auto target = bell(BellKind::psi_plus, d).projector();
        EXPECT_LE(max_abs_diff(r.output_state.matrix, target.matrix), 1e-12);
        EXPECT_NEAR(r.fidelity_with_target, 1, 1e-12);
        EXPECT_NEAR(r.probability, 1.0 / static_cast<double>(d * d), 1e-12);
        EXPECT_EQ(r.output_state.shape, (SubsystemShape{d, d}));
    }
}

TEST(Concentrate, RandomInputsReachTargets) {
    std::mt19937_64 rng(12);
    for (std::size_t d : {2, 3, 4}) {
        for (int k = 0; k < 5; ++k) {
            auto psi = random_schmidt_matrix(d, rng);
            auto m = concentrate(psi, MeasurementKind::m);
            auto big_m = concentrate(psi, MeasurementKind::M);
            EXPECT_NEAR(m.fidelity_with_target, 1, 1e-9);
            EXPECT_NEAR(big_m.fidelity_with_target, 1, 1e-9);
            // m leaves the input state itself on AB'.
            auto phi = schmidt_state(psi).projector();
            EXPECT_LE(max_abs_diff(m.output_state.matrix, phi.matrix), 1e-9);
            EXPECT_NEAR(m.bookkeeping_ratio * static_cast<double>(d * d) * m.bookkeeping_probability, 1, 1e-9);
        }
    }
}

TEST(Concentrate, ProbabilityConsistency) {
    std::mt19937_64 rng(13);
    for (std::size_t d : {2, 3}) {
        auto psi = random_schmidt_matrix(d, rng);
        for (auto kind : {MeasurementKind::m, MeasurementKind::M}) {
            auto pc = probability_consistency(psi, kind);
            EXPECT_LE(pc.delta, 1e-10);
            EXPECT_NEAR(pc.lhs, pc.rhs, 1e-10);
            EXPECT_GT(pc.lhs, 0);
        }
    }
}

TEST(MeasurementVector, LargeMHasTwoConstructions) {
    std::mt19937_64 rng(14);
    auto psi = random_schmidt_matrix(3, rng);
    auto v = measurement_vector(psi, MeasurementKind::M);
    EXPECT_EQ(v.amplitudes.size(), 9u);
    EXPECT_NEAR(v.norm, norm(v.amplitudes), 1e-12);
}

TEST(Concentrate, RejectsBadPsi) {
    EXPECT_EQ(code_of([] { concentrate(ComplexMatrix::identity(2), MeasurementKind::m); }),
              ErrorCode::invalid_argument);
    ComplexMatrix rank1{{1, 0}, {0, 0}};
    EXPECT_EQ(code_of([&] { concentrate(rank1, MeasurementKind::M); }), ErrorCode::singular);
}

TEST(RandomSchmidt, NormalizedAndConditioned) {
    std::mt19937_64 rng(15);
    for (int k = 0; k < 20; ++k) {
        auto psi = random_schmidt_matrix(4, rng);
        EXPECT_NEAR(trace(matmul(adjoint(psi), psi)).real(), 1, 1e-12);
        auto sv2 = hermitian_eigenvalues(matmul(adjoint(psi), psi));
        EXPECT_LE(std::sqrt(sv2.back() / sv2.front()), 1e3);
    }
    std::mt19937_64 a(16), b(16);
    EXPECT_EQ(random_schmidt_matrix(3, a), random_schmidt_matrix(3, b));
}

TEST(MeasurementKind, Names) {
    EXPECT_STREQ(measurement_kind_name(MeasurementKind::m), "m");
    EXPECT_STREQ(measurement_kind_name(MeasurementKind::M), "M");
}

}  // namespace
}  // namespace mcwit
