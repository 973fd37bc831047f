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

#include "gtest_util.hpp"
#include "mcwit/detection.hpp"
#include "mcwit/witnesses.hpp"
#include "support.hpp"

namespace mcwit {
namespace {

using testing::code_of;

TEST(Catalog, MatchesReferenceConstruction) {
    for (const char *name : {"W", "V", "W1", "W2", "W3", "W4", "WW1", "P"}) {
        auto spec = witness_catalog(name);
        EXPECT_LE(ref::diff(ref::witness(name), spec.op.matrix), 1e-15) << name;
        EXPECT_TRUE(spec.op.matrix.is_hermitian()) << name;
    }
    for (double b : {1.0, 3.5, 100.0}) {
        EXPECT_LE(ref::diff(ref::witness("P_b", b), witness_catalog("P_b", b).op.matrix), 1e-15);
    }
    EXPECT_EQ(witness_catalog("WW1").op.shape, (SubsystemShape{2, 2, 2}));
    EXPECT_EQ(witness_catalog("P").kind, WitnessKind::positive_semidefinite);
}

TEST(Catalog, Spectra) {
    auto ev = [](const char *n) { return hermitian_eigenvalues(witness_catalog(n).op.matrix); };
    EXPECT_NEAR(ev("W")[0], -1, 1e-12);
    EXPECT_NEAR(ev("W")[3], 3, 1e-12);
    EXPECT_NEAR(ev("V")[3], 1, 1e-12);
    EXPECT_NEAR(ev("W1")[0], -1, 1e-12);
    EXPECT_NEAR(ev("W4")[3], 3, 1e-12);
    EXPECT_NEAR(ev("WW1")[0], -1.0 / 3.0, 1e-12);
}

TEST(Catalog, ParameterHandling) {
    EXPECT_EQ(code_of([] { witness_catalog("P_b"); }), ErrorCode::invalid_argument);
    EXPECT_EQ(code_of([] { witness_catalog("P_b", 0.5); }), ErrorCode::out_of_range);
    EXPECT_EQ(code_of([] { witness_catalog("W", 2.0); }), ErrorCode::invalid_argument);
    EXPECT_EQ(code_of([] { witness_catalog("Q"); }), ErrorCode::invalid_argument);
    EXPECT_TRUE(witness_takes_b("P_b"));
    EXPECT_FALSE(witness_takes_b("W3"));
}

TEST(Sampling, DeterministicForSeed) {
    auto op = witness_catalog("W1").op;
    EXPECT_EQ(min_product_expectation(op, 5000, 11), min_product_expectation(op, 5000, 11));
    EXPECT_GE(min_product_expectation(op, 5000, 11), -1e-12);
    EXPECT_EQ(code_of([&] { min_product_expectation(op, 0, 1); }), ErrorCode::invalid_argument);
}

TEST(Validation, Outcomes) {
    auto w1 = validate_witness(witness_catalog("W1"), 20000, 3);
    EXPECT_TRUE(w1.pass);
    EXPECT_NEAR(w1.min_eigenvalue, -1, 1e-9);
    // A negated witness is negative on product states.
    auto neg = witness_catalog("W");
    neg.op.matrix = scale(neg.op.matrix, -1);
    EXPECT_FALSE(validate_witness(neg, 2000, 3).pass);
    auto psd = validate_witness(witness_catalog("P_b", 2.0), 100, 3);
    EXPECT_TRUE(psd.pass);
}

// Rescaling a witness by a positive factor never changes a detection sign.
TEST(Scaling, SignInvariance) {
    auto rho = state_family("noisy_w");
    for (double alpha : {0.5, 2.0}) {
        auto scaled_w3 = witness_catalog("W3").op;
        scaled_w3.matrix = scale(scaled_w3.matrix, alpha);
        WiringSpec a(2, {2, 2, 2});
        a.add("W4", "A1B2").add("W3", "B1C2").add("W3", "C1A2");
        WiringSpec b(2, {2, 2, 2});
        b.add("W4", "A1B2")
            .add("W3s", scaled_w3, parse_slot_notation("B1C2", 2, 3))
            .add("W3s", scaled_w3, parse_slot_notation("C1A2", 2, 3));
        for (double c : {0.0, 0.2, 0.39, 0.41, 0.8}) {
            double va = expectation(a, rho(c));
            double vb = expectation(b, rho(c));
            EXPECT_EQ(va < 0, vb < 0) << c;
            EXPECT_NEAR(vb, alpha * alpha * va, 1e-12);
        }
    }
}

}  // namespace
}  // namespace mcwit
