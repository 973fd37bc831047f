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

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mcwit/multipartite.hpp"

namespace mcwit {

enum class WitnessKind { witness, positive_semidefinite };

struct WitnessSpec {
    std::string name;
    MultipartiteOperator op;
    WitnessKind kind = WitnessKind::witness;
};

/// Catalog lookup. Names: W, V, W1, W2, W3, W4, WW1 (the W-state witness
/// 2/3 - |W><W|), P, and P_b (needs b >= 1).
WitnessSpec witness_catalog(const std::string &name, std::optional<double> b = std::nullopt);
std::vector<std::string> witness_names();
bool witness_takes_b(const std::string &name);

/// Haar-random pure state on one local factor: normalized complex Gaussian.
std::vector<Complex> random_local_state(std::size_t dim, std::mt19937_64 &rng);

/// Minimum of Tr(W rho_1 x ... x rho_n) over `samples` random pure product
/// states. Only an upper bound on the true separable minimum.
///
/// The sample count is split over a fixed number of independently seeded
/// streams that run concurrently; the result depends only on (samples, seed).
double min_product_expectation(const MultipartiteOperator &w, std::size_t samples, std::uint64_t seed);

struct ValidationReport {
    std::string name;
    WitnessKind kind = WitnessKind::witness;
    double min_eigenvalue = 0;
    double min_product_expectation = 0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    bool pass = false;
};

/// Witness: passes iff min eigenvalue < -1e-9 and the sampled product minimum
/// is >= -1e-9. Positive operators: passes iff min eigenvalue >= -1e-9.
ValidationReport validate_witness(const WitnessSpec &spec, std::size_t samples, std::uint64_t seed);

}  // namespace mcwit
