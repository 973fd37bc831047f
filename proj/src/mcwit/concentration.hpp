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

#include <random>
#include <vector>

#include "mcwit/multipartite.hpp"

namespace mcwit {

/// Two copies of |phi> = (1 x Psi) sum_i |ii> sit on slots A, B, A', B'
/// (0, 1, 2, 3). The measurement acts on (B, A') and the output lives on (A, B').
///
///   m:  |m> = (1 x (Psi^*)^-1) |psi+>       leaves |phi> on AB'
///   M:  |M> = (1 x (Psi^* Psi^*)^-1) |psi+> leaves |psi+> on AB'
///
/// with |psi+> = (1/sqrt(d)) sum_i |ii>. Both vectors are unnormalized.
enum class MeasurementKind { m, M };

const char *measurement_kind_name(MeasurementKind k);

struct MeasurementVector {
    std::vector<Complex> amplitudes;  // on B x A'
    double norm = 0;
};

/// For M the second construction ((Psi^dagger)^-1 x (Psi^*)^-1)|psi+> is
/// computed as well and must agree to 1e-10 relative to the vector norm.
MeasurementVector measurement_vector(const ComplexMatrix &psi, MeasurementKind kind);

struct ConcentrationResult {
    MultipartiteOperator output_state;  // on A B'
    /// Tr((1 x Pi) |phi><phi|^{x2}) with Pi the normalized projector.
    double probability = 0;
    double fidelity_with_target = 0;
    MeasurementKind kind = MeasurementKind::m;
    /// p_m with the unnormalized vector and the unnormalized |phi>/sqrt(d)
    /// bookkeeping, and the ratio 1/(d^2 p_m) built from it.
    double bookkeeping_probability = 0;
    double bookkeeping_ratio = 0;
};

ConcentrationResult concentrate(const ComplexMatrix &psi, MeasurementKind kind);

/// Checks Tr_{BA'}((1 x |v><v|) phi_u^{x2}) = |t_u><t_u| / d^2 where
/// phi_u = |phi>/sqrt(d), t_u = phi_u for m and |psi+> for M.
/// lhs/rhs are the traces of the two sides; delta also covers the entrywise
/// operator difference.
struct ProbabilityConsistency {
    double lhs = 0;
    double rhs = 0;
    double delta = 0;
};

ProbabilityConsistency probability_consistency(const ComplexMatrix &psi, MeasurementKind kind);

/// Complex Gaussian d x d matrix scaled to Tr(Psi^dagger Psi) = 1, resampled
/// until its condition number is at most 1e3.
ComplexMatrix random_schmidt_matrix(std::size_t d, std::mt19937_64 &rng);

}  // namespace mcwit
