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

#include "mcwit/concentration.hpp"

#include <cmath>

#include "mcwit/error.hpp"
#include "mcwit/states.hpp"

namespace mcwit {

namespace {

constexpr double kMinProbability = 1e-14;
constexpr double kMaxSchmidtCondition = 1e3;

const std::vector<std::size_t> kMeasuredSlots{1, 2};
const std::vector<std::size_t> kOutputSlots{0, 3};

std::vector<Complex> psi_plus(std::size_t d) {
    return bell(BellKind::psi_plus, d).amplitudes;
}

/// (1 x P) rho^{x2} with P on (B, A'), reduced onto (A, B').
MultipartiteOperator measure_and_reduce(const std::vector<Complex> &phi, const ComplexMatrix &projector,
                                        std::size_t d) {
    SubsystemShape pair{d, d};
    MultipartiteOperator single(ComplexMatrix::outer(phi, phi), pair);
    MultipartiteOperator two = tensor(single, single);
    MultipartiteOperator meas = embed({projector, pair}, kMeasuredSlots, two.shape);
    MultipartiteOperator post(matmul(meas.matrix, two.matrix), two.shape);
    return reduce_onto(post, kOutputSlots);
}

}  // namespace

const char *measurement_kind_name(MeasurementKind k) {
    return k == MeasurementKind::m ? "m" : "M";
}

MeasurementVector measurement_vector(const ComplexMatrix &psi, MeasurementKind kind) {
    std::size_t d = psi.dim();
    ComplexMatrix id = ComplexMatrix::identity(d);
    ComplexMatrix psi_conj = conjugate(psi);
    auto bell_vec = psi_plus(d);
    MeasurementVector out;
    if (kind == MeasurementKind::m) {
        out.amplitudes = mcwit::apply(kron(id, inverse(psi_conj)), bell_vec);
    } else {
        out.amplitudes = mcwit::apply(kron(id, inverse(matmul(psi_conj, psi_conj))), bell_vec);
        auto other = mcwit::apply(kron(inverse(adjoint(psi)), inverse(psi_conj)), bell_vec);
        double scale_ref = std::max(1.0, norm(out.amplitudes));
        for (std::size_t k = 0; k < other.size(); k++) {
            if (std::abs(other[k] - out.amplitudes[k]) > 1e-10 * scale_ref) {
                throw Error(ErrorCode::invalid_argument,
                            "measurement_vector: the two constructions of |M> disagree at entry " +
                                std::to_string(k));
            }
        }
    }
    out.norm = norm(out.amplitudes);
    return out;
}

ConcentrationResult concentrate(const ComplexMatrix &psi, MeasurementKind kind) {
    std::size_t d = psi.dim();
    PureState phi = schmidt_state(psi);
    MeasurementVector v = measurement_vector(psi, kind);
    ComplexMatrix projector = scale(ComplexMatrix::outer(v.amplitudes, v.amplitudes), 1.0 / (v.norm * v.norm));

    MultipartiteOperator reduced = measure_and_reduce(phi.amplitudes, projector, d);
    double prob = trace(reduced.matrix).real();
    if (!(prob >= kMinProbability)) {
        throw Error(ErrorCode::singular, "concentrate: outcome probability " + std::to_string(prob) +
                                             " is numerically zero");
    }
    ConcentrationResult r;
    r.kind = kind;
    r.probability = prob;
    r.output_state = {scale(reduced.matrix, 1.0 / prob), reduced.shape};
    std::vector<Complex> target = kind == MeasurementKind::m ? phi.amplitudes : psi_plus(d);
    r.fidelity_with_target = inner(target, mcwit::apply(r.output_state.matrix, target)).real();
    double dd = static_cast<double>(d);
    r.bookkeeping_probability = prob * v.norm * v.norm / (dd * dd);
    r.bookkeeping_ratio = 1.0 / (dd * dd * r.bookkeeping_probability);
    return r;
}

ProbabilityConsistency probability_consistency(const ComplexMatrix &psi, MeasurementKind kind) {
    std::size_t d = psi.dim();
    double dd = static_cast<double>(d);
    std::vector<Complex> phi_u = schmidt_state(psi).amplitudes;
    for (auto &z : phi_u) {
        z /= std::sqrt(dd);
    }
    MeasurementVector v = measurement_vector(psi, kind);
    MultipartiteOperator lhs_op =
        measure_and_reduce(phi_u, ComplexMatrix::outer(v.amplitudes, v.amplitudes), d);
    std::vector<Complex> target = kind == MeasurementKind::m ? phi_u : psi_plus(d);
    ComplexMatrix rhs_op = scale(ComplexMatrix::outer(target, target), 1.0 / (dd * dd));

    ProbabilityConsistency c;
    c.lhs = trace(lhs_op.matrix).real();
    c.rhs = trace(rhs_op).real();
    c.delta = std::max(std::abs(c.lhs - c.rhs), max_abs_diff(lhs_op.matrix, rhs_op));
    return c;
}

ComplexMatrix random_schmidt_matrix(std::size_t d, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss;
    while (true) {
        ComplexMatrix psi(d);
        for (auto &z : psi.entries()) {
            z = Complex(gauss(rng), gauss(rng));
        }
        double hs = std::sqrt(trace(matmul(adjoint(psi), psi)).real());
        psi = scale(psi, 1.0 / hs);
        auto sv2 = hermitian_eigenvalues(matmul(adjoint(psi), psi));
        if (sv2.front() <= 0) {
            continue;
        }
        if (std::sqrt(sv2.back() / sv2.front()) <= kMaxSchmidtCondition) {
            return psi;
        }
    }
}

}  // namespace mcwit
