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

#include "mcwit/witnesses.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>

#include "mcwit/error.hpp"
#include "mcwit/states.hpp"

namespace mcwit {

namespace {

constexpr std::size_t kStreams = 8;
constexpr double kTolerance = 1e-9;

const SubsystemShape kTwoQubits{2, 2};

MultipartiteOperator two_qubit(ComplexMatrix m) {
    return {std::move(m), kTwoQubits};
}

/// 2 * |v><v|^{T_2}
MultipartiteOperator transposed_projector(const PureState &v) {
    MultipartiteOperator pt = partial_transpose(v.projector(), std::vector<std::size_t>{1});
    return {scale(pt.matrix, 2.0), pt.shape};
}

double stream_min(const ComplexMatrix &w, const SubsystemShape &shape, std::size_t count, std::uint64_t seed,
                  std::size_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream)};
    std::mt19937_64 rng(seq);
    double best = std::numeric_limits<double>::infinity();
    std::vector<Complex> product;
    for (std::size_t n = 0; n < count; n++) {
        product = random_local_state(shape[0], rng);
        for (std::size_t s = 1; s < shape.slots(); s++) {
            std::vector<Complex> local = random_local_state(shape[s], rng);
            std::vector<Complex> next(product.size() * local.size());
            for (std::size_t i = 0; i < product.size(); i++) {
                for (std::size_t j = 0; j < local.size(); j++) {
                    next[i * local.size() + j] = product[i] * local[j];
                }
            }
            product.swap(next);
        }
        best = std::min(best, inner(product, mcwit::apply(w, product)).real());
    }
    return best;
}

}  // namespace

WitnessSpec witness_catalog(const std::string &name, std::optional<double> b) {
    if (b && !witness_takes_b(name)) {
        throw Error(ErrorCode::invalid_argument, "witness '" + name + "' takes no parameter b");
    }
    const ComplexMatrix id = ComplexMatrix::identity(4);
    const ComplexMatrix xx = kron(pauli_x(), pauli_x());
    const ComplexMatrix yy = kron(pauli_y(), pauli_y());
    const ComplexMatrix zz = kron(pauli_z(), pauli_z());

    if (name == "W") {
        return {name, two_qubit(id - xx + zz), WitnessKind::witness};
    }
    if (name == "V") {
        return {name, transposed_projector(bell(BellKind::phi_plus)), WitnessKind::witness};
    }
    if (name == "W1") {
        return {name, two_qubit(id + xx - yy), WitnessKind::witness};
    }
    if (name == "W2") {
        return {name, transposed_projector(bell(BellKind::psi_minus)), WitnessKind::witness};
    }
    if (name == "W3") {
        return {name, transposed_projector(bell(BellKind::psi_plus)), WitnessKind::witness};
    }
    if (name == "W4") {
        return {name, two_qubit(id - zz - xx), WitnessKind::witness};
    }
    if (name == "WW1") {
        MultipartiteOperator w = w_state().projector();
        ComplexMatrix m = scale(ComplexMatrix::identity(8), 2.0 / 3.0) - w.matrix;
        return {name, {std::move(m), w.shape}, WitnessKind::witness};
    }
    if (name == "P") {
        ComplexMatrix m{
            {1, 0, 0, -1},
            {0, 2, -2, 0},
            {0, -2, 2, 0},
            {-1, 0, 0, 1},
        };
        return {name, two_qubit(std::move(m)), WitnessKind::positive_semidefinite};
    }
    if (name == "P_b") {
        if (!b) {
            throw Error(ErrorCode::invalid_argument, "witness P_b needs parameter b");
        }
        double v = *b;
        if (!(v >= 1.0) || !std::isfinite(v)) {
            throw Error(ErrorCode::out_of_range, "witness P_b: b = " + std::to_string(v) + " must be >= 1");
        }
        ComplexMatrix m{
            {1, 0, 0, -1},
            {0, 2 * v, -2 * v, 0},
            {0, -2 * v, 2 * v, 0},
            {-1, 0, 0, 1},
        };
        return {name, two_qubit(scale(m, 1.0 / (4.0 * v))), WitnessKind::positive_semidefinite};
    }
    throw Error(ErrorCode::invalid_argument, "unknown witness '" + name + "'");
}

std::vector<std::string> witness_names() {
    return {"W", "V", "W1", "W2", "W3", "W4", "WW1", "P", "P_b"};
}

bool witness_takes_b(const std::string &name) {
    return name == "P_b";
}

std::vector<Complex> random_local_state(std::size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss;
    std::vector<Complex> v(dim);
    double n = 0;
    do {
        for (auto &z : v) {
            z = Complex(gauss(rng), gauss(rng));
        }
        n = norm(v);
    } while (n < 1e-12);
    for (auto &z : v) {
        z /= n;
    }
    return v;
}

double min_product_expectation(const MultipartiteOperator &w, std::size_t samples, std::uint64_t seed) {
    if (samples == 0) {
        throw Error(ErrorCode::invalid_argument, "min_product_expectation: samples must be positive");
    }
    std::vector<std::future<double>> parts;
    for (std::size_t s = 0; s < kStreams; s++) {
        std::size_t count = samples / kStreams + (s < samples % kStreams ? 1 : 0);
        if (count == 0) {
            continue;
        }
        parts.push_back(std::async(std::launch::async, stream_min, std::cref(w.matrix), std::cref(w.shape), count,
                                   seed, s));
    }
    double best = std::numeric_limits<double>::infinity();
    for (auto &f : parts) {
        best = std::min(best, f.get());
    }
    return best;
}

ValidationReport validate_witness(const WitnessSpec &spec, std::size_t samples, std::uint64_t seed) {
    if (samples == 0) {
        throw Error(ErrorCode::invalid_argument, "validate_witness: samples must be positive");
    }
    ValidationReport r;
    r.name = spec.name;
    r.kind = spec.kind;
    r.samples = samples;
    r.seed = seed;
    r.min_eigenvalue = min_eigenvalue(spec.op.matrix);
    r.min_product_expectation = min_product_expectation(spec.op, samples, seed);
    if (spec.kind == WitnessKind::witness) {
        r.pass = r.min_eigenvalue < -kTolerance && r.min_product_expectation >= -kTolerance;
    } else {
        r.pass = r.min_eigenvalue >= -kTolerance;
    }
    return r;
}

}  // namespace mcwit
