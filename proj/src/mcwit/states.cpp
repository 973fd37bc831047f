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

#include "mcwit/states.hpp"

#include <cmath>

#include "mcwit/error.hpp"

namespace mcwit {

namespace {

void require_param(double value, const char *name, const char *family) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw Error(ErrorCode::out_of_range, std::string(family) + ": parameter " + name + " = " +
                                                 std::to_string(value) + " outside [0, 1]");
    }
}

MultipartiteOperator mix(const PureState &pure, double pure_weight) {
    MultipartiteOperator p = pure.projector();
    double noise = (1.0 - pure_weight) / static_cast<double>(p.dim());
    ComplexMatrix m = scale(p.matrix, pure_weight) + scale(ComplexMatrix::identity(p.dim()), noise);
    return {std::move(m), p.shape};
}

StateFamily fixed(const std::string &name, std::size_t parties, MultipartiteOperator rho) {
    SubsystemShape shape = rho.shape;
    return {name, "", parties, shape, {0, 0}, [rho = std::move(rho)](double) { return rho; }};
}

}  // namespace

PureState::PureState(std::vector<Complex> amps, SubsystemShape s) : amplitudes(std::move(amps)), shape(std::move(s)) {
    if (amplitudes.size() != shape.total()) {
        throw Error(ErrorCode::dimension_mismatch,
                    "pure state: " + describe_dims(amplitudes.size(), shape.total()) + " for shape " +
                        shape.to_string());
    }
    double n = norm(amplitudes);
    if (std::abs(n - 1.0) > 1e-12) {
        throw Error(ErrorCode::invalid_argument, "pure state: norm " + std::to_string(n) + " is not 1");
    }
}

MultipartiteOperator PureState::projector() const {
    return {ComplexMatrix::outer(amplitudes, amplitudes), shape};
}

PureState bell(BellKind which, std::size_t d) {
    if (d < 2) {
        throw Error(ErrorCode::invalid_argument, "bell: dimension must be at least 2");
    }
    if (which != BellKind::psi_plus && d != 2) {
        throw Error(ErrorCode::invalid_argument, "bell: only psi_plus is defined for d > 2");
    }
    std::vector<Complex> amps(d * d);
    switch (which) {
        case BellKind::psi_plus: {
            double a = 1.0 / std::sqrt(static_cast<double>(d));
            for (std::size_t i = 0; i < d; i++) {
                amps[i * d + i] = a;
            }
            break;
        }
        case BellKind::psi_minus:
            amps[0] = M_SQRT1_2;
            amps[3] = -M_SQRT1_2;
            break;
        case BellKind::phi_plus:
            amps[1] = M_SQRT1_2;
            amps[2] = M_SQRT1_2;
            break;
    }
    return {std::move(amps), SubsystemShape{d, d}};
}

PureState ghz_state() {
    std::vector<Complex> amps(8);
    amps[0] = M_SQRT1_2;
    amps[7] = M_SQRT1_2;
    return {std::move(amps), SubsystemShape::uniform(3, 2)};
}

PureState w_state() {
    std::vector<Complex> amps(8);
    double a = 1.0 / std::sqrt(3.0);
    amps[1] = a;  // |001>
    amps[2] = a;  // |010>
    amps[4] = a;  // |100>
    return {std::move(amps), SubsystemShape::uniform(3, 2)};
}

MultipartiteOperator sigma_imaginarity() {
    const Complex i(0, 1);
    ComplexMatrix m{
        {0, 0, 0, 0},
        {0, 1, i, 0},
        {0, -i, 1, 0},
        {0, 0, 0, 0},
    };
    return {scale(m, 0.5), SubsystemShape{2, 2}};
}

MultipartiteOperator werner_w(double w) {
    require_param(w, "w", "werner_w");
    return mix(bell(BellKind::psi_plus), 1.0 - w);
}

MultipartiteOperator werner_a(double a) {
    require_param(a, "a", "werner_a");
    return mix(bell(BellKind::psi_minus), a);
}

MultipartiteOperator noisy_w(double c) {
    require_param(c, "c", "noisy_w");
    return mix(w_state(), 1.0 - c);
}

PureState schmidt_state(const ComplexMatrix &psi) {
    std::size_t d = psi.dim();
    double hs = trace(matmul(adjoint(psi), psi)).real();
    if (std::abs(hs - 1.0) > 1e-10) {
        throw Error(ErrorCode::invalid_argument, "schmidt_state: Tr(Psi^dagger Psi) = " + std::to_string(hs) +
                                                     ", expected 1");
    }
    inverse(psi);  // full-rank check

    std::vector<Complex> max_ent(d * d);
    for (std::size_t i = 0; i < d; i++) {
        max_ent[i * d + i] = 1.0;
    }
    ComplexMatrix id = ComplexMatrix::identity(d);
    std::vector<Complex> left = mcwit::apply(kron(id, psi), max_ent);
    std::vector<Complex> right = mcwit::apply(kron(transpose(psi), id), max_ent);
    for (std::size_t k = 0; k < left.size(); k++) {
        if (std::abs(left[k] - right[k]) > 1e-12) {
            throw Error(ErrorCode::invalid_argument, "schmidt_state: construction formulas disagree");
        }
    }
    return {std::move(left), SubsystemShape{d, d}};
}

StateFamily state_family(const std::string &name) {
    if (name == "werner_w") {
        return {name, "w", 2, SubsystemShape{2, 2}, {0, 1}, werner_w};
    }
    if (name == "werner_a") {
        return {name, "a", 2, SubsystemShape{2, 2}, {0, 1}, werner_a};
    }
    if (name == "noisy_w") {
        return {name, "c", 3, SubsystemShape::uniform(3, 2), {0, 1}, noisy_w};
    }
    if (name == "psi_plus") {
        return fixed(name, 2, bell(BellKind::psi_plus).projector());
    }
    if (name == "psi_minus") {
        return fixed(name, 2, bell(BellKind::psi_minus).projector());
    }
    if (name == "phi_plus") {
        return fixed(name, 2, bell(BellKind::phi_plus).projector());
    }
    if (name == "sigma") {
        return fixed(name, 2, sigma_imaginarity());
    }
    if (name == "sigma_real") {
        MultipartiteOperator s = sigma_imaginarity();
        return fixed(name, 2, {real_part(s.matrix), s.shape});
    }
    if (name == "ghz") {
        return fixed(name, 3, ghz_state().projector());
    }
    if (name == "w_state") {
        return fixed(name, 3, w_state().projector());
    }
    throw Error(ErrorCode::invalid_argument, "unknown state family '" + name + "'");
}

std::vector<std::string> state_family_names() {
    return {"werner_w", "werner_a", "noisy_w", "psi_plus", "psi_minus", "phi_plus",
            "sigma",    "sigma_real", "ghz",   "w_state"};
}

}  // namespace mcwit
