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

#include <functional>
#include <string>
#include <vector>

#include "mcwit/multipartite.hpp"

namespace mcwit {

/// Unit-norm state vector. Basis ordering |q0 q1 ...> with slot 0 most
/// significant.
struct PureState {
    std::vector<Complex> amplitudes;
    SubsystemShape shape;

    PureState(std::vector<Complex> amps, SubsystemShape s);

    MultipartiteOperator projector() const;
};

enum class BellKind { psi_plus, psi_minus, phi_plus };

/// psi_plus: (1/sqrt(d)) sum_i |ii>.
/// psi_minus: (|00> - |11>)/sqrt(2).
/// phi_plus: (|01> + |10>)/sqrt(2).
/// Only psi_plus is defined for d > 2.
PureState bell(BellKind which, std::size_t d = 2);
PureState ghz_state();
PureState w_state();

/// The imaginarity state: (|01><01| + |10><10| + i|01><10| - i|10><01|)/2.
MultipartiteOperator sigma_imaginarity();

/// w*I/4 + (1-w)|psi+><psi+|, w in [0,1].
MultipartiteOperator werner_w(double w);
/// a|psi-><psi-| + (1-a)*I/4, a in [0,1].
MultipartiteOperator werner_a(double a);
/// (1-c)|W><W| + c*I/8, c in [0,1].
MultipartiteOperator noisy_w(double c);

/// Unit-norm bipartite state (1 x Psi) sum_i |ii>, cross-checked against
/// (Psi^T x 1) sum_i |ii>. Psi must be full rank with Tr(Psi^dagger Psi) = 1.
PureState schmidt_state(const ComplexMatrix &psi);

struct ParamRange {
    double lo = 0;
    double hi = 0;
};

/// Named family of density matrices. Fixed states have an empty param_name.
struct StateFamily {
    std::string name;
    std::string param_name;
    std::size_t parties = 0;
    SubsystemShape shape;
    ParamRange range;
    std::function<MultipartiteOperator(double)> generator;

    bool parameterized() const {
        return !param_name.empty();
    }
    MultipartiteOperator operator()(double param) const {
        return generator(param);
    }
};

/// werner_w, werner_a, noisy_w, and the fixed states psi_plus, psi_minus,
/// phi_plus, sigma, ghz, w_state, sigma_real.
StateFamily state_family(const std::string &name);
std::vector<std::string> state_family_names();

}  // namespace mcwit
