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

#include <vector>

#include "mcwit/detection.hpp"
#include "mcwit/multipartite.hpp"
#include "mcwit/states.hpp"

namespace mcwit {

enum class PptOutcome { npt_entangled, ppt_inconclusive };

/// NPT iff the partially transposed state has an eigenvalue below -1e-9.
struct PptVerdict {
    double min_eigenvalue = 0;
    std::vector<std::size_t> transposed_slots;
    PptOutcome verdict = PptOutcome::ppt_inconclusive;
};

inline constexpr double kPptTolerance = 1e-9;

PptVerdict ppt_check(const MultipartiteOperator &rho, std::span<const std::size_t> transposed_slots);

/// Bisection on the min eigenvalue of the partial transpose over the family's
/// parameter range.
Root ppt_threshold(const StateFamily &family, std::span<const std::size_t> transposed_slots, double tol = 1e-12);

const char *ppt_outcome_name(PptOutcome o);

}  // namespace mcwit
