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

#include "mcwit/ppt.hpp"

#include "mcwit/error.hpp"

namespace mcwit {

PptVerdict ppt_check(const MultipartiteOperator &rho, std::span<const std::size_t> transposed_slots) {
    require_density_matrix(rho, "ppt_check");
    MultipartiteOperator pt = partial_transpose(rho, transposed_slots);
    PptVerdict v;
    v.min_eigenvalue = min_eigenvalue(pt.matrix);
    v.transposed_slots.assign(transposed_slots.begin(), transposed_slots.end());
    v.verdict = v.min_eigenvalue < -kPptTolerance ? PptOutcome::npt_entangled : PptOutcome::ppt_inconclusive;
    return v;
}

Root ppt_threshold(const StateFamily &family, std::span<const std::size_t> transposed_slots, double tol) {
    if (!family.parameterized()) {
        throw Error(ErrorCode::invalid_argument, "ppt_threshold: family '" + family.name + "' has no parameter");
    }
    std::vector<std::size_t> slots(transposed_slots.begin(), transposed_slots.end());
    auto f = [&](double x) { return min_eigenvalue(partial_transpose(family(x), slots).matrix); };
    return find_threshold(f, family.range.lo, family.range.hi, tol);
}

const char *ppt_outcome_name(PptOutcome o) {
    return o == PptOutcome::npt_entangled ? "npt_entangled" : "ppt_inconclusive";
}

}  // namespace mcwit
