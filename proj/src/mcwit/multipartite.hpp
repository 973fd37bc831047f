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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mcwit/linalg.hpp"

namespace mcwit {

/// Ordered local dimensions of a tensor-factor space. Slot 0 is the leftmost
/// (most significant) factor of the computational basis.
class SubsystemShape {
   public:
    SubsystemShape() = default;
    explicit SubsystemShape(std::vector<std::size_t> dims);
    SubsystemShape(std::initializer_list<std::size_t> dims) : SubsystemShape(std::vector<std::size_t>(dims)) {
    }

    static SubsystemShape uniform(std::size_t slots, std::size_t local_dim);

    const std::vector<std::size_t> &dims() const noexcept {
        return dims_;
    }
    std::size_t slots() const noexcept {
        return dims_.size();
    }
    std::size_t operator[](std::size_t slot) const {
        return dims_.at(slot);
    }
    std::size_t total() const noexcept {
        return total_;
    }
    /// Row-major stride of each slot in a flat basis index.
    std::vector<std::size_t> strides() const;
    SubsystemShape concat(const SubsystemShape &other) const;
    std::string to_string() const;

    bool operator==(const SubsystemShape &other) const {
        return dims_ == other.dims_;
    }

   private:
    std::vector<std::size_t> dims_;
    std::size_t total_ = 1;
};

/// A matrix together with the subsystem structure it acts on.
struct MultipartiteOperator {
    ComplexMatrix matrix;
    SubsystemShape shape;

    MultipartiteOperator() = default;
    MultipartiteOperator(ComplexMatrix m, SubsystemShape s);

    std::size_t dim() const noexcept {
        return matrix.dim();
    }
};

struct DensityCheck {
    double hermiticity_error = 0;
    double trace_error = 0;
    double min_eigenvalue = 0;
    bool valid = false;
};

/// Hermitian within 1e-10, unit trace within 1e-10, min eigenvalue >= -1e-9.
DensityCheck check_density_matrix(const ComplexMatrix &rho);
void require_density_matrix(const MultipartiteOperator &rho, const std::string &context);

MultipartiteOperator tensor(const MultipartiteOperator &a, const MultipartiteOperator &b);
MultipartiteOperator tensor_power(const MultipartiteOperator &op, std::size_t copies);

/// Reorders tensor factors. perm[old_slot] is the slot that factor occupies in
/// the result, so the result's shape has dims[perm[s]] = old dims[s].
MultipartiteOperator permute_subsystems(const MultipartiteOperator &op, std::span<const std::size_t> perm);

/// Places `local` on the given slots of `full_shape` (in the order listed, which
/// need not be ascending or adjacent) and identity everywhere else.
MultipartiteOperator embed(const MultipartiteOperator &local, std::span<const std::size_t> slots,
                           const SubsystemShape &full_shape);

MultipartiteOperator partial_trace(const MultipartiteOperator &op, std::span<const std::size_t> traced_slots);

/// Partial trace over everything except `kept_slots`, with the survivors
/// reordered to match the order of `kept_slots`.
MultipartiteOperator reduce_onto(const MultipartiteOperator &op, std::span<const std::size_t> kept_slots);

MultipartiteOperator partial_transpose(const MultipartiteOperator &op, std::span<const std::size_t> slots);

std::vector<std::size_t> inverse_permutation(std::span<const std::size_t> perm);

}  // namespace mcwit
