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

#include "mcwit/multipartite.hpp"

#include <algorithm>
#include <cmath>

#include "mcwit/error.hpp"

namespace mcwit {

namespace {

void check_slot_list(std::span<const std::size_t> slots, std::size_t n, const char *op) {
    std::vector<bool> seen(n, false);
    for (std::size_t s : slots) {
        if (s >= n) {
            throw Error(ErrorCode::invalid_argument,
                        std::string(op) + ": slot " + std::to_string(s) + " out of range for " + std::to_string(n) +
                            " slots");
        }
        if (seen[s]) {
            throw Error(ErrorCode::invalid_argument, std::string(op) + ": slot " + std::to_string(s) + " repeated");
        }
        seen[s] = true;
    }
}

// offsets[x] = flat contribution of the sub-multi-index x taken over `slots`
// (row-major in the order given).
std::vector<std::size_t> slot_offsets(const SubsystemShape &shape, std::span<const std::size_t> slots) {
    auto strides = shape.strides();
    std::size_t count = 1;
    for (std::size_t s : slots) {
        count *= shape[s];
    }
    std::vector<std::size_t> offsets(count);
    std::vector<std::size_t> digits(slots.size(), 0);
    for (std::size_t x = 0; x < count; x++) {
        std::size_t off = 0;
        for (std::size_t k = 0; k < slots.size(); k++) {
            off += digits[k] * strides[slots[k]];
        }
        offsets[x] = off;
        for (std::size_t k = slots.size(); k-- > 0;) {
            if (++digits[k] < shape[slots[k]]) {
                break;
            }
            digits[k] = 0;
        }
    }
    return offsets;
}

std::vector<std::size_t> complement(std::span<const std::size_t> slots, std::size_t n) {
    std::vector<bool> used(n, false);
    for (std::size_t s : slots) {
        used[s] = true;
    }
    std::vector<std::size_t> rest;
    for (std::size_t s = 0; s < n; s++) {
        if (!used[s]) {
            rest.push_back(s);
        }
    }
    return rest;
}

}  // namespace

SubsystemShape::SubsystemShape(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) {
        throw Error(ErrorCode::invalid_argument, "subsystem shape needs at least one slot");
    }
    for (std::size_t d : dims_) {
        if (d < 2) {
            throw Error(ErrorCode::invalid_argument, "local dimension " + std::to_string(d) + " is below 2");
        }
        total_ *= d;
        if (total_ > kMaxDim) {
            throw Error(ErrorCode::dimension_mismatch, "shape " + to_string() + " exceeds dimension cap " +
                                                           std::to_string(kMaxDim));
        }
    }
}

SubsystemShape SubsystemShape::uniform(std::size_t slots, std::size_t local_dim) {
    return SubsystemShape(std::vector<std::size_t>(slots, local_dim));
}

std::vector<std::size_t> SubsystemShape::strides() const {
    std::vector<std::size_t> out(dims_.size());
    std::size_t stride = 1;
    for (std::size_t s = dims_.size(); s-- > 0;) {
        out[s] = stride;
        stride *= dims_[s];
    }
    return out;
}

SubsystemShape SubsystemShape::concat(const SubsystemShape &other) const {
    std::vector<std::size_t> d = dims_;
    d.insert(d.end(), other.dims_.begin(), other.dims_.end());
    return SubsystemShape(std::move(d));
}

std::string SubsystemShape::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < dims_.size(); i++) {
        if (i) {
            s += ",";
        }
        s += std::to_string(dims_[i]);
    }
    return s + "]";
}

MultipartiteOperator::MultipartiteOperator(ComplexMatrix m, SubsystemShape s)
    : matrix(std::move(m)), shape(std::move(s)) {
    if (matrix.dim() != shape.total()) {
        throw Error(ErrorCode::dimension_mismatch,
                    "operator of dim " + std::to_string(matrix.dim()) + " tagged with shape " + shape.to_string());
    }
}

DensityCheck check_density_matrix(const ComplexMatrix &rho) {
    DensityCheck c;
    c.hermiticity_error = rho.hermiticity_error();
    Complex tr = trace(rho);
    c.trace_error = std::abs(tr - 1.0);
    if (c.hermiticity_error > kHermitianTolerance) {
        c.min_eigenvalue = std::nan("");
        return c;
    }
    c.min_eigenvalue = min_eigenvalue(rho);
    c.valid = c.trace_error <= 1e-10 && c.min_eigenvalue >= -1e-9;
    return c;
}

void require_density_matrix(const MultipartiteOperator &rho, const std::string &context) {
    DensityCheck c = check_density_matrix(rho.matrix);
    if (!c.valid) {
        throw Error(ErrorCode::invalid_argument,
                    context + ": not a density matrix (hermiticity " + std::to_string(c.hermiticity_error) +
                        ", trace error " + std::to_string(c.trace_error) + ", min eigenvalue " +
                        std::to_string(c.min_eigenvalue) + ")");
    }
}

MultipartiteOperator tensor(const MultipartiteOperator &a, const MultipartiteOperator &b) {
    return {kron(a.matrix, b.matrix), a.shape.concat(b.shape)};
}

MultipartiteOperator tensor_power(const MultipartiteOperator &op, std::size_t copies) {
    if (copies == 0) {
        throw Error(ErrorCode::invalid_argument, "tensor_power: copies must be positive");
    }
    std::size_t total = 1;
    for (std::size_t k = 0; k < copies; k++) {
        total *= op.dim();
        if (total > kMaxDim) {
            throw Error(ErrorCode::dimension_mismatch, "tensor_power: " + std::to_string(copies) + " copies of dim " +
                                                           std::to_string(op.dim()) + " exceed cap " +
                                                           std::to_string(kMaxDim));
        }
    }
    MultipartiteOperator r = op;
    for (std::size_t k = 1; k < copies; k++) {
        r = tensor(r, op);
    }
    return r;
}

std::vector<std::size_t> inverse_permutation(std::span<const std::size_t> perm) {
    std::vector<std::size_t> inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); i++) {
        inv[perm[i]] = i;
    }
    return inv;
}

MultipartiteOperator permute_subsystems(const MultipartiteOperator &op, std::span<const std::size_t> perm) {
    std::size_t n = op.shape.slots();
    if (perm.size() != n) {
        throw Error(ErrorCode::invalid_argument, "permute_subsystems: permutation length " +
                                                     std::to_string(perm.size()) + " for " + std::to_string(n) +
                                                     " slots");
    }
    check_slot_list(perm, n, "permute_subsystems");

    std::vector<std::size_t> new_dims(n);
    for (std::size_t s = 0; s < n; s++) {
        new_dims[perm[s]] = op.shape[s];
    }
    SubsystemShape new_shape(new_dims);
    auto new_strides = new_shape.strides();

    // Walking the old basis in row-major order; the old slot s carries new stride new_strides[perm[s]].
    std::vector<std::size_t> target(n);
    for (std::size_t s = 0; s < n; s++) {
        target[s] = new_strides[perm[s]];
    }
    std::vector<std::size_t> old_slots(n);
    for (std::size_t s = 0; s < n; s++) {
        old_slots[s] = s;
    }
    std::size_t dim = op.dim();
    std::vector<std::size_t> map(dim);
    std::vector<std::size_t> digits(n, 0);
    for (std::size_t x = 0; x < dim; x++) {
        std::size_t y = 0;
        for (std::size_t s = 0; s < n; s++) {
            y += digits[s] * target[s];
        }
        map[x] = y;
        for (std::size_t s = n; s-- > 0;) {
            if (++digits[s] < op.shape[s]) {
                break;
            }
            digits[s] = 0;
        }
    }

    ComplexMatrix out(dim);
    for (std::size_t i = 0; i < dim; i++) {
        for (std::size_t j = 0; j < dim; j++) {
            out(map[i], map[j]) = op.matrix(i, j);
        }
    }
    return {std::move(out), std::move(new_shape)};
}

MultipartiteOperator embed(const MultipartiteOperator &local, std::span<const std::size_t> slots,
                           const SubsystemShape &full_shape) {
    std::size_t n = full_shape.slots();
    check_slot_list(slots, n, "embed");
    if (slots.size() != local.shape.slots()) {
        throw Error(ErrorCode::dimension_mismatch, "embed: operator has " + std::to_string(local.shape.slots()) +
                                                       " slots but " + std::to_string(slots.size()) +
                                                       " target slots were given");
    }
    for (std::size_t k = 0; k < slots.size(); k++) {
        if (local.shape[k] != full_shape[slots[k]]) {
            throw Error(ErrorCode::dimension_mismatch,
                        "embed: slot " + std::to_string(slots[k]) + " " +
                            describe_dims(local.shape[k], full_shape[slots[k]]));
        }
    }
    auto rest = complement(slots, n);
    MultipartiteOperator expanded = local;
    if (!rest.empty()) {
        std::vector<std::size_t> rest_dims;
        for (std::size_t s : rest) {
            rest_dims.push_back(full_shape[s]);
        }
        SubsystemShape rest_shape(rest_dims);
        expanded = tensor(local, MultipartiteOperator(ComplexMatrix::identity(rest_shape.total()), rest_shape));
    }
    std::vector<std::size_t> perm(slots.begin(), slots.end());
    perm.insert(perm.end(), rest.begin(), rest.end());
    return permute_subsystems(expanded, perm);
}

MultipartiteOperator partial_trace(const MultipartiteOperator &op, std::span<const std::size_t> traced_slots) {
    std::size_t n = op.shape.slots();
    check_slot_list(traced_slots, n, "partial_trace");
    if (traced_slots.size() == n) {
        throw Error(ErrorCode::invalid_argument, "partial_trace: tracing every slot, use trace() instead");
    }
    auto kept = complement(traced_slots, n);
    std::vector<std::size_t> kept_dims;
    for (std::size_t s : kept) {
        kept_dims.push_back(op.shape[s]);
    }
    SubsystemShape kept_shape(kept_dims);
    auto kept_off = slot_offsets(op.shape, kept);
    auto traced_off = slot_offsets(op.shape, traced_slots);

    ComplexMatrix out(kept_shape.total());
    for (std::size_t r = 0; r < kept_off.size(); r++) {
        for (std::size_t c = 0; c < kept_off.size(); c++) {
            Complex s = 0;
            for (std::size_t t : traced_off) {
                s += op.matrix(kept_off[r] + t, kept_off[c] + t);
            }
            out(r, c) = s;
        }
    }
    return {std::move(out), std::move(kept_shape)};
}

MultipartiteOperator reduce_onto(const MultipartiteOperator &op, std::span<const std::size_t> kept_slots) {
    std::size_t n = op.shape.slots();
    check_slot_list(kept_slots, n, "reduce_onto");
    auto traced = complement(kept_slots, n);
    MultipartiteOperator reduced = traced.empty() ? op : partial_trace(op, traced);
    // Survivors are in ascending order; move each to its position in kept_slots.
    std::vector<std::size_t> sorted(kept_slots.begin(), kept_slots.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> perm(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); i++) {
        perm[i] = static_cast<std::size_t>(std::find(kept_slots.begin(), kept_slots.end(), sorted[i]) -
                                           kept_slots.begin());
    }
    return permute_subsystems(reduced, perm);
}

MultipartiteOperator partial_transpose(const MultipartiteOperator &op, std::span<const std::size_t> slots) {
    std::size_t n = op.shape.slots();
    check_slot_list(slots, n, "partial_transpose");
    auto rest = complement(slots, n);
    // Split every flat index into its transposed-slot part and its remaining part.
    auto strides = op.shape.strides();
    std::size_t dim = op.dim();
    std::vector<std::size_t> part_t(dim), part_r(dim);
    std::vector<bool> is_t(n, false);
    for (std::size_t s : slots) {
        is_t[s] = true;
    }
    std::vector<std::size_t> digits(n, 0);
    for (std::size_t x = 0; x < dim; x++) {
        std::size_t t = 0, r = 0;
        for (std::size_t s = 0; s < n; s++) {
            (is_t[s] ? t : r) += digits[s] * strides[s];
        }
        part_t[x] = t;
        part_r[x] = r;
        for (std::size_t s = n; s-- > 0;) {
            if (++digits[s] < op.shape[s]) {
                break;
            }
            digits[s] = 0;
        }
    }
    ComplexMatrix out(dim);
    for (std::size_t i = 0; i < dim; i++) {
        for (std::size_t j = 0; j < dim; j++) {
            out(i, j) = op.matrix(part_r[i] + part_t[j], part_r[j] + part_t[i]);
        }
    }
    return {std::move(out), op.shape};
}

}  // namespace mcwit
