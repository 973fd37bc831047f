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

#include "mcwit/mcwit.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "mcwit/commands.hpp"
#include "mcwit/concentration.hpp"
#include "mcwit/detection.hpp"
#include "mcwit/error.hpp"
#include "mcwit/ppt.hpp"
#include "mcwit/reproduce.hpp"
#include "mcwit/scenario.hpp"
#include "mcwit/witnesses.hpp"

struct mcwit_operator {
    mcwit::MultipartiteOperator value;
};

struct mcwit_wiring {
    mcwit::WiringSpec value;
};

struct mcwit_bundle {
    mcwit::Bundle value;
};

namespace {

thread_local std::string last_error;

mcwit_status to_status(mcwit::ErrorCode code) {
    using mcwit::ErrorCode;
    switch (code) {
        case ErrorCode::invalid_argument:
            return MCWIT_INVALID_ARGUMENT;
        case ErrorCode::dimension_mismatch:
            return MCWIT_DIMENSION_MISMATCH;
        case ErrorCode::not_hermitian:
            return MCWIT_NOT_HERMITIAN;
        case ErrorCode::no_convergence:
            return MCWIT_NO_CONVERGENCE;
        case ErrorCode::singular:
            return MCWIT_SINGULAR;
        case ErrorCode::out_of_range:
            return MCWIT_OUT_OF_RANGE;
        case ErrorCode::no_sign_change:
            return MCWIT_NO_SIGN_CHANGE;
        case ErrorCode::imaginary_residue:
            return MCWIT_IMAGINARY_RESIDUE;
        case ErrorCode::parse_error:
            return MCWIT_PARSE_ERROR;
        case ErrorCode::io_error:
            return MCWIT_IO_ERROR;
    }
    return MCWIT_INTERNAL_ERROR;
}

// Runs fn, translating exceptions into a status and the thread-local message.
template <class F>
mcwit_status guarded(F &&fn) {
    try {
        last_error.clear();
        fn();
        return MCWIT_OK;
    } catch (const mcwit::Error &e) {
        last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc &) {
        last_error = "out of memory";
        return MCWIT_INTERNAL_ERROR;
    } catch (const std::exception &e) {
        last_error = e.what();
        return MCWIT_INTERNAL_ERROR;
    } catch (...) {
        last_error = "unknown error";
        return MCWIT_INTERNAL_ERROR;
    }
}

void require(bool ok, const char *what) {
    if (!ok) {
        throw mcwit::Error(mcwit::ErrorCode::invalid_argument, std::string("null or empty argument: ") + what);
    }
}

std::optional<double> optional_b(int has_b, double b) {
    return has_b ? std::optional<double>(b) : std::nullopt;
}

std::vector<std::size_t> to_vector(const size_t *values, size_t n) {
    require(values != nullptr || n == 0, "index array");
    return std::vector<std::size_t>(values, values + n);
}

mcwit::ComplexMatrix read_matrix(const double *re_im, std::size_t dim) {
    require(re_im != nullptr, "matrix data");
    std::vector<mcwit::Complex> entries(dim * dim);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        entries[i] = {re_im[2 * i], re_im[2 * i + 1]};
    }
    return mcwit::ComplexMatrix(dim, std::move(entries));
}

mcwit_operator *wrap(mcwit::MultipartiteOperator op) {
    return new mcwit_operator{std::move(op)};
}

mcwit_bundle *wrap(mcwit::Bundle b) {
    return new mcwit_bundle{std::move(b)};
}

mcwit::MeasurementKind to_kind(mcwit_measurement kind) {
    switch (kind) {
        case MCWIT_MEASUREMENT_M_SMALL:
            return mcwit::MeasurementKind::m;
        case MCWIT_MEASUREMENT_M_LARGE:
            return mcwit::MeasurementKind::M;
    }
    throw mcwit::Error(mcwit::ErrorCode::invalid_argument, "unknown measurement kind");
}

}  // namespace

extern "C" {

const char *mcwit_version(void) {
    return "1.0.0";
}

const char *mcwit_status_name(mcwit_status status) {
    switch (status) {
        case MCWIT_OK:
            return "ok";
        case MCWIT_INTERNAL_ERROR:
            return "internal_error";
        default:
            break;
    }
    if (status > MCWIT_OK && status < MCWIT_INTERNAL_ERROR) {
        return mcwit::error_code_name(static_cast<mcwit::ErrorCode>(static_cast<int>(status)));
    }
    return "unknown";
}

const char *mcwit_last_error(void) {
    return last_error.c_str();
}

mcwit_status mcwit_state_create(const char *family, double param, mcwit_operator **out) {
    return guarded([&] {
        require(family && out, "family/out");
        auto fam = mcwit::state_family(family);
        *out = wrap(fam(fam.parameterized() ? param : 0.0));
    });
}

mcwit_status mcwit_witness_create(const char *name, int has_b, double b, mcwit_operator **out) {
    return guarded([&] {
        require(name && out, "name/out");
        *out = wrap(mcwit::witness_catalog(name, optional_b(has_b, b)).op);
    });
}

mcwit_status mcwit_operator_create(const size_t *dims, size_t n_slots, const double *re_im, mcwit_operator **out) {
    return guarded([&] {
        require(out != nullptr && n_slots > 0, "dims/out");
        mcwit::SubsystemShape shape(to_vector(dims, n_slots));
        *out = wrap(mcwit::MultipartiteOperator(read_matrix(re_im, shape.total()), shape));
    });
}

void mcwit_operator_destroy(mcwit_operator *op) {
    delete op;
}

mcwit_status mcwit_operator_dim(const mcwit_operator *op, size_t *dim) {
    return guarded([&] {
        require(op && dim, "op/dim");
        *dim = op->value.matrix.dim();
    });
}

mcwit_status mcwit_operator_slots(const mcwit_operator *op, size_t *n_slots) {
    return guarded([&] {
        require(op && n_slots, "op/n_slots");
        *n_slots = op->value.shape.slots();
    });
}

mcwit_status mcwit_operator_slot_dim(const mcwit_operator *op, size_t slot, size_t *dim) {
    return guarded([&] {
        require(op && dim, "op/dim");
        if (slot >= op->value.shape.slots()) {
            throw mcwit::Error(mcwit::ErrorCode::out_of_range, "slot index out of range");
        }
        *dim = op->value.shape.dims()[slot];
    });
}

mcwit_status mcwit_operator_entry(const mcwit_operator *op, size_t row, size_t col, double *re, double *im) {
    return guarded([&] {
        require(op && re && im, "op/re/im");
        std::size_t n = op->value.matrix.dim();
        if (row >= n || col >= n) {
            throw mcwit::Error(mcwit::ErrorCode::out_of_range, "entry index out of range");
        }
        auto z = op->value.matrix(row, col);
        *re = z.real();
        *im = z.imag();
    });
}

mcwit_status mcwit_operator_copy(const mcwit_operator *op, double *re_im, size_t capacity) {
    return guarded([&] {
        require(op && re_im, "op/re_im");
        const auto &entries = op->value.matrix.entries();
        if (capacity < 2 * entries.size()) {
            throw mcwit::Error(mcwit::ErrorCode::invalid_argument, "buffer too small");
        }
        for (std::size_t i = 0; i < entries.size(); ++i) {
            re_im[2 * i] = entries[i].real();
            re_im[2 * i + 1] = entries[i].imag();
        }
    });
}

mcwit_status mcwit_operator_min_eigenvalue(const mcwit_operator *op, double *out) {
    return guarded([&] {
        require(op && out, "op/out");
        *out = mcwit::min_eigenvalue(op->value.matrix);
    });
}

mcwit_status mcwit_operator_trace_product(const mcwit_operator *a, const mcwit_operator *b, double *out) {
    return guarded([&] {
        require(a && b && out, "a/b/out");
        *out = mcwit::trace_of_product(a->value.matrix, b->value.matrix).real();
    });
}

mcwit_status mcwit_tensor(const mcwit_operator *a, const mcwit_operator *b, mcwit_operator **out) {
    return guarded([&] {
        require(a && b && out, "a/b/out");
        *out = wrap(mcwit::tensor(a->value, b->value));
    });
}

mcwit_status mcwit_tensor_power(const mcwit_operator *op, size_t copies, mcwit_operator **out) {
    return guarded([&] {
        require(op && out, "op/out");
        *out = wrap(mcwit::tensor_power(op->value, copies));
    });
}

mcwit_status mcwit_permute(const mcwit_operator *op, const size_t *perm, size_t n, mcwit_operator **out) {
    return guarded([&] {
        require(op && out, "op/out");
        *out = wrap(mcwit::permute_subsystems(op->value, to_vector(perm, n)));
    });
}

mcwit_status mcwit_embed(const mcwit_operator *local, const size_t *slots, size_t n_slots, const size_t *full_dims,
                         size_t n_full, mcwit_operator **out) {
    return guarded([&] {
        require(local && out, "local/out");
        *out = wrap(mcwit::embed(local->value, to_vector(slots, n_slots),
                                 mcwit::SubsystemShape(to_vector(full_dims, n_full))));
    });
}

mcwit_status mcwit_partial_trace(const mcwit_operator *op, const size_t *slots, size_t n, mcwit_operator **out) {
    return guarded([&] {
        require(op && out, "op/out");
        *out = wrap(mcwit::partial_trace(op->value, to_vector(slots, n)));
    });
}

mcwit_status mcwit_partial_transpose(const mcwit_operator *op, const size_t *slots, size_t n, mcwit_operator **out) {
    return guarded([&] {
        require(op && out, "op/out");
        *out = wrap(mcwit::partial_transpose(op->value, to_vector(slots, n)));
    });
}

mcwit_status mcwit_wiring_create(size_t copies, const size_t *base_dims, size_t n_parties, mcwit_wiring **out) {
    return guarded([&] {
        require(out != nullptr && n_parties > 0, "base_dims/out");
        *out = new mcwit_wiring{mcwit::WiringSpec(copies, mcwit::SubsystemShape(to_vector(base_dims, n_parties)))};
    });
}

void mcwit_wiring_destroy(mcwit_wiring *wiring) {
    delete wiring;
}

mcwit_status mcwit_wiring_add(mcwit_wiring *wiring, const char *witness, int has_b, double b, const char *slots) {
    return guarded([&] {
        require(wiring && witness && slots, "wiring/witness/slots");
        wiring->value.add(mcwit::WitnessRef(witness, optional_b(has_b, b)), slots);
    });
}

mcwit_status mcwit_wiring_add_operator(mcwit_wiring *wiring, const char *label, const mcwit_operator *op,
                                       const char *slots) {
    return guarded([&] {
        require(wiring && label && op && slots, "wiring/label/op/slots");
        auto &w = wiring->value;
        w.add(label, op->value, mcwit::parse_slot_notation(slots, w.copies(), w.base_shape().slots()));
    });
}

mcwit_status mcwit_wiring_assemble(const mcwit_wiring *wiring, mcwit_operator **out) {
    return guarded([&] {
        require(wiring && out, "wiring/out");
        *out = wrap(mcwit::assemble(wiring->value));
    });
}

mcwit_status mcwit_wiring_expectation(const mcwit_wiring *wiring, const mcwit_operator *rho, double *out) {
    return guarded([&] {
        require(wiring && rho && out, "wiring/rho/out");
        *out = mcwit::expectation(wiring->value, rho->value);
    });
}

mcwit_status mcwit_wiring_describe(const mcwit_wiring *wiring, char *buf, size_t capacity, size_t *needed) {
    return guarded([&] {
        require(wiring != nullptr, "wiring");
        std::string text = wiring->value.describe();
        if (needed) {
            *needed = text.size() + 1;
        }
        if (buf && capacity > 0) {
            std::size_t n = std::min(capacity - 1, text.size());
            text.copy(buf, n);
            buf[n] = '\0';
        }
    });
}

mcwit_status mcwit_wiring_thresholds(const mcwit_wiring *wiring, const char *family, size_t points, double *roots,
                                     size_t capacity, size_t *count) {
    return guarded([&] {
        require(wiring && family && count, "wiring/family/count");
        auto report = mcwit::sweep(wiring->value, mcwit::state_family(family),
                                   points == 0 ? mcwit::kDefaultGridPoints : points);
        *count = report.thresholds.size();
        for (std::size_t i = 0; i < report.thresholds.size() && i < capacity && roots; ++i) {
            roots[i] = report.thresholds[i].value;
        }
    });
}

mcwit_status mcwit_ppt_check(const mcwit_operator *rho, const size_t *slots, size_t n, double *min_eig, int *npt) {
    return guarded([&] {
        require(rho && min_eig && npt, "rho/min_eig/npt");
        auto verdict = mcwit::ppt_check(rho->value, to_vector(slots, n));
        *min_eig = verdict.min_eigenvalue;
        *npt = verdict.verdict == mcwit::PptOutcome::npt_entangled ? 1 : 0;
    });
}

mcwit_status mcwit_ppt_threshold(const char *family, const size_t *slots, size_t n, double *root) {
    return guarded([&] {
        require(family && root, "family/root");
        *root = mcwit::ppt_threshold(mcwit::state_family(family), to_vector(slots, n)).value;
    });
}

mcwit_status mcwit_find_threshold(double (*f)(double, void *), void *ctx, double lo, double hi, double tol,
                                  double *root) {
    return guarded([&] {
        require(f && root, "f/root");
        *root = mcwit::find_threshold([&](double x) { return f(x, ctx); }, lo, hi, tol).value;
    });
}

mcwit_status mcwit_closed_form(const char *name, double param, int has_b, double b, double *out) {
    return guarded([&] {
        require(name && out, "name/out");
        *out = mcwit::expectation_closed_form(name, param, optional_b(has_b, b));
    });
}

mcwit_status mcwit_validate_witness(const char *name, int has_b, double b, uint64_t samples, uint64_t seed,
                                    mcwit_validation *out) {
    return guarded([&] {
        require(name && out, "name/out");
        auto rep = mcwit::validate_witness(mcwit::witness_catalog(name, optional_b(has_b, b)), samples, seed);
        out->min_eigenvalue = rep.min_eigenvalue;
        out->min_product_expectation = rep.min_product_expectation;
        out->is_witness = rep.kind == mcwit::WitnessKind::witness ? 1 : 0;
        out->pass = rep.pass ? 1 : 0;
    });
}

mcwit_status mcwit_concentrate(const double *psi_re_im, size_t d, mcwit_measurement kind, mcwit_concentration *out) {
    return guarded([&] {
        require(out != nullptr, "out");
        auto psi = read_matrix(psi_re_im, d);
        auto k = to_kind(kind);
        auto r = mcwit::concentrate(psi, k);
        auto pc = mcwit::probability_consistency(psi, k);
        out->probability = r.probability;
        out->fidelity = r.fidelity_with_target;
        out->bookkeeping_probability = r.bookkeeping_probability;
        out->bookkeeping_ratio = r.bookkeeping_ratio;
        out->consistency_lhs = pc.lhs;
        out->consistency_rhs = pc.rhs;
        out->consistency_delta = pc.delta;
    });
}

void mcwit_bundle_destroy(mcwit_bundle *bundle) {
    delete bundle;
}

size_t mcwit_bundle_count(const mcwit_bundle *bundle) {
    return bundle ? bundle->value.files.size() : 0;
}

const char *mcwit_bundle_name(const mcwit_bundle *bundle, size_t index) {
    if (!bundle || index >= bundle->value.files.size()) {
        return nullptr;
    }
    return bundle->value.files[index].first.c_str();
}

const char *mcwit_bundle_text(const mcwit_bundle *bundle, size_t index) {
    if (!bundle || index >= bundle->value.files.size()) {
        return nullptr;
    }
    return bundle->value.files[index].second.c_str();
}

int mcwit_bundle_all_pass(const mcwit_bundle *bundle) {
    return bundle && bundle->value.all_pass ? 1 : 0;
}

mcwit_status mcwit_reproduce(const char *id, uint64_t seed, mcwit_bundle **out) {
    return guarded([&] {
        require(id && out, "id/out");
        *out = wrap(mcwit::reproduction_bundle(mcwit::reproduce(id, seed)));
    });
}

const char *mcwit_reproduction_ids(void) {
    static const std::string ids = [] {
        std::string s;
        for (const auto &id : mcwit::reproduction_ids()) {
            s += id + "\n";
        }
        return s;
    }();
    return ids.c_str();
}

mcwit_status mcwit_sweep_scenario(const char *scenario_text, size_t points, mcwit_bundle **out) {
    return guarded([&] {
        require(scenario_text && out, "scenario/out");
        auto scenario = mcwit::parse_scenario(scenario_text);
        *out = wrap(mcwit::run_scenario(scenario, points == 0 ? std::nullopt : std::optional<std::size_t>(points)));
    });
}

mcwit_status mcwit_scenario_canonical(const char *scenario_text, mcwit_bundle **out) {
    return guarded([&] {
        require(scenario_text && out, "scenario/out");
        mcwit::Bundle b;
        b.add("scenario.json", mcwit::serialize_scenario(mcwit::parse_scenario(scenario_text)));
        *out = wrap(std::move(b));
    });
}

mcwit_status mcwit_ppt_report(const char *family, const size_t *slots, size_t n, int has_value, double value,
                              const char *format, mcwit_bundle **out) {
    return guarded([&] {
        require(family && format && out, "family/format/out");
        *out = wrap(mcwit::ppt_command(family, to_vector(slots, n), optional_b(has_value, value), format));
    });
}

mcwit_status mcwit_validate_report(const char *witness, int has_b, double b, uint64_t samples, uint64_t seed,
                                   const char *format, mcwit_bundle **out) {
    return guarded([&] {
        require(witness && format && out, "witness/format/out");
        *out = wrap(mcwit::validate_command(witness, optional_b(has_b, b), samples, seed, format));
    });
}

mcwit_status mcwit_concentrate_report(size_t d, mcwit_measurement kind, size_t samples, uint64_t seed,
                                      const char *format, mcwit_bundle **out) {
    return guarded([&] {
        require(format && out, "format/out");
        *out = wrap(mcwit::concentrate_command(d, to_kind(kind), samples, seed, format));
    });
}

}  // extern "C"
