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

#include "mcwit/detection.hpp"

#include <cctype>
#include <cmath>

#include "mcwit/error.hpp"
#include "mcwit/numfmt.hpp"
#include "mcwit/parallel.hpp"
#include "mcwit/witnesses.hpp"

namespace mcwit {

namespace {

constexpr double kImaginaryTolerance = 1e-9;
constexpr double kZeroBand = 1e-12;

int sign_of(double v) {
    if (std::abs(v) <= kZeroBand) {
        return 0;
    }
    return v > 0 ? 1 : -1;
}

void require_unit_interval(double v, const std::string &what) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw Error(ErrorCode::out_of_range, what + " = " + std::to_string(v) + " outside [0, 1]");
    }
}

}  // namespace

std::vector<Slot> parse_slot_notation(std::string_view text, std::size_t copies, std::size_t parties) {
    std::vector<Slot> slots;
    std::size_t i = 0;
    auto fail = [&](const std::string &why) {
        throw Error(ErrorCode::parse_error, "slot notation '" + std::string(text) + "': " + why);
    };
    while (i < text.size()) {
        char c = text[i];
        if (c < 'A' || c > 'Z') {
            fail("expected a party letter at position " + std::to_string(i));
        }
        std::size_t party = static_cast<std::size_t>(c - 'A');
        if (party >= parties) {
            fail(std::string("party ") + c + " does not exist in a " + std::to_string(parties) + "-party system");
        }
        i++;
        std::size_t copy = 0;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            std::size_t number = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                number = number * 10 + static_cast<std::size_t>(text[i] - '0');
                i++;
            }
            if (number == 0) {
                fail("copy numbers start at 1");
            }
            copy = number - 1;
        } else {
            while (i < text.size() && text[i] == '\'') {
                copy++;
                i++;
            }
        }
        if (copy >= copies) {
            fail("copy " + std::to_string(copy + 1) + " does not exist with " + std::to_string(copies) + " copies");
        }
        slots.push_back({copy, party});
    }
    if (slots.empty()) {
        fail("no slots");
    }
    return slots;
}

std::string format_slot_notation(const std::vector<Slot> &slots) {
    std::string s;
    for (const Slot &slot : slots) {
        s += static_cast<char>('A' + slot.party);
        s += std::to_string(slot.copy + 1);
    }
    return s;
}

WiringSpec::WiringSpec(std::size_t copies, SubsystemShape base_shape)
    : copies_(copies), base_shape_(std::move(base_shape)) {
    if (copies == 0) {
        throw Error(ErrorCode::invalid_argument, "wiring needs at least one copy");
    }
    full_shape();  // enforces the dimension cap
}

SubsystemShape WiringSpec::full_shape() const {
    SubsystemShape s = base_shape_;
    for (std::size_t k = 1; k < copies_; k++) {
        s = s.concat(base_shape_);
    }
    return s;
}

WiringSpec &WiringSpec::add(const WitnessRef &witness, std::string_view notation) {
    WitnessSpec spec = witness_catalog(witness.name, witness.b);
    auto slots = parse_slot_notation(notation, copies_, base_shape_.slots());
    add(witness.name, std::move(spec.op), std::move(slots));
    assignments_.back().b = witness.b;
    assignments_.back().notation = std::string(notation);
    return *this;
}

WiringSpec &WiringSpec::add(std::string label, MultipartiteOperator op, std::vector<Slot> slots) {
    if (slots.size() != op.shape.slots()) {
        throw Error(ErrorCode::dimension_mismatch, label + ": operator acts on " + std::to_string(op.shape.slots()) +
                                                       " slots, " + std::to_string(slots.size()) + " given");
    }
    for (std::size_t k = 0; k < slots.size(); k++) {
        const Slot &s = slots[k];
        if (s.copy >= copies_ || s.party >= base_shape_.slots()) {
            throw Error(ErrorCode::invalid_argument, label + ": slot (" + std::to_string(s.copy) + "," +
                                                         std::to_string(s.party) + ") out of range");
        }
        if (op.shape[k] != base_shape_[s.party]) {
            throw Error(ErrorCode::dimension_mismatch,
                        label + ": slot " + format_slot_notation({s}) + " " +
                            describe_dims(op.shape[k], base_shape_[s.party]));
        }
        for (std::size_t m = 0; m < k; m++) {
            if (slots[m] == s) {
                throw Error(ErrorCode::invalid_argument,
                            label + ": slot " + format_slot_notation({s}) + " used twice");
            }
        }
        for (const Assignment &a : assignments_) {
            for (const Slot &t : a.slots) {
                if (t == s) {
                    throw Error(ErrorCode::invalid_argument, label + ": slot " + format_slot_notation({s}) +
                                                                 " already taken by " + a.label);
                }
            }
        }
    }
    std::string notation = format_slot_notation(slots);
    assignments_.push_back({std::move(label), std::nullopt, std::move(notation), std::move(slots), std::move(op)});
    return *this;
}

std::string WiringSpec::describe() const {
    std::string s;
    for (const Assignment &a : assignments_) {
        if (!s.empty()) {
            s += " x ";
        }
        s += a.label;
        if (a.b) {
            s += "(b=" + format_number(*a.b) + ")";
        }
        s += "[" + a.notation + "]";
    }
    return s.empty() ? "identity" : s;
}

WiringSpec WiringSpec::relabel_copies(std::span<const std::size_t> copy_perm) const {
    if (copy_perm.size() != copies_) {
        throw Error(ErrorCode::invalid_argument, "relabel_copies: permutation length mismatch");
    }
    WiringSpec out(copies_, base_shape_);
    for (const Assignment &a : assignments_) {
        std::vector<Slot> slots = a.slots;
        for (Slot &s : slots) {
            s.copy = copy_perm[s.copy];
        }
        out.add(a.label, a.op, std::move(slots));
        out.assignments_.back().b = a.b;
    }
    return out;
}

MultipartiteOperator assemble(const WiringSpec &wiring) {
    SubsystemShape full = wiring.full_shape();
    if (wiring.assignments().empty()) {
        return {ComplexMatrix::identity(full.total()), full};
    }
    MultipartiteOperator local;
    std::vector<std::size_t> slots;
    for (const Assignment &a : wiring.assignments()) {
        local = slots.empty() ? a.op : tensor(local, a.op);
        for (const Slot &s : a.slots) {
            slots.push_back(wiring.flat(s));
        }
    }
    return embed(local, slots, full);
}

double expectation_assembled(const MultipartiteOperator &assembled, std::size_t copies,
                             const MultipartiteOperator &rho) {
    MultipartiteOperator state = tensor_power(rho, copies);
    if (!(state.shape == assembled.shape)) {
        throw Error(ErrorCode::dimension_mismatch, "expectation: state shape " + state.shape.to_string() +
                                                       " does not match wiring shape " +
                                                       assembled.shape.to_string());
    }
    Complex value = trace(matmul(assembled.matrix, state.matrix));
    if (std::abs(value.imag()) > kImaginaryTolerance) {
        throw Error(ErrorCode::imaginary_residue,
                    "expectation: imaginary part " + std::to_string(value.imag()) + " exceeds 1e-9");
    }
    return value.real();
}

double expectation(const WiringSpec &wiring, const MultipartiteOperator &rho) {
    if (!(rho.shape == wiring.base_shape())) {
        throw Error(ErrorCode::dimension_mismatch, "expectation: state shape " + rho.shape.to_string() +
                                                       " does not match wiring base shape " +
                                                       wiring.base_shape().to_string());
    }
    return expectation_assembled(assemble(wiring), wiring.copies(), rho);
}

double expectation_closed_form(const std::string &name, double param, std::optional<double> b) {
    if (name == "cyclic_werner_w") {
        require_unit_interval(param, "w");
        double w = param;
        return 2 * std::pow((2 - w) / 4, 3) - 4 * std::pow((1 - w) / 2, 3) + 6 * w * (2 - w) * (2 - w) / 64 +
               6 * w * w * (2 - w) / 64 + 2 * w * w * w / 64;
    }
    if (name == "cross_p_werner_a") {
        require_unit_interval(param, "a");
        return (3 - 5 * param * param) / 4;
    }
    if (name == "cross_pb_werner_a") {
        require_unit_interval(param, "a");
        if (!b || !(*b >= 1.0)) {
            throw Error(ErrorCode::out_of_range, "cross_pb_werner_a needs b >= 1");
        }
        double bb = *b;
        return ((1 - 6 * bb) * param * param + 2 * bb + 1) / (16 * bb);
    }
    if (name == "ww1_noisy_w") {
        require_unit_interval(param, "c");
        return 7 * param / 8 - 1.0 / 3.0;
    }
    throw Error(ErrorCode::invalid_argument, "unknown closed form '" + name + "'");
}

Root find_threshold(const std::function<double(double)> &f, double lo, double hi, double tol) {
    if (!(lo < hi)) {
        throw Error(ErrorCode::invalid_argument, "find_threshold: empty bracket");
    }
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0) {
        return {lo, lo, lo, flo};
    }
    if (fhi == 0) {
        return {hi, hi, hi, fhi};
    }
    if ((flo > 0) == (fhi > 0)) {
        throw Error(ErrorCode::no_sign_change, "find_threshold: no sign change on [" + format_number(lo) + ", " +
                                                   format_number(hi) + "] (f = " + format_number(flo) + ", " +
                                                   format_number(fhi) + ")");
    }
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        double fm = f(mid);
        if (fm == 0) {
            return {mid, mid, mid, fm};
        }
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    double mid = 0.5 * (lo + hi);
    return {mid, lo, hi, f(mid)};
}

std::vector<Root> locate_thresholds(const std::vector<GridPoint> &grid, const std::function<double(double)> &f,
                                    double tol) {
    std::vector<Root> roots;
    std::optional<std::size_t> prev;
    for (std::size_t i = 0; i < grid.size(); i++) {
        int s = sign_of(grid[i].value);
        if (s == 0) {
            continue;
        }
        if (prev && sign_of(grid[*prev].value) != s) {
            if (i - *prev > 1) {
                // The crossing sits on a grid point inside the zero band.
                const GridPoint &z = grid[*prev + 1];
                roots.push_back({z.param, z.param, z.param, z.value});
            } else {
                roots.push_back(find_threshold(f, grid[*prev].param, grid[i].param, tol));
            }
        }
        prev = i;
    }
    return roots;
}

std::vector<double> uniform_grid(ParamRange range, std::size_t points) {
    if (points < 2) {
        throw Error(ErrorCode::invalid_argument, "grid needs at least 2 points");
    }
    std::vector<double> g(points);
    double span = range.hi - range.lo;
    for (std::size_t i = 0; i < points; i++) {
        g[i] = range.lo + span * static_cast<double>(i) / static_cast<double>(points - 1);
    }
    g.back() = range.hi;
    return g;
}

DetectionReport sweep(const WiringSpec &wiring, const StateFamily &family, std::size_t grid_points) {
    if (!family.parameterized()) {
        throw Error(ErrorCode::invalid_argument, "sweep: family '" + family.name + "' has no parameter");
    }
    if (!(family.shape == wiring.base_shape())) {
        throw Error(ErrorCode::dimension_mismatch, "sweep: family shape " + family.shape.to_string() +
                                                       " does not match wiring base shape " +
                                                       wiring.base_shape().to_string());
    }
    MultipartiteOperator assembled = assemble(wiring);
    std::size_t copies = wiring.copies();
    auto f = [&](double x) { return expectation_assembled(assembled, copies, family(x)); };

    auto params = uniform_grid(family.range, grid_points);
    auto values = parallel_map(params.size(), [&](std::size_t i) { return f(params[i]); });

    DetectionReport r{family.name, family.param_name, wiring.describe(), {}, {}};
    for (std::size_t i = 0; i < params.size(); i++) {
        r.grid.push_back({params[i], values[i]});
    }
    r.thresholds = locate_thresholds(r.grid, f);
    return r;
}

Sweep2dReport sweep_2d(const std::function<WiringSpec(double)> &make_wiring, const StateFamily &family,
                       const std::string &witness_param_name, const std::vector<double> &witness_params,
                       std::size_t grid_points) {
    Sweep2dReport out{family.name, family.param_name, witness_param_name, {}, {}};
    for (double b : witness_params) {
        DetectionReport r = sweep(make_wiring(b), family, grid_points);
        for (const GridPoint &p : r.grid) {
            out.rows.push_back({p.param, b, p.value});
        }
        out.thresholds.emplace_back(b, std::move(r.thresholds));
    }
    return out;
}

std::vector<OrderingEntry> ordering_matrix(const std::vector<std::string> &witness_names, const StateFamily &family,
                                           double param, const std::vector<Ordering> &orderings) {
    if (witness_names.empty()) {
        throw Error(ErrorCode::invalid_argument, "ordering_matrix: no witnesses");
    }
    MultipartiteOperator rho = family(param);
    struct Job {
        const Ordering *ordering;
        std::vector<std::string> names;
    };
    std::vector<Job> jobs;
    for (const Ordering &o : orderings) {
        std::size_t m = o.slots.size();
        std::vector<std::size_t> idx(m, 0);
        while (true) {
            Job job{&o, {}};
            for (std::size_t k = 0; k < m; k++) {
                job.names.push_back(witness_names[idx[k]]);
            }
            jobs.push_back(std::move(job));
            std::size_t k = m;
            while (k-- > 0) {
                if (++idx[k] < witness_names.size()) {
                    break;
                }
                idx[k] = 0;
            }
            if (k == static_cast<std::size_t>(-1)) {
                break;
            }
        }
    }
    auto values = parallel_map(jobs.size(), [&](std::size_t i) {
        const Job &job = jobs[i];
        WiringSpec w(job.ordering->copies, family.shape);
        for (std::size_t k = 0; k < job.names.size(); k++) {
            w.add(job.names[k], job.ordering->slots[k]);
        }
        return expectation(w, rho);
    });
    std::vector<OrderingEntry> out;
    for (std::size_t i = 0; i < jobs.size(); i++) {
        out.push_back({jobs[i].ordering->label, jobs[i].names, values[i]});
    }
    return out;
}

namespace orderings {

WiringSpec cross_two_copy(const WitnessRef &first, const WitnessRef &second) {
    WiringSpec w(2, {2, 2});
    w.add(first, "A1B2").add(second, "B1A2");
    return w;
}

WiringSpec parallel_two_copy(const WitnessRef &first, const WitnessRef &second) {
    WiringSpec w(2, {2, 2});
    w.add(first, "A1A2").add(second, "B1B2");
    return w;
}

WiringSpec cyclic_three_copy(const WitnessRef &first, const WitnessRef &second, const WitnessRef &third) {
    WiringSpec w(3, {2, 2});
    w.add(first, "A1B2").add(second, "A2B3").add(third, "B1A3");
    return w;
}

WiringSpec tripartite_cross(const WitnessRef &a, const WitnessRef &b, const WitnessRef &c) {
    WiringSpec w(2, {2, 2, 2});
    w.add(a, "A1B2").add(b, "B1C2").add(c, "C1A2");
    return w;
}

WiringSpec tripartite_parallel(const WitnessRef &a, const WitnessRef &b, const WitnessRef &c) {
    WiringSpec w(2, {2, 2, 2});
    w.add(a, "A1A2").add(b, "B1B2").add(c, "C1C2");
    return w;
}

WiringSpec tripartite_product(const WitnessRef &a, const WitnessRef &b, const WitnessRef &c) {
    WiringSpec w(2, {2, 2, 2});
    w.add(a, "A1B1").add(b, "C1A2").add(c, "B2C2");
    return w;
}

}  // namespace orderings

}  // namespace mcwit
