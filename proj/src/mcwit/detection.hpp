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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcwit/multipartite.hpp"
#include "mcwit/states.hpp"

namespace mcwit {

/// One subsystem of one copy. Flat slot index in rho^{x k} is copy * parties + party.
struct Slot {
    std::size_t copy = 0;
    std::size_t party = 0;

    bool operator==(const Slot &) const = default;
};

/// Parses ordering notation such as "A1B2", "AB'" or "B1A3" into slots.
///
/// Parties are capital letters starting at A. A party letter may be followed
/// by a 1-based copy number or by primes (none = first copy, ' = second, ...).
std::vector<Slot> parse_slot_notation(std::string_view text, std::size_t copies, std::size_t parties);
std::string format_slot_notation(const std::vector<Slot> &slots);

struct WitnessRef {
    std::string name;
    std::optional<double> b;

    WitnessRef(const char *n) : name(n) {
    }
    WitnessRef(std::string n, std::optional<double> param = std::nullopt) : name(std::move(n)), b(param) {
    }
};

struct Assignment {
    std::string label;
    std::optional<double> b;
    std::string notation;
    std::vector<Slot> slots;
    MultipartiteOperator op;
};

/// Which operator is measured on which ordered tuple of (copy, party) slots.
/// Slots not named by any assignment carry the identity.
class WiringSpec {
   public:
    WiringSpec(std::size_t copies, SubsystemShape base_shape);

    /// Catalog witness on the slots written in ordering notation.
    WiringSpec &add(const WitnessRef &witness, std::string_view notation);
    WiringSpec &add(std::string label, MultipartiteOperator op, std::vector<Slot> slots);

    std::size_t copies() const noexcept {
        return copies_;
    }
    const SubsystemShape &base_shape() const noexcept {
        return base_shape_;
    }
    SubsystemShape full_shape() const;
    const std::vector<Assignment> &assignments() const noexcept {
        return assignments_;
    }
    std::size_t flat(const Slot &slot) const {
        return slot.copy * base_shape_.slots() + slot.party;
    }
    /// e.g. "W1[A1B2] x W2[A2B3] x W3[B1A3]".
    std::string describe() const;

    /// Same wiring with copy indices relabeled: copy c becomes copy_perm[c].
    WiringSpec relabel_copies(std::span<const std::size_t> copy_perm) const;

   private:
    std::size_t copies_;
    SubsystemShape base_shape_;
    std::vector<Assignment> assignments_;
};

/// Kronecker product of the assigned operators embedded at their slots.
MultipartiteOperator assemble(const WiringSpec &wiring);

/// Tr(assemble(wiring) rho^{x k}). Throws imaginary_residue when the imaginary
/// part exceeds 1e-9.
double expectation(const WiringSpec &wiring, const MultipartiteOperator &rho);
double expectation_assembled(const MultipartiteOperator &assembled, std::size_t copies,
                             const MultipartiteOperator &rho);

/// Closed-form trace polynomials used as independent cross-checks:
///   cyclic_werner_w     three-copy cyclic W1,W2,W3 on werner_w(w)
///   cross_p_werner_a    P x W3 cross wiring on werner_a(a):  (3 - 5a^2)/4
///   cross_pb_werner_a   P_b x W3 cross wiring on werner_a(a): ((1-6b)a^2 + 2b + 1)/(16b)
///   ww1_noisy_w         single-copy WW1 on noisy_w(c):        7c/8 - 1/3
double expectation_closed_form(const std::string &name, double param, std::optional<double> b = std::nullopt);

struct Root {
    double value = 0;
    double lo = 0;
    double hi = 0;
    double f_value = 0;
};

/// Bisection to bracket width <= tol. Throws no_sign_change when f(lo) and
/// f(hi) share a strict sign.
Root find_threshold(const std::function<double(double)> &f, double lo, double hi, double tol = 1e-9);

struct GridPoint {
    double param = 0;
    double value = 0;
};

/// Scans adjacent grid points for strict sign changes (|value| <= 1e-12 counts
/// as zero) and refines each with find_threshold on f.
std::vector<Root> locate_thresholds(const std::vector<GridPoint> &grid, const std::function<double(double)> &f,
                                    double tol = 1e-9);

std::vector<double> uniform_grid(ParamRange range, std::size_t points);

struct DetectionReport {
    std::string family;
    std::string param_name;
    std::string wiring;
    std::vector<GridPoint> grid;
    std::vector<Root> thresholds;
};

inline constexpr std::size_t kDefaultGridPoints = 201;

/// Expectation over a uniform grid of the family's parameter range, plus every
/// sign-change threshold refined on the dense expectation.
DetectionReport sweep(const WiringSpec &wiring, const StateFamily &family,
                      std::size_t grid_points = kDefaultGridPoints);

struct Sweep2dRow {
    double param = 0;
    double witness_param = 0;
    double value = 0;
};

struct Sweep2dReport {
    std::string family;
    std::string param_name;
    std::string witness_param_name;
    std::vector<Sweep2dRow> rows;
    /// (witness parameter, thresholds at that value)
    std::vector<std::pair<double, std::vector<Root>>> thresholds;
};

/// Outer loop over a witness parameter; `make_wiring(b)` builds the wiring.
Sweep2dReport sweep_2d(const std::function<WiringSpec(double)> &make_wiring, const StateFamily &family,
                       const std::string &witness_param_name, const std::vector<double> &witness_params,
                       std::size_t grid_points = kDefaultGridPoints);

/// A slot layout without witnesses, e.g. {"A1B2", "B1A2"}.
struct Ordering {
    std::string label;
    std::size_t copies = 2;
    std::vector<std::string> slots;
};

struct OrderingEntry {
    std::string ordering;
    std::vector<std::string> witnesses;
    double value = 0;
};

/// Every assignment of `witness_names` (with repetition) to every ordering,
/// evaluated on family(param).
std::vector<OrderingEntry> ordering_matrix(const std::vector<std::string> &witness_names, const StateFamily &family,
                                           double param, const std::vector<Ordering> &orderings);

/// Named layouts for the orderings that appear in the worked examples.
namespace orderings {
/// AB'|BA': first operator on (A, B'), second on (B, A').
WiringSpec cross_two_copy(const WitnessRef &first, const WitnessRef &second);
/// AA'|BB'.
WiringSpec parallel_two_copy(const WitnessRef &first, const WitnessRef &second);
/// A1B2 | A2B3 | B1A3.
WiringSpec cyclic_three_copy(const WitnessRef &first, const WitnessRef &second, const WitnessRef &third);
/// AB' | BC' | CA' on two copies of a three-party state.
WiringSpec tripartite_cross(const WitnessRef &a, const WitnessRef &b, const WitnessRef &c);
/// AA' | BB' | CC'.
WiringSpec tripartite_parallel(const WitnessRef &a, const WitnessRef &b, const WitnessRef &c);
/// Plain Kronecker order over [A,B,C,A',B',C']: AB | CA' | B'C'.
WiringSpec tripartite_product(const WitnessRef &a, const WitnessRef &b, const WitnessRef &c);
}  // namespace orderings

}  // namespace mcwit
