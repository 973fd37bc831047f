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

#include "mcwit/reproduce.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "json.hpp"
#include "mcwit/concentration.hpp"
#include "mcwit/error.hpp"
#include "mcwit/numfmt.hpp"
#include "mcwit/ppt.hpp"
#include "mcwit/witnesses.hpp"

namespace mcwit {

namespace {

using nlohmann::json;

constexpr std::size_t kValidationSamples = 100000;
constexpr std::size_t kCheckGrid = 101;
constexpr double kSignTol = 1e-9;

class CheckList {
   public:
    void eq(std::string id, double value, double expected, double tol, std::string note = {}) {
        bool ok = std::abs(value - expected) <= tol;
        push({std::move(id), value, expected, tol, "eq", ok ? CheckStatus::pass : CheckStatus::fail, std::move(note)});
    }
    void ge(std::string id, double value, double bound, std::string note = {}) {
        push({std::move(id), value, bound, 0, "ge", value >= bound ? CheckStatus::pass : CheckStatus::fail,
              std::move(note)});
    }
    void lt(std::string id, double value, double bound, std::string note = {}) {
        push({std::move(id), value, bound, 0, "lt", value < bound ? CheckStatus::pass : CheckStatus::fail,
              std::move(note)});
    }
    void flag(std::string id, double value, std::optional<double> reference, std::string note) {
        push({std::move(id), value, reference, 0, "none", CheckStatus::flagged, std::move(note)});
    }
    void info(std::string id, double value, std::string note = {}) {
        push({std::move(id), value, std::nullopt, 0, "none", CheckStatus::info, std::move(note)});
    }

    std::vector<Check> take() {
        return std::move(checks_);
    }

   private:
    void push(Check c) {
        checks_.push_back(std::move(c));
    }
    std::vector<Check> checks_;
};

WiringSpec single(const WitnessRef &w, std::size_t parties) {
    WiringSpec spec(1, SubsystemShape::uniform(parties, 2));
    spec.add(w, parties == 2 ? "AB" : "ABC");
    return spec;
}

std::vector<double> check_grid() {
    return uniform_grid({0, 1}, kCheckGrid);
}

template <class F>
double grid_max(F &&f) {
    double worst = 0;
    for (double p : check_grid()) {
        worst = std::max(worst, f(p));
    }
    return worst;
}

template <class F>
double grid_min(F &&f) {
    double best = std::numeric_limits<double>::infinity();
    for (double p : check_grid()) {
        best = std::min(best, f(p));
    }
    return best;
}

std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream)};
    return std::mt19937_64(seq);
}

void validate_into(CheckList &checks, const std::string &name, std::optional<double> b, std::uint64_t seed,
                   std::optional<double> exact_min_eig = std::nullopt) {
    auto spec = witness_catalog(name, b);
    std::string label = b ? name + "(b=" + format_number(*b) + ")" : name;
    auto rep = validate_witness(spec, kValidationSamples, seed);
    if (spec.kind == WitnessKind::positive_semidefinite) {
        checks.ge("validate." + label + ".min_eigenvalue", rep.min_eigenvalue, -kSignTol, "positive semidefinite");
        return;
    }
    if (exact_min_eig) {
        checks.eq("validate." + label + ".min_eigenvalue", rep.min_eigenvalue, *exact_min_eig, kSignTol);
    } else {
        checks.lt("validate." + label + ".min_eigenvalue", rep.min_eigenvalue, -kSignTol);
    }
    checks.ge("validate." + label + ".min_product_expectation", rep.min_product_expectation, -kSignTol,
              std::to_string(kValidationSamples) + " sampled product states");
}

/// Single threshold on a 201-point sweep, or NaN when the count is not one.
double single_root(const DetectionReport &report, CheckList &checks, const std::string &id) {
    checks.eq(id + ".root_count", static_cast<double>(report.thresholds.size()), 1, 0);
    return report.thresholds.size() == 1 ? report.thresholds.front().value
                                         : std::numeric_limits<double>::quiet_NaN();
}

void run_ex1(std::uint64_t seed, CheckList &checks, Bundle &) {
    auto rho = state_family("psi_plus")(0);
    checks.eq("tr_W_psi_plus", expectation(single("W", 2), rho), 1, 1e-10);
    checks.eq("tr_V_psi_plus", expectation(single("V", 2), rho), 1, 1e-10);
    auto cross = orderings::cross_two_copy("W", "V");
    checks.eq("cross_W_V_psi_plus", expectation(cross, rho), -0.5, 1e-10, cross.describe());
    validate_into(checks, "W", std::nullopt, seed, -1.0);
    validate_into(checks, "V", std::nullopt, seed);
}

void run_ex2(std::uint64_t seed, CheckList &checks, Bundle &) {
    auto sigma = state_family("sigma")(0);
    auto sigma_re = state_family("sigma_real")(0);
    checks.eq("tr_W_sigma", expectation(single("W", 2), sigma), 0, 1e-10);
    checks.eq("tr_V_sigma", expectation(single("V", 2), sigma), 1, 1e-10);
    auto par = orderings::parallel_two_copy("W", "V");
    checks.eq("parallel_W_V_sigma", expectation(par, sigma), 0.5, 1e-10, par.describe());
    auto cross = orderings::cross_two_copy("W", "V");
    checks.eq("cross_W_V_sigma", expectation(cross, sigma), -0.5, 1e-10, cross.describe());

    // A real symmetric observable cannot tell sigma from its real part.
    auto rng = stream_rng(seed, 2);
    std::normal_distribution<double> gauss;
    double worst = 0;
    const std::size_t trials = 1000;
    for (std::size_t t = 0; t < trials; ++t) {
        ComplexMatrix m(4);
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = i; j < 4; ++j) {
                double x = gauss(rng);
                m(i, j) = x;
                m(j, i) = x;
            }
        }
        Complex a = trace_of_product(m, sigma.matrix);
        Complex b = trace_of_product(m, sigma_re.matrix);
        worst = std::max(worst, std::abs(a - b));
    }
    checks.eq("real_symmetric_blind_to_imaginary_part", worst, 0, 1e-10,
              std::to_string(trials) + " random real symmetric observables, max |difference|");
    auto ppt = ppt_check(sigma_re, std::array<std::size_t, 1>{1});
    checks.ge("real_part_ppt_min_eigenvalue", ppt.min_eigenvalue, -kPptTolerance,
              std::string("verdict ") + ppt_outcome_name(ppt.verdict));
    auto ppt_sigma = ppt_check(sigma, std::array<std::size_t, 1>{1});
    checks.info("sigma_ppt_min_eigenvalue", ppt_sigma.min_eigenvalue,
                std::string("verdict ") + ppt_outcome_name(ppt_sigma.verdict));
}

void run_ex3(std::uint64_t seed, CheckList &checks, Bundle &figures) {
    auto fam = state_family("werner_w");
    auto cyc = orderings::cyclic_three_copy("W1", "W2", "W3");
    checks.eq("cyclic_at_w0", expectation(cyc, fam(0)), -0.25, 1e-10, cyc.describe());
    checks.eq("cyclic_vs_closed_form_max_deviation",
              grid_max([&](double w) {
                  return std::abs(expectation(cyc, fam(w)) - expectation_closed_form("cyclic_werner_w", w));
              }),
              0, 1e-8, "101-point grid");
    auto report = sweep(cyc, fam);
    double root = single_root(report, checks, "cyclic");
    checks.eq("cyclic_root", root, 0.206, 1e-3);
    figures.add("werner_w_cyclic_sweep.csv", report_csv(report));
    figures.add("werner_w_cyclic_sweep.json", report_json(report));

    const std::array<const char *, 3> names{"W1", "W2", "W3"};
    double single_min = std::numeric_limits<double>::infinity();
    for (const char *n : names) {
        auto w = single(n, 2);
        single_min = std::min(single_min, grid_min([&](double p) { return expectation(w, fam(p)); }));
    }
    checks.ge("single_copy_min", single_min, -kSignTol, "W1, W2, W3 on the 101-point grid");

    double cross_min = std::numeric_limits<double>::infinity();
    double parallel_min = std::numeric_limits<double>::infinity();
    for (const char *a : names) {
        for (const char *b : names) {
            auto cross = assemble(orderings::cross_two_copy(a, b));
            auto par = assemble(orderings::parallel_two_copy(a, b));
            cross_min = std::min(cross_min, grid_min([&](double p) { return expectation_assembled(cross, 2, fam(p)); }));
            parallel_min =
                std::min(parallel_min, grid_min([&](double p) { return expectation_assembled(par, 2, fam(p)); }));
        }
    }
    checks.ge("two_copy_cross_min", cross_min, -kSignTol, "all 9 pairs A1B2|B1A2 on the 101-point grid");
    checks.info("two_copy_parallel_min", parallel_min, "all 9 pairs A1A2|B1B2 on the 101-point grid");

    auto ppt = ppt_threshold(fam, std::array<std::size_t, 1>{1});
    checks.eq("ppt_threshold", ppt.value, 2.0 / 3.0, 1e-6);
    for (const char *n : names) {
        validate_into(checks, n, std::nullopt, seed, n == std::string("W1") ? std::optional<double>(-1.0) : std::nullopt);
    }
}

void run_ex4(std::uint64_t seed, CheckList &checks, Bundle &figures) {
    auto fam = state_family("werner_a");
    auto wiring = orderings::cross_two_copy("P", "W3");
    checks.eq("cross_P_W3_vs_closed_form_max_deviation",
              grid_max([&](double a) {
                  return std::abs(expectation(wiring, fam(a)) - expectation_closed_form("cross_p_werner_a", a));
              }),
              0, 1e-8, wiring.describe());
    auto report = sweep(wiring, fam);
    checks.eq("cross_P_W3_root", single_root(report, checks, "cross_P_W3"), std::sqrt(3.0 / 5.0), 1e-6);

    for (double b : {1.0, 2.0, 10.0, 100.0}) {
        auto wb = orderings::cross_two_copy(WitnessRef("P_b", b), "W3");
        std::string id = "cross_P_b_W3(b=" + format_number(b) + ")";
        checks.eq(id + ".closed_form_max_deviation", grid_max([&](double a) {
                      return std::abs(expectation(wb, fam(a)) - expectation_closed_form("cross_pb_werner_a", a, b));
                  }),
                  0, 1e-8);
        auto rb = sweep(wb, fam);
        checks.eq(id + ".root", single_root(rb, checks, id), std::sqrt((2 * b + 1) / (6 * b - 1)), 1e-6);
    }

    auto w3 = single("W3", 2);
    checks.eq("tr_W3_werner_a_max_deviation",
              grid_max([&](double a) { return std::abs(expectation(w3, fam(a)) - (1 + a) / 2); }), 0, 1e-10,
              "against (1 + a)/2");
    auto ppt = ppt_threshold(fam, std::array<std::size_t, 1>{1});
    checks.eq("ppt_threshold", ppt.value, 1.0 / 3.0, 1e-6);

    const std::vector<double> b_grid{1, 2, 5, 10, 20, 50, 100};
    auto surface = sweep_2d([](double b) { return orderings::cross_two_copy(WitnessRef("P_b", b), "W3"); }, fam, "b",
                            b_grid);
    figures.add("werner_a_P_b_sweep.csv", report_csv(surface));
    figures.add("werner_a_P_b_sweep.json", report_json(surface));

    validate_into(checks, "P", std::nullopt, seed);
    for (double b : {1.0, 2.0, 10.0, 100.0}) {
        validate_into(checks, "P_b", b, seed);
    }
    validate_into(checks, "W3", std::nullopt, seed);
}

void run_ghz(std::uint64_t seed, CheckList &checks, Bundle &) {
    auto g = state_family("ghz")(0);
    auto w1 = orderings::tripartite_parallel("W4", "W3", "W3");
    auto w2 = orderings::tripartite_cross("W4", "W3", "W3");
    auto w3 = orderings::tripartite_parallel("W4", "W4", "W3");
    double v1 = expectation(w1, g);
    double v2 = expectation(w2, g);
    double v3 = expectation(w3, g);
    checks.lt("W4_W3_W3_parallel_detects", v1, -kSignTol, w1.describe());
    checks.lt("W4_W3_W3_cross_detects", v2, -kSignTol, w2.describe());
    checks.ge("W4_W4_W3_parallel_fails", v3, -kSignTol, w3.describe());
    checks.eq("W4_W3_W3_parallel_golden", v1, -0.5, 1e-10);
    checks.eq("W4_W3_W3_cross_golden", v2, -0.5, 1e-10);
    checks.eq("W4_W4_W3_parallel_golden", v3, 0.5, 1e-10);
    validate_into(checks, "W4", std::nullopt, seed);
}

// Tabulated closed forms for the eight product-order triples (W3 | W4)^3.
double tabulated_triple(const std::array<bool, 3> &is_w4, double c) {
    const double a = 1.0 / 3 - c / 3;
    const double b = 4.0 / 3 - c / 3;
    const double e = 1.0 / 3 - 5 * c / 24;
    const int key = (is_w4[0] ? 4 : 0) + (is_w4[1] ? 2 : 0) + (is_w4[2] ? 1 : 0);
    switch (key) {
        case 0:
            return a * b + e * (1.0 / 3 + c / 24) + 5 * c * c / 64;
        case 1:
            return a * b + c * (1.0 / 3 - 7 * c / 48) + c * c / 16;
        case 2:
            return 2 * a * b + c * e + c * c / 8;
        case 3:
            return e * b + c * (1 - c) / 2 + c * e + c * c / 4;
        case 4:
            return a * b + c / 2 * (2.0 / 3 - 7 * c / 24) + c * c / 16;
        case 5:
            return 4 * (a + 2 * e) * (a + 2 * e) + c * c / 4;
        case 6:
            return e * b + c * e + c * (1 - c) / 2 + c * c / 4;
        default:
            return c * b;
    }
}

double tabulated_cross(double c) {
    return 2 * (c / 8) * (c / 8) + 12 * (c / 8) * (8 - 5 * c) / 24 + 4 * ((1 - c) / 3) * ((1 - c) / 3);
}

void run_ex5(std::uint64_t seed, CheckList &checks, Bundle &figures) {
    auto fam = state_family("noisy_w");
    double uncrossed_min = std::numeric_limits<double>::infinity();
    for (int mask = 0; mask < 8; ++mask) {
        std::array<bool, 3> is_w4{(mask & 4) != 0, (mask & 2) != 0, (mask & 1) != 0};
        auto name = [&](int i) { return is_w4[i] ? "W4" : "W3"; };
        auto wiring = orderings::tripartite_product(name(0), name(1), name(2));
        auto op = assemble(wiring);
        std::string label = std::string(name(0)) + "_" + name(1) + "_" + name(2);
        double mn = grid_min([&](double c) { return expectation_assembled(op, 2, fam(c)); });
        uncrossed_min = std::min(uncrossed_min, mn);
        double dev = grid_max([&](double c) {
            return std::abs(expectation_assembled(op, 2, fam(c)) - tabulated_triple(is_w4, c));
        });
        if (dev <= 1e-10) {
            checks.info("uncrossed." + label + ".tabulated_max_deviation", dev, wiring.describe());
        } else {
            checks.flag("uncrossed." + label + ".tabulated_max_deviation", dev, 0.0,
                        "tabulated closed form disagrees with the dense value; the dense minimum is " +
                            format_number(mn));
        }
    }
    checks.ge("uncrossed_min", uncrossed_min, -kSignTol, "8 triples in product order on the 101-point grid");

    auto cross = orderings::tripartite_cross("W4", "W3", "W3");
    auto report = sweep(cross, fam);
    double root = single_root(report, checks, "cross");
    checks.eq("cross_root_dense", root, 0.4, 1e-6,
              "dense expectation is -(25/36)c^2 + (25/18)c - 4/9, whose root is 2/5");
    if (std::abs(root - 0.406) <= 0.002) {
        checks.info("cross_root_vs_0.406", root, "tabulated threshold confirmed");
    } else {
        checks.flag("cross_root_vs_0.406", root, 0.406,
                    "tabulated threshold 0.406 +/- 0.002 not confirmed; dense root recorded instead");
    }
    double poly_dev = grid_max([&](double c) { return std::abs(expectation(cross, fam(c)) - tabulated_cross(c)); });
    checks.flag("cross_tabulated_polynomial_max_deviation", poly_dev, 0.0,
                "tabulated cross polynomial 2(c/8)^2 + 12(c/8)(8-5c)/24 + 4((1-c)/3)^2 is positive on [0, 1] "
                "and inconsistent with the dense expectation (value at c=0: " +
                    format_number(tabulated_cross(0)) + " vs " + format_number(expectation(cross, fam(0))) + ")");
    figures.add("noisy_w_cross_sweep.csv", report_csv(report));
    figures.add("noisy_w_cross_sweep.json", report_json(report));

    auto ww1 = single("WW1", 3);
    auto rw = sweep(ww1, fam);
    checks.eq("WW1_root", single_root(rw, checks, "WW1"), 8.0 / 21.0, 1e-6);
    checks.eq("WW1_vs_closed_form_max_deviation", grid_max([&](double c) {
                  return std::abs(expectation(ww1, fam(c)) - expectation_closed_form("ww1_noisy_w", c));
              }),
              0, 1e-10, "against 7c/8 - 1/3");
    figures.add("noisy_w_WW1_sweep.csv", report_csv(rw));
    figures.add("noisy_w_WW1_sweep.json", report_json(rw));

    auto ppt = ppt_threshold(fam, std::array<std::size_t, 1>{0});
    checks.info("ppt_threshold_single_party", ppt.value);
    validate_into(checks, "W4", std::nullopt, seed);
    validate_into(checks, "WW1", std::nullopt, seed);
}

void run_concentration(std::uint64_t seed, CheckList &checks, Bundle &figures) {
    constexpr std::size_t kSamples = 100;
    std::string csv = "d,kind,index,probability,fidelity,bookkeeping_probability,consistency_delta\n";
    for (std::size_t d : {2, 3, 4}) {
        auto rng = stream_rng(seed, 100 + d);
        std::vector<ComplexMatrix> psis;
        for (std::size_t i = 0; i < kSamples; ++i) {
            psis.push_back(random_schmidt_matrix(d, rng));
        }
        for (auto kind : {MeasurementKind::m, MeasurementKind::M}) {
            double fid_dev = 0;
            double delta = 0;
            double p_min = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < psis.size(); ++i) {
                auto r = concentrate(psis[i], kind);
                auto pc = probability_consistency(psis[i], kind);
                fid_dev = std::max(fid_dev, std::abs(r.fidelity_with_target - 1));
                delta = std::max(delta, pc.delta);
                p_min = std::min(p_min, r.probability);
                csv += std::to_string(d) + "," + measurement_kind_name(kind) + "," + std::to_string(i) + "," +
                       format_number(r.probability) + "," + format_number(r.fidelity_with_target) + "," +
                       format_number(r.bookkeeping_probability) + "," + format_number(pc.delta) + "\n";
            }
            std::string id = std::string("d") + std::to_string(d) + "." + measurement_kind_name(kind);
            checks.eq(id + ".fidelity_max_deviation", fid_dev, 0, 1e-9, std::to_string(kSamples) + " random Psi");
            checks.eq(id + ".bookkeeping_max_delta", delta, 0, 1e-9);
            checks.info(id + ".min_probability", p_min);
        }
    }
    for (std::size_t d : {2, 3, 4}) {
        auto psi = scale(ComplexMatrix::identity(d), 1.0 / std::sqrt(static_cast<double>(d)));
        auto r = concentrate(psi, MeasurementKind::m);
        checks.eq("maximally_entangled_input_d" + std::to_string(d) + ".fidelity", r.fidelity_with_target, 1, 1e-9);
    }
    figures.add("concentration.csv", std::move(csv));
}

using Runner = void (*)(std::uint64_t, CheckList &, Bundle &);

struct Entry {
    const char *id;
    Runner run;
};

constexpr std::array<Entry, 7> kEntries{{{"ex1", run_ex1},
                                          {"ex2", run_ex2},
                                          {"ex3", run_ex3},
                                          {"ex4", run_ex4},
                                          {"ex5", run_ex5},
                                          {"ghz", run_ghz},
                                          {"concentration", run_concentration}}};

}  // namespace

const char *check_status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass:
            return "pass";
        case CheckStatus::fail:
            return "fail";
        case CheckStatus::flagged:
            return "flagged";
        case CheckStatus::info:
            return "info";
    }
    return "?";
}

bool Reproduction::all_pass() const {
    return failures().empty();
}

std::vector<const Check *> Reproduction::failures() const {
    std::vector<const Check *> out;
    for (const auto &c : checks) {
        if (c.status == CheckStatus::fail) {
            out.push_back(&c);
        }
    }
    return out;
}

std::vector<std::string> reproduction_ids() {
    std::vector<std::string> ids;
    for (const auto &e : kEntries) {
        ids.emplace_back(e.id);
    }
    return ids;
}

Reproduction reproduce(const std::string &id, std::uint64_t seed) {
    auto it = std::find_if(kEntries.begin(), kEntries.end(), [&](const Entry &e) { return id == e.id; });
    if (it == kEntries.end()) {
        throw Error(ErrorCode::invalid_argument, "unknown reproduction '" + id + "'");
    }
    Reproduction r;
    r.id = id;
    r.seed = seed;
    CheckList checks;
    it->run(seed, checks, r.figures);
    r.checks = checks.take();
    return r;
}

std::string reproduction_json(const Reproduction &r) {
    json checks = json::array();
    for (const auto &c : r.checks) {
        json item{{"id", c.id},
                  {"status", check_status_name(c.status)},
                  {"value", std::isfinite(c.value) ? json(round_significant(c.value)) : json(nullptr)},
                  {"relation", c.relation}};
        if (c.expected) {
            item["expected"] = round_significant(*c.expected);
        }
        if (c.relation == "eq") {
            item["tolerance"] = c.tolerance;
        }
        if (!c.note.empty()) {
            item["note"] = c.note;
        }
        checks.push_back(std::move(item));
    }
    json failures = json::array();
    for (const auto *c : r.failures()) {
        failures.push_back(c->id);
    }
    json figures = json::array();
    for (const auto &[name, text] : r.figures.files) {
        (void)text;
        figures.push_back(name);
    }
    json j{{"id", r.id},     {"seed", r.seed},         {"all_pass", r.all_pass()},
           {"checks", checks}, {"failures", failures}, {"figures", figures}};
    return j.dump(2) + "\n";
}

Bundle reproduction_bundle(const Reproduction &r) {
    Bundle b;
    b.all_pass = r.all_pass();
    b.add(r.id + "_report.json", reproduction_json(r));
    for (const auto &f : r.figures.files) {
        b.files.push_back(f);
    }
    return b;
}

}  // namespace mcwit
