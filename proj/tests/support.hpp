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

// Test-side constructions of the catalog states and witnesses, built from
// explicit kets and Pauli matrices with the oracle helpers, plus conversions
// to and from library types.

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "mcwit/linalg.hpp"
#include "mcwit/multipartite.hpp"
#include "oracles.hpp"

namespace ref {

using oracle::C;
using oracle::Mat;

inline mcwit::ComplexMatrix to_lib(const Mat &m) {
    return mcwit::ComplexMatrix(m.n, m.a);
}

inline Mat to_oracle(const mcwit::ComplexMatrix &m) {
    Mat out(m.dim());
    for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] = m.entries()[i];
    return out;
}

inline double diff(const Mat &x, const mcwit::ComplexMatrix &y) {
    return oracle::max_diff(x, std::vector<C>(y.entries().begin(), y.entries().end()));
}

inline Mat from_rows(std::size_t n, std::initializer_list<C> entries) {
    Mat out(n);
    std::size_t k = 0;
    for (C z : entries) out.a[k++] = z;
    return out;
}

inline Mat eye(std::size_t n) {
    Mat out(n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
    return out;
}

inline Mat X() {
    return from_rows(2, {0, 1, 1, 0});
}
inline Mat Y() {
    return from_rows(2, {0, C(0, -1), C(0, 1), 0});
}
inline Mat Z() {
    return from_rows(2, {1, 0, 0, -1});
}

inline Mat lin(std::initializer_list<std::pair<C, Mat>> terms) {
    Mat out(terms.begin()->second.n);
    for (const auto &[c, m] : terms)
        for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] += c * m.a[i];
    return out;
}

inline Mat ket_projector(const std::vector<C> &v) {
    Mat out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out(i, j) = v[i] * std::conj(v[j]);
    return out;
}

inline const double s2 = 1 / std::sqrt(2.0);

// |00>+|11>, |00>-|11>, |01>+|10> (normalized).
inline std::vector<C> psi_plus() {
    return {s2, 0, 0, s2};
}
inline std::vector<C> psi_minus() {
    return {s2, 0, 0, -s2};
}
inline std::vector<C> phi_plus() {
    return {0, s2, s2, 0};
}
inline std::vector<C> w3() {
    double k = 1 / std::sqrt(3.0);
    return {0, k, k, 0, k, 0, 0, 0};
}
inline std::vector<C> ghz3() {
    return {s2, 0, 0, 0, 0, 0, 0, s2};
}

inline Mat scaled(const Mat &m, C f) {
    Mat out = m;
    for (auto &z : out.a) z *= f;
    return out;
}

inline Mat pt2(const Mat &m) {
    return oracle::partial_transpose(m, {2, 2}, {1});
}

inline Mat witness(const std::string &name, double b = 1) {
    Mat I = eye(4);
    if (name == "W") return lin({{1, I}, {-1, oracle::kron(X(), X())}, {1, oracle::kron(Z(), Z())}});
    if (name == "V") return scaled(pt2(ket_projector(phi_plus())), 2);
    if (name == "W1") return lin({{1, I}, {1, oracle::kron(X(), X())}, {-1, oracle::kron(Y(), Y())}});
    if (name == "W2") return scaled(pt2(ket_projector(psi_minus())), 2);
    if (name == "W3") return scaled(pt2(ket_projector(psi_plus())), 2);
    if (name == "W4") return lin({{1, I}, {-1, oracle::kron(Z(), Z())}, {-1, oracle::kron(X(), X())}});
    if (name == "WW1") return lin({{2.0 / 3.0, eye(8)}, {-1, ket_projector(w3())}});
    if (name == "P") return from_rows(4, {1, 0, 0, -1, 0, 2, -2, 0, 0, -2, 2, 0, -1, 0, 0, 1});
    if (name == "P_b")
        return scaled(from_rows(4, {1, 0, 0, -1, 0, 2 * b, -2 * b, 0, 0, -2 * b, 2 * b, 0, -1, 0, 0, 1}),
                      1.0 / (4 * b));
    throw std::runtime_error("no reference witness " + name);
}

inline Mat mix(const std::vector<C> &pure, double weight) {
    Mat p = ket_projector(pure);
    Mat out(p.n);
    for (std::size_t i = 0; i < p.n; ++i)
        for (std::size_t j = 0; j < p.n; ++j)
            out(i, j) = weight * p(i, j) + (i == j ? (1 - weight) / static_cast<double>(p.n) : 0.0);
    return out;
}

inline Mat werner_w(double w) {
    return mix(psi_plus(), 1 - w);
}
inline Mat werner_a(double a) {
    return mix(psi_minus(), a);
}
inline Mat noisy_w(double c) {
    return mix(w3(), 1 - c);
}
inline Mat sigma() {
    return scaled(from_rows(4, {0, 0, 0, 0, 0, 1, C(0, 1), 0, 0, C(0, -1), 1, 0, 0, 0, 0, 0}), 0.5);
}

inline Mat power(const Mat &rho, std::size_t k) {
    Mat out = rho;
    for (std::size_t i = 1; i < k; ++i) out = oracle::kron(out, rho);
    return out;
}

// Re Tr(W rho^{x k}) with W placed factor by factor.
inline double expectation(const std::vector<oracle::Factor> &factors, const oracle::Dims &full, const Mat &rho,
                          std::size_t copies) {
    Mat w = oracle::place(factors, full);
    Mat r = power(rho, copies);
    C s = 0;
    for (std::size_t i = 0; i < w.n; ++i)
        for (std::size_t j = 0; j < w.n; ++j) s += w(i, j) * r(j, i);
    return s.real();
}

// Bisection on a continuous function with a sign change on [lo, hi].
template <class F>
double bisect(F &&f, double lo, double hi) {
    double flo = f(lo);
    for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Gauss-Jordan inverse with partial pivoting.
inline Mat inverse(Mat a) {
    std::size_t n = a.n;
    Mat inv = eye(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(a(r, c)) > std::abs(a(p, c))) p = r;
        for (std::size_t k = 0; k < n; ++k) {
            std::swap(a(c, k), a(p, k));
            std::swap(inv(c, k), inv(p, k));
        }
        C piv = a(c, c);
        for (std::size_t k = 0; k < n; ++k) {
            a(c, k) /= piv;
            inv(c, k) /= piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c) continue;
            C f = a(r, c);
            for (std::size_t k = 0; k < n; ++k) {
                a(r, k) -= f * a(c, k);
                inv(r, k) -= f * inv(c, k);
            }
        }
    }
    return inv;
}

}  // namespace ref
