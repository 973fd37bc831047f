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

#include "mcwit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "mcwit/error.hpp"

namespace mcwit {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalTolerance = 1e-12;
constexpr double kPivotThreshold = 1e-14;
constexpr double kMaxCondition = 1e12;

void check_dim(std::size_t dim) {
    if (dim == 0 || dim > kMaxDim) {
        throw Error(ErrorCode::dimension_mismatch,
                    "matrix dimension " + std::to_string(dim) + " outside [1, " + std::to_string(kMaxDim) + "]");
    }
}

void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b, const char *op) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorCode::dimension_mismatch, std::string(op) + ": " + describe_dims(a.dim(), b.dim()));
    }
}

double frobenius(const ComplexMatrix &a) {
    double s = 0;
    for (const auto &z : a.entries()) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

double off_diagonal_norm(const ComplexMatrix &a) {
    double s = 0;
    for (std::size_t i = 0; i < a.dim(); i++) {
        for (std::size_t j = 0; j < a.dim(); j++) {
            if (i != j) {
                s += std::norm(a(i, j));
            }
        }
    }
    return std::sqrt(s);
}

double one_norm(const ComplexMatrix &a) {
    double best = 0;
    for (std::size_t j = 0; j < a.dim(); j++) {
        double col = 0;
        for (std::size_t i = 0; i < a.dim(); i++) {
            col += std::abs(a(i, j));
        }
        best = std::max(best, col);
    }
    return best;
}

struct LuFactors {
    ComplexMatrix lu;
    std::vector<std::size_t> perm;
};

LuFactors lu_decompose(const ComplexMatrix &a) {
    std::size_t n = a.dim();
    LuFactors f{a, std::vector<std::size_t>(n)};
    std::iota(f.perm.begin(), f.perm.end(), 0);
    ComplexMatrix &m = f.lu;
    for (std::size_t k = 0; k < n; k++) {
        std::size_t pivot = k;
        double best = std::abs(m(k, k));
        for (std::size_t i = k + 1; i < n; i++) {
            if (std::abs(m(i, k)) > best) {
                best = std::abs(m(i, k));
                pivot = i;
            }
        }
        if (best < kPivotThreshold) {
            throw Error(ErrorCode::singular, "inverse: pivot " + std::to_string(best) + " below 1e-14 at column " +
                                                 std::to_string(k) + " (condition estimate: inf)");
        }
        if (pivot != k) {
            for (std::size_t j = 0; j < n; j++) {
                std::swap(m(k, j), m(pivot, j));
            }
            std::swap(f.perm[k], f.perm[pivot]);
        }
        for (std::size_t i = k + 1; i < n; i++) {
            Complex factor = m(i, k) / m(k, k);
            m(i, k) = factor;
            for (std::size_t j = k + 1; j < n; j++) {
                m(i, j) -= factor * m(k, j);
            }
        }
    }
    return f;
}

ComplexMatrix lu_inverse(const LuFactors &f) {
    std::size_t n = f.lu.dim();
    const ComplexMatrix &m = f.lu;
    ComplexMatrix inv(n);
    std::vector<Complex> col(n);
    for (std::size_t c = 0; c < n; c++) {
        for (std::size_t i = 0; i < n; i++) {
            col[i] = f.perm[i] == c ? 1.0 : 0.0;
        }
        for (std::size_t i = 0; i < n; i++) {
            for (std::size_t j = 0; j < i; j++) {
                col[i] -= m(i, j) * col[j];
            }
        }
        for (std::size_t ii = n; ii-- > 0;) {
            for (std::size_t j = ii + 1; j < n; j++) {
                col[ii] -= m(ii, j) * col[j];
            }
            col[ii] /= m(ii, ii);
        }
        for (std::size_t i = 0; i < n; i++) {
            inv(i, c) = col[i];
        }
    }
    return inv;
}

}  // namespace

std::string describe_dims(std::size_t a, std::size_t b) {
    return "dimension mismatch (" + std::to_string(a) + " vs " + std::to_string(b) + ")";
}

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
    check_dim(dim);
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
    check_dim(dim);
    if (entries_.size() != dim * dim) {
        throw Error(ErrorCode::dimension_mismatch, "matrix of dim " + std::to_string(dim) + " needs " +
                                                       std::to_string(dim * dim) + " entries, got " +
                                                       std::to_string(entries_.size()));
    }
    for (const auto &z : entries_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw Error(ErrorCode::invalid_argument, "matrix entry is not finite");
        }
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    std::size_t n = rows.size();
    std::vector<Complex> entries;
    entries.reserve(n * n);
    for (const auto &row : rows) {
        if (row.size() != n) {
            throw Error(ErrorCode::dimension_mismatch, "matrix literal is not square");
        }
        entries.insert(entries.end(), row.begin(), row.end());
    }
    *this = ComplexMatrix(n, std::move(entries));
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; i++) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
    ComplexMatrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); i++) {
        m(i, i) = diag[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> ket, std::span<const Complex> bra) {
    if (ket.size() != bra.size()) {
        throw Error(ErrorCode::dimension_mismatch, "outer: " + describe_dims(ket.size(), bra.size()));
    }
    ComplexMatrix m(ket.size());
    for (std::size_t i = 0; i < ket.size(); i++) {
        for (std::size_t j = 0; j < bra.size(); j++) {
            m(i, j) = ket[i] * std::conj(bra[j]);
        }
    }
    return m;
}

double ComplexMatrix::hermiticity_error() const {
    double worst = 0;
    for (std::size_t i = 0; i < dim_; i++) {
        for (std::size_t j = i; j < dim_; j++) {
            worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        }
    }
    return worst;
}

ComplexMatrix add(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "add");
    ComplexMatrix r = a;
    auto out = r.entries();
    auto in = b.entries();
    for (std::size_t i = 0; i < out.size(); i++) {
        out[i] += in[i];
    }
    return r;
}

ComplexMatrix sub(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "sub");
    ComplexMatrix r = a;
    auto out = r.entries();
    auto in = b.entries();
    for (std::size_t i = 0; i < out.size(); i++) {
        out[i] -= in[i];
    }
    return r;
}

ComplexMatrix scale(const ComplexMatrix &a, Complex factor) {
    ComplexMatrix r = a;
    for (auto &z : r.entries()) {
        z *= factor;
    }
    return r;
}

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "matmul");
    std::size_t n = a.dim();
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t k = 0; k < n; k++) {
            Complex aik = a(i, k);
            if (aik == Complex{}) {
                continue;
            }
            const Complex *brow = &b(k, 0);
            Complex *rrow = &r(i, 0);
            for (std::size_t j = 0; j < n; j++) {
                rrow[j] += aik * brow[j];
            }
        }
    }
    return r;
}

ComplexMatrix adjoint(const ComplexMatrix &a) {
    ComplexMatrix r(a.dim());
    for (std::size_t i = 0; i < a.dim(); i++) {
        for (std::size_t j = 0; j < a.dim(); j++) {
            r(j, i) = std::conj(a(i, j));
        }
    }
    return r;
}

ComplexMatrix transpose(const ComplexMatrix &a) {
    ComplexMatrix r(a.dim());
    for (std::size_t i = 0; i < a.dim(); i++) {
        for (std::size_t j = 0; j < a.dim(); j++) {
            r(j, i) = a(i, j);
        }
    }
    return r;
}

ComplexMatrix conjugate(const ComplexMatrix &a) {
    ComplexMatrix r = a;
    for (auto &z : r.entries()) {
        z = std::conj(z);
    }
    return r;
}

ComplexMatrix real_part(const ComplexMatrix &a) {
    ComplexMatrix r = a;
    for (auto &z : r.entries()) {
        z = z.real();
    }
    return r;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    std::size_t na = a.dim();
    std::size_t nb = b.dim();
    if (na * nb > kMaxDim) {
        throw Error(ErrorCode::dimension_mismatch,
                    "kron: result dimension " + std::to_string(na * nb) + " exceeds " + std::to_string(kMaxDim));
    }
    ComplexMatrix r(na * nb);
    for (std::size_t i = 0; i < na; i++) {
        for (std::size_t j = 0; j < na; j++) {
            Complex aij = a(i, j);
            if (aij == Complex{}) {
                continue;
            }
            for (std::size_t k = 0; k < nb; k++) {
                for (std::size_t l = 0; l < nb; l++) {
                    r(i * nb + k, j * nb + l) = aij * b(k, l);
                }
            }
        }
    }
    return r;
}

ComplexMatrix kron(std::initializer_list<ComplexMatrix> factors) {
    if (factors.size() == 0) {
        throw Error(ErrorCode::invalid_argument, "kron: no factors");
    }
    auto it = factors.begin();
    ComplexMatrix r = *it;
    for (++it; it != factors.end(); ++it) {
        r = kron(r, *it);
    }
    return r;
}

Complex trace(const ComplexMatrix &a) {
    Complex s = 0;
    for (std::size_t i = 0; i < a.dim(); i++) {
        s += a(i, i);
    }
    return s;
}

Complex trace_of_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "trace_of_product");
    Complex s = 0;
    for (std::size_t i = 0; i < a.dim(); i++) {
        for (std::size_t j = 0; j < a.dim(); j++) {
            s += a(i, j) * b(j, i);
        }
    }
    return s;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "max_abs_diff");
    double worst = 0;
    auto x = a.entries();
    auto y = b.entries();
    for (std::size_t i = 0; i < x.size(); i++) {
        worst = std::max(worst, std::abs(x[i] - y[i]));
    }
    return worst;
}

std::vector<Complex> apply(const ComplexMatrix &a, std::span<const Complex> v) {
    if (v.size() != a.dim()) {
        throw Error(ErrorCode::dimension_mismatch, "apply: " + describe_dims(a.dim(), v.size()));
    }
    std::vector<Complex> out(a.dim());
    for (std::size_t i = 0; i < a.dim(); i++) {
        Complex s = 0;
        for (std::size_t j = 0; j < a.dim(); j++) {
            s += a(i, j) * v[j];
        }
        out[i] = s;
    }
    return out;
}

Complex inner(std::span<const Complex> bra, std::span<const Complex> ket) {
    if (bra.size() != ket.size()) {
        throw Error(ErrorCode::dimension_mismatch, "inner: " + describe_dims(bra.size(), ket.size()));
    }
    Complex s = 0;
    for (std::size_t i = 0; i < bra.size(); i++) {
        s += std::conj(bra[i]) * ket[i];
    }
    return s;
}

double norm(std::span<const Complex> v) {
    return std::sqrt(inner(v, v).real());
}

EigenDecomposition hermitian_eig(const ComplexMatrix &input) {
    double herm = input.hermiticity_error();
    if (herm > kHermitianTolerance) {
        throw Error(ErrorCode::not_hermitian,
                    "hermitian_eig: input is not Hermitian (max |A - A^dagger| = " + std::to_string(herm) + ")");
    }
    std::size_t n = input.dim();
    ComplexMatrix a = input;
    ComplexMatrix v = ComplexMatrix::identity(n);
    double tol = kOffDiagonalTolerance * std::max(1.0, frobenius(input));

    int sweep = 0;
    double off = off_diagonal_norm(a);
    while (off > tol) {
        if (sweep == kMaxSweeps) {
            throw Error(ErrorCode::no_convergence, "hermitian_eig: no convergence after " +
                                                       std::to_string(kMaxSweeps) +
                                                       " sweeps, off-diagonal residual " + std::to_string(off));
        }
        sweep++;
        for (std::size_t p = 0; p + 1 < n; p++) {
            for (std::size_t q = p + 1; q < n; q++) {
                Complex b = a(p, q);
                double mag = std::abs(b);
                if (mag < std::numeric_limits<double>::min()) {
                    continue;
                }
                // G = diag(1, conj(phase)) * [[c, s], [-s, c]] makes the 2x2 block real and then diagonal.
                Complex phase = b / mag;
                double theta = 0.5 * std::atan2(2 * mag, a(q, q).real() - a(p, p).real());
                double c = std::cos(theta);
                double s = std::sin(theta);
                Complex g00 = c;
                Complex g01 = s;
                Complex g10 = -s * std::conj(phase);
                Complex g11 = c * std::conj(phase);
                for (std::size_t k = 0; k < n; k++) {
                    Complex akp = a(k, p);
                    Complex akq = a(k, q);
                    a(k, p) = akp * g00 + akq * g10;
                    a(k, q) = akp * g01 + akq * g11;
                }
                for (std::size_t k = 0; k < n; k++) {
                    Complex apk = a(p, k);
                    Complex aqk = a(q, k);
                    a(p, k) = std::conj(g00) * apk + std::conj(g10) * aqk;
                    a(q, k) = std::conj(g01) * apk + std::conj(g11) * aqk;
                }
                a(p, q) = 0;
                a(q, p) = 0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                for (std::size_t k = 0; k < n; k++) {
                    Complex vkp = v(k, p);
                    Complex vkq = v(k, q);
                    v(k, p) = vkp * g00 + vkq * g10;
                    v(k, q) = vkp * g01 + vkq * g11;
                }
            }
        }
        off = off_diagonal_norm(a);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });
    EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n), sweep};
    for (std::size_t k = 0; k < n; k++) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; i++) {
            out.vectors(i, k) = v(i, order[k]);
        }
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &a) {
    return hermitian_eig(a).values;
}

double min_eigenvalue(const ComplexMatrix &a) {
    return hermitian_eig(a).values.front();
}

ComplexMatrix inverse(const ComplexMatrix &a) {
    ComplexMatrix inv = lu_inverse(lu_decompose(a));
    double cond = one_norm(a) * one_norm(inv);
    if (!(cond <= kMaxCondition)) {
        throw Error(ErrorCode::singular, "inverse: matrix is ill-conditioned (condition estimate " +
                                             std::to_string(cond) + " > 1e12)");
    }
    return inv;
}

double condition_estimate(const ComplexMatrix &a) {
    try {
        return one_norm(a) * one_norm(lu_inverse(lu_decompose(a)));
    } catch (const Error &) {
        return std::numeric_limits<double>::infinity();
    }
}

ComplexMatrix pauli_x() {
    return {{0, 1}, {1, 0}};
}

ComplexMatrix pauli_y() {
    return {{0, Complex(0, -1)}, {Complex(0, 1), 0}};
}

ComplexMatrix pauli_z() {
    return {{1, 0}, {0, -1}};
}

}  // namespace mcwit
