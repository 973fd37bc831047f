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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace mcwit {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxDim = 256;
inline constexpr double kHermitianTolerance = 1e-10;

/// Dense square complex matrix, row-major.
///
/// Dimension is capped at kMaxDim and every entry must be finite. All
/// arithmetic below returns fresh values; nothing mutates its inputs.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim);
    ComplexMatrix(std::size_t dim, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const Complex> diag);
    static ComplexMatrix outer(std::span<const Complex> ket, std::span<const Complex> bra);

    std::size_t dim() const noexcept {
        return dim_;
    }
    Complex &operator()(std::size_t row, std::size_t col) {
        return entries_[row * dim_ + col];
    }
    const Complex &operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }
    std::span<const Complex> entries() const noexcept {
        return entries_;
    }
    std::span<Complex> entries() noexcept {
        return entries_;
    }

    /// max_ij |M_ij - conj(M_ji)|.
    double hermiticity_error() const;
    bool is_hermitian(double tol = kHermitianTolerance) const {
        return hermiticity_error() <= tol;
    }

    bool operator==(const ComplexMatrix &other) const = default;

   private:
    std::size_t dim_ = 0;
    std::vector<Complex> entries_;
};

ComplexMatrix add(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix sub(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix scale(const ComplexMatrix &a, Complex factor);
ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b);

ComplexMatrix adjoint(const ComplexMatrix &a);
ComplexMatrix transpose(const ComplexMatrix &a);
ComplexMatrix conjugate(const ComplexMatrix &a);
/// Entrywise real part, returned as a complex matrix.
ComplexMatrix real_part(const ComplexMatrix &a);

/// Entry (i*dimB + k, j*dimB + l) of the result is A(i,j) * B(k,l).
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix kron(std::initializer_list<ComplexMatrix> factors);

Complex trace(const ComplexMatrix &a);
/// Tr(A B) without forming the product.
Complex trace_of_product(const ComplexMatrix &a, const ComplexMatrix &b);

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// Matrix-vector product.
std::vector<Complex> apply(const ComplexMatrix &a, std::span<const Complex> v);
Complex inner(std::span<const Complex> bra, std::span<const Complex> ket);
double norm(std::span<const Complex> v);

inline ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b) {
    return add(a, b);
}
inline ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b) {
    return sub(a, b);
}
inline ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    return matmul(a, b);
}
inline ComplexMatrix operator*(Complex factor, const ComplexMatrix &a) {
    return scale(a, factor);
}

struct EigenDecomposition {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // column k pairs with values[k]
    int sweeps = 0;
};

/// Cyclic Jacobi on a Hermitian matrix.
///
/// Rejects inputs whose hermiticity error exceeds kHermitianTolerance instead
/// of symmetrizing them. Throws no_convergence after 100 sweeps.
EigenDecomposition hermitian_eig(const ComplexMatrix &a);
std::vector<double> hermitian_eigenvalues(const ComplexMatrix &a);
double min_eigenvalue(const ComplexMatrix &a);

/// LU with partial pivoting. Throws singular when a pivot falls below 1e-14 or
/// the 1-norm condition estimate exceeds 1e12.
ComplexMatrix inverse(const ComplexMatrix &a);
double condition_estimate(const ComplexMatrix &a);

// Pauli matrices.
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

std::string describe_dims(std::size_t a, std::size_t b);

}  // namespace mcwit
