// Copyright 2026 The entdist authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
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
#include <vector>

namespace entdist {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. The library only ever builds 2x2 and 4x4
/// instances (single-qubit operators and two-qubit states).
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    ComplexMatrix adjoint() const;

    Complex trace() const;
    double frobenius_norm() const;
    /// Largest entry magnitude of (m - m^dagger); 0 for exactly Hermitian input.
    double hermiticity_defect() const;
    bool all_finite() const;

    ComplexMatrix &operator+=(const ComplexMatrix &rhs);
    ComplexMatrix &operator-=(const ComplexMatrix &rhs);
    ComplexMatrix &operator*=(Complex scale);

    friend bool operator==(const ComplexMatrix &a, const ComplexMatrix &b);

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix &rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix &rhs);
ComplexMatrix operator*(const ComplexMatrix &lhs, const ComplexMatrix &rhs);
ComplexMatrix operator*(Complex scale, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex scale);
ComplexMatrix operator/(ComplexMatrix m, Complex scale);

/// Largest entry magnitude of (a - b). Both shapes must match.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// Determinant of a 2x2 matrix.
Complex det2(const ComplexMatrix &m);

/// Kronecker product of two 2x2 matrices; block (i,j) of the result is
/// a(i,j) * b.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Full eigendecomposition of a Hermitian matrix. Eigenvalues are sorted
/// descending (stable under ties); column k of `eigenvectors` is the unit
/// eigenvector paired with `eigenvalues[k]`.
struct HermitianEig {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

/// Cyclic Jacobi eigensolver for complex Hermitian matrices.
///
/// Sweeps over all off-diagonal pivots, annihilating each with a phased
/// Givens rotation, until the off-diagonal Frobenius norm drops below `tol`
/// (hard cap 100 sweeps, after which a convergence error is thrown).
/// The input must be Hermitian: entries of m - m^dagger may not exceed 1e-10.
HermitianEig hermitian_eig(const ComplexMatrix &m, double tol);

/// hermitian_eig with a scale-aware default tolerance, 1e-14 * max(1, |m|_F).
HermitianEig hermitian_eig(const ComplexMatrix &m);

/// Hermitian PSD square root via eigendecomposition. Eigenvalues in
/// [-1e-10, 0] are treated as round-off zeros; anything below -1e-10 is a
/// genuine negativity and is rejected.
ComplexMatrix psd_sqrt(const ComplexMatrix &m);

} // namespace entdist
