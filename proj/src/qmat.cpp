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

#include "entdist/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace entdist {

namespace {

constexpr double kHermitianTol = 1e-10;
constexpr double kPsdFloor = -1e-10;
constexpr int kMaxSweeps = 100;

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b, const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument(std::string(op) + ": shape mismatch");
    }
}

double offdiag_norm(const ComplexMatrix &m) {
    double sum = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (i != j) sum += std::norm(m(i, j));
        }
    }
    return std::sqrt(sum);
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0, 0.0)) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("ComplexMatrix: zero dimension");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    if (rows_ == 0) throw std::invalid_argument("ComplexMatrix: empty initializer");
    cols_ = rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("ComplexMatrix: ragged initializer");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix out = *this;
    for (auto &z : out.data_) z = std::conj(z);
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const { return conjugate().transpose(); }

Complex ComplexMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace: matrix not square");
    Complex t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (const auto &z : data_) sum += std::norm(z);
    return std::sqrt(sum);
}

double ComplexMatrix::hermiticity_defect() const {
    if (rows_ != cols_) throw std::invalid_argument("hermiticity_defect: matrix not square");
    double worst = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return worst;
}

bool ComplexMatrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](const Complex &z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &rhs) {
    require_same_shape(*this, rhs, "operator+");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &rhs) {
    require_same_shape(*this, rhs, "operator-");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    for (auto &z : data_) z *= scale;
    return *this;
}

bool operator==(const ComplexMatrix &a, const ComplexMatrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix &rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix &rhs) { return lhs -= rhs; }

ComplexMatrix operator*(const ComplexMatrix &lhs, const ComplexMatrix &rhs) {
    if (lhs.cols() != rhs.rows()) throw std::invalid_argument("operator*: shape mismatch");
    ComplexMatrix out(lhs.rows(), rhs.cols());
    for (std::size_t i = 0; i < lhs.rows(); ++i) {
        for (std::size_t k = 0; k < lhs.cols(); ++k) {
            const Complex a = lhs(i, k);
            if (a == Complex(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
        }
    }
    return out;
}

ComplexMatrix operator*(Complex scale, ComplexMatrix m) { return m *= scale; }
ComplexMatrix operator*(ComplexMatrix m, Complex scale) { return m *= scale; }
ComplexMatrix operator/(ComplexMatrix m, Complex scale) { return m *= Complex(1.0, 0.0) / scale; }

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "max_abs_diff");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    return worst;
}

Complex det2(const ComplexMatrix &m) {
    if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument("det2: matrix not 2x2");
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != 2 || a.cols() != 2 || b.rows() != 2 || b.cols() != 2) {
        throw std::invalid_argument("kron: both factors must be 2x2");
    }
    ComplexMatrix out(4, 4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l)
                    out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return out;
}

HermitianEig hermitian_eig(const ComplexMatrix &m, double tol) {
    if (m.rows() != m.cols()) throw std::invalid_argument("hermitian_eig: matrix not square");
    if (!(tol > 0.0)) throw std::invalid_argument("hermitian_eig: tol must be positive");
    if (!m.all_finite()) throw std::invalid_argument("hermitian_eig: non-finite entry");
    if (m.hermiticity_defect() > kHermitianTol) {
        throw std::invalid_argument("hermitian_eig: input is not Hermitian");
    }

    const std::size_t n = m.rows();
    ComplexMatrix a = m;
    // Symmetrize so round-off in the caller cannot bias the iteration.
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = Complex(a(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    int sweep = 0;
    while (offdiag_norm(a) >= tol) {
        if (++sweep > kMaxSweeps) {
            throw std::runtime_error("hermitian_eig: Jacobi iteration did not converge");
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double r = std::abs(apq);
                if (r == 0.0) continue;

                // Phase the pivot real, then apply the classic symmetric
                // Jacobi rotation: the combined unitary mixes rows/cols p,q.
                const Complex phase = apq / r;
                const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
                const double t =
                    (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                const Complex upp = phase * c;
                const Complex upq = phase * s;
                const Complex uqp = -s;
                const Complex uqq = c;

                // Rows: a <- U^dagger a.
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(p, k);
                    const Complex akq = a(q, k);
                    a(p, k) = std::conj(upp) * akp + std::conj(uqp) * akq;
                    a(q, k) = std::conj(upq) * akp + std::conj(uqq) * akq;
                }
                // Columns: a <- a U, and accumulate eigenvectors.
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = akp * upp + akq * uqp;
                    a(k, q) = akp * upq + akq * uqq;

                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = vkp * upp + vkq * uqp;
                    v(k, q) = vkp * upq + vkq * uqq;
                }
                // The pivot is annihilated by construction; pin it to zero
                // and keep the diagonal exactly real.
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = Complex(a(p, p).real(), 0.0);
                a(q, q) = Complex(a(q, q).real(), 0.0);
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&a](std::size_t i, std::size_t j) {
        return a(i, i).real() > a(j, j).real();
    });

    HermitianEig out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
    }
    return out;
}

HermitianEig hermitian_eig(const ComplexMatrix &m) {
    return hermitian_eig(m, 1e-14 * std::max(1.0, m.frobenius_norm()));
}

ComplexMatrix psd_sqrt(const ComplexMatrix &m) {
    HermitianEig eig = hermitian_eig(m);
    const std::size_t n = m.rows();
    for (double &lambda : eig.eigenvalues) {
        if (lambda < kPsdFloor) {
            throw std::domain_error("psd_sqrt: matrix has a negative eigenvalue");
        }
        lambda = std::max(lambda, 0.0);
    }

    const ComplexMatrix &v = eig.eigenvectors;
    ComplexMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double root = std::sqrt(eig.eigenvalues[k]);
        if (root == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                out(i, j) += root * v(i, k) * std::conj(v(j, k));
    }
    // Exact Hermitian symmetry for downstream consumers.
    for (std::size_t i = 0; i < n; ++i) {
        out(i, i) = Complex(out(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex avg = 0.5 * (out(i, j) + std::conj(out(j, i)));
            out(i, j) = avg;
            out(j, i) = std::conj(avg);
        }
    }
    return out;
}

} // namespace entdist
