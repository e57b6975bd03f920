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

#include "entdist/states.hpp"

#include <cmath>
#include <stdexcept>

namespace entdist {

namespace {

constexpr double kHermitianTol = 1e-10;
constexpr double kTraceTol = 1e-12;
constexpr double kUnitTensorTol = 1e-12;
constexpr double kImagTol = 1e-10;
constexpr double kDetFloor = 1e-12;
constexpr double kAnnihilationFloor = 1e-12;

} // namespace

const ComplexMatrix &pauli(std::size_t mu) {
    static const std::array<ComplexMatrix, 4> sigma = {
        ComplexMatrix{{1.0, 0.0}, {0.0, 1.0}},
        ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}},
        ComplexMatrix{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}},
        ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}},
    };
    if (mu >= sigma.size()) throw std::invalid_argument("pauli: index out of range");
    return sigma[mu];
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
    if (m_.rows() != 4 || m_.cols() != 4) {
        throw std::invalid_argument("DensityMatrix: matrix must be 4x4");
    }
    if (!m_.all_finite()) throw std::invalid_argument("DensityMatrix: non-finite entry");
    if (m_.hermiticity_defect() > kHermitianTol) {
        throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
    }
    const Complex tr = m_.trace();
    if (std::abs(tr - Complex(1.0, 0.0)) > kTraceTol) {
        throw std::invalid_argument("DensityMatrix: trace is not 1");
    }
}

LocalFilter::LocalFilter(ComplexMatrix a, ComplexMatrix b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.rows() != 2 || a_.cols() != 2 || b_.rows() != 2 || b_.cols() != 2) {
        throw std::invalid_argument("LocalFilter: factors must be 2x2");
    }
    if (std::abs(det2(a_)) <= kDetFloor || std::abs(det2(b_)) <= kDetFloor) {
        throw std::invalid_argument("LocalFilter: factor is singular");
    }
}

DensityMatrix from_pauli(const PauliTensor &t) {
    if (std::abs(t.r[0][0] - 1.0) > kUnitTensorTol) {
        throw std::invalid_argument("from_pauli: identity coefficient r00 must be 1");
    }
    ComplexMatrix m(4, 4);
    for (std::size_t mu = 0; mu < 4; ++mu) {
        for (std::size_t nu = 0; nu < 4; ++nu) {
            const double coeff = t.r[mu][nu];
            if (coeff == 0.0) continue;
            m += Complex(0.25 * coeff, 0.0) * kron(pauli(mu), pauli(nu));
        }
    }
    return DensityMatrix(m);
}

PauliTensor to_pauli(const DensityMatrix &d) {
    PauliTensor t;
    for (std::size_t mu = 0; mu < 4; ++mu) {
        for (std::size_t nu = 0; nu < 4; ++nu) {
            const Complex value = (d.matrix() * kron(pauli(mu), pauli(nu))).trace();
            if (std::abs(value.imag()) > kImagTol) {
                throw std::invalid_argument("to_pauli: coefficient has an imaginary part");
            }
            t.r[mu][nu] = value.real();
        }
    }
    return t;
}

DensityMatrix from_standard(const StandardState &s) {
    // rho = (1/4)(I + rx XX + ry YY + rz ZZ) written out entrywise.
    ComplexMatrix m(4, 4);
    const double d_outer = 0.25 * (1.0 + s.rz);
    const double d_inner = 0.25 * (1.0 - s.rz);
    const double x_minus_y = 0.25 * (s.rx - s.ry);
    const double x_plus_y = 0.25 * (s.rx + s.ry);
    m(0, 0) = d_outer;
    m(3, 3) = d_outer;
    m(1, 1) = d_inner;
    m(2, 2) = d_inner;
    m(0, 3) = x_minus_y;
    m(3, 0) = x_minus_y;
    m(1, 2) = x_plus_y;
    m(2, 1) = x_plus_y;
    return DensityMatrix(m);
}

std::array<double, 4> standard_eigenvalues(const StandardState &s) {
    return {
        0.25 * (1.0 + s.rx - s.ry + s.rz),
        0.25 * (1.0 - s.rx + s.ry + s.rz),
        0.25 * (1.0 + s.rx + s.ry - s.rz),
        0.25 * (1.0 - s.rx - s.ry - s.rz),
    };
}

std::array<double, 4> pt_eigenvalues(const StandardState &s) {
    return {
        0.25 * (1.0 + s.rx + s.ry + s.rz),
        0.25 * (1.0 - s.rx - s.ry + s.rz),
        0.25 * (1.0 + s.rx - s.ry - s.rz),
        0.25 * (1.0 - s.rx + s.ry - s.rz),
    };
}

ComplexMatrix partial_transpose(const ComplexMatrix &m) {
    if (m.rows() != 4 || m.cols() != 4) {
        throw std::invalid_argument("partial_transpose: matrix must be 4x4");
    }
    ComplexMatrix out(4, 4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l)
                    out(2 * i + j, 2 * k + l) = m(2 * i + l, 2 * k + j);
    return out;
}

ComplexMatrix partial_transpose(const DensityMatrix &d) { return partial_transpose(d.matrix()); }

DensityMatrix apply_filter(const DensityMatrix &d, const LocalFilter &f) {
    const ComplexMatrix k = kron(f.a(), f.b());
    ComplexMatrix filtered = k * d.matrix() * k.adjoint();
    const double norm = filtered.trace().real();
    if (norm <= kAnnihilationFloor) {
        throw std::domain_error("apply_filter: filter annihilates the state");
    }
    filtered *= Complex(1.0 / norm, 0.0);
    // Symmetrize: the two triple products round differently above/below the
    // diagonal.
    for (std::size_t i = 0; i < 4; ++i) {
        filtered(i, i) = Complex(filtered(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < 4; ++j) {
            const Complex avg = 0.5 * (filtered(i, j) + std::conj(filtered(j, i)));
            filtered(i, j) = avg;
            filtered(j, i) = std::conj(avg);
        }
    }
    return DensityMatrix(filtered);
}

std::optional<StandardState> is_standard_form(const DensityMatrix &d, double tol) {
    const PauliTensor t = to_pauli(d);
    for (std::size_t mu = 0; mu < 4; ++mu) {
        for (std::size_t nu = 0; nu < 4; ++nu) {
            if (mu == nu) continue;
            if (std::abs(t.r[mu][nu]) > tol) return std::nullopt;
        }
    }
    return StandardState{t.r[1][1], t.r[2][2], t.r[3][3]};
}

} // namespace entdist
