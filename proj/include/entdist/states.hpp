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

#include <array>
#include <optional>

#include "entdist/qmat.hpp"

namespace entdist {

/// Point (r_x, r_y, r_z) parametrizing the Bell-diagonal state
/// rho = (1/4)(I + r_x X(x)X + r_y Y(x)Y + r_z Z(x)Z). Any triple is
/// representable; physicality is a separate predicate (see geometry).
struct StandardState {
    double rx = 0.0;
    double ry = 0.0;
    double rz = 0.0;
};

/// Real coefficient array r[mu][nu] of rho = (1/4) sum r_{mu nu}
/// sigma_mu (x) sigma_nu, index 0 being the identity component. A unit-trace
/// state has r[0][0] = 1.
struct PauliTensor {
    std::array<std::array<double, 4>, 4> r{};
};

/// 4x4 state matrix in the computational product basis |00>,|01>,|10>,|11>.
/// Construction checks Hermiticity (1e-10) and unit trace (1e-12) but not
/// positivity, so non-physical exploration points are representable.
class DensityMatrix {
  public:
    explicit DensityMatrix(ComplexMatrix m);

    const ComplexMatrix &matrix() const { return m_; }

  private:
    ComplexMatrix m_;
};

/// Invertible local operation pair (a, b); the filter acts as
/// rho -> (a (x) b) rho (a (x) b)^dagger, renormalized.
class LocalFilter {
  public:
    LocalFilter(ComplexMatrix a, ComplexMatrix b);

    const ComplexMatrix &a() const { return a_; }
    const ComplexMatrix &b() const { return b_; }

  private:
    ComplexMatrix a_;
    ComplexMatrix b_;
};

/// sigma_0 = I, sigma_1 = X, sigma_2 = Y, sigma_3 = Z.
const ComplexMatrix &pauli(std::size_t mu);

DensityMatrix from_pauli(const PauliTensor &t);

/// r_{mu nu} = Tr[d sigma_mu (x) sigma_nu]; imaginary parts beyond 1e-10
/// mean the input was not Hermitian and are rejected.
PauliTensor to_pauli(const DensityMatrix &d);

DensityMatrix from_standard(const StandardState &s);

/// Closed-form spectrum of from_standard(s):
///   ((1 + rx - ry + rz)/4, (1 - rx + ry + rz)/4,
///    (1 + rx + ry - rz)/4, (1 - rx - ry - rz)/4).
std::array<double, 4> standard_eigenvalues(const StandardState &s);

/// Closed-form spectrum of the partial transpose of from_standard(s):
///   ((1 + rx + ry + rz)/4, (1 - rx - ry + rz)/4,
///    (1 + rx - ry - rz)/4, (1 - rx + ry - rz)/4).
std::array<double, 4> pt_eigenvalues(const StandardState &s);

/// Transpose on the second qubit: ((i,j),(k,l)) -> ((i,l),(k,j)). An exact
/// involution; Hermiticity and trace are preserved entry-for-entry. On
/// standard-form states this maps (rx, ry, rz) -> (rx, -ry, rz).
ComplexMatrix partial_transpose(const ComplexMatrix &m);
ComplexMatrix partial_transpose(const DensityMatrix &d);

/// rho' = (a (x) b) rho (a (x) b)^dagger / trace. Throws if the
/// normalization trace vanishes (filter annihilates the state).
DensityMatrix apply_filter(const DensityMatrix &d, const LocalFilter &f);

/// Standard-form test: every Pauli coefficient outside the diagonal
/// (r_11, r_22, r_33) must be within tol of zero. Returns the extracted
/// triple on success.
std::optional<StandardState> is_standard_form(const DensityMatrix &d, double tol);

} // namespace entdist
