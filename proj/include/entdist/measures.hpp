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

#include "entdist/geometry.hpp"
#include "entdist/states.hpp"

namespace entdist {

/// All measures for one state. Fields are absent when the point is not a
/// physical state. Values below 1e-12 are reported as exact zeros so that
/// round-off never produces spurious entanglement.
struct MeasureReport {
    Classification classification;
    std::optional<double> concurrence;
    std::optional<double> negativity;
    std::optional<double> euclidean_distance;
    std::optional<double> hs_distance;
};

/// Closed-form concurrence max(0, 2 rho_max - 1) from the standard-form
/// spectrum. Equals (v.r - 1)/2 in the corner at vertex v.
double concurrence_standard(const StandardState &s);

/// Wootters concurrence of an arbitrary two-qubit state,
/// max(0, 2 max_i sqrt(R_i) - sum_i sqrt(R_i)), where the R_i are the
/// eigenvalues of rho (YY) rho* (YY) obtained from the Hermitian conjugation
/// sqrt(rho) rho~ sqrt(rho).
double concurrence_general(const DensityMatrix &d);

/// The four sqrt(R_i) values used by concurrence_general, descending. For
/// standard-form states this multiset coincides with the state spectrum.
std::array<double, 4> concurrence_root_spectrum(const DensityMatrix &d);

/// Closed-form negativity 2 max(0, -min_i rho_i^PT).
double negativity_standard(const StandardState &s);

/// Negativity via explicit partial transposition and the eigensolver.
double negativity_general(const DensityMatrix &d);

/// Hilbert-Schmidt (Frobenius) distance to the separable set for
/// standard-form states: half the Euclidean distance, since the Pauli basis
/// is orthogonal and |rho(r) - rho(w)|_2 = |r - w|/2.
double hs_distance_standard(const StandardState &s);

/// Aggregate standard-path report; non-physical points get a classification
/// and absent measures.
MeasureReport measure(const StandardState &s);

/// Determinant transformation law for local filters. `predicted` is
/// C(rho) |det a||det b| / Tr[(a^dagger a (x) b^dagger b) rho]; `actual`
/// reruns the general concurrence on the filtered state. Values above 1 are
/// reported unclipped and flagged.
struct FilterLawResult {
    double input_concurrence = 0.0;
    double predicted = 0.0;
    double actual = 0.0;
    bool predicted_exceeds_one = false;
};

FilterLawResult filter_concurrence_law(const DensityMatrix &d, const LocalFilter &f);

} // namespace entdist
