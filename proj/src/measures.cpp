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

#include "entdist/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "entdist/qmat.hpp"

namespace entdist {

namespace {

constexpr double kZeroClip = 1e-12;
// Floor for eigenvalues of the sqrt(rho) rho~ sqrt(rho) product: genuine
// zeros of rank-deficient states come back as round-off of at most a few
// 1e-16 (the formation error of the triple product), and taking their
// square root would turn that into 1e-8 noise on the concurrence.
constexpr double kRootFloor = 1e-15;

double clip_zero(double value) { return std::abs(value) < kZeroClip ? 0.0 : value; }

void require_physical(const StandardState &s, const char *op) {
    if (classify(s).tag == StateClass::NonPhysical) {
        throw std::domain_error(std::string(op) + ": state is not physical");
    }
}

ComplexMatrix spin_flipped(const DensityMatrix &d) {
    const ComplexMatrix yy = kron(pauli(2), pauli(2));
    return yy * d.matrix().conjugate() * yy;
}

} // namespace

double concurrence_standard(const StandardState &s) {
    require_physical(s, "concurrence_standard");
    const auto eigs = standard_eigenvalues(s);
    const double rho_max = *std::max_element(eigs.begin(), eigs.end());
    return std::max(0.0, 2.0 * rho_max - 1.0);
}

std::array<double, 4> concurrence_root_spectrum(const DensityMatrix &d) {
    const ComplexMatrix root = psd_sqrt(d.matrix());
    ComplexMatrix m = root * spin_flipped(d) * root;
    // The triple product is Hermitian up to round-off; symmetrize before
    // handing it to the eigensolver.
    for (std::size_t i = 0; i < 4; ++i) {
        m(i, i) = Complex(m(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < 4; ++j) {
            const Complex avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
            m(i, j) = avg;
            m(j, i) = std::conj(avg);
        }
    }
    const HermitianEig eig = hermitian_eig(m);
    std::array<double, 4> roots{};
    for (std::size_t k = 0; k < 4; ++k) {
        const double lambda = eig.eigenvalues[k];
        roots[k] = lambda <= kRootFloor ? 0.0 : std::sqrt(lambda);
    }
    return roots;
}

double concurrence_general(const DensityMatrix &d) {
    const auto roots = concurrence_root_spectrum(d);
    const double total = roots[0] + roots[1] + roots[2] + roots[3];
    return std::max(0.0, 2.0 * roots[0] - total);
}

double negativity_standard(const StandardState &s) {
    require_physical(s, "negativity_standard");
    const auto eigs = pt_eigenvalues(s);
    const double lambda_min = *std::min_element(eigs.begin(), eigs.end());
    return 2.0 * std::max(0.0, -lambda_min);
}

double negativity_general(const DensityMatrix &d) {
    const HermitianEig eig = hermitian_eig(partial_transpose(d));
    return 2.0 * std::max(0.0, -eig.eigenvalues.back());
}

double hs_distance_standard(const StandardState &s) {
    return 0.5 * distance_to_separable(s);
}

MeasureReport measure(const StandardState &s) {
    MeasureReport report;
    report.classification = classify(s);
    if (report.classification.tag == StateClass::NonPhysical) return report;

    report.concurrence = clip_zero(concurrence_standard(s));
    report.negativity = clip_zero(negativity_standard(s));
    report.euclidean_distance = clip_zero(distance_to_separable(s));
    report.hs_distance = clip_zero(hs_distance_standard(s));
    return report;
}

FilterLawResult filter_concurrence_law(const DensityMatrix &d, const LocalFilter &f) {
    FilterLawResult result;
    result.actual = concurrence_general(apply_filter(d, f));
    result.input_concurrence = concurrence_general(d);

    const ComplexMatrix weight = kron(f.a().adjoint() * f.a(), f.b().adjoint() * f.b());
    const double norm = (weight * d.matrix()).trace().real();
    const double det_scale = std::abs(det2(f.a())) * std::abs(det2(f.b()));
    result.predicted = result.input_concurrence * det_scale / norm;
    result.predicted_exceeds_one = result.predicted > 1.0;
    return result;
}

} // namespace entdist
