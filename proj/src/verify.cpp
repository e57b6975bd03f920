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

#include "entdist/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "entdist/geometry.hpp"
#include "entdist/measures.hpp"
#include "entdist/qmat.hpp"
#include "entdist/states.hpp"

namespace entdist {

namespace {

double euclidean_distance(const StandardState &a, const StandardState &b) {
    const double dx = a.rx - b.rx;
    const double dy = a.ry - b.ry;
    const double dz = a.rz - b.rz;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

double multiset_deviation(std::array<double, 4> a, std::array<double, 4> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double worst = 0.0;
    for (std::size_t k = 0; k < 4; ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
    return worst;
}

} // namespace

std::vector<IdentityCheck> run_verification(const VerifyOptions &options) {
    const std::size_t n = options.samples;
    const double sqrt3 = std::sqrt(3.0);

    const std::vector<StandardState> entangled = sample_states(n, options.seed, Region::Entangled);
    const std::vector<StandardState> physical =
        sample_states(n, options.seed + 1, Region::Physical);

    IdentityCheck euclid_vs_conc{"euclid-vs-concurrence", 0.0, 1e-10, false};
    IdentityCheck conc_vs_neg{"concurrence-vs-negativity", 0.0, 1e-10, false};
    IdentityCheck hs_vs_euclid{"hs-vs-euclid", 0.0, 1e-10, false};
    IdentityCheck projection_distance{"projection-distance", 0.0, 1e-10, false};
    IdentityCheck projection_optimality{"projection-optimality", 0.0, 1e-12, false};

    std::mt19937_64 competitor_rng(options.seed + 2);
    for (const StandardState &s : entangled) {
        double distance = distance_to_separable(s);
        if (options.inject_distance_sign_fault) distance = -distance;
        const double conc = concurrence_standard(s);
        const double neg = negativity_standard(s);
        const double hs = hs_distance_standard(s);

        euclid_vs_conc.max_deviation =
            std::max(euclid_vs_conc.max_deviation, std::abs(distance - 2.0 * conc / sqrt3));
        conc_vs_neg.max_deviation = std::max(conc_vs_neg.max_deviation, std::abs(conc - neg));
        hs_vs_euclid.max_deviation =
            std::max(hs_vs_euclid.max_deviation, std::abs(hs - 0.5 * distance_to_separable(s)));

        const StandardState projected = project_onto_separable(s);
        const double via_projection = euclidean_distance(s, projected);
        projection_distance.max_deviation = std::max(
            projection_distance.max_deviation, std::abs(distance_to_separable(s) - via_projection));

        // 100 random octahedron competitors must never beat the projection.
        for (int trial = 0; trial < 100;) {
            const StandardState w{uniform_symmetric(competitor_rng),
                                  uniform_symmetric(competitor_rng),
                                  uniform_symmetric(competitor_rng)};
            if (l1_norm(w) > 1.0) continue;
            ++trial;
            projection_optimality.max_deviation = std::max(
                projection_optimality.max_deviation, via_projection - euclidean_distance(s, w));
        }
    }

    IdentityCheck cross_conc{"cross-path-concurrence", 0.0, 1e-9, false};
    IdentityCheck cross_neg{"cross-path-negativity", 0.0, 1e-9, false};
    IdentityCheck root_spectrum{"root-spectrum-identity", 0.0, 1e-9, false};
    for (const StandardState &s : physical) {
        const DensityMatrix rho = from_standard(s);
        cross_conc.max_deviation =
            std::max(cross_conc.max_deviation,
                     std::abs(concurrence_general(rho) - concurrence_standard(s)));
        cross_neg.max_deviation = std::max(
            cross_neg.max_deviation, std::abs(negativity_general(rho) - negativity_standard(s)));
        root_spectrum.max_deviation =
            std::max(root_spectrum.max_deviation,
                     multiset_deviation(concurrence_root_spectrum(rho), standard_eigenvalues(s)));
    }

    // Octahedron membership via the L1 norm must coincide with all eight
    // half-space constraints 1 +- rx +- ry +- rz >= 0; the deviation is the
    // number of disagreements, so the tolerance is zero.
    IdentityCheck octahedron{"octahedron-equivalence", 0.0, 0.0, false};
    IdentityCheck corner_unique{"corner-uniqueness", 0.0, 0.0, false};
    std::mt19937_64 cube_rng(options.seed + 3);
    for (std::size_t k = 0; k < n; ++k) {
        const StandardState s{uniform_symmetric(cube_rng), uniform_symmetric(cube_rng),
                              uniform_symmetric(cube_rng)};
        const bool by_l1 = l1_norm(s) <= 1.0;
        bool by_planes = true;
        for (int sx : {-1, 1})
            for (int sy : {-1, 1})
                for (int sz : {-1, 1})
                    by_planes = by_planes && (1.0 + sx * s.rx + sy * s.ry + sz * s.rz >= 0.0);
        if (by_l1 != by_planes) octahedron.max_deviation += 1.0;

        if (classify(s).tag != StateClass::NonPhysical) {
            int crossings = 0;
            for (const Vertex &v : physical_vertices())
                if (dot(v, s) > 1.0) ++crossings;
            if (crossings > 1) corner_unique.max_deviation += 1.0;
        }
    }

    std::vector<IdentityCheck> checks = {euclid_vs_conc,       conc_vs_neg, hs_vs_euclid,
                                         projection_distance,  cross_conc,  cross_neg,
                                         root_spectrum,        octahedron,  corner_unique,
                                         projection_optimality};
    for (IdentityCheck &check : checks) check.pass = check.max_deviation <= check.tolerance;
    return checks;
}

} // namespace entdist
