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

#include "entdist/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace entdist {

namespace {

constexpr std::size_t kMaxRejectionAttempts = 1000000;
const double kSqrt3 = std::sqrt(3.0);

} // namespace

const std::array<Vertex, 4> &physical_vertices() {
    static const std::array<Vertex, 4> vertices = {
        Vertex{{-1.0, 1.0, 1.0}},
        Vertex{{1.0, -1.0, 1.0}},
        Vertex{{1.0, 1.0, -1.0}},
        Vertex{{-1.0, -1.0, -1.0}},
    };
    return vertices;
}

bool is_physical_vertex(const Vertex &v) {
    double product = 1.0;
    for (double c : v.v) {
        if (std::abs(c) != 1.0) return false;
        product *= c;
    }
    return product == -1.0;
}

double dot(const Vertex &v, const StandardState &s) {
    return v.v[0] * s.rx + v.v[1] * s.ry + v.v[2] * s.rz;
}

double l1_norm(const StandardState &s) {
    return std::abs(s.rx) + std::abs(s.ry) + std::abs(s.rz);
}

Classification classify(const StandardState &s) {
    const auto eigs = standard_eigenvalues(s);
    if (*std::min_element(eigs.begin(), eigs.end()) < -kBoundaryTol) {
        return {StateClass::NonPhysical, std::nullopt};
    }
    if (l1_norm(s) <= 1.0 + kBoundaryTol) {
        return {StateClass::Separable, std::nullopt};
    }
    // Exactly one corner plane v.r = 1 is crossed for physical points; pick
    // it as the argmax to stay robust at the tolerance boundary.
    const auto &vertices = physical_vertices();
    const Vertex *corner = &vertices[0];
    double best = dot(vertices[0], s);
    for (std::size_t k = 1; k < vertices.size(); ++k) {
        const double value = dot(vertices[k], s);
        if (value > best) {
            best = value;
            corner = &vertices[k];
        }
    }
    return {StateClass::Entangled, *corner};
}

double distance_to_separable(const StandardState &s) {
    const Classification c = classify(s);
    switch (c.tag) {
        case StateClass::Separable:
            return 0.0;
        case StateClass::Entangled:
            return (dot(*c.corner, s) - 1.0) / kSqrt3;
        case StateClass::NonPhysical:
        default:
            throw std::domain_error("distance_to_separable: state is not physical");
    }
}

StandardState project_onto_separable(const StandardState &s) {
    if (l1_norm(s) <= 1.0) return s;

    // Project |r| onto the probability simplex (sorted threshold method),
    // then restore the signs.
    std::array<double, 3> mag = {std::abs(s.rx), std::abs(s.ry), std::abs(s.rz)};
    std::array<double, 3> sorted = mag;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());

    double cumulative = 0.0;
    double theta = 0.0;
    for (std::size_t j = 0; j < 3; ++j) {
        cumulative += sorted[j];
        const double candidate = (cumulative - 1.0) / static_cast<double>(j + 1);
        if (sorted[j] - candidate > 0.0) theta = candidate;
    }

    const auto shrink = [theta](double value, double magnitude) {
        return std::copysign(std::max(magnitude - theta, 0.0), value);
    };
    return {shrink(s.rx, mag[0]), shrink(s.ry, mag[1]), shrink(s.rz, mag[2])};
}

std::vector<StandardState> sample_states(std::size_t n, std::uint64_t seed, Region region) {
    if (n == 0) throw std::invalid_argument("sample_states: n must be at least 1");

    const auto accepts = [region](const StandardState &s) {
        if (region == Region::Cube) return true;
        switch (classify(s).tag) {
            case StateClass::Separable:
                return region == Region::Separable || region == Region::Physical;
            case StateClass::Entangled:
                return region == Region::Entangled || region == Region::Physical;
            case StateClass::NonPhysical:
            default:
                return false;
        }
    };

    std::mt19937_64 eng(seed);
    std::vector<StandardState> out;
    out.reserve(n);
    while (out.size() < n) {
        std::size_t attempts = 0;
        for (;;) {
            if (++attempts > kMaxRejectionAttempts) {
                throw std::runtime_error("sample_states: rejection sampling stalled");
            }
            const double rx = uniform_symmetric(eng);
            const double ry = uniform_symmetric(eng);
            const double rz = uniform_symmetric(eng);
            const StandardState candidate{rx, ry, rz};
            if (accepts(candidate)) {
                out.push_back(candidate);
                break;
            }
        }
    }
    return out;
}

} // namespace entdist
