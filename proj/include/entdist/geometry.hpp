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
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "entdist/states.hpp"

namespace entdist {

/// One of the four vertices of the physical tetrahedron,
/// {(-1,1,1), (1,-1,1), (1,1,-1), (-1,-1,-1)}. Each has coordinate product
/// -1; the reflected tetrahedron (r_y negated) owns the +1 corners.
struct Vertex {
    std::array<double, 3> v;
};

const std::array<Vertex, 4> &physical_vertices();
bool is_physical_vertex(const Vertex &v);

double dot(const Vertex &v, const StandardState &s);
double l1_norm(const StandardState &s);

enum class StateClass { Separable, Entangled, NonPhysical };

/// Region tag plus, for entangled states, the unique tetrahedron corner
/// whose supporting plane v.r = 1 the point has crossed.
struct Classification {
    StateClass tag = StateClass::Separable;
    std::optional<Vertex> corner;
};

/// Boundary tolerance for both the physicality and separability tests;
/// boundary points land in the closed (Physical/Separable) sets.
inline constexpr double kBoundaryTol = 1e-10;

/// NonPhysical if some closed-form eigenvalue is below -1e-10; Separable if
/// |r|_1 <= 1 + 1e-10 (the octahedron is the unit L1 ball); Entangled
/// otherwise, tagged with the nearest corner.
Classification classify(const StandardState &s);

/// Euclidean distance from a physical point to the separable octahedron:
/// 0 inside, (v.r - 1)/sqrt(3) in the corner at vertex v. Non-physical
/// points are rejected.
double distance_to_separable(const StandardState &s);

/// Euclidean nearest point of the closed unit L1 ball, for any input point.
/// Sort-based simplex projection applied to |r| with the signs restored;
/// identity on interior points.
StandardState project_onto_separable(const StandardState &s);

enum class Region { Cube, Physical, Entangled, Separable };

/// Uniform double in [0, 1) from the top 53 bits of one engine draw. This
/// fixed mapping (rather than std::uniform_real_distribution) keeps sampled
/// values identical across standard-library implementations.
inline double uniform_unit(std::mt19937_64 &eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

/// Uniform double in [-1, 1).
inline double uniform_symmetric(std::mt19937_64 &eng) { return 2.0 * uniform_unit(eng) - 1.0; }

/// Deterministic sampler: mt19937_64 seeded with `seed`, coordinates uniform
/// over the cube [-1,1)^3, rejection against classify() for the other
/// regions. Throws if 10^6 consecutive attempts fail to hit the region.
std::vector<StandardState> sample_states(std::size_t n, std::uint64_t seed, Region region);

} // namespace entdist
