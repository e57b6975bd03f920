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

#include <cstdint>
#include <string>
#include <vector>

namespace entdist {

/// Result of one verification identity: the worst absolute deviation seen
/// over the sampled states, against its pinned tolerance.
struct IdentityCheck {
    std::string name;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerifyOptions {
    std::size_t samples = 10000;
    std::uint64_t seed = 1;
    /// Test hook: negates the plane-distance formula inside the
    /// distance-vs-concurrence identity so the suite must fail.
    bool inject_distance_sign_fault = false;
};

/// Runs every cross-module identity at the given sample size. Checks cover
/// the proportionality of distance to concurrence, concurrence-negativity
/// equality, the Hilbert-Schmidt factor, closed-form versus matrix-path
/// agreement, projection optimality, octahedron membership equivalence, the
/// root-spectrum identity, and corner uniqueness.
std::vector<IdentityCheck> run_verification(const VerifyOptions &options);

} // namespace entdist
