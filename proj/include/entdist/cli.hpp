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

#include <iosfwd>
#include <string>
#include <vector>

namespace entdist::cli {

/// Exit codes shared by every subcommand; stable across versions.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitNonPhysical = 2;
inline constexpr int kExitVerificationFailure = 3;

/// Runs one CLI invocation. `args` excludes the program name. Streams are
/// injected so the full command pipeline is testable in-process.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace entdist::cli
