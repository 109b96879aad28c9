// Copyright 2026 The amekit Authors
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

#include <cstddef>

namespace amekit {

// Norm, unitarity and Hermiticity checks.
inline constexpr double kTolNorm = 1e-10;
// Entropy and fidelity comparisons.
inline constexpr double kTolEnt = 1e-8;
// Eigenvalues below this floor are dropped inside the entropy log.
inline constexpr double kTolEig = 1e-12;

// Dense vectors only: states with more amplitudes than this are rejected.
inline constexpr std::size_t kMaxAmplitudes = std::size_t{1} << 22;

}  // namespace amekit
