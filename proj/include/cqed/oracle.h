// Copyright 2026 The cqedchain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CQED_ORACLE_H
#define CQED_ORACLE_H

#include <cstddef>
#include <optional>
#include <string_view>

#include "cqed/hilbert.h"

namespace cqed::oracle {

/// Fixed-step RK4 integration of the two-mode Jaynes-Cummings Hamiltonian in
/// the frame rotating at the C1 frequency (hbar = 1):
///
///   H = -delta n2 - delta P_e(atom, if tuned to C2) + V
///   V = -i (Omega/2) (S+ a1 - a1^dag S-)     atom tuned to C1
///   V = -(Omega/2) (S+ a2 + a2^dag S-)       atom tuned to C2
///
/// with S+ = |e><g| of `atom`. Without an atom only the mode term acts.
/// Throws std::invalid_argument for a negative duration or fewer than 1000
/// steps per Rabi period, DimensionError for an atom not in the layout.
QuantumState integrate(const QuantumState &state, std::optional<std::string_view> atom, Mode mode, double duration,
                       std::size_t steps, const SystemConfig &config);

/// Smallest step count meeting the 1000-steps-per-Rabi-period requirement.
std::size_t min_steps(double duration, const SystemConfig &config);

/// 1000 steps per period of the fastest frequency in the truncated
/// Hamiltonian, the larger of omega*sqrt(n_max) and delta*(n_max+1).
std::size_t resolving_steps(double duration, const SystemConfig &config);

}  // namespace cqed::oracle

#endif
