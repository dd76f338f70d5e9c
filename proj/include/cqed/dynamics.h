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

#ifndef CQED_DYNAMICS_H
#define CQED_DYNAMICS_H

#include <optional>
#include <string_view>

#include "cqed/hilbert.h"

namespace cqed {

/// Classical-field transition driven by a Ramsey pulse. The ordered pair
/// (a, b) is (g, i) for GI and (e, g) for EG.
enum class Transition : std::uint8_t { EG, GI };

std::string_view transition_name(Transition t);
std::optional<Transition> parse_transition(std::string_view text);

/// Phase bookkeeping in the frame rotating at the C1 frequency.
///
/// During a timed instruction of duration t every basis state picks up
/// exp(i * delta * t * k) with k = (C2 photons) + [tuned atom is C2-tuned and
/// in e]. Atoms that are not currently tuned to the cavity accrue nothing.
struct PhaseRule {
    /// Excitation count k for basis index `flat`. `tuned_atom` is the layout
    /// index of the atom interacting with `mode`, or nullopt for a free delay.
    static int exponent(const SubsystemLayout &layout, std::size_t flat, std::optional<std::size_t> tuned_atom,
                        Mode mode);
};

/// Resonant Rabi rotation of `atom` with cavity mode `mode` for the rotation
/// angle Omega * t (radians). The e,n <-> g,n+1 doublets rotate by
/// sqrt(n+1) * angle / 2; C2 couples with an extra factor of i. Afterwards
/// the PhaseRule factor for t = angle / Omega is applied and the elapsed
/// interaction time is advanced.
///
/// Throws DimensionError for an unknown atom, std::invalid_argument for a
/// negative or non-finite angle.
QuantumState apply_rabi(QuantumState state, std::string_view atom, Mode mode, double angle,
                        const SystemConfig &config);

/// Instantaneous Ramsey rotation on the given transition:
///   |a> -> cos(angle/2)|a> + e^{i phase} sin(angle/2)|b>
///   |b> -> -e^{-i phase} sin(angle/2)|a> + cos(angle/2)|b>
/// Leaves the elapsed interaction time untouched.
QuantumState apply_ramsey(QuantumState state, std::string_view atom, Transition transition, double angle,
                          double phase);

/// Free evolution: multiplies every basis state by exp(i delta t n2).
QuantumState apply_delay(QuantumState state, double duration, const SystemConfig &config);

}  // namespace cqed

#endif
