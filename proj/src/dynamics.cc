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

#include "cqed/dynamics.h"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace cqed {

std::string_view transition_name(Transition t) { return t == Transition::EG ? "e-g" : "g-i"; }

std::optional<Transition> parse_transition(std::string_view text) {
    if (text == "e-g") return Transition::EG;
    if (text == "g-i") return Transition::GI;
    return std::nullopt;
}

int PhaseRule::exponent(const SubsystemLayout &layout, std::size_t flat, std::optional<std::size_t> tuned_atom,
                        Mode mode) {
    int k = layout.digit(flat, layout.mode_index(Mode::C2));
    if (tuned_atom && mode == Mode::C2 && layout.digit(flat, *tuned_atom) == static_cast<int>(Level::e)) {
        ++k;
    }
    return k;
}

namespace {

void apply_phase_rule(QuantumState &state, std::optional<std::size_t> tuned_atom, Mode mode, double duration,
                      const SystemConfig &config) {
    const auto &layout = state.layout();
    const double step = config.delta * duration;
    // k never exceeds n_max + 1.
    std::vector<Complex> factors(static_cast<std::size_t>(layout.n_max()) + 2);
    for (std::size_t k = 0; k < factors.size(); ++k) {
        factors[k] = std::polar(1.0, step * static_cast<double>(k));
    }
    auto amps = state.mutable_amplitudes();
    for (std::size_t flat = 0; flat < amps.size(); ++flat) {
        int k = PhaseRule::exponent(layout, flat, tuned_atom, mode);
        if (k) amps[flat] *= factors[static_cast<std::size_t>(k)];
    }
    state.advance_time(duration);
}

void check_nonnegative(double value, const char *what) {
    if (!std::isfinite(value) || value < 0.0) {
        throw std::invalid_argument(std::string(what) + " must be finite and nonnegative, got " +
                                    std::to_string(value));
    }
}

}  // namespace

QuantumState apply_rabi(QuantumState state, std::string_view atom, Mode mode, double angle,
                        const SystemConfig &config) {
    check_nonnegative(angle, "Rabi angle");
    const auto &layout = state.layout();
    const std::size_t a = layout.atom_index(atom);
    const std::size_t m = layout.mode_index(mode);
    const std::size_t sa = layout.stride(a);
    const std::size_t sm = layout.stride(m);
    const int n_max = layout.n_max();
    const Complex coupling = mode == Mode::C1 ? Complex{1.0, 0.0} : Complex{0.0, 1.0};

    // Basis states with atom in e and n < n_max photons pair with (g, n+1).
    // flat(g) = flat(e) + sa (Level::g == Level::e + 1), plus one photon: + sm.
    auto amps = state.mutable_amplitudes();
    for (std::size_t flat = 0; flat < amps.size(); ++flat) {
        if (layout.digit(flat, a) != static_cast<int>(Level::e)) continue;
        int n = layout.digit(flat, m);
        if (n >= n_max) continue;
        const std::size_t partner = flat + sa + sm;
        const double half = 0.5 * std::sqrt(static_cast<double>(n + 1)) * angle;
        const double c = std::cos(half);
        const double s = std::sin(half);
        const Complex ue = amps[flat];
        const Complex ug = amps[partner];
        if (mode == Mode::C1) {
            amps[flat] = c * ue - s * ug;
            amps[partner] = s * ue + c * ug;
        } else {
            amps[flat] = c * ue + coupling * s * ug;
            amps[partner] = coupling * s * ue + c * ug;
        }
    }
    apply_phase_rule(state, a, mode, angle / config.omega_rabi, config);
    return state;
}

QuantumState apply_ramsey(QuantumState state, std::string_view atom, Transition transition, double angle,
                          double phase) {
    check_nonnegative(angle, "Ramsey angle");
    if (!std::isfinite(phase)) {
        throw std::invalid_argument("Ramsey phase must be finite");
    }
    const auto &layout = state.layout();
    const std::size_t a = layout.atom_index(atom);
    const std::size_t sa = layout.stride(a);
    const int la = transition == Transition::GI ? static_cast<int>(Level::g) : static_cast<int>(Level::e);
    const double c = std::cos(0.5 * angle);
    const double s = std::sin(0.5 * angle);
    const Complex up = s * std::polar(1.0, phase);     // <b|R|a>
    const Complex down = -s * std::polar(1.0, -phase);  // <a|R|b>

    auto amps = state.mutable_amplitudes();
    for (std::size_t flat = 0; flat < amps.size(); ++flat) {
        if (layout.digit(flat, a) != la) continue;
        const std::size_t fb = flat + sa;
        const Complex xa = amps[flat];
        const Complex xb = amps[fb];
        amps[flat] = c * xa + down * xb;
        amps[fb] = up * xa + c * xb;
    }
    return state;
}

QuantumState apply_delay(QuantumState state, double duration, const SystemConfig &config) {
    check_nonnegative(duration, "delay duration");
    apply_phase_rule(state, std::nullopt, Mode::C1, duration, config);
    return state;
}

}  // namespace cqed
