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

#include "cqed/oracle.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace cqed::oracle {

namespace {

using Vec = std::vector<Complex>;

// Matrix entries of H stored as (row, column, value).
struct Entry {
    std::size_t row;
    std::size_t col;
    Complex value;
};

std::vector<Entry> hamiltonian(const SubsystemLayout &layout, std::optional<std::size_t> atom, Mode mode,
                               const SystemConfig &config) {
    const std::size_t c2 = layout.mode_index(Mode::C2);
    const std::size_t m = layout.mode_index(mode);
    const double half = config.omega_rabi / 2.0;
    std::vector<Entry> h;
    for (std::size_t flat = 0; flat < layout.dimension(); ++flat) {
        double diag = -config.delta * layout.digit(flat, c2);
        if (atom && mode == Mode::C2 && layout.digit(flat, *atom) == static_cast<int>(Level::e)) diag -= config.delta;
        if (diag != 0.0) h.push_back({flat, flat, diag});
        if (!atom || layout.digit(flat, *atom) != static_cast<int>(Level::g)) continue;
        const int n = layout.digit(flat, m);
        if (n == 0) continue;
        // |g, n> couples to |e, n-1>.
        const std::size_t upper = flat - layout.stride(*atom) - layout.stride(m);
        const double g = half * std::sqrt(static_cast<double>(n));
        if (mode == Mode::C1) {
            h.push_back({upper, flat, Complex(0.0, -g)});
            h.push_back({flat, upper, Complex(0.0, g)});
        } else {
            h.push_back({upper, flat, -g});
            h.push_back({flat, upper, -g});
        }
    }
    return h;
}

// out = -i H v
void derivative(const std::vector<Entry> &h, const Vec &v, Vec &out) {
    std::fill(out.begin(), out.end(), Complex(0.0));
    for (const auto &e : h) out[e.row] += Complex(0.0, -1.0) * e.value * v[e.col];
}

}  // namespace

std::size_t min_steps(double duration, const SystemConfig &config) {
    const double periods = duration * config.omega_rabi / (2.0 * std::numbers::pi);
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(1000.0 * periods - 1e-9)));
}

std::size_t resolving_steps(double duration, const SystemConfig &config) {
    const double fastest = std::max(config.omega_rabi * std::sqrt(static_cast<double>(config.n_max)),
                                    config.delta * (config.n_max + 1));
    const double periods = duration * fastest / (2.0 * std::numbers::pi);
    return std::max(min_steps(duration, config), static_cast<std::size_t>(std::ceil(1000.0 * periods)));
}

QuantumState integrate(const QuantumState &state, std::optional<std::string_view> atom, Mode mode, double duration,
                       std::size_t steps, const SystemConfig &config) {
    config.validate();
    if (!(duration >= 0.0) || !std::isfinite(duration)) throw std::invalid_argument("duration must be finite and >= 0");
    if (steps < min_steps(duration, config)) {
        throw std::invalid_argument("oracle needs at least 1000 steps per Rabi period (" +
                                    std::to_string(min_steps(duration, config)) + " for this duration)");
    }
    const auto &layout = state.layout();
    std::optional<std::size_t> atom_index;
    if (atom) atom_index = layout.atom_index(*atom);
    const auto h = hamiltonian(layout, atom_index, mode, config);

    Vec v(state.amplitudes().begin(), state.amplitudes().end());
    Vec k1(v.size()), k2(v.size()), k3(v.size()), k4(v.size()), tmp(v.size());
    const double dt = duration / static_cast<double>(steps);
    for (std::size_t s = 0; s < steps; ++s) {
        derivative(h, v, k1);
        for (std::size_t j = 0; j < v.size(); ++j) tmp[j] = v[j] + 0.5 * dt * k1[j];
        derivative(h, tmp, k2);
        for (std::size_t j = 0; j < v.size(); ++j) tmp[j] = v[j] + 0.5 * dt * k2[j];
        derivative(h, tmp, k3);
        for (std::size_t j = 0; j < v.size(); ++j) tmp[j] = v[j] + dt * k3[j];
        derivative(h, tmp, k4);
        for (std::size_t j = 0; j < v.size(); ++j) v[j] += dt / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    }
    return QuantumState(state.layout_ptr(), std::move(v), state.elapsed_interaction_time() + duration);
}

}  // namespace cqed::oracle
