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

#include "cqed/measurement.h"

#include <cmath>

namespace cqed {

double MeasurementRecord::trajectory_weight() const {
    double w = 1.0;
    for (const auto &o : outcomes) w *= o.probability;
    return w;
}

const Outcome *MeasurementRecord::find(std::string_view atom) const {
    for (const auto &o : outcomes) {
        if (o.atom == atom) return &o;
    }
    return nullptr;
}

LevelDistribution outcome_distribution(const QuantumState &state, std::string_view atom) {
    const auto &layout = state.layout();
    const std::size_t a = layout.atom_index(atom);
    LevelDistribution p{0.0, 0.0, 0.0};
    auto amps = state.amplitudes();
    for (std::size_t flat = 0; flat < amps.size(); ++flat) {
        p[static_cast<std::size_t>(layout.digit(flat, a))] += std::norm(amps[flat]);
    }
    return p;
}

std::pair<double, QuantumState> project(const QuantumState &state, std::string_view atom, Level level) {
    const auto &layout = state.layout();
    const std::size_t a = layout.atom_index(atom);
    const int target = static_cast<int>(level);
    std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
    double p = 0.0;
    for (std::size_t flat = 0; flat < amps.size(); ++flat) {
        if (layout.digit(flat, a) == target) {
            p += std::norm(amps[flat]);
        } else {
            amps[flat] = 0.0;
        }
    }
    if (p < kZeroProbability) {
        throw ZeroProbabilityBranch("projection of '" + std::string(atom) + "' onto " + level_char(level) +
                                    " has probability " + std::to_string(p));
    }
    const double scale = 1.0 / std::sqrt(p);
    for (auto &x : amps) x *= scale;
    return {p, QuantumState(state.layout_ptr(), std::move(amps), state.elapsed_interaction_time())};
}

double uniform01(Rng &rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::pair<Level, QuantumState> sample_measure(const QuantumState &state, std::string_view atom, Rng &rng) {
    auto p = outcome_distribution(state, atom);
    const double u = uniform01(rng) * (p[0] + p[1] + p[2]);
    // Levels below kZeroProbability are skipped so rounding at the upper edge
    // falls back to the last possible level rather than an empty branch.
    Level chosen = Level::e;
    double acc = 0.0;
    for (std::size_t k = 0; k < 3; ++k) {
        if (p[k] < kZeroProbability) continue;
        chosen = static_cast<Level>(k);
        acc += p[k];
        if (u < acc) break;
    }
    return {chosen, project(state, atom, chosen).second};
}

double bell_signal(double p_ee, double p_gg, double p_eg, double p_ge) { return p_ee + p_gg - p_eg - p_ge; }

}  // namespace cqed
