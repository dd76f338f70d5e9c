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


#ifndef CQED_TESTS_TEST_UTIL_H
#define CQED_TESTS_TEST_UTIL_H

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "cqed/hilbert.h"

namespace cqed::testing {

using std::numbers::pi;

inline std::shared_ptr<const SubsystemLayout> layout_of(const std::vector<std::string> &atoms, int n_max = 1) {
    return std::make_shared<const SubsystemLayout>(SubsystemLayout::atoms_then_modes(atoms, n_max));
}

inline QuantumState basis(const std::shared_ptr<const SubsystemLayout> &layout, const std::string &label) {
    return make_state(layout, parse_label(*layout, label));
}

/// Normalized superposition of (coefficient, label) pairs.
inline QuantumState superposition(const std::shared_ptr<const SubsystemLayout> &layout,
                                  const std::vector<std::pair<Complex, std::string>> &terms) {
    std::vector<Complex> amps(layout->dimension(), 0.0);
    for (const auto &[c, label] : terms) amps[flat_index(*layout, parse_label(*layout, label))] += c;
    return QuantumState(layout, std::move(amps));
}

inline double max_abs_diff(const QuantumState &a, const QuantumState &b) {
    double d = 0.0;
    for (std::size_t k = 0; k < a.dimension(); ++k) d = std::max(d, std::abs(a.amplitudes()[k] - b.amplitudes()[k]));
    return d;
}

/// Photon number of either mode above `limit` carries no amplitude.
inline double weight_above(const QuantumState &s, int limit) {
    const auto &l = s.layout();
    double w = 0.0;
    for (std::size_t flat = 0; flat < s.dimension(); ++flat) {
        if (l.digit(flat, l.mode_index(Mode::C1)) > limit || l.digit(flat, l.mode_index(Mode::C2)) > limit) {
            w += std::norm(s.amplitudes()[flat]);
        }
    }
    return w;
}

/// Random normalized state restricted to at most one photon in total.
inline QuantumState random_low_photon_state(const std::shared_ptr<const SubsystemLayout> &layout, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    std::vector<Complex> amps(layout->dimension(), 0.0);
    double norm = 0.0;
    const std::size_t c1 = layout->mode_index(Mode::C1), c2 = layout->mode_index(Mode::C2);
    for (std::size_t flat = 0; flat < amps.size(); ++flat) {
        if (layout->digit(flat, c1) + layout->digit(flat, c2) > 1) continue;
        amps[flat] = Complex(normal(rng), normal(rng));
        norm += std::norm(amps[flat]);
    }
    for (auto &a : amps) a /= std::sqrt(norm);
    return QuantumState(layout, std::move(amps));
}

}  // namespace cqed::testing

#endif
