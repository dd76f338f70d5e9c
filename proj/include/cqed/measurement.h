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

#ifndef CQED_MEASUREMENT_H
#define CQED_MEASUREMENT_H

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cqed/hilbert.h"

namespace cqed {

using Rng = std::mt19937_64;

/// Branches below this probability are treated as impossible.
inline constexpr double kZeroProbability = 1e-14;

class ZeroProbabilityBranch : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Probabilities indexed by Level (e, g, i).
using LevelDistribution = std::array<double, 3>;

struct Outcome {
    std::string atom;
    Level level;
    double probability;
    bool operator==(const Outcome &) const = default;
};

struct MeasurementRecord {
    std::vector<Outcome> outcomes;
    bool postselect_pass = true;
    std::uint64_t seed = 0;

    /// Product of the recorded outcome probabilities.
    double trajectory_weight() const;
    const Outcome *find(std::string_view atom) const;
    bool operator==(const MeasurementRecord &) const = default;
};

/// Longitudinal (field-ionization) statistics of one atom.
LevelDistribution outcome_distribution(const QuantumState &state, std::string_view atom);

/// Projects `atom` onto `level` and renormalizes. Throws
/// ZeroProbabilityBranch when the branch probability is below 1e-14.
std::pair<double, QuantumState> project(const QuantumState &state, std::string_view atom, Level level);

/// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform01(Rng &rng);

/// Draws an outcome from outcome_distribution and collapses onto it.
std::pair<Level, QuantumState> sample_measure(const QuantumState &state, std::string_view atom, Rng &rng);

/// P(e,e) + P(g,g) - P(e,g) - P(g,e).
double bell_signal(double p_ee, double p_gg, double p_eg, double p_ge);

}  // namespace cqed

#endif
