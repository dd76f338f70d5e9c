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

#ifndef CQED_SIGNAL_H
#define CQED_SIGNAL_H

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cqed/program.h"

namespace cqed {

/// One measurement history of a bound program.
struct Branch {
    QuantumState state;
    std::vector<Outcome> outcomes;
    /// Product of outcome probabilities.
    double weight = 1.0;
    /// False when a postselect rejected this history (evolution stops there).
    bool passed = true;
};

/// Every outcome history with probability >= kZeroProbability.
std::vector<Branch> enumerate_branches(const BoundProgram &program);

/// Exact signal values, one per SignalSpec::columns() entry. A column whose
/// condition has zero probability evaluates to NaN.
std::vector<double> evaluate_signal(const BoundProgram &program);

/// Monte Carlo estimate from `samples` trajectories.
std::vector<double> sample_signal(const BoundProgram &program, std::size_t samples, Rng &rng);

struct GridAxis {
    std::string name;
    std::vector<double> values;
};

/// `steps` evenly spaced values from start to stop inclusive (steps >= 1).
GridAxis linspace(std::string name, double start, double stop, std::size_t steps);

struct SweepMode {
    /// 0 selects exact branch enumeration.
    std::size_t samples = 0;

    static SweepMode exact() { return {0}; }
    static SweepMode sampled(std::size_t k) { return {k}; }
    bool is_exact() const { return samples == 0; }
};

struct SignalSweep {
    std::vector<std::string> parameters;
    /// Row-major grid points (last axis fastest).
    std::vector<std::vector<double>> points;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> values;
    std::size_t samples = 0;

    std::size_t size() const { return points.size(); }
    std::size_t column_index(std::string_view name) const;
    /// Header row of parameter and column names, then one row per point with
    /// 12 significant digits.
    std::string to_csv() const;
};

/// Evaluates the program's signal over the Cartesian product of `axes`.
/// Sampled mode seeds each point from (config.rng_seed, point index).
///
/// Throws UnknownParameterError for an axis that is not a program parameter
/// and std::invalid_argument for an empty grid or a program without signal.
SignalSweep sweep_signal(const PulseProgram &program, const std::vector<GridAxis> &axes, const ParamValues &fixed,
                         const SystemConfig &config, SweepMode mode = SweepMode::exact());

}  // namespace cqed

#endif
