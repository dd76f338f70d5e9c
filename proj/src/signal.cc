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

#include "cqed/signal.h"

#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

namespace cqed {

namespace {

const Outcome *find_outcome(const std::vector<Outcome> &outcomes, std::string_view atom) {
    for (const auto &o : outcomes) {
        if (o.atom == atom) return &o;
    }
    return nullptr;
}

// Accumulates conditional expectations per label column.
class SignalAccumulator {
   public:
    explicit SignalAccumulator(const SignalSpec &spec) : spec_(spec) {
        const std::size_t n = spec.label ? spec.label->columns.size() : 1;
        num_.assign(n, 0.0);
        den_.assign(n, 0.0);
    }

    void add(const std::vector<Outcome> &outcomes, double weight) {
        double value = 1.0;
        for (const auto &obs : spec_.observables) {
            const Outcome *o = find_outcome(outcomes, obs.atom);
            value *= o ? obs.weights[static_cast<std::size_t>(o->level)] : 0.0;
        }
        std::size_t column = 0;
        if (spec_.label) {
            const Outcome *o = find_outcome(outcomes, spec_.label->atom);
            if (!o) return;
            const auto &cols = spec_.label->columns;
            std::size_t k = 0;
            while (k < cols.size() && cols[k].first != o->level) ++k;
            if (k == cols.size()) return;
            column = k;
        }
        num_[column] += weight * value;
        den_[column] += weight;
    }

    std::vector<double> result() const {
        std::vector<double> out(num_.size());
        for (std::size_t k = 0; k < out.size(); ++k) {
            out[k] = den_[k] > 0.0 ? num_[k] / den_[k] : std::numeric_limits<double>::quiet_NaN();
        }
        return out;
    }

   private:
    const SignalSpec &spec_;
    std::vector<double> num_;
    std::vector<double> den_;
};

}  // namespace

std::vector<Branch> enumerate_branches(const BoundProgram &program) {
    std::vector<Branch> live;
    live.push_back({program.initial, {}, 1.0, true});
    std::vector<Branch> done;
    for (const auto &step : program.steps) {
        const bool is_measure = step.kind == BoundStep::Kind::Measure || step.kind == BoundStep::Kind::Postselect;
        if (!is_measure) {
            for (auto &b : live) b.state = apply_step(std::move(b.state), step, program.config);
            continue;
        }
        std::vector<Branch> next;
        for (auto &b : live) {
            if (const Outcome *prev = find_outcome(b.outcomes, step.atom)) {
                if (step.kind == BoundStep::Kind::Postselect && prev->level != step.level) {
                    b.passed = false;
                    done.push_back(std::move(b));
                } else {
                    next.push_back(std::move(b));
                }
                continue;
            }
            const auto p = outcome_distribution(b.state, step.atom);
            for (std::size_t k = 0; k < 3; ++k) {
                const double w = b.weight * p[k];
                if (p[k] < kZeroProbability || w < kZeroProbability) continue;
                const Level level = static_cast<Level>(k);
                Branch child{project(b.state, step.atom, level).second, b.outcomes, w, true};
                child.outcomes.push_back({step.atom, level, p[k]});
                if (step.kind == BoundStep::Kind::Postselect && level != step.level) {
                    child.passed = false;
                    done.push_back(std::move(child));
                } else {
                    next.push_back(std::move(child));
                }
            }
        }
        live = std::move(next);
    }
    for (auto &b : live) done.push_back(std::move(b));
    return done;
}

std::vector<double> evaluate_signal(const BoundProgram &program) {
    SignalAccumulator acc(program.signal);
    for (const auto &b : enumerate_branches(program)) {
        if (b.passed) acc.add(b.outcomes, b.weight);
    }
    return acc.result();
}

std::vector<double> sample_signal(const BoundProgram &program, std::size_t samples, Rng &rng) {
    SignalAccumulator acc(program.signal);
    for (std::size_t s = 0; s < samples; ++s) {
        auto r = run(program, rng);
        if (r.record.postselect_pass) acc.add(r.record.outcomes, 1.0);
    }
    return acc.result();
}

GridAxis linspace(std::string name, double start, double stop, std::size_t steps) {
    if (steps == 0) throw std::invalid_argument("grid axis '" + name + "' needs at least one step");
    GridAxis axis{std::move(name), {}};
    axis.values.reserve(steps);
    if (steps == 1) {
        axis.values.push_back(start);
        return axis;
    }
    const double h = (stop - start) / static_cast<double>(steps - 1);
    for (std::size_t k = 0; k + 1 < steps; ++k) axis.values.push_back(start + h * static_cast<double>(k));
    axis.values.push_back(stop);
    return axis;
}

std::size_t SignalSweep::column_index(std::string_view name) const {
    for (std::size_t k = 0; k < columns.size(); ++k) {
        if (columns[k] == name) return k;
    }
    throw std::out_of_range("no signal column '" + std::string(name) + "'");
}

std::string SignalSweep::to_csv() const {
    std::ostringstream out;
    bool first = true;
    auto cell = [&](const std::string &s) {
        if (!first) out << ',';
        out << s;
        first = false;
    };
    auto number = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.12g", v);
        return std::string(buf);
    };
    for (const auto &p : parameters) cell(p);
    for (const auto &c : columns) cell(c);
    out << '\n';
    for (std::size_t r = 0; r < points.size(); ++r) {
        first = true;
        for (double v : points[r]) cell(number(v));
        for (double v : values[r]) cell(number(v));
        out << '\n';
    }
    return out.str();
}

SignalSweep sweep_signal(const PulseProgram &program, const std::vector<GridAxis> &axes, const ParamValues &fixed,
                         const SystemConfig &config, SweepMode mode) {
    if (program.signal.empty()) throw std::invalid_argument("program defines no signal (observe lines)");
    if (axes.empty()) throw std::invalid_argument("sweep needs at least one grid axis");
    SignalSweep sweep;
    sweep.columns = program.signal.columns();
    sweep.samples = mode.samples;
    for (const auto &axis : axes) {
        if (!program.has_parameter(axis.name)) throw UnknownParameterError(axis.name);
        if (axis.values.empty()) throw std::invalid_argument("grid axis '" + axis.name + "' is empty");
        sweep.parameters.push_back(axis.name);
    }

    std::vector<std::size_t> index(axes.size(), 0);
    for (std::size_t point = 0;; ++point) {
        ParamValues bindings = fixed;
        std::vector<double> coords;
        for (std::size_t a = 0; a < axes.size(); ++a) {
            coords.push_back(axes[a].values[index[a]]);
            bindings[axes[a].name] = coords.back();
        }
        const BoundProgram bound = bind_program(program, bindings, config);
        if (mode.is_exact()) {
            sweep.values.push_back(evaluate_signal(bound));
        } else {
            std::seed_seq seq{static_cast<std::uint32_t>(config.rng_seed), static_cast<std::uint32_t>(config.rng_seed >> 32),
                              static_cast<std::uint32_t>(point)};
            Rng rng(seq);
            sweep.values.push_back(sample_signal(bound, mode.samples, rng));
        }
        sweep.points.push_back(std::move(coords));

        std::size_t a = axes.size();
        while (a > 0) {
            --a;
            if (++index[a] < axes[a].values.size()) break;
            index[a] = 0;
            if (a == 0) return sweep;
        }
    }
}

}  // namespace cqed
