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


#include <gtest/gtest.h>

#include <random>

#include "cqed/analysis.h"
#include "test_util.h"

using namespace cqed;
using namespace cqed::testing;

TEST(Analysis, TargetGhzBranches) {
    auto t = target_ghz(4, 0.3);
    const auto &l = t.layout();
    EXPECT_NEAR(std::abs(amplitude(t, parse_label(l, "i,i,g,e,0,0"))), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(std::arg(amplitude(t, parse_label(l, "i,i,g,e,0,0"))), 0.3, 1e-15);
    EXPECT_NEAR(std::abs(amplitude(t, parse_label(l, "g,g,e,g,0,0"))), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(t.norm(), 1.0, 1e-15);
    EXPECT_THROW(target_ghz(1), std::invalid_argument);
}

TEST(Analysis, TargetW) {
    auto t = target_w(4);
    int branches = 0;
    for (auto a : t.amplitudes()) {
        if (a != Complex(0.0)) {
            ++branches;
            EXPECT_NEAR(std::abs(a), 0.5, 1e-15);
        }
    }
    EXPECT_EQ(branches, 4);
    auto two = target_w(2);
    EXPECT_NEAR(std::abs(amplitude(two, parse_label(two.layout(), "e,g,0,0"))), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_THROW(target_w(0), std::invalid_argument);
}

TEST(Analysis, RelativePhases) {
    SystemConfig cfg;
    const double a = cfg.delta / cfg.omega_rabi;
    EXPECT_NEAR(std::remainder(ghz_relative_phase(4, cfg) - 7 * pi * a, 2 * pi), 0.0, 1e-12);
    EXPECT_NEAR(w_relative_phase(4, cfg), a * (3.5 * pi + 2 * std::acos(std::sqrt(2.0 / 3.0))), 1e-12);
}

TEST(Analysis, FidelityProperties) {
    auto l = layout_of({"A", "B"});
    std::mt19937_64 rng(8);
    for (int k = 0; k < 50; ++k) {
        auto a = random_low_photon_state(l, rng), b = random_low_photon_state(l, rng);
        EXPECT_NEAR(fidelity_up_to_global_phase(a, a), 1.0, 1e-12);
        EXPECT_NEAR(fidelity_up_to_global_phase(a, b), fidelity_up_to_global_phase(b, a), 1e-15);
        EXPECT_LE(fidelity_up_to_global_phase(a, b), 1.0 + 1e-12);
        std::vector<Complex> rotated(a.amplitudes().begin(), a.amplitudes().end());
        for (auto &x : rotated) x *= std::polar(1.0, 0.1 * k);
        EXPECT_NEAR(fidelity_up_to_global_phase(a, QuantumState(l, rotated)), 1.0, 1e-12);
    }
    EXPECT_THROW(fidelity_up_to_global_phase(target_w(2), target_w(3)), LayoutMismatch);
}

TEST(Analysis, ChainFidelityIgnoresSpectators) {
    auto l = layout_of({"As", "A1", "A2"});
    const double r = 1 / std::sqrt(2.0);
    auto s = superposition(l, {{r, "g,e,g,0,0"}, {Complex(0, r), "g,g,e,0,0"}});
    EXPECT_NEAR(chain_fidelity(s, {"A1", "A2"}, target_w(2, pi / 2)), 1.0, 1e-15);
    EXPECT_NEAR(chain_fidelity(s, {"A1", "A2"}, target_w(2, 0.0)), 0.5, 1e-15);
    EXPECT_THROW(chain_fidelity(s, {"A2", "A1"}, target_w(2)), LayoutMismatch);
}

TEST(Analysis, BellSignalForms) {
    const double eta = 0.7;
    EXPECT_DOUBLE_EQ(ideal_bell_signal(-eta, Sign::Plus, eta), 1.0);
    EXPECT_NEAR(ideal_bell_signal(pi / 2 - eta, Sign::Plus, eta), 0.0, 1e-15);
    EXPECT_DOUBLE_EQ(ideal_bell_signal(0.3, Sign::Minus, eta), -ideal_bell_signal(0.3, Sign::Plus, eta));
    SystemConfig cfg;
    EXPECT_DOUBLE_EQ(bell_eta(cfg), 5 * pi * cfg.delta / cfg.omega_rabi);
}

TEST(Analysis, ProbeProbability) {
    SystemConfig cfg;
    const double theta = 4 * pi / cfg.omega_rabi;
    // delta * T + 4 pi delta / Omega = 2 pi
    const double T = 2 * pi / cfg.delta - theta;
    EXPECT_NEAR(ideal_probe_probability(T, Sign::Plus, cfg), 1.0, 1e-12);
    for (double t : {0.0, 1e-6, 3.7e-6}) {
        EXPECT_NEAR(ideal_probe_probability(t, Sign::Plus, cfg) + ideal_probe_probability(t, Sign::Minus, cfg), 1.0,
                    1e-15);
        EXPECT_NEAR(ideal_probe_probability(t + 2 * pi / cfg.delta, Sign::Plus, cfg),
                    ideal_probe_probability(t, Sign::Plus, cfg), 1e-9);
    }
}

TEST(Analysis, GhzCorrelation) {
    SystemConfig cfg;
    const double T = 1e-6;
    const double phi = T * cfg.delta + ghz_detection_theta(cfg);
    EXPECT_NEAR(ideal_ghz_correlation(phi, T, Sign::Minus, cfg), 1.0, 1e-12);
    EXPECT_NEAR(ideal_ghz_correlation(phi, T, Sign::Plus, cfg), -1.0, 1e-12);
    EXPECT_NEAR(ideal_ghz_correlation(0.4, T + 2 * pi / cfg.delta, Sign::Plus, cfg),
                ideal_ghz_correlation(0.4, T, Sign::Plus, cfg), 1e-9);
}

TEST(Analysis, WProbeProbability) {
    SystemConfig cfg;
    const double theta = w_detection_theta(cfg, std::acos(std::sqrt(2.0 / 3.0)));
    EXPECT_DOUBLE_EQ(theta, (2.5 * pi + std::acos(std::sqrt(2.0 / 3.0))) / cfg.omega_rabi);
    const double period = 2 * pi / cfg.delta;
    EXPECT_NEAR(ideal_w_probe_probability(period - theta, 0.0, cfg), 1.0, 1e-12);
    EXPECT_DOUBLE_EQ(ideal_w_probe_probability(1e-6, 3e-6, cfg), ideal_w_probe_probability(3e-6, 1e-6, cfg));
    EXPECT_NEAR(ideal_w_probe_probability(0, 0, cfg), (1 + std::cos(cfg.delta * theta)) / 2, 1e-15);
}

TEST(Analysis, EstimateMaxChain) {
    EXPECT_EQ(estimate_max_chain(30e-3, 10e-6, 0.2), 100.0);
    EXPECT_DOUBLE_EQ(estimate_max_chain(6e-6, 1e-6, 1.0), 1.0);
    EXPECT_THROW(estimate_max_chain(30e-3, 10e-6, 0.0), std::invalid_argument);
    EXPECT_THROW(estimate_max_chain(30e-3, 10e-6, 1.5), std::invalid_argument);
    EXPECT_THROW(estimate_max_chain(-1, 10e-6, 0.2), std::invalid_argument);
    EXPECT_THROW(estimate_max_chain(30e-3, 0, 0.2), std::invalid_argument);
}

TEST(Analysis, FitCosineRecoversParameters) {
    std::vector<double> x, y;
    for (int k = 0; k < 40; ++k) {
        x.push_back(0.3 * k);
        y.push_back(0.5 + 0.25 * std::cos(x.back() - 1.1));
    }
    auto fit = fit_cosine(x, y);
    EXPECT_NEAR(fit.offset, 0.5, 1e-12);
    EXPECT_NEAR(fit.amplitude, 0.25, 1e-12);
    EXPECT_NEAR(fit.phase, -1.1, 1e-12);
    EXPECT_LT(fit.max_residual, 1e-12);
    std::vector<double> two{1, 2};
    EXPECT_THROW(fit_cosine(two, two), std::invalid_argument);
}
