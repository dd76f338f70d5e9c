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

#include "cqed/dynamics.h"
#include "test_util.h"

using namespace cqed;
using namespace cqed::testing;

namespace {

const SystemConfig kCfg;
const double kA = kCfg.delta / kCfg.omega_rabi;
const Complex kI(0.0, 1.0);

}  // namespace

TEST(Dynamics, TransitionNames) {
    EXPECT_EQ(transition_name(Transition::EG), "e-g");
    EXPECT_EQ(parse_transition("g-i"), Transition::GI);
    EXPECT_FALSE(parse_transition("e-i").has_value());
}

TEST(Dynamics, PhaseRuleExponent) {
    auto l = layout_of({"A1", "A2"});
    auto idx = [&](const char *s) { return flat_index(*l, parse_label(*l, s)); };
    EXPECT_EQ(PhaseRule::exponent(*l, idx("e,e,1,1"), std::nullopt, Mode::C1), 1);
    EXPECT_EQ(PhaseRule::exponent(*l, idx("e,e,1,1"), 0u, Mode::C1), 1);
    EXPECT_EQ(PhaseRule::exponent(*l, idx("e,e,1,1"), 0u, Mode::C2), 2);
    EXPECT_EQ(PhaseRule::exponent(*l, idx("g,e,0,0"), 0u, Mode::C2), 0);
    EXPECT_EQ(PhaseRule::exponent(*l, idx("g,e,0,0"), 1u, Mode::C2), 1);
}

TEST(Dynamics, RabiC1PiSwapsExcitation) {
    auto l = layout_of({"A"});
    auto s = apply_rabi(basis(l, "e,0,0"), "A", Mode::C1, pi, kCfg);
    EXPECT_LT(max_abs_diff(s, basis(l, "g,1,0")), 1e-15);
    s = apply_rabi(basis(l, "g,1,0"), "A", Mode::C1, pi, kCfg);
    EXPECT_LT(max_abs_diff(s, superposition(l, {{-1.0, "e,0,0"}})), 1e-15);
    EXPECT_DOUBLE_EQ(s.elapsed_interaction_time(), pi / kCfg.omega_rabi);
}

TEST(Dynamics, RabiC2PiCarriesDetuningPhase) {
    auto l = layout_of({"A"});
    auto s = apply_rabi(basis(l, "e,0,0"), "A", Mode::C2, pi, kCfg);
    auto expected = superposition(l, {{kI * std::polar(1.0, pi * kA), "g,0,1"}});
    EXPECT_LT(max_abs_diff(s, expected), 1e-14);
}

TEST(Dynamics, RabiTwoPiIsSignFlip) {
    auto l = layout_of({"A"});
    auto in = superposition(l, {{0.6, "e,0,0"}, {Complex(0, 0.8), "g,1,0"}});
    auto out = apply_rabi(in, "A", Mode::C1, 2 * pi, kCfg);
    EXPECT_LT(max_abs_diff(out, superposition(l, {{-0.6, "e,0,0"}, {Complex(0, -0.8), "g,1,0"}})), 1e-15);
}

TEST(Dynamics, RabiLeavesGroundVacuumAndILevel) {
    auto l = layout_of({"A"});
    for (const char *label : {"g,0,0", "i,1,0", "i,0,0"}) {
        auto out = apply_rabi(basis(l, label), "A", Mode::C1, 1.234, kCfg);
        EXPECT_LT(max_abs_diff(out, basis(l, label)), 1e-15) << label;
    }
}

TEST(Dynamics, RabiSqrtNScaling) {
    auto l = layout_of({"A"}, 2);
    // Half angle sqrt(2) * angle / 2 on the |e,1> <-> |g,2> doublet.
    const double angle = 0.7;
    auto out = apply_rabi(basis(l, "e,1,0"), "A", Mode::C1, angle, kCfg);
    const double h = std::sqrt(2.0) * angle / 2;
    EXPECT_NEAR(std::abs(amplitude(out, parse_label(*l, "e,1,0")) - std::cos(h)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(amplitude(out, parse_label(*l, "g,2,0")) - std::sin(h)), 0.0, 1e-15);
}

TEST(Dynamics, AngleZeroIsIdentity) {
    auto l = layout_of({"A", "B"});
    std::mt19937_64 rng(3);
    auto s = random_low_photon_state(l, rng);
    EXPECT_EQ(max_abs_diff(apply_rabi(s, "A", Mode::C2, 0.0, kCfg), s), 0.0);
    EXPECT_EQ(max_abs_diff(apply_ramsey(s, "B", Transition::EG, 0.0, 1.0), s), 0.0);
    EXPECT_EQ(max_abs_diff(apply_delay(s, 0.0, kCfg), s), 0.0);
}

TEST(Dynamics, RabiErrors) {
    auto l = layout_of({"A"});
    EXPECT_THROW(apply_rabi(basis(l, "e,0,0"), "B", Mode::C1, pi, kCfg), DimensionError);
    EXPECT_THROW(apply_rabi(basis(l, "e,0,0"), "A", Mode::C1, -0.1, kCfg), std::invalid_argument);
    EXPECT_THROW(apply_rabi(basis(l, "e,0,0"), "A", Mode::C1, NAN, kCfg), std::invalid_argument);
    EXPECT_THROW(apply_ramsey(basis(l, "e,0,0"), "C1", Transition::EG, pi, 0), DimensionError);
    EXPECT_THROW(apply_ramsey(basis(l, "e,0,0"), "A", Transition::EG, -1, 0), std::invalid_argument);
    EXPECT_THROW(apply_delay(basis(l, "e,0,0"), -1e-6, kCfg), std::invalid_argument);
}

TEST(Dynamics, RamseyHalfPiGI) {
    auto l = layout_of({"A"});
    const double r = 1 / std::sqrt(2.0);
    auto g = apply_ramsey(basis(l, "g,0,0"), "A", Transition::GI, pi / 2, 0.0);
    EXPECT_LT(max_abs_diff(g, superposition(l, {{r, "i,0,0"}, {r, "g,0,0"}})), 1e-15);
    auto i = apply_ramsey(basis(l, "i,0,0"), "A", Transition::GI, pi / 2, 0.0);
    EXPECT_LT(max_abs_diff(i, superposition(l, {{r, "i,0,0"}, {-r, "g,0,0"}})), 1e-15);
    EXPECT_EQ(i.elapsed_interaction_time(), 0.0);
}

TEST(Dynamics, RamseyEGMapsPlusToGround) {
    auto l = layout_of({"A"});
    const double r = 1 / std::sqrt(2.0);
    auto out = apply_ramsey(superposition(l, {{r, "e,0,0"}, {r, "g,0,0"}}), "A", Transition::EG, pi / 2, 0.0);
    EXPECT_LT(max_abs_diff(out, basis(l, "g,0,0")), 1e-15);
}

TEST(Dynamics, RamseyPhaseConvention) {
    auto l = layout_of({"A"});
    const double phase = 0.9;
    auto out = apply_ramsey(basis(l, "e,0,0"), "A", Transition::EG, pi, phase);
    EXPECT_LT(max_abs_diff(out, superposition(l, {{std::polar(1.0, phase), "g,0,0"}})), 1e-15);
    out = apply_ramsey(basis(l, "g,0,0"), "A", Transition::EG, pi, phase);
    EXPECT_LT(max_abs_diff(out, superposition(l, {{-std::polar(1.0, -phase), "e,0,0"}})), 1e-15);
}

TEST(Dynamics, DelayPhase) {
    auto l = layout_of({"A"});
    const double theta = 0.3, T = 2.1e-6;
    const double r = 1 / std::sqrt(2.0);
    auto bell = superposition(l, {{kI * std::polar(r, theta), "g,0,1"}, {-r, "g,1,0"}});
    auto out = apply_delay(bell, T, kCfg);
    auto expected = superposition(l, {{kI * std::polar(r, theta + kCfg.delta * T), "g,0,1"}, {-r, "g,1,0"}});
    EXPECT_LT(max_abs_diff(out, expected), 1e-15);
    EXPECT_DOUBLE_EQ(out.elapsed_interaction_time(), T);
}

TEST(Dynamics, DelayFullPeriodIsIdentity) {
    auto l = layout_of({"A", "B"});
    std::mt19937_64 rng(11);
    auto s = random_low_photon_state(l, rng);
    EXPECT_LT(max_abs_diff(apply_delay(s, 2 * pi / kCfg.delta, kCfg), s), 1e-14);
}

TEST(DynamicsProperty, NormPreservedAndRabiComposes) {
    auto l = layout_of({"A", "B"}, 2);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 2 * pi);
    for (int trial = 0; trial < 200; ++trial) {
        auto s = random_low_photon_state(l, rng);
        const Mode mode = trial % 2 ? Mode::C1 : Mode::C2;
        const char *atom = trial % 3 ? "A" : "B";
        const double a = u(rng), b = u(rng);
        auto ab = apply_rabi(apply_rabi(s, atom, mode, a, kCfg), atom, mode, b, kCfg);
        auto sum = apply_rabi(s, atom, mode, a + b, kCfg);
        EXPECT_LT(max_abs_diff(ab, sum), 1e-12);
        EXPECT_NEAR(ab.norm(), 1.0, 1e-12);
        auto r = apply_ramsey(s, atom, trial % 2 ? Transition::EG : Transition::GI, a, b);
        EXPECT_NEAR(r.norm(), 1.0, 1e-12);
    }
}

TEST(DynamicsProperty, RamseyAdjointUndoes) {
    auto l = layout_of({"A"});
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0.0, 2 * pi);
    for (int trial = 0; trial < 100; ++trial) {
        auto s = random_low_photon_state(l, rng);
        const double theta = u(rng), phi = u(rng);
        const Transition t = trial % 2 ? Transition::EG : Transition::GI;
        auto back = apply_ramsey(apply_ramsey(s, "A", t, theta, phi), "A", t, theta, phi + pi);
        EXPECT_LT(max_abs_diff(back, s), 1e-12);
    }
}

TEST(DynamicsCheckpoint, GhzSourceAndFirstAtoms) {
    auto l = layout_of({"As", "A1", "A2"});
    const double r2 = 1 / std::sqrt(2.0);
    auto s = basis(l, "e,g,g,0,0");
    s = apply_rabi(s, "As", Mode::C1, pi / 2, kCfg);
    s = apply_rabi(s, "As", Mode::C2, pi, kCfg);
    auto psi1 = superposition(l, {{kI * std::polar(r2, pi * kA), "g,g,g,0,1"}, {r2, "g,g,g,1,0"}});
    EXPECT_LT(max_abs_diff(s, psi1), 1e-10);

    s = apply_ramsey(s, "A1", Transition::GI, pi / 2, 0);
    s = apply_rabi(s, "A1", Mode::C1, 2 * pi, kCfg);
    const Complex up = kI * std::polar(0.5, 3 * pi * kA);
    auto psi3 = superposition(
        l, {{up, "g,g,g,0,1"}, {up, "g,i,g,0,1"}, {-0.5, "g,g,g,1,0"}, {0.5, "g,i,g,1,0"}});
    EXPECT_LT(max_abs_diff(s, psi3), 1e-10);

    s = apply_ramsey(s, "A1", Transition::GI, pi / 2, 0);
    auto psi4 = superposition(l, {{kI * std::polar(r2, 3 * pi * kA), "g,i,g,0,1"}, {-r2, "g,g,g,1,0"}});
    EXPECT_LT(max_abs_diff(s, psi4), 1e-10);

    s = apply_ramsey(s, "A2", Transition::GI, pi / 2, 0);
    s = apply_rabi(s, "A2", Mode::C1, 2 * pi, kCfg);
    s = apply_ramsey(s, "A2", Transition::GI, pi / 2, 0);
    auto psi7 = superposition(l, {{kI * std::polar(r2, 5 * pi * kA), "g,i,i,0,1"}, {r2, "g,g,g,1,0"}});
    EXPECT_LT(max_abs_diff(s, psi7), 1e-10);
}

TEST(DynamicsCheckpoint, WSourceAndFirstAtoms) {
    auto l = layout_of({"As", "A1", "A2"});
    auto s = basis(l, "e,g,g,0,0");
    s = apply_rabi(s, "As", Mode::C1, 2 * std::acos(0.5), kCfg);
    s = apply_rabi(s, "As", Mode::C2, pi, kCfg);
    auto phi1 = superposition(l, {{kI * std::polar(0.5, pi * kA), "g,g,g,0,1"}, {std::sqrt(3.0) / 2, "g,g,g,1,0"}});
    EXPECT_LT(max_abs_diff(s, phi1), 1e-10);

    const double t2 = 2 * std::acos(std::sqrt(2.0 / 3.0));
    s = apply_rabi(s, "A1", Mode::C1, t2, kCfg);
    s = apply_rabi(s, "A2", Mode::C1, pi / 2, kCfg);
    auto phi3 = superposition(l, {{kI * std::polar(0.5, kA * (1.5 * pi + t2)), "g,g,g,0,1"},
                                  {0.5, "g,g,g,1,0"},
                                  {-0.5, "g,g,e,0,0"},
                                  {-0.5, "g,e,g,0,0"}});
    EXPECT_LT(max_abs_diff(s, phi3), 1e-10);
}
