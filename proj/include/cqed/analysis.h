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

#ifndef CQED_ANALYSIS_H
#define CQED_ANALYSIS_H

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "cqed/hilbert.h"

namespace cqed {

enum class Sign : int { Plus = 1, Minus = -1 };

/// Atoms-only targets on the layout {A1..An, C1, C2} with both modes empty.
///
/// GHZ: (e^{i phase}|i..i,g,e> + |g..g,e,g>) / sqrt(2).
/// W: (e^{i phase}|g..g,e> + |g..g,e,g> + ... + |e,g..g>) / sqrt(n).
/// Throws std::invalid_argument for n < 2 (GHZ with n = 2 is |g,e> + |e,g>).
QuantumState target_ghz(int n, double phase = 0.0);
QuantumState target_w(int n, double phase = 0.0);

/// Relative phase of the GHZ chain output: (2n-1) pi delta/Omega + n pi.
double ghz_relative_phase(int n, const SystemConfig &config);

/// Relative phase of the W chain output on the last atom's branch:
/// (delta/Omega)(3 pi + sum of the chain atoms' Rabi angles).
double w_relative_phase(int n, const SystemConfig &config);

/// |<a|b>|^2. Throws LayoutMismatch for different layouts.
double fidelity_up_to_global_phase(const QuantumState &a, const QuantumState &b);

/// Fidelity of the reduced state of `atoms` in `state` with a pure target
/// whose layout lists the same atoms (in order) plus C1 and C2. The target's
/// mode digits must be zero.
double chain_fidelity(const QuantumState &state, const std::vector<std::string> &atoms, const QuantumState &target);

/// Probability that both cavity modes are empty.
double vacuum_probability(const QuantumState &state);

/// +-cos(phi + eta).
double ideal_bell_signal(double phi, Sign branch, double eta);
/// 5 pi delta/Omega.
double bell_eta(const SystemConfig &config);

/// (1 +- cos(delta T + 4 pi delta/Omega)) / 2.
double ideal_probe_probability(double T, Sign branch, const SystemConfig &config);

/// 6 pi delta/Omega.
double ghz_detection_theta(const SystemConfig &config);
/// -+cos(T delta - phi + theta) with theta = 6 pi delta/Omega.
double ideal_ghz_correlation(double phi, double T, Sign branch, const SystemConfig &config);

/// (5 pi/2 + tb_angle) / Omega, in seconds.
double w_detection_theta(const SystemConfig &config, double tb_angle);
/// (1 + cos(delta (T1 + T2 + theta))) / 2. The default angle reproduces the
/// published constant; the equal-amplitude sequence needs twice that angle.
double ideal_w_probe_probability(double T1, double T2, const SystemConfig &config,
                                 double tb_angle = std::acos(std::sqrt(2.0 / 3.0)));

/// (T_lifetime / T_pi) * epsilon / 6. Throws std::invalid_argument for
/// nonpositive times or epsilon outside (0, 1].
double estimate_max_chain(double lifetime, double t_pi, double epsilon);

struct CosineFit {
    double offset;
    double amplitude;
    /// y = offset + amplitude * cos(x + phase), phase in (-pi, pi].
    double phase;
    double max_residual;
};

/// Least-squares fit of y = c0 + c1 cos x + c2 sin x. Throws
/// std::invalid_argument for fewer than three points or mismatched sizes.
CosineFit fit_cosine(std::span<const double> x, std::span<const double> y);

}  // namespace cqed

#endif
