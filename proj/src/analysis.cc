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

#include "cqed/analysis.h"

#include <algorithm>
#include <numbers>
#include <stdexcept>

namespace cqed {

using std::numbers::pi;

namespace {

std::shared_ptr<const SubsystemLayout> chain_layout(int n) {
    std::vector<std::string> names;
    for (int k = 1; k <= n; ++k) names.push_back("A" + std::to_string(k));
    return std::make_shared<const SubsystemLayout>(SubsystemLayout::atoms_then_modes(names));
}

void check_target_n(int n) {
    if (n < 2) throw std::invalid_argument("target state needs at least 2 atoms, got " + std::to_string(n));
}

BasisLabel chain_label(int n, const std::vector<Level> &levels) {
    BasisLabel label;
    for (int k = 0; k < n; ++k) label.levels.push_back(static_cast<int>(levels[static_cast<std::size_t>(k)]));
    label.levels.push_back(0);
    label.levels.push_back(0);
    return label;
}

}  // namespace

QuantumState target_ghz(int n, double phase) {
    check_target_n(n);
    auto layout = chain_layout(n);
    std::vector<Complex> amps(layout->dimension(), 0.0);
    std::vector<Level> upper(static_cast<std::size_t>(n), Level::i);
    std::vector<Level> lower(static_cast<std::size_t>(n), Level::g);
    upper[n - 2] = Level::g;
    upper[n - 1] = Level::e;
    lower[n - 2] = Level::e;
    lower[n - 1] = Level::g;
    const double r = 1.0 / std::sqrt(2.0);
    amps[flat_index(*layout, chain_label(n, upper))] = std::polar(r, phase);
    amps[flat_index(*layout, chain_label(n, lower))] = r;
    return QuantumState(layout, std::move(amps));
}

QuantumState target_w(int n, double phase) {
    check_target_n(n);
    auto layout = chain_layout(n);
    std::vector<Complex> amps(layout->dimension(), 0.0);
    const double r = 1.0 / std::sqrt(static_cast<double>(n));
    for (int k = 0; k < n; ++k) {
        std::vector<Level> levels(static_cast<std::size_t>(n), Level::g);
        levels[k] = Level::e;
        amps[flat_index(*layout, chain_label(n, levels))] = k == n - 1 ? std::polar(r, phase) : Complex(r);
    }
    return QuantumState(layout, std::move(amps));
}

double ghz_relative_phase(int n, const SystemConfig &config) {
    return (2 * n - 1) * pi * config.delta / config.omega_rabi + n * pi;
}

double w_relative_phase(int n, const SystemConfig &config) {
    double angles = 3.0 * pi;
    for (int k = 1; k <= n - 2; ++k) {
        angles += 2.0 * std::acos(std::sqrt(static_cast<double>(n - k - 1) / static_cast<double>(n - k)));
    }
    return angles * config.delta / config.omega_rabi;
}

double fidelity_up_to_global_phase(const QuantumState &a, const QuantumState &b) {
    return std::norm(inner_product(a, b));
}

double chain_fidelity(const QuantumState &state, const std::vector<std::string> &atoms, const QuantumState &target) {
    const auto &layout = state.layout();
    const auto &tl = target.layout();
    if (tl.size() != atoms.size() + 2) throw LayoutMismatch("target layout does not match the chain");
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < atoms.size(); ++k) {
        if (!tl[k].is_atom() || tl[k].name != atoms[k]) throw LayoutMismatch("target atom order differs from chain");
        keep.push_back(layout.atom_index(atoms[k]));
    }
    if (!std::is_sorted(keep.begin(), keep.end())) {
        throw std::invalid_argument("chain atoms must be listed in layout order");
    }
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(std::pow(kAtomDim, atoms.size())));
    auto amps = target.amplitudes();
    for (std::size_t flat = 0; flat < amps.size(); ++flat) {
        if (amps[flat] == Complex(0.0)) continue;
        if (tl.digit(flat, tl.mode_index(Mode::C1)) != 0 || tl.digit(flat, tl.mode_index(Mode::C2)) != 0) {
            throw std::invalid_argument("chain target must have empty cavity modes");
        }
        std::size_t idx = 0;
        for (std::size_t k = 0; k < atoms.size(); ++k) idx = idx * kAtomDim + tl.digit(flat, k);
        v(static_cast<Eigen::Index>(idx)) = amps[flat];
    }
    const Eigen::MatrixXcd rho = reduced_density_matrix(state, keep);
    return (v.adjoint() * rho * v)(0, 0).real();
}

double vacuum_probability(const QuantumState &state) {
    const auto &layout = state.layout();
    const std::size_t c1 = layout.mode_index(Mode::C1), c2 = layout.mode_index(Mode::C2);
    double p = 0.0;
    auto amps = state.amplitudes();
    for (std::size_t flat = 0; flat < amps.size(); ++flat) {
        if (layout.digit(flat, c1) == 0 && layout.digit(flat, c2) == 0) p += std::norm(amps[flat]);
    }
    return p;
}

double ideal_bell_signal(double phi, Sign branch, double eta) {
    return static_cast<int>(branch) * std::cos(phi + eta);
}

double bell_eta(const SystemConfig &config) { return 5.0 * pi * config.delta / config.omega_rabi; }

double ideal_probe_probability(double T, Sign branch, const SystemConfig &config) {
    const double arg = config.delta * T + 4.0 * pi * config.delta / config.omega_rabi;
    return 0.5 * (1.0 + static_cast<int>(branch) * std::cos(arg));
}

double ghz_detection_theta(const SystemConfig &config) { return 6.0 * pi * config.delta / config.omega_rabi; }

double ideal_ghz_correlation(double phi, double T, Sign branch, const SystemConfig &config) {
    return -static_cast<int>(branch) * std::cos(T * config.delta - phi + ghz_detection_theta(config));
}

double w_detection_theta(const SystemConfig &config, double tb_angle) {
    return (2.5 * pi + tb_angle) / config.omega_rabi;
}

double ideal_w_probe_probability(double T1, double T2, const SystemConfig &config, double tb_angle) {
    return 0.5 * (1.0 + std::cos(config.delta * (T1 + T2 + w_detection_theta(config, tb_angle))));
}

double estimate_max_chain(double lifetime, double t_pi, double epsilon) {
    if (!(lifetime > 0.0) || !(t_pi > 0.0)) throw std::invalid_argument("lifetime and T_pi must be positive");
    if (!(epsilon > 0.0 && epsilon <= 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1]");
    return lifetime * epsilon / 6.0 / t_pi;
}

CosineFit fit_cosine(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("fit_cosine: x and y differ in length");
    if (x.size() < 3) throw std::invalid_argument("fit_cosine needs at least three points");
    const auto n = static_cast<Eigen::Index>(x.size());
    Eigen::MatrixXd a(n, 3);
    Eigen::VectorXd b(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        a(k, 0) = 1.0;
        a(k, 1) = std::cos(x[k]);
        a(k, 2) = std::sin(x[k]);
        b(k) = y[k];
    }
    const Eigen::Vector3d c = a.colPivHouseholderQr().solve(b);
    CosineFit fit{c(0), std::hypot(c(1), c(2)), std::atan2(-c(2), c(1)), 0.0};
    fit.max_residual = (a * c - b).cwiseAbs().maxCoeff();
    return fit;
}

}  // namespace cqed
