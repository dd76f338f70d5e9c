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

#include "cqed/hilbert.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>

namespace cqed {

char level_char(Level level) {
    switch (level) {
        case Level::e:
            return 'e';
        case Level::g:
            return 'g';
        case Level::i:
            return 'i';
    }
    return '?';
}

Level level_from_char(char c) {
    auto level = parse_level(std::string_view(&c, 1));
    if (!level) {
        throw std::invalid_argument(std::string("unknown atomic level '") + c + "'");
    }
    return *level;
}

std::optional<Level> parse_level(std::string_view text) {
    if (text == "e") return Level::e;
    if (text == "g") return Level::g;
    if (text == "i") return Level::i;
    return std::nullopt;
}

std::string_view mode_name(Mode mode) { return mode == Mode::C1 ? "C1" : "C2"; }

std::optional<Mode> parse_mode(std::string_view text) {
    if (text == "C1") return Mode::C1;
    if (text == "C2") return Mode::C2;
    return std::nullopt;
}

void SystemConfig::validate() const {
    if (!(omega_rabi > 0.0) || !std::isfinite(omega_rabi)) {
        throw std::invalid_argument("omega_rabi must be positive and finite");
    }
    if (!(delta > 0.0) || !std::isfinite(delta)) {
        throw std::invalid_argument("delta must be positive and finite");
    }
    if (n_max < 1) {
        throw std::invalid_argument("n_max must be at least 1");
    }
}

SubsystemLayout::SubsystemLayout(std::vector<Subsystem> subsystems) : subsystems_(std::move(subsystems)) {
    bool seen[2] = {false, false};
    std::set<std::string, std::less<>> names;
    for (std::size_t k = 0; k < subsystems_.size(); ++k) {
        const auto &s = subsystems_[k];
        if (!names.insert(s.name).second) {
            throw std::invalid_argument("duplicate subsystem name '" + s.name + "'");
        }
        if (s.is_atom()) {
            if (s.dim != kAtomDim) {
                throw std::invalid_argument("atom '" + s.name + "' must have dimension 3");
            }
            continue;
        }
        auto mode = parse_mode(s.name);
        if (!mode) {
            throw std::invalid_argument("mode subsystems must be named C1 or C2, got '" + s.name + "'");
        }
        if (s.dim < 2) {
            throw std::invalid_argument("mode dimension must be at least 2");
        }
        seen[static_cast<int>(*mode)] = true;
        mode_index_[static_cast<int>(*mode)] = k;
    }
    if (!seen[0] || !seen[1]) {
        throw std::invalid_argument("layout needs both cavity modes C1 and C2");
    }
    if (subsystems_[mode_index_[0]].dim != subsystems_[mode_index_[1]].dim) {
        throw std::invalid_argument("C1 and C2 must share the same Fock truncation");
    }
    strides_.assign(subsystems_.size(), 1);
    for (std::size_t k = subsystems_.size(); k-- > 0;) {
        strides_[k] = dimension_;
        dimension_ *= static_cast<std::size_t>(subsystems_[k].dim);
    }
}

SubsystemLayout SubsystemLayout::atoms_then_modes(const std::vector<std::string> &atom_names, int n_max) {
    if (n_max < 1) {
        throw std::invalid_argument("n_max must be at least 1");
    }
    std::vector<Subsystem> subs;
    subs.reserve(atom_names.size() + 2);
    for (const auto &name : atom_names) {
        subs.push_back({Subsystem::Kind::Atom, name, kAtomDim});
    }
    subs.push_back({Subsystem::Kind::Mode, "C1", n_max + 1});
    subs.push_back({Subsystem::Kind::Mode, "C2", n_max + 1});
    return SubsystemLayout(std::move(subs));
}

std::optional<std::size_t> SubsystemLayout::find(std::string_view name) const {
    for (std::size_t k = 0; k < subsystems_.size(); ++k) {
        if (subsystems_[k].name == name) return k;
    }
    return std::nullopt;
}

std::size_t SubsystemLayout::atom_index(std::string_view name) const {
    auto k = find(name);
    if (!k || !subsystems_[*k].is_atom()) {
        throw DimensionError("no atom named '" + std::string(name) + "' in layout");
    }
    return *k;
}

std::vector<std::size_t> SubsystemLayout::atom_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < subsystems_.size(); ++k) {
        if (subsystems_[k].is_atom()) out.push_back(k);
    }
    return out;
}

std::size_t flat_index(const SubsystemLayout &layout, const BasisLabel &label) {
    if (label.levels.size() != layout.size()) {
        throw DimensionError("basis label has " + std::to_string(label.levels.size()) + " entries, layout has " +
                             std::to_string(layout.size()));
    }
    std::size_t flat = 0;
    for (std::size_t k = 0; k < layout.size(); ++k) {
        int v = label.levels[k];
        if (v < 0 || v >= layout[k].dim) {
            throw DimensionError("level " + std::to_string(v) + " out of range for subsystem '" + layout[k].name + "'");
        }
        flat += static_cast<std::size_t>(v) * layout.stride(k);
    }
    return flat;
}

BasisLabel basis_label(const SubsystemLayout &layout, std::size_t flat) {
    if (flat >= layout.dimension()) {
        throw DimensionError("flat index out of range");
    }
    BasisLabel label;
    label.levels.resize(layout.size());
    for (std::size_t k = 0; k < layout.size(); ++k) {
        label.levels[k] = layout.digit(flat, k);
    }
    return label;
}

BasisLabel parse_label(const SubsystemLayout &layout, std::string_view text) {
    std::vector<std::string_view> tokens;
    for (;;) {
        auto comma = text.find(',');
        auto tok = text.substr(0, comma);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        tokens.push_back(tok);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    if (tokens.size() != layout.size()) {
        throw DimensionError("basis label has " + std::to_string(tokens.size()) + " entries, layout has " +
                             std::to_string(layout.size()));
    }
    BasisLabel label;
    for (std::size_t k = 0; k < layout.size(); ++k) {
        auto tok = tokens[k];
        if (layout[k].is_atom()) {
            auto level = parse_level(tok);
            if (!level) {
                throw DimensionError("bad atomic level '" + std::string(tok) + "' for '" + layout[k].name + "'");
            }
            label.levels.push_back(static_cast<int>(*level));
        } else {
            int n = -1;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), n);
            if (ec != std::errc() || ptr != tok.data() + tok.size()) {
                throw DimensionError("bad photon number '" + std::string(tok) + "' for '" + layout[k].name + "'");
            }
            label.levels.push_back(n);
        }
    }
    flat_index(layout, label);
    return label;
}

std::string format_label(const SubsystemLayout &layout, const BasisLabel &label) {
    std::string out = "|";
    for (std::size_t k = 0; k < layout.size(); ++k) {
        if (k) out += ',';
        if (layout[k].is_atom()) {
            out += level_char(static_cast<Level>(label.levels[k]));
        } else {
            out += std::to_string(label.levels[k]);
        }
    }
    out += '>';
    return out;
}

QuantumState::QuantumState(std::shared_ptr<const SubsystemLayout> layout, std::vector<Complex> amplitudes,
                           double elapsed_interaction_time)
    : layout_(std::move(layout)), amplitudes_(std::move(amplitudes)), elapsed_(elapsed_interaction_time) {
    if (!layout_) {
        throw std::invalid_argument("state needs a layout");
    }
    if (amplitudes_.size() != layout_->dimension()) {
        throw DimensionError("amplitude vector length " + std::to_string(amplitudes_.size()) +
                             " does not match layout dimension " + std::to_string(layout_->dimension()));
    }
}

double QuantumState::norm() const {
    double s = 0.0;
    for (const auto &a : amplitudes_) s += std::norm(a);
    return std::sqrt(s);
}

QuantumState make_state(std::shared_ptr<const SubsystemLayout> layout, const BasisLabel &label) {
    std::size_t flat = flat_index(*layout, label);
    std::vector<Complex> amps(layout->dimension(), Complex{0.0, 0.0});
    amps[flat] = 1.0;
    return QuantumState(std::move(layout), std::move(amps));
}

Complex amplitude(const QuantumState &state, const BasisLabel &label) {
    return state.amplitudes()[flat_index(state.layout(), label)];
}

Complex inner_product(const QuantumState &a, const QuantumState &b) {
    if (!(a.layout() == b.layout())) {
        throw LayoutMismatch("inner product of states with different layouts");
    }
    Complex s{0.0, 0.0};
    auto x = a.amplitudes();
    auto y = b.amplitudes();
    for (std::size_t k = 0; k < x.size(); ++k) s += std::conj(x[k]) * y[k];
    return s;
}

Eigen::MatrixXcd reduced_density_matrix(const QuantumState &state, std::span<const std::size_t> keep) {
    const auto &layout = state.layout();
    if (keep.empty()) {
        throw std::invalid_argument("reduced density matrix needs at least one kept subsystem");
    }
    std::vector<std::size_t> kept(keep.begin(), keep.end());
    std::sort(kept.begin(), kept.end());
    if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
        throw std::invalid_argument("duplicate subsystem in keep set");
    }
    if (kept.back() >= layout.size()) {
        throw DimensionError("kept subsystem index out of range");
    }
    std::vector<std::size_t> traced;
    for (std::size_t k = 0; k < layout.size(); ++k) {
        if (!std::binary_search(kept.begin(), kept.end(), k)) traced.push_back(k);
    }

    // Split every flat index into (kept index, traced index) using mixed radix.
    auto sub_index = [&](std::size_t flat, const std::vector<std::size_t> &subs) {
        std::size_t idx = 0;
        for (auto k : subs) idx = idx * layout[k].dim + layout.digit(flat, k);
        return idx;
    };
    std::size_t dk = 1, dt = 1;
    for (auto k : kept) dk *= layout[k].dim;
    for (auto k : traced) dt *= layout[k].dim;

    Eigen::MatrixXcd psi = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dt));
    auto amps = state.amplitudes();
    for (std::size_t flat = 0; flat < amps.size(); ++flat) {
        psi(static_cast<Eigen::Index>(sub_index(flat, kept)), static_cast<Eigen::Index>(sub_index(flat, traced))) =
            amps[flat];
    }
    return psi * psi.adjoint();
}

double purity(const Eigen::MatrixXcd &rho) { return (rho * rho).trace().real(); }

}  // namespace cqed
