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

#ifndef CQED_HILBERT_H
#define CQED_HILBERT_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace cqed {

using Complex = std::complex<double>;

/// Circular Rydberg levels. The numeric value is the basis index inside an
/// atom subsystem, ordered by descending principal quantum number.
enum class Level : std::uint8_t { e = 0, g = 1, i = 2 };

inline constexpr int kAtomDim = 3;

enum class Mode : std::uint8_t { C1, C2 };

char level_char(Level level);
Level level_from_char(char c);
std::optional<Level> parse_level(std::string_view text);
std::string_view mode_name(Mode mode);
std::optional<Mode> parse_mode(std::string_view text);

/// Thrown when a basis label or subsystem index falls outside the layout.
class DimensionError : public std::out_of_range {
   public:
    using std::out_of_range::out_of_range;
};

/// Thrown when two states that must share a layout do not.
class LayoutMismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Physical constants of one simulation. Angular frequencies in rad/s.
struct SystemConfig {
    double omega_rabi = 2.0 * std::numbers::pi * 47e3;
    double delta = 2.0 * std::numbers::pi * 128.3e3;
    int n_max = 1;
    std::uint64_t rng_seed = 0;

    /// Throws std::invalid_argument on nonpositive frequencies or n_max < 1.
    void validate() const;
    bool operator==(const SystemConfig &) const = default;
};

struct Subsystem {
    enum class Kind : std::uint8_t { Atom, Mode };
    Kind kind;
    std::string name;
    int dim;

    bool is_atom() const { return kind == Kind::Atom; }
    bool operator==(const Subsystem &) const = default;
};

/// Ordered tensor-product structure. The last subsystem varies fastest in
/// the flat amplitude index.
class SubsystemLayout {
   public:
    /// Validates: exactly two modes named C1 and C2, unique atom names,
    /// atoms of dimension 3, modes of dimension n_max + 1 >= 2.
    explicit SubsystemLayout(std::vector<Subsystem> subsystems);

    /// Atoms in the given order followed by C1 and C2.
    static SubsystemLayout atoms_then_modes(const std::vector<std::string> &atom_names, int n_max = 1);

    std::size_t size() const { return subsystems_.size(); }
    const Subsystem &operator[](std::size_t k) const { return subsystems_[k]; }
    const std::vector<Subsystem> &subsystems() const { return subsystems_; }
    std::size_t dimension() const { return dimension_; }
    std::size_t stride(std::size_t k) const { return strides_[k]; }
    int n_max() const { return subsystems_[mode_index_[0]].dim - 1; }

    std::size_t mode_index(Mode mode) const { return mode_index_[static_cast<int>(mode)]; }
    /// Index of the named atom; throws DimensionError when absent.
    std::size_t atom_index(std::string_view name) const;
    std::optional<std::size_t> find(std::string_view name) const;
    std::vector<std::size_t> atom_indices() const;

    /// Level of subsystem k in flat basis index.
    int digit(std::size_t flat, std::size_t k) const { return static_cast<int>((flat / strides_[k]) % subsystems_[k].dim); }

    bool operator==(const SubsystemLayout &other) const { return subsystems_ == other.subsystems_; }

   private:
    std::vector<Subsystem> subsystems_;
    std::vector<std::size_t> strides_;
    std::size_t dimension_ = 1;
    std::size_t mode_index_[2] = {0, 0};
};

/// Per-subsystem level assignment: atom levels use Level's numeric value,
/// modes use the photon number.
struct BasisLabel {
    std::vector<int> levels;
    bool operator==(const BasisLabel &) const = default;
};

std::size_t flat_index(const SubsystemLayout &layout, const BasisLabel &label);
BasisLabel basis_label(const SubsystemLayout &layout, std::size_t flat);
/// Parses "e,g,1,0" style labels (atoms by letter, modes by number).
BasisLabel parse_label(const SubsystemLayout &layout, std::string_view text);
std::string format_label(const SubsystemLayout &layout, const BasisLabel &label);

/// Normalized amplitude vector over a shared, immutable layout.
class QuantumState {
   public:
    QuantumState(std::shared_ptr<const SubsystemLayout> layout, std::vector<Complex> amplitudes,
                 double elapsed_interaction_time = 0.0);

    const SubsystemLayout &layout() const { return *layout_; }
    const std::shared_ptr<const SubsystemLayout> &layout_ptr() const { return layout_; }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    std::span<Complex> mutable_amplitudes() { return amplitudes_; }
    std::size_t dimension() const { return amplitudes_.size(); }

    /// Seconds spent in timed instructions (Rabi rotations and delays).
    double elapsed_interaction_time() const { return elapsed_; }
    void advance_time(double seconds) { elapsed_ += seconds; }

    double norm() const;

   private:
    std::shared_ptr<const SubsystemLayout> layout_;
    std::vector<Complex> amplitudes_;
    double elapsed_;
};

QuantumState make_state(std::shared_ptr<const SubsystemLayout> layout, const BasisLabel &label);
Complex amplitude(const QuantumState &state, const BasisLabel &label);
/// <a|b>, conjugate-linear in a.
Complex inner_product(const QuantumState &a, const QuantumState &b);

/// Partial trace onto `keep` (subsystem indices, returned in ascending order
/// of index, last kept subsystem fastest).
Eigen::MatrixXcd reduced_density_matrix(const QuantumState &state, std::span<const std::size_t> keep);
double purity(const Eigen::MatrixXcd &rho);

}  // namespace cqed

#endif
