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

#ifndef CQED_PROGRAM_H
#define CQED_PROGRAM_H

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cqed/dynamics.h"
#include "cqed/expr.h"
#include "cqed/hilbert.h"
#include "cqed/measurement.h"

namespace cqed {

// ---------------------------------------------------------------------------
// Program text format (UTF-8, one statement per line, '#' starts a comment):
//
//   config omega=<expr> delta=<expr>        angular frequencies, rad/s
//   modes nmax=<int>                        Fock truncation per mode
//   param <name>[=<expr>]                   free parameter, optional default
//   atom <id> init=<e|g|i>
//   rabi <atom> <C1|C2> angle=<expr>
//   ramsey <atom> <R1|R2> transition=<e-g|g-i> angle=<expr> phase=<expr>
//   delay <expr>                            seconds
//   measure <atom>
//   postselect <atom> <level>
//   label <atom> <level>=<column>...        conditions the signal on an outcome
//   observe <atom> <level>=<weight>...      signal factor per outcome (0 if unlisted)
//
// Parameters are referenced as $name inside expressions.
// ---------------------------------------------------------------------------

enum class Zone : std::uint8_t { R1, R2 };

struct AtomDecl {
    std::string name;
    Level init;
    bool operator==(const AtomDecl &) const = default;
};

struct ParamDecl {
    std::string name;
    std::optional<Expr> default_value;
    bool operator==(const ParamDecl &) const = default;
};

struct ConfigOverrides {
    std::optional<Expr> omega;
    std::optional<Expr> delta;
    std::optional<int> n_max;
    bool operator==(const ConfigOverrides &) const = default;
};

struct RabiOp {
    std::string atom;
    Mode mode;
    Expr angle;
    bool operator==(const RabiOp &) const = default;
};

struct RamseyOp {
    std::string atom;
    Zone zone;
    Transition transition;
    Expr angle;
    Expr phase;
    bool operator==(const RamseyOp &) const = default;
};

struct DelayOp {
    Expr duration;
    bool operator==(const DelayOp &) const = default;
};

struct MeasureOp {
    std::string atom;
    bool operator==(const MeasureOp &) const = default;
};

/// Measures `atom` (unless already measured) and aborts the run when the
/// outcome differs from `level`.
struct PostselectOp {
    std::string atom;
    Level level;
    bool operator==(const PostselectOp &) const = default;
};

using Instruction = std::variant<RabiOp, RamseyOp, DelayOp, MeasureOp, PostselectOp>;

struct LabelDecl {
    std::string atom;
    std::vector<std::pair<Level, std::string>> columns;
    bool operator==(const LabelDecl &) const = default;
};

struct ObserveDecl {
    std::string atom;
    LevelDistribution weights{0.0, 0.0, 0.0};
    bool operator==(const ObserveDecl &) const = default;
};

/// Correlation signal E[prod_k w_k(outcome_k) | label outcome, postselection].
struct SignalSpec {
    std::optional<LabelDecl> label;
    std::vector<ObserveDecl> observables;

    bool empty() const { return observables.empty(); }
    /// Column names: one per label entry, or "signal" without a label.
    std::vector<std::string> columns() const;
    bool operator==(const SignalSpec &) const = default;
};

struct PulseProgram {
    ConfigOverrides config;
    std::vector<AtomDecl> atoms;
    std::vector<ParamDecl> params;
    std::vector<Instruction> instructions;
    SignalSpec signal;
    /// Source line per instruction (diagnostics only; ignored by ==).
    std::vector<int> instruction_lines;

    /// Parameters without a default value.
    std::vector<std::string> free_parameters() const;
    bool has_parameter(std::string_view name) const;

    bool operator==(const PulseProgram &other) const;
};

struct Diagnostic {
    int line;
    int column;
    std::string message;
};

class ProgramError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// All diagnostics found in one pass over the source.
class ParseError : public ProgramError {
   public:
    explicit ParseError(std::vector<Diagnostic> diagnostics);
    const std::vector<Diagnostic> &diagnostics() const { return diagnostics_; }

   private:
    std::vector<Diagnostic> diagnostics_;
};

/// Failure while binding parameters or evaluating expressions.
class BindError : public ProgramError {
   public:
    using ProgramError::ProgramError;
};

class UnboundParameterError : public BindError {
   public:
    explicit UnboundParameterError(std::vector<std::string> names);
    const std::vector<std::string> &names() const { return names_; }

   private:
    std::vector<std::string> names_;
};

class UnknownParameterError : public BindError {
   public:
    explicit UnknownParameterError(const std::string &name)
        : BindError("unknown parameter '" + name + "'"), name_(name) {}
    const std::string &name() const { return name_; }

   private:
    std::string name_;
};

PulseProgram parse(std::string_view text);
std::string serialize(const PulseProgram &program);

/// Applies the program's config/modes lines on top of `base`.
SystemConfig apply_overrides(const PulseProgram &program, SystemConfig base);

/// Instruction with every expression evaluated and the atom resolved.
struct BoundStep {
    enum class Kind : std::uint8_t { Rabi, Ramsey, Delay, Measure, Postselect };
    Kind kind;
    std::string atom;
    Mode mode = Mode::C1;
    Transition transition = Transition::GI;
    double angle = 0.0;
    double phase = 0.0;
    double duration = 0.0;
    Level level = Level::g;
    int line = 0;
};

struct BoundProgram {
    SystemConfig config;
    ParamValues params;
    QuantumState initial;
    std::vector<BoundStep> steps;
    SignalSpec signal;
};

/// Resolves parameters (bindings override defaults) and evaluates every
/// expression. The config is used as given; see apply_overrides.
BoundProgram bind_program(const PulseProgram &program, const ParamValues &bindings, const SystemConfig &config);

/// Applies a unitary step (Rabi, Ramsey or Delay).
QuantumState apply_step(QuantumState state, const BoundStep &step, const SystemConfig &config);

struct RunResult {
    QuantumState state;
    /// State immediately before the first measurement, when there is one.
    std::optional<QuantumState> prepared;
    MeasurementRecord record;
};

/// Executes the program with sampled measurements. A failed postselect stops
/// the run and returns the record with postselect_pass = false.
RunResult run(const BoundProgram &program, Rng &rng);
RunResult run(const PulseProgram &program, const ParamValues &bindings, const SystemConfig &config, Rng &rng);
/// Seeds a fresh generator from config.rng_seed.
RunResult run(const PulseProgram &program, const ParamValues &bindings, const SystemConfig &config);

}  // namespace cqed

#endif
