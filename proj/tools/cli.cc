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

#include "cli.h"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cqed/analysis.h"
#include "cqed/sequences.h"
#include "cqed/signal.h"

namespace cqed::cli {

namespace {

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

std::pair<std::string, std::string> split_assignment(const std::string &text, const char *what) {
    auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == text.size()) {
        throw UsageError(std::string("expected ") + what + " as name=value, got '" + text + "'");
    }
    return {text.substr(0, eq), text.substr(eq + 1)};
}

double number(const std::string &text, const std::string &name) {
    try {
        return Expr::parse(text).evaluate();
    } catch (const std::exception &e) {
        throw UsageError("invalid value '" + text + "' for " + name + ": " + e.what());
    }
}

ParamValues parse_sets(const std::vector<std::string> &sets) {
    ParamValues values;
    for (const auto &s : sets) {
        auto [name, value] = split_assignment(s, "--set");
        values[name] = number(value, name);
    }
    return values;
}

void apply_config_flag(const std::string &text, SystemConfig &config) {
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        auto [key, value] = split_assignment(item, "--config entry");
        if (key == "omega") {
            config.omega_rabi = number(value, key);
        } else if (key == "delta") {
            config.delta = number(value, key);
        } else if (key == "nmax") {
            const double n = number(value, key);
            if (n != std::floor(n) || n < 1) throw UsageError("nmax must be an integer >= 1");
            config.n_max = static_cast<int>(n);
        } else {
            throw UsageError("unknown --config key '" + key + "' (omega, delta, nmax)");
        }
    }
    try {
        config.validate();
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
}

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string &path, const std::string &text, std::ostream &out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file || !(file << text)) throw IoError("cannot write '" + path + "'");
}

// defaults < program file config lines < --config
SystemConfig resolve_config(const PulseProgram &program, const std::string &flag, std::uint64_t seed) {
    SystemConfig config = apply_overrides(program, SystemConfig{});
    if (!flag.empty()) apply_config_flag(flag, config);
    config.rng_seed = seed;
    return config;
}

struct RunOptions {
    std::string file;
    std::vector<std::string> sets;
    std::uint64_t seed = 0;
    std::string config;
    std::string target;
    std::vector<std::string> chain;
};

void cmd_run(const RunOptions &opt, std::ostream &out) {
    const PulseProgram program = parse(read_file(opt.file));
    const SystemConfig config = resolve_config(program, opt.config, opt.seed);
    const RunResult result = run(program, parse_sets(opt.sets), config);

    const auto &layout = result.state.layout();
    out << "final state:\n";
    auto amps = result.state.amplitudes();
    for (std::size_t flat = 0; flat < amps.size(); ++flat) {
        if (std::norm(amps[flat]) < kZeroProbability) continue;
        out << "  " << format_label(layout, basis_label(layout, flat)) << "  modulus " << fixed(std::abs(amps[flat]), 12)
            << "  phase " << fixed(std::arg(amps[flat]), 12) << '\n';
    }
    out << "measurement record (seed " << result.record.seed << ", postselect "
        << (result.record.postselect_pass ? "pass" : "fail") << "):\n";
    for (const auto &o : result.record.outcomes) {
        out << "  " << o.atom << ' ' << level_char(o.level) << "  p=" << fixed(o.probability, 12) << '\n';
    }

    if (opt.target.empty()) return;
    std::vector<std::string> chain = opt.chain;
    if (chain.empty()) {
        for (const auto &a : program.atoms) {
            if (a.name != "As") chain.push_back(a.name);
        }
    }
    const int n = static_cast<int>(chain.size());
    std::vector<std::string> names;
    for (int k = 1; k <= n; ++k) names.push_back("A" + std::to_string(k));
    QuantumState target = opt.target == "ghz" ? target_ghz(n, ghz_relative_phase(n, config))
                                              : target_w(n, w_relative_phase(n, config));
    // Targets use the names A1..An; rename to the requested chain.
    std::vector<Subsystem> subs;
    for (int k = 0; k < n; ++k) subs.push_back({Subsystem::Kind::Atom, chain[static_cast<std::size_t>(k)], kAtomDim});
    subs.push_back(target.layout()[static_cast<std::size_t>(n)]);
    subs.push_back(target.layout()[static_cast<std::size_t>(n) + 1]);
    QuantumState renamed(std::make_shared<const SubsystemLayout>(std::move(subs)),
                         {target.amplitudes().begin(), target.amplitudes().end()});
    const QuantumState &prepared = result.prepared ? *result.prepared : result.state;
    out << "fidelity vs " << opt.target << " target: " << fixed(chain_fidelity(prepared, chain, renamed), 9) << '\n';
}

struct SweepOptions {
    std::string file;
    std::vector<std::string> sweeps;
    std::vector<std::string> sets;
    std::string mode = "exact";
    std::uint64_t seed = 0;
    std::string config;
    std::string output;
};

GridAxis parse_axis(const std::string &text) {
    auto [name, range] = split_assignment(text, "--sweep");
    std::vector<std::string> parts;
    std::stringstream in(range);
    std::string part;
    while (std::getline(in, part, ':')) parts.push_back(part);
    if (parts.size() != 3) throw UsageError("expected --sweep name=start:stop:steps, got '" + text + "'");
    const double steps = number(parts[2], name + " steps");
    if (steps < 1 || steps != std::floor(steps)) throw UsageError("sweep steps must be a positive integer");
    return linspace(name, number(parts[0], name), number(parts[1], name), static_cast<std::size_t>(steps));
}

SweepMode parse_mode(const std::string &text) {
    if (text == "exact") return SweepMode::exact();
    if (text.rfind("sample:", 0) == 0) {
        const std::string k = text.substr(7);
        if (!k.empty() && k.find_first_not_of("0123456789") == std::string::npos && std::stoull(k) > 0) {
            return SweepMode::sampled(std::stoull(k));
        }
    }
    throw UsageError("expected --mode exact or sample:K, got '" + text + "'");
}

void cmd_sweep(const SweepOptions &opt, std::ostream &out) {
    std::vector<GridAxis> axes;
    for (const auto &s : opt.sweeps) axes.push_back(parse_axis(s));
    const SweepMode mode = parse_mode(opt.mode);
    const PulseProgram program = parse(read_file(opt.file));
    const SystemConfig config = resolve_config(program, opt.config, opt.seed);
    if (program.signal.empty()) throw UsageError("program has no observe lines; nothing to sweep");
    const SignalSweep sweep = sweep_signal(program, axes, parse_sets(opt.sets), config, mode);
    write_output(opt.output, sweep.to_csv(), out);
}

}  // namespace

int main(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Two-mode cavity QED pulse-program simulator", "cqed"};
    app.require_subcommand(1);

    std::string protocol;
    int n = 4;
    std::string build_out;
    auto *build = app.add_subcommand("build", "Write a canned pulse program");
    build->add_option("protocol", protocol, "ghz, w, detect-ghz, detect-w, bell-pair or bell-probe")
        ->required()
        ->check(CLI::IsMember({"ghz", "w", "detect-ghz", "detect-w", "bell-pair", "bell-probe"}));
    build->add_option("--n", n, "Chain length for ghz and w")->capture_default_str();
    build->add_option("-o,--out", build_out, "Output file (default stdout)");

    RunOptions run_opt;
    auto *run_cmd = app.add_subcommand("run", "Run a program once with sampled measurements");
    run_cmd->add_option("file", run_opt.file, "Program file")->required();
    run_cmd->add_option("--set", run_opt.sets, "Parameter binding name=value")->allow_extra_args(false);
    run_cmd->add_option("--seed", run_opt.seed, "Random seed")->capture_default_str();
    run_cmd->add_option("--config", run_opt.config, "omega=..,delta=..,nmax=.. (rad/s)");
    run_cmd->add_option("--target", run_opt.target, "Report fidelity against a ghz or w target")
        ->check(CLI::IsMember({"ghz", "w"}));
    run_cmd->add_option("--chain", run_opt.chain, "Chain atoms for --target (default: all but As)")->delimiter(',');

    SweepOptions sweep_opt;
    auto *sweep_cmd = app.add_subcommand("sweep", "Evaluate the program signal over a parameter grid");
    sweep_cmd->add_option("file", sweep_opt.file, "Program file")->required();
    sweep_cmd->add_option("--sweep", sweep_opt.sweeps, "Grid axis name=start:stop:steps (at most two)")
        ->required()
        ->allow_extra_args(false)
        ->expected(1, 2);
    sweep_cmd->add_option("--set", sweep_opt.sets, "Fixed parameter name=value")->allow_extra_args(false);
    sweep_cmd->add_option("--mode", sweep_opt.mode, "exact or sample:K")->capture_default_str();
    sweep_cmd->add_option("--seed", sweep_opt.seed, "Random seed for sampled mode")->capture_default_str();
    sweep_cmd->add_option("--config", sweep_opt.config, "omega=..,delta=..,nmax=.. (rad/s)");
    sweep_cmd->add_option("-o,--out", sweep_opt.output, "CSV file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*build) {
            write_output(build_out, serialize(canned_program(protocol, n)), out);
        } else if (*run_cmd) {
            cmd_run(run_opt, out);
        } else if (*sweep_cmd) {
            if (sweep_opt.sweeps.size() > 2) throw UsageError("at most two --sweep axes");
            cmd_sweep(sweep_opt, out);
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError &e) {
        for (const auto &d : e.diagnostics()) {
            err << "error: line " << d.line << ", column " << d.column << ": " << d.message << '\n';
        }
        return kExitUsage;
    } catch (const BindError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitOk;
}

}  // namespace cqed::cli
