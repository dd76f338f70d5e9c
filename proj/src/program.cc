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

#include "cqed/program.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace cqed {

std::vector<std::string> SignalSpec::columns() const {
    if (!label) return {"signal"};
    std::vector<std::string> out;
    for (const auto &[level, name] : label->columns) out.push_back(name);
    return out;
}

std::vector<std::string> PulseProgram::free_parameters() const {
    std::vector<std::string> out;
    for (const auto &p : params) {
        if (!p.default_value) out.push_back(p.name);
    }
    return out;
}

bool PulseProgram::has_parameter(std::string_view name) const {
    return std::any_of(params.begin(), params.end(), [&](const ParamDecl &p) { return p.name == name; });
}

bool PulseProgram::operator==(const PulseProgram &other) const {
    return config == other.config && atoms == other.atoms && params == other.params &&
           instructions == other.instructions && signal == other.signal;
}

namespace {

std::string join_diagnostics(const std::vector<Diagnostic> &diags) {
    std::string out;
    for (const auto &d : diags) {
        if (!out.empty()) out += '\n';
        out += "line " + std::to_string(d.line) + ", column " + std::to_string(d.column) + ": " + d.message;
    }
    return out;
}

std::string join_names(const std::vector<std::string> &names) {
    std::string out;
    for (const auto &n : names) {
        if (!out.empty()) out += ", ";
        out += n;
    }
    return out;
}

}  // namespace

ParseError::ParseError(std::vector<Diagnostic> diagnostics)
    : ProgramError(join_diagnostics(diagnostics)), diagnostics_(std::move(diagnostics)) {}

UnboundParameterError::UnboundParameterError(std::vector<std::string> names)
    : BindError("unbound parameter(s): " + join_names(names)), names_(std::move(names)) {}

namespace {

struct Token {
    std::string text;
    int column;  // 1-based
};

bool is_identifier(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

bool is_column_name(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '+' || c == '-';
    });
}

bool is_operator_char(char c) { return c == '+' || c == '-' || c == '*' || c == '/' || c == '=' || c == '('; }

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        if (pos >= line.size()) break;
        std::size_t start = pos;
        while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        tokens.push_back({std::string(line.substr(start, pos - start)), static_cast<int>(start) + 1});
    }
    return tokens;
}

// Re-joins "angle = 2 * pi" style statements into single tokens. Only used
// for statements whose arguments are expressions.
std::vector<Token> merge_expression_tokens(std::vector<Token> tokens) {
    std::vector<Token> out;
    int depth = 0;
    for (auto &tok : tokens) {
        bool join = false;
        if (!out.empty() && out.size() > 1) {
            const auto &prev = out.back().text;
            join = depth > 0 || is_operator_char(prev.back()) || is_operator_char(tok.text.front()) ||
                   tok.text.front() == ')' || tok.text.front() == '*';
        }
        for (char c : tok.text) {
            if (c == '(') ++depth;
            if (c == ')') --depth;
        }
        if (join) {
            out.back().text += tok.text;
        } else {
            out.push_back(std::move(tok));
        }
    }
    return out;
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

class ProgramParser {
   public:
    PulseProgram parse(std::string_view text) {
        int line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t nl = text.find('\n', pos);
            std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
            ++line_no;
            if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
            if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
            statement(line_no, raw);
            if (nl == std::string_view::npos) break;
            pos = nl + 1;
        }
        finish();
        if (!diags_.empty()) throw ParseError(std::move(diags_));
        return std::move(prog_);
    }

   private:
    struct Failed {};

    [[noreturn]] void fail(int column, const std::string &message) {
        diags_.push_back({line_, column, message});
        throw Failed{};
    }

    void statement(int line_no, std::string_view raw) {
        line_ = line_no;
        auto tokens = tokenize(raw);
        if (tokens.empty()) return;
        const std::string kw = tokens[0].text;
        static const std::set<std::string, std::less<>> expression_keywords = {"rabi", "ramsey", "delay", "param",
                                                                               "config"};
        if (expression_keywords.count(kw)) tokens = merge_expression_tokens(std::move(tokens));
        try {
            if (kw == "atom") {
                stmt_atom(tokens);
            } else if (kw == "modes") {
                stmt_modes(tokens);
            } else if (kw == "config") {
                stmt_config(tokens);
            } else if (kw == "param") {
                stmt_param(tokens);
            } else if (kw == "rabi") {
                stmt_rabi(tokens);
            } else if (kw == "ramsey") {
                stmt_ramsey(tokens);
            } else if (kw == "delay") {
                stmt_delay(tokens);
            } else if (kw == "measure") {
                stmt_measure(tokens);
            } else if (kw == "postselect") {
                stmt_postselect(tokens);
            } else if (kw == "label") {
                stmt_label(tokens);
            } else if (kw == "observe") {
                stmt_observe(tokens);
            } else {
                fail(tokens[0].column, "unknown statement '" + kw + "'");
            }
        } catch (const Failed &) {
        }
    }

    void expect_count(const std::vector<Token> &t, std::size_t lo, std::size_t hi, const char *usage) {
        if (t.size() < lo || t.size() > hi) {
            int col = t.size() > hi ? t[hi].column : t.back().column + static_cast<int>(t.back().text.size());
            fail(col, std::string("expected: ") + usage);
        }
    }

    // key=value arguments starting at token `first`.
    std::map<std::string, Token> keyed(const std::vector<Token> &t, std::size_t first,
                                       std::initializer_list<std::string_view> allowed) {
        std::map<std::string, Token> out;
        for (std::size_t k = first; k < t.size(); ++k) {
            auto eq = t[k].text.find('=');
            if (eq == std::string::npos || eq == 0) fail(t[k].column, "expected key=value, got '" + t[k].text + "'");
            std::string key = t[k].text.substr(0, eq);
            if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
                fail(t[k].column, "unknown argument '" + key + "'");
            }
            if (out.count(key)) fail(t[k].column, "duplicate argument '" + key + "'");
            Token value{t[k].text.substr(eq + 1), t[k].column + static_cast<int>(eq) + 1};
            if (value.text.empty()) fail(value.column, "missing value for '" + key + "'");
            out.emplace(std::move(key), std::move(value));
        }
        return out;
    }

    const Token &require(const std::map<std::string, Token> &args, const std::string &key, int column) {
        auto it = args.find(key);
        if (it == args.end()) fail(column, "missing argument '" + key + "='");
        return it->second;
    }

    enum class Sign { Any, NonNegative, Positive };

    Expr expression(const Token &tok, Sign sign, const char *what, bool allow_params = true) {
        Expr e = Expr::number(0.0);
        try {
            e = Expr::parse(tok.text);
        } catch (const ExprSyntaxError &err) {
            fail(tok.column + static_cast<int>(err.offset()), err.what());
        }
        auto names = e.parameters();
        if (!names.empty() && !allow_params) fail(tok.column, std::string(what) + " must not reference parameters");
        for (const auto &n : names) {
            if (!prog_.has_parameter(n)) {
                prog_.params.push_back({n, std::nullopt});
                auto_params_.insert(n);
            }
        }
        if (names.empty()) {
            double v = 0.0;
            try {
                v = e.evaluate();
            } catch (const ExprEvalError &err) {
                fail(tok.column, std::string(what) + ": " + err.what());
            }
            if (sign == Sign::NonNegative && v < 0.0) fail(tok.column, std::string(what) + " must be nonnegative");
            if (sign == Sign::Positive && !(v > 0.0)) fail(tok.column, std::string(what) + " must be positive");
        }
        return e;
    }

    std::string known_atom(const Token &tok) {
        if (!declared_.count(tok.text)) fail(tok.column, "undeclared atom '" + tok.text + "'");
        return tok.text;
    }

    std::string pulsable_atom(const Token &tok) {
        auto name = known_atom(tok);
        if (measured_.count(name)) fail(tok.column, "atom '" + name + "' was already measured");
        return name;
    }

    Level level_token(const Token &tok) {
        auto level = parse_level(tok.text);
        if (!level) fail(tok.column, "expected level e, g or i, got '" + tok.text + "'");
        return *level;
    }

    void push(Instruction ins) {
        prog_.instructions.push_back(std::move(ins));
        prog_.instruction_lines.push_back(line_);
    }

    void stmt_atom(const std::vector<Token> &t) {
        expect_count(t, 3, 3, "atom <id> init=<e|g|i>");
        const auto &id = t[1];
        if (!is_identifier(id.text)) fail(id.column, "invalid atom name '" + id.text + "'");
        if (id.text == "C1" || id.text == "C2") fail(id.column, "atom name clashes with cavity mode");
        if (declared_.count(id.text)) fail(id.column, "atom '" + id.text + "' already declared");
        auto args = keyed(t, 2, {"init"});
        Level init = level_token(require(args, "init", t[2].column));
        declared_.insert(id.text);
        prog_.atoms.push_back({id.text, init});
    }

    void stmt_modes(const std::vector<Token> &t) {
        expect_count(t, 1, 2, "modes [nmax=<int>]");
        if (seen_modes_) fail(t[0].column, "duplicate modes statement");
        seen_modes_ = true;
        auto args = keyed(t, 1, {"nmax"});
        if (auto it = args.find("nmax"); it != args.end()) {
            int n = 0;
            const auto &s = it->second.text;
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
            if (ec != std::errc() || ptr != s.data() + s.size() || n < 1) {
                fail(it->second.column, "nmax must be an integer >= 1");
            }
            prog_.config.n_max = n;
        }
    }

    void stmt_config(const std::vector<Token> &t) {
        expect_count(t, 2, 3, "config [omega=<expr>] [delta=<expr>]");
        if (seen_config_) fail(t[0].column, "duplicate config statement");
        seen_config_ = true;
        auto args = keyed(t, 1, {"omega", "delta"});
        if (auto it = args.find("omega"); it != args.end()) {
            prog_.config.omega = expression(it->second, Sign::Positive, "omega", false);
        }
        if (auto it = args.find("delta"); it != args.end()) {
            prog_.config.delta = expression(it->second, Sign::Positive, "delta", false);
        }
    }

    void stmt_param(const std::vector<Token> &t) {
        expect_count(t, 2, 2, "param <name>[=<expr>]");
        const auto &tok = t[1];
        auto eq = tok.text.find('=');
        std::string name = tok.text.substr(0, eq);
        if (!is_identifier(name)) fail(tok.column, "invalid parameter name '" + name + "'");
        if (auto_params_.count(name)) fail(tok.column, "parameter '" + name + "' declared after first use");
        if (prog_.has_parameter(name)) fail(tok.column, "parameter '" + name + "' already declared");
        std::optional<Expr> def;
        if (eq != std::string::npos) {
            Token value{tok.text.substr(eq + 1), tok.column + static_cast<int>(eq) + 1};
            if (value.text.empty()) fail(value.column, "missing default value");
            def = expression(value, Sign::Any, "parameter default", false);
        }
        prog_.params.push_back({name, def});
    }

    void stmt_rabi(const std::vector<Token> &t) {
        expect_count(t, 4, 4, "rabi <atom> <C1|C2> angle=<expr>");
        auto atom = pulsable_atom(t[1]);
        auto mode = parse_mode(t[2].text);
        if (!mode) fail(t[2].column, "expected cavity mode C1 or C2, got '" + t[2].text + "'");
        auto args = keyed(t, 3, {"angle"});
        Expr angle = expression(require(args, "angle", t[3].column), Sign::NonNegative, "Rabi angle");
        push(RabiOp{atom, *mode, angle});
    }

    void stmt_ramsey(const std::vector<Token> &t) {
        expect_count(t, 5, 6, "ramsey <atom> <R1|R2> transition=<e-g|g-i> angle=<expr> phase=<expr>");
        auto atom = pulsable_atom(t[1]);
        Zone zone;
        if (t[2].text == "R1") {
            zone = Zone::R1;
        } else if (t[2].text == "R2") {
            zone = Zone::R2;
        } else {
            fail(t[2].column, "expected Ramsey zone R1 or R2, got '" + t[2].text + "'");
        }
        auto args = keyed(t, 3, {"transition", "angle", "phase"});
        const auto &tr = require(args, "transition", t[3].column);
        auto transition = parse_transition(tr.text);
        if (!transition) fail(tr.column, "expected transition e-g or g-i, got '" + tr.text + "'");
        Expr angle = expression(require(args, "angle", t[3].column), Sign::NonNegative, "Ramsey angle");
        Expr phase = Expr::number(0.0);
        if (auto it = args.find("phase"); it != args.end()) phase = expression(it->second, Sign::Any, "Ramsey phase");
        push(RamseyOp{atom, zone, *transition, angle, phase});
    }

    void stmt_delay(const std::vector<Token> &t) {
        expect_count(t, 2, 2, "delay <expr>");
        push(DelayOp{expression(t[1], Sign::NonNegative, "delay duration")});
    }

    void stmt_measure(const std::vector<Token> &t) {
        expect_count(t, 2, 2, "measure <atom>");
        auto atom = pulsable_atom(t[1]);
        measured_.insert(atom);
        push(MeasureOp{atom});
    }

    void stmt_postselect(const std::vector<Token> &t) {
        expect_count(t, 3, 3, "postselect <atom> <e|g|i>");
        auto atom = known_atom(t[1]);
        if (postselected_.count(atom)) fail(t[1].column, "atom '" + atom + "' already postselected");
        Level level = level_token(t[2]);
        measured_.insert(atom);
        postselected_.insert(atom);
        push(PostselectOp{atom, level});
    }

    void stmt_label(const std::vector<Token> &t) {
        expect_count(t, 3, 5, "label <atom> <level>=<column>...");
        if (prog_.signal.label) fail(t[0].column, "duplicate label statement");
        LabelDecl decl{known_atom(t[1]), {}};
        std::set<std::string> names;
        std::set<Level> levels;
        for (std::size_t k = 2; k < t.size(); ++k) {
            auto eq = t[k].text.find('=');
            if (eq == std::string::npos) fail(t[k].column, "expected <level>=<column>");
            Level level = level_token({t[k].text.substr(0, eq), t[k].column});
            std::string col = t[k].text.substr(eq + 1);
            if (!is_column_name(col)) fail(t[k].column + static_cast<int>(eq) + 1, "invalid column name '" + col + "'");
            if (!levels.insert(level).second) fail(t[k].column, "level listed twice");
            if (!names.insert(col).second) fail(t[k].column, "column '" + col + "' listed twice");
            decl.columns.emplace_back(level, col);
        }
        label_line_ = line_;
        label_column_ = t[1].column;
        prog_.signal.label = std::move(decl);
    }

    void stmt_observe(const std::vector<Token> &t) {
        expect_count(t, 3, 5, "observe <atom> <level>=<weight>...");
        ObserveDecl decl{known_atom(t[1]), {0.0, 0.0, 0.0}};
        for (const auto &o : prog_.signal.observables) {
            if (o.atom == decl.atom) fail(t[1].column, "atom '" + decl.atom + "' already observed");
        }
        std::set<Level> levels;
        for (std::size_t k = 2; k < t.size(); ++k) {
            auto eq = t[k].text.find('=');
            if (eq == std::string::npos) fail(t[k].column, "expected <level>=<weight>");
            Level level = level_token({t[k].text.substr(0, eq), t[k].column});
            if (!levels.insert(level).second) fail(t[k].column, "level listed twice");
            Token value{t[k].text.substr(eq + 1), t[k].column + static_cast<int>(eq) + 1};
            if (value.text.empty()) fail(value.column, "missing weight");
            decl.weights[static_cast<std::size_t>(level)] = expression(value, Sign::Any, "weight", false).evaluate();
        }
        observe_lines_.emplace_back(line_, t[1].column);
        prog_.signal.observables.push_back(std::move(decl));
    }

    void finish() {
        const auto &sig = prog_.signal;
        if (sig.label && !measured_.count(sig.label->atom)) {
            diags_.push_back({label_line_, label_column_, "label atom '" + sig.label->atom + "' is never measured"});
        }
        for (std::size_t k = 0; k < sig.observables.size(); ++k) {
            if (!measured_.count(sig.observables[k].atom)) {
                diags_.push_back({observe_lines_[k].first, observe_lines_[k].second,
                                  "observed atom '" + sig.observables[k].atom + "' is never measured"});
            }
        }
        std::stable_sort(diags_.begin(), diags_.end(),
                         [](const Diagnostic &a, const Diagnostic &b) { return a.line < b.line; });
    }

    PulseProgram prog_;
    std::vector<Diagnostic> diags_;
    int line_ = 0;
    std::set<std::string, std::less<>> declared_;
    std::set<std::string, std::less<>> measured_;
    std::set<std::string, std::less<>> postselected_;
    std::set<std::string, std::less<>> auto_params_;
    bool seen_modes_ = false;
    bool seen_config_ = false;
    int label_line_ = 0;
    int label_column_ = 0;
    std::vector<std::pair<int, int>> observe_lines_;
};

}  // namespace

PulseProgram parse(std::string_view text) { return ProgramParser().parse(text); }

std::string serialize(const PulseProgram &program) {
    std::ostringstream out;
    const auto &cfg = program.config;
    if (cfg.omega || cfg.delta) {
        out << "config";
        if (cfg.omega) out << " omega=" << cfg.omega->to_string();
        if (cfg.delta) out << " delta=" << cfg.delta->to_string();
        out << '\n';
    }
    if (cfg.n_max) out << "modes nmax=" << *cfg.n_max << '\n';
    for (const auto &p : program.params) {
        out << "param " << p.name;
        if (p.default_value) out << '=' << p.default_value->to_string();
        out << '\n';
    }
    for (const auto &a : program.atoms) out << "atom " << a.name << " init=" << level_char(a.init) << '\n';
    for (const auto &ins : program.instructions) {
        std::visit(
            [&](const auto &op) {
                using T = std::decay_t<decltype(op)>;
                if constexpr (std::is_same_v<T, RabiOp>) {
                    out << "rabi " << op.atom << ' ' << mode_name(op.mode) << " angle=" << op.angle.to_string();
                } else if constexpr (std::is_same_v<T, RamseyOp>) {
                    out << "ramsey " << op.atom << ' ' << (op.zone == Zone::R1 ? "R1" : "R2")
                        << " transition=" << transition_name(op.transition) << " angle=" << op.angle.to_string()
                        << " phase=" << op.phase.to_string();
                } else if constexpr (std::is_same_v<T, DelayOp>) {
                    out << "delay " << op.duration.to_string();
                } else if constexpr (std::is_same_v<T, MeasureOp>) {
                    out << "measure " << op.atom;
                } else {
                    out << "postselect " << op.atom << ' ' << level_char(op.level);
                }
            },
            ins);
        out << '\n';
    }
    if (program.signal.label) {
        out << "label " << program.signal.label->atom;
        for (const auto &[level, name] : program.signal.label->columns) out << ' ' << level_char(level) << '=' << name;
        out << '\n';
    }
    for (const auto &o : program.signal.observables) {
        out << "observe " << o.atom;
        for (std::size_t k = 0; k < 3; ++k) {
            if (o.weights[k] != 0.0) out << ' ' << level_char(static_cast<Level>(k)) << '=' << format_double(o.weights[k]);
        }
        out << '\n';
    }
    return out.str();
}

SystemConfig apply_overrides(const PulseProgram &program, SystemConfig base) {
    if (program.config.omega) base.omega_rabi = program.config.omega->evaluate();
    if (program.config.delta) base.delta = program.config.delta->evaluate();
    if (program.config.n_max) base.n_max = *program.config.n_max;
    return base;
}

BoundProgram bind_program(const PulseProgram &program, const ParamValues &bindings, const SystemConfig &config) {
    config.validate();
    for (const auto &[name, value] : bindings) {
        if (!program.has_parameter(name)) throw UnknownParameterError(name);
        if (!std::isfinite(value)) throw BindError("parameter '" + name + "' is not finite");
    }
    ParamValues values;
    std::vector<std::string> missing;
    for (const auto &p : program.params) {
        if (auto it = bindings.find(p.name); it != bindings.end()) {
            values[p.name] = it->second;
        } else if (p.default_value) {
            values[p.name] = p.default_value->evaluate();
        } else {
            missing.push_back(p.name);
        }
    }
    if (!missing.empty()) throw UnboundParameterError(std::move(missing));

    std::vector<std::string> names;
    BasisLabel label;
    for (const auto &a : program.atoms) {
        names.push_back(a.name);
        label.levels.push_back(static_cast<int>(a.init));
    }
    label.levels.push_back(0);
    label.levels.push_back(0);
    auto layout = std::make_shared<const SubsystemLayout>(SubsystemLayout::atoms_then_modes(names, config.n_max));

    BoundProgram bound{config, values, make_state(layout, label), {}, program.signal};
    for (std::size_t k = 0; k < program.instructions.size(); ++k) {
        const int line = k < program.instruction_lines.size() ? program.instruction_lines[k] : 0;
        auto eval = [&](const Expr &e, const char *what, bool nonnegative) {
            double v = 0.0;
            try {
                v = e.evaluate(values);
            } catch (const ExprEvalError &err) {
                throw BindError("line " + std::to_string(line) + ": " + what + ": " + err.what());
            }
            if (nonnegative && v < 0.0) {
                throw BindError("line " + std::to_string(line) + ": " + what + " evaluates to negative value " +
                                std::to_string(v));
            }
            return v;
        };
        BoundStep step{};
        step.line = line;
        std::visit(
            [&](const auto &op) {
                using T = std::decay_t<decltype(op)>;
                if constexpr (std::is_same_v<T, RabiOp>) {
                    step.kind = BoundStep::Kind::Rabi;
                    step.atom = op.atom;
                    step.mode = op.mode;
                    step.angle = eval(op.angle, "Rabi angle", true);
                } else if constexpr (std::is_same_v<T, RamseyOp>) {
                    step.kind = BoundStep::Kind::Ramsey;
                    step.atom = op.atom;
                    step.transition = op.transition;
                    step.angle = eval(op.angle, "Ramsey angle", true);
                    step.phase = eval(op.phase, "Ramsey phase", false);
                } else if constexpr (std::is_same_v<T, DelayOp>) {
                    step.kind = BoundStep::Kind::Delay;
                    step.duration = eval(op.duration, "delay duration", true);
                } else if constexpr (std::is_same_v<T, MeasureOp>) {
                    step.kind = BoundStep::Kind::Measure;
                    step.atom = op.atom;
                } else {
                    step.kind = BoundStep::Kind::Postselect;
                    step.atom = op.atom;
                    step.level = op.level;
                }
            },
            program.instructions[k]);
        bound.steps.push_back(std::move(step));
    }
    return bound;
}

QuantumState apply_step(QuantumState state, const BoundStep &step, const SystemConfig &config) {
    switch (step.kind) {
        case BoundStep::Kind::Rabi:
            return apply_rabi(std::move(state), step.atom, step.mode, step.angle, config);
        case BoundStep::Kind::Ramsey:
            return apply_ramsey(std::move(state), step.atom, step.transition, step.angle, step.phase);
        case BoundStep::Kind::Delay:
            return apply_delay(std::move(state), step.duration, config);
        default:
            throw std::logic_error("apply_step called with a measurement step");
    }
}

RunResult run(const BoundProgram &program, Rng &rng) {
    RunResult result{program.initial, std::nullopt, {}};
    result.record.seed = program.config.rng_seed;
    for (const auto &step : program.steps) {
        if (step.kind != BoundStep::Kind::Measure && step.kind != BoundStep::Kind::Postselect) {
            result.state = apply_step(std::move(result.state), step, program.config);
            continue;
        }
        if (!result.prepared) result.prepared = result.state;
        const Outcome *previous = result.record.find(step.atom);
        Level level;
        if (previous) {
            level = previous->level;
        } else {
            auto p = outcome_distribution(result.state, step.atom);
            auto [sampled, collapsed] = sample_measure(result.state, step.atom, rng);
            level = sampled;
            result.state = std::move(collapsed);
            result.record.outcomes.push_back({step.atom, level, p[static_cast<std::size_t>(level)]});
        }
        if (step.kind == BoundStep::Kind::Postselect && level != step.level) {
            result.record.postselect_pass = false;
            return result;
        }
    }
    return result;
}

RunResult run(const PulseProgram &program, const ParamValues &bindings, const SystemConfig &config, Rng &rng) {
    return run(bind_program(program, bindings, config), rng);
}

RunResult run(const PulseProgram &program, const ParamValues &bindings, const SystemConfig &config) {
    Rng rng(config.rng_seed);
    return run(program, bindings, config, rng);
}

}  // namespace cqed
