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

#include "cqed/expr.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>

namespace cqed {

struct Expr::Node {
    Op op;
    double value = 0.0;
    std::string name;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

class ExprParser {
   public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    Expr run() {
        skip_space();
        if (pos_ >= text_.size()) fail("empty expression");
        auto root = parse_sum();
        skip_space();
        if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
        return Expr(root);
    }

    static NodePtr make(Expr::Op op, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
        auto n = std::make_shared<Expr::Node>();
        n->op = op;
        n->lhs = std::move(lhs);
        n->rhs = std::move(rhs);
        return n;
    }

    static NodePtr make_number(double v) {
        auto n = std::make_shared<Expr::Node>();
        n->op = Expr::Op::Number;
        n->value = v;
        return n;
    }

   private:
    [[noreturn]] void fail(const std::string &message) const { throw ExprSyntaxError(pos_, message); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodePtr parse_sum() {
        auto lhs = parse_product();
        for (;;) {
            if (accept('+')) {
                lhs = make(Expr::Op::Add, lhs, parse_product());
            } else if (accept('-')) {
                lhs = make(Expr::Op::Sub, lhs, parse_product());
            } else {
                return lhs;
            }
        }
    }

    NodePtr parse_product() {
        auto lhs = parse_unary();
        for (;;) {
            if (accept('*')) {
                lhs = make(Expr::Op::Mul, lhs, parse_unary());
            } else if (accept('/')) {
                lhs = make(Expr::Op::Div, lhs, parse_unary());
            } else {
                return lhs;
            }
        }
    }

    NodePtr parse_unary() {
        if (accept('-')) return make(Expr::Op::Neg, parse_unary());
        if (accept('+')) return parse_unary();
        return parse_primary();
    }

    NodePtr parse_primary() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            auto inner = parse_sum();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (c == '$') {
            ++pos_;
            std::size_t start = pos_;
            if (pos_ >= text_.size() || !is_ident_start(text_[pos_])) fail("expected parameter name after '$'");
            while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
            auto n = std::make_shared<Expr::Node>();
            n->op = Expr::Op::Param;
            n->name = std::string(text_.substr(start, pos_ - start));
            return n;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (is_ident_start(c)) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
            auto word = text_.substr(start, pos_ - start);
            if (word == "pi") return make(Expr::Op::Pi);
            Expr::Op fn;
            if (word == "sqrt") {
                fn = Expr::Op::Sqrt;
            } else if (word == "acos") {
                fn = Expr::Op::Acos;
            } else {
                pos_ = start;
                fail("unknown identifier '" + std::string(word) + "' (parameters are written $name)");
            }
            if (!accept('(')) fail("expected '(' after " + std::string(word));
            auto arg = parse_sum();
            if (!accept(')')) fail("expected ')'");
            return make(fn, arg);
        }
        fail(std::string("unexpected '") + c + "'");
    }

    NodePtr parse_number() {
        std::size_t start = pos_;
        auto digits = [&] {
            std::size_t d = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
                ++d;
            }
            return d;
        };
        std::size_t nd = digits();
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            nd += digits();
        }
        if (nd == 0) fail("malformed number");
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t save = pos_;
            ++pos_;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
            if (digits() == 0) pos_ = save;
        }
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
        if (ec != std::errc() || ptr != text_.data() + pos_ || !std::isfinite(v)) {
            pos_ = start;
            fail("malformed number");
        }
        return make_number(v);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

Expr Expr::parse(std::string_view text) { return ExprParser(text).run(); }

Expr Expr::number(double value) {
    if (!std::isfinite(value)) throw std::invalid_argument("expression literal must be finite");
    if (std::signbit(value)) return Expr(ExprParser::make(Op::Neg, ExprParser::make_number(-value)));
    return Expr(ExprParser::make_number(value));
}

namespace {

double eval(const Expr::Node &n, const ParamValues &params) {
    using Op = Expr::Op;
    switch (n.op) {
        case Op::Number:
            return n.value;
        case Op::Pi:
            return std::numbers::pi;
        case Op::Param: {
            auto it = params.find(n.name);
            if (it == params.end()) throw ExprEvalError("unbound parameter '" + n.name + "'");
            return it->second;
        }
        case Op::Neg:
            return -eval(*n.lhs, params);
        case Op::Add:
            return eval(*n.lhs, params) + eval(*n.rhs, params);
        case Op::Sub:
            return eval(*n.lhs, params) - eval(*n.rhs, params);
        case Op::Mul:
            return eval(*n.lhs, params) * eval(*n.rhs, params);
        case Op::Div: {
            double d = eval(*n.rhs, params);
            if (d == 0.0) throw ExprEvalError("division by zero");
            return eval(*n.lhs, params) / d;
        }
        case Op::Sqrt: {
            double x = eval(*n.lhs, params);
            if (x < 0.0) throw ExprEvalError("sqrt of negative value " + std::to_string(x));
            return std::sqrt(x);
        }
        case Op::Acos: {
            double x = eval(*n.lhs, params);
            if (x < -1.0 || x > 1.0) throw ExprEvalError("acos argument " + std::to_string(x) + " outside [-1, 1]");
            return std::acos(x);
        }
    }
    throw ExprEvalError("corrupt expression");
}

int precedence(Expr::Op op) {
    using Op = Expr::Op;
    switch (op) {
        case Op::Add:
        case Op::Sub:
            return 1;
        case Op::Mul:
        case Op::Div:
            return 2;
        case Op::Neg:
            return 3;
        default:
            return 4;
    }
}

void print(const Expr::Node &n, std::string &out);

void print_operand(const Expr::Node &child, int parent_prec, bool right, std::string &out) {
    int p = precedence(child.op);
    bool parens = p < parent_prec || (right && p == parent_prec);
    if (parens) out += '(';
    print(child, out);
    if (parens) out += ')';
}

void print(const Expr::Node &n, std::string &out) {
    using Op = Expr::Op;
    switch (n.op) {
        case Op::Number: {
            char buf[64];
            auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), n.value);
            out.append(buf, ptr);
            return;
        }
        case Op::Pi:
            out += "pi";
            return;
        case Op::Param:
            out += '$';
            out += n.name;
            return;
        case Op::Neg:
            out += '-';
            print_operand(*n.lhs, 3, false, out);
            return;
        case Op::Sqrt:
        case Op::Acos:
            out += n.op == Op::Sqrt ? "sqrt(" : "acos(";
            print(*n.lhs, out);
            out += ')';
            return;
        default: {
            int p = precedence(n.op);
            print_operand(*n.lhs, p, false, out);
            out += n.op == Op::Add ? '+' : n.op == Op::Sub ? '-' : n.op == Op::Mul ? '*' : '/';
            print_operand(*n.rhs, p, true, out);
            return;
        }
    }
}

void collect(const Expr::Node &n, std::vector<std::string> &names) {
    if (n.op == Expr::Op::Param) {
        if (std::find(names.begin(), names.end(), n.name) == names.end()) names.push_back(n.name);
        return;
    }
    if (n.lhs) collect(*n.lhs, names);
    if (n.rhs) collect(*n.rhs, names);
}

bool same(const Expr::Node *a, const Expr::Node *b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->op != b->op) return false;
    if (a->op == Expr::Op::Number && a->value != b->value) return false;
    if (a->op == Expr::Op::Param && a->name != b->name) return false;
    return same(a->lhs.get(), b->lhs.get()) && same(a->rhs.get(), b->rhs.get());
}

}  // namespace

double Expr::evaluate(const ParamValues &params) const {
    double v = eval(*root_, params);
    if (!std::isfinite(v)) throw ExprEvalError("expression evaluates to a non-finite value");
    return v;
}

std::string Expr::to_string() const {
    std::string out;
    print(*root_, out);
    return out;
}

std::vector<std::string> Expr::parameters() const {
    std::vector<std::string> names;
    collect(*root_, names);
    return names;
}

bool Expr::operator==(const Expr &other) const { return same(root_.get(), other.root_.get()); }

}  // namespace cqed
