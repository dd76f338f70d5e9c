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

#ifndef CQED_EXPR_H
#define CQED_EXPR_H

#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cqed {

using ParamValues = std::map<std::string, double, std::less<>>;

class ExprSyntaxError : public std::runtime_error {
   public:
    ExprSyntaxError(std::size_t offset, const std::string &message)
        : std::runtime_error(message), offset_(offset) {}
    /// Zero-based character offset into the expression text.
    std::size_t offset() const { return offset_; }

   private:
    std::size_t offset_;
};

/// Evaluation failure: unbound parameter, acos/sqrt domain, division by
/// zero, or a non-finite result.
class ExprEvalError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Real arithmetic expression used for pulse angles, phases and durations.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('-' | '+') unary | primary
///   primary := number | 'pi' | '$' name | ('sqrt' | 'acos') '(' expr ')' | '(' expr ')'
///
/// Expressions are immutable and cheap to copy (shared tree).
class Expr {
   public:
    enum class Op { Number, Pi, Param, Neg, Add, Sub, Mul, Div, Sqrt, Acos };

    static Expr parse(std::string_view text);
    /// Literal; negative values become Neg(|v|) so printing round-trips.
    static Expr number(double value);

    double evaluate(const ParamValues &params = {}) const;
    /// Compact text without whitespace; parse(to_string()) == *this.
    std::string to_string() const;
    /// Parameter names in order of first appearance.
    std::vector<std::string> parameters() const;
    bool is_constant() const { return parameters().empty(); }

    bool operator==(const Expr &other) const;

    struct Node;

   private:
    explicit Expr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
    std::shared_ptr<const Node> root_;
    friend class ExprParser;
};

}  // namespace cqed

#endif
