// Copyright 2026 The sigtrend Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SIGTREND_EXPR_HPP
#define SIGTREND_EXPR_HPP

// Formula parsing under two precedence regimes.
//
//   math:        ^  >  unary -  >  * /  >  + -
//   spreadsheet: unary -  >  ^  >  * /  >  + -
//
// ^ is right-associative in both. In math mode -x^2 is -(x^2); spreadsheets
// evaluate it as (-x)^2. Grammar:
//
//   number  := digits ["." digits] [("e"|"E") ["+"|"-"] digits]
//   ident   := letter {letter | digit}
//   primary := number | ident | ident "(" expr ")" | "(" expr ")"
//
// "e^x" is read as exp(x).

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sigtrend/common.hpp"

namespace sigtrend::expr {

enum class Precedence { math, spreadsheet };

std::string_view to_string(Precedence mode) noexcept;

/// Half-open byte range [begin, end) of the source.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  friend bool operator==(const Span&, const Span&) = default;
};

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Number {
  real value;
};
struct Variable {
  std::string name;
};
struct Negate {
  NodePtr operand;
};
struct Binary {
  char op;  // + - * / ^
  NodePtr lhs;
  NodePtr rhs;
};
struct Call {
  std::string function;  // only "exp"
  NodePtr argument;
};
/// Explicit parentheses from the source.
struct Group {
  NodePtr inner;
};

struct Node {
  std::variant<Number, Variable, Negate, Binary, Call, Group> kind;
  Span span;
};

NodePtr make_number(real v, Span span = {});
NodePtr make_variable(std::string name, Span span = {});
NodePtr make_negate(NodePtr operand, Span span = {});
NodePtr make_binary(char op, NodePtr lhs, NodePtr rhs, Span span = {});
NodePtr make_call(std::string function, NodePtr argument, Span span = {});
NodePtr make_group(NodePtr inner, Span span = {});

class Ast {
 public:
  Ast(NodePtr root, Precedence mode, std::string source)
      : root_(std::move(root)), mode_(mode), source_(std::move(source)) {}

  [[nodiscard]] const Node& root() const noexcept { return *root_; }
  [[nodiscard]] const NodePtr& root_ptr() const noexcept { return root_; }
  [[nodiscard]] Precedence mode() const noexcept { return mode_; }
  [[nodiscard]] const std::string& source() const noexcept { return source_; }
  [[nodiscard]] std::string_view text(Span s) const {
    return std::string_view(source_).substr(s.begin, s.end - s.begin);
  }

 private:
  NodePtr root_;
  Precedence mode_;
  std::string source_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found);

  [[nodiscard]] std::size_t offset() const noexcept { return offset_; }
  [[nodiscard]] const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

Ast parse(std::string_view source, Precedence mode);

using Env = std::map<std::string, real, std::less<>>;

/// Throws DomainError for unbound variables, division by zero, 0^negative,
/// and non-integer powers of negative numbers.
real evaluate(const Node& node, const Env& env);
inline real evaluate(const Ast& ast, const Env& env) { return evaluate(ast.root(), env); }

/// Structural dump, e.g. "neg(pow(1, 2))". Groups are transparent.
std::string to_sexpr(const Node& node);

/// Formula text whose value is the same under both precedence regimes:
/// negated powers become -(x^2), negative exponents x^(-2), and non-atomic
/// bases (-x)^2.
std::string emit_safe(const Node& node);
inline std::string emit_safe(const Ast& ast) { return emit_safe(ast.root()); }

struct Discrepancy {
  Span span;
  std::string text;
  std::optional<real> math_value;         // empty: evaluation failed
  std::optional<real> spreadsheet_value;
};

/// Subexpressions where the two regimes disagree at `env`. Only divergence
/// origins are reported: nodes whose children agree in both modes but whose
/// own values differ, reachable from the root through disagreeing nodes.
/// Empty iff both whole-formula evaluations agree.
std::vector<Discrepancy> discrepancy_scan(std::string_view source, const Env& env);

struct SweepHit {
  real at;
  std::optional<real> math_value;
  std::optional<real> spreadsheet_value;
};

/// Evaluates both regimes with `variable` stepped over [lo, hi] in `samples`
/// points and returns the points where they disagree.
std::vector<SweepHit> discrepancy_sweep(std::string_view source, Env env,
                                        const std::string& variable, real lo, real hi,
                                        int samples);

}  // namespace sigtrend::expr

#endif  // SIGTREND_EXPR_HPP
