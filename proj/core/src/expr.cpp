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

#include "sigtrend/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <system_error>

#include "sigtrend/decimal.hpp"

namespace sigtrend::expr {

std::string_view to_string(Precedence mode) noexcept {
  return mode == Precedence::math ? "math" : "spreadsheet";
}

NodePtr make_number(real v, Span span) {
  return std::make_shared<const Node>(Node{Number{v}, span});
}
NodePtr make_variable(std::string name, Span span) {
  return std::make_shared<const Node>(Node{Variable{std::move(name)}, span});
}
NodePtr make_negate(NodePtr operand, Span span) {
  return std::make_shared<const Node>(Node{Negate{std::move(operand)}, span});
}
NodePtr make_binary(char op, NodePtr lhs, NodePtr rhs, Span span) {
  return std::make_shared<const Node>(Node{Binary{op, std::move(lhs), std::move(rhs)}, span});
}
NodePtr make_call(std::string function, NodePtr argument, Span span) {
  return std::make_shared<const Node>(Node{Call{std::move(function), std::move(argument)}, span});
}
NodePtr make_group(NodePtr inner, Span span) {
  return std::make_shared<const Node>(Node{Group{std::move(inner)}, span});
}

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += items[i];
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected,
                       const std::string& found)
    : std::runtime_error("parse error at offset " + std::to_string(offset) + ": expected " +
                         join(expected) + "; found " + found),
      offset_(offset),
      expected_(std::move(expected)) {}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok { number, ident, op, lparen, rparen, exp_sugar, end };

struct Token {
  Tok type = Tok::end;
  Span span;
  char op = 0;
  real value = 0;
  std::string name;
};

Token make_token(Tok type, Span span) {
  Token t;
  t.type = type;
  t.span = span;
  return t;
}

bool is_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

std::string describe(const Token& t, std::string_view src) {
  if (t.type == Tok::end) return "end of input";
  return "'" + std::string(src.substr(t.span.begin, t.span.end - t.span.begin)) + "'";
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = src.size();
  while (i < n) {
    const char c = src[i];
    if (is_space(c)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (is_digit(c)) {
      while (i < n && is_digit(src[i])) ++i;
      if (i < n && src[i] == '.') {
        if (i + 1 >= n || !is_digit(src[i + 1])) {
          throw ParseError(i + 1, {"digit"}, i + 1 < n ? "'" + std::string(1, src[i + 1]) + "'" : "end of input");
        }
        ++i;
        while (i < n && is_digit(src[i])) ++i;
      }
      if (i < n && (src[i] == 'e' || src[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < n && (src[j] == '+' || src[j] == '-')) ++j;
        if (j < n && is_digit(src[j])) {
          while (j < n && is_digit(src[j])) ++j;
          i = j;
        }
      }
      Token t = make_token(Tok::number, {start, i});
      // from_chars rejects nothing the loop above accepted.
      auto res = std::from_chars(src.data() + start, src.data() + i, t.value);
      if (res.ec == std::errc::result_out_of_range) {
        throw ParseError(start, {"number within range"}, "'" + std::string(src.substr(start, i - start)) + "'");
      }
      out.push_back(std::move(t));
      continue;
    }
    if (is_letter(c)) {
      while (i < n && (is_letter(src[i]) || is_digit(src[i]))) ++i;
      std::string name(src.substr(start, i - start));
      if (name == "e") {
        std::size_t j = i;
        while (j < n && is_space(src[j])) ++j;
        if (j < n && src[j] == '^') {
          out.push_back(make_token(Tok::exp_sugar, {start, j + 1}));
          i = j + 1;
          continue;
        }
      }
      Token t = make_token(Tok::ident, {start, i});
      t.name = std::move(name);
      out.push_back(std::move(t));
      continue;
    }
    switch (c) {
      case '+':
      case '-':
      case '*':
      case '/':
      case '^': {
        Token t = make_token(Tok::op, {start, start + 1});
        t.op = c;
        out.push_back(t);
        ++i;
        continue;
      }
      case '(':
        out.push_back(make_token(Tok::lparen, {start, start + 1}));
        ++i;
        continue;
      case ')':
        out.push_back(make_token(Tok::rparen, {start, start + 1}));
        ++i;
        continue;
      default:
        throw ParseError(start, {"number", "identifier", "operator", "parenthesis"},
                         "'" + std::string(1, c) + "'");
    }
  }
  out.push_back(make_token(Tok::end, {n, n}));
  return out;
}

// ---------------------------------------------------------------------------
// Pratt parser

constexpr int kAdditive = 10;
constexpr int kMultiplicative = 20;
constexpr int kUnaryMath = 25;
constexpr int kPower = 30;
constexpr int kUnarySpreadsheet = 35;

int left_binding(char op) {
  switch (op) {
    case '+':
    case '-':
      return kAdditive;
    case '*':
    case '/':
      return kMultiplicative;
    case '^':
      return kPower;
    default:
      return -1;
  }
}

class Parser {
 public:
  Parser(std::string_view src, Precedence mode) : src_(src), tokens_(lex(src)), mode_(mode) {}

  NodePtr parse_all() {
    auto node = parse_expr(0);
    if (peek().type != Tok::end) {
      std::vector<std::string> expected{"operator"};
      if (depth_ > 0) expected.emplace_back("')'");
      expected.emplace_back("end of input");
      throw ParseError(peek().span.begin, expected, describe(peek(), src_));
    }
    return node;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  int unary_binding() const {
    return mode_ == Precedence::math ? kUnaryMath : kUnarySpreadsheet;
  }

  NodePtr parse_expr(int min_bp) {
    auto lhs = parse_prefix();
    for (;;) {
      const Token& t = peek();
      if (t.type != Tok::op) break;
      const int lbp = left_binding(t.op);
      if (lbp <= min_bp) break;
      const char op = t.op;
      advance();
      // Right-associative ^ parses its exponent one notch lower.
      auto rhs = parse_expr(op == '^' ? lbp - 1 : lbp);
      const Span span{lhs->span.begin, rhs->span.end};
      lhs = make_binary(op, std::move(lhs), std::move(rhs), span);
    }
    return lhs;
  }

  NodePtr parse_prefix() {
    const Token& t = advance();
    switch (t.type) {
      case Tok::number:
        return make_number(t.value, t.span);
      case Tok::ident: {
        if (peek().type != Tok::lparen) return make_variable(t.name, t.span);
        if (t.name != "exp") {
          throw ParseError(t.span.begin, {"known function (exp)"}, "'" + t.name + "'");
        }
        advance();
        ++depth_;
        auto arg = parse_expr(0);
        const Token& close = expect_rparen();
        --depth_;
        return make_call("exp", std::move(arg), {t.span.begin, close.span.end});
      }
      case Tok::exp_sugar: {
        auto arg = parse_expr(kPower - 1);
        const Span span{t.span.begin, arg->span.end};
        return make_call("exp", std::move(arg), span);
      }
      case Tok::lparen: {
        ++depth_;
        auto inner = parse_expr(0);
        const Token& close = expect_rparen();
        --depth_;
        return make_group(std::move(inner), {t.span.begin, close.span.end});
      }
      case Tok::op:
        if (t.op == '-') {
          auto operand = parse_expr(unary_binding());
          const Span span{t.span.begin, operand->span.end};
          return make_negate(std::move(operand), span);
        }
        if (t.op == '+') return parse_expr(unary_binding());
        break;
      default:
        break;
    }
    throw ParseError(t.span.begin, {"number", "identifier", "'('", "'-'"}, describe(t, src_));
  }

  const Token& expect_rparen() {
    if (peek().type != Tok::rparen) {
      throw ParseError(peek().span.begin, {"operator", "')'"}, describe(peek(), src_));
    }
    return advance();
  }

  std::string_view src_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int depth_ = 0;
  Precedence mode_;
};

}  // namespace

Ast parse(std::string_view source, Precedence mode) {
  Parser parser(source, mode);
  auto root = parser.parse_all();
  return Ast(std::move(root), mode, std::string(source));
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

real power(real base, real exponent) {
  if (base == 0 && exponent < 0) throw DomainError("0 raised to a negative power");
  if (base < 0 && std::trunc(exponent) != exponent) {
    throw DomainError("non-integer power of a negative number");
  }
  return std::pow(base, exponent);
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

real evaluate(const Node& node, const Env& env) {
  return std::visit(
      overloaded{
          [](const Number& n) -> real { return n.value; },
          [&](const Variable& v) -> real {
            auto it = env.find(v.name);
            if (it == env.end()) throw DomainError("unbound variable '" + v.name + "'");
            return it->second;
          },
          [&](const Negate& n) -> real { return -evaluate(*n.operand, env); },
          [&](const Binary& b) -> real {
            const real l = evaluate(*b.lhs, env);
            const real r = evaluate(*b.rhs, env);
            switch (b.op) {
              case '+':
                return l + r;
              case '-':
                return l - r;
              case '*':
                return l * r;
              case '/':
                if (r == 0) throw DomainError("division by zero");
                return l / r;
              default:
                return power(l, r);
            }
          },
          [&](const Call& c) -> real { return std::exp(evaluate(*c.argument, env)); },
          [&](const Group& g) -> real { return evaluate(*g.inner, env); },
      },
      node.kind);
}

std::string to_sexpr(const Node& node) {
  return std::visit(
      overloaded{
          [](const Number& n) { return to_shortest_string(n.value); },
          [](const Variable& v) { return v.name; },
          [](const Negate& n) { return "neg(" + to_sexpr(*n.operand) + ")"; },
          [](const Binary& b) {
            const char* name = b.op == '+'   ? "add"
                               : b.op == '-' ? "sub"
                               : b.op == '*' ? "mul"
                               : b.op == '/' ? "div"
                                             : "pow";
            return std::string(name) + "(" + to_sexpr(*b.lhs) + ", " + to_sexpr(*b.rhs) + ")";
          },
          [](const Call& c) { return c.function + "(" + to_sexpr(*c.argument) + ")"; },
          [](const Group& g) { return to_sexpr(*g.inner); },
      },
      node.kind);
}

// ---------------------------------------------------------------------------
// Safe emission

namespace {

constexpr int kAtom = 100;

int level(const Node& node) {
  if (const auto* b = std::get_if<Binary>(&node.kind)) return left_binding(b->op);
  if (std::holds_alternative<Negate>(node.kind)) return kUnaryMath;
  return kAtom;
}

std::string parens(const std::string& s) { return "(" + s + ")"; }

}  // namespace

std::string emit_safe(const Node& node) {
  return std::visit(
      overloaded{
          [](const Number& n) {
            auto text = to_shortest_string(n.value);
            return std::signbit(n.value) ? parens(text) : text;
          },
          [](const Variable& v) { return v.name; },
          [](const Negate& n) {
            const auto inner = emit_safe(*n.operand);
            return level(*n.operand) == kAtom ? "-" + inner : "-" + parens(inner);
          },
          [](const Binary& b) {
            auto lhs = emit_safe(*b.lhs);
            auto rhs = emit_safe(*b.rhs);
            if (b.op == '^') {
              if (level(*b.lhs) != kAtom) lhs = parens(lhs);
              if (level(*b.rhs) != kAtom && level(*b.rhs) != kPower) rhs = parens(rhs);
              return lhs + "^" + rhs;
            }
            const int prec = left_binding(b.op);
            if (level(*b.lhs) < prec) lhs = parens(lhs);
            // Equal-level right operands keep their grouping: a-(b-c), a+(b+c).
            if (level(*b.rhs) <= prec || std::holds_alternative<Negate>(b.rhs->kind)) {
              rhs = parens(rhs);
            }
            return lhs + std::string(1, b.op) + rhs;
          },
          [](const Call& c) { return c.function + parens(emit_safe(*c.argument)); },
          [](const Group& g) { return parens(emit_safe(*g.inner)); },
      },
      node.kind);
}

// ---------------------------------------------------------------------------
// Discrepancy detection

namespace {

std::optional<real> try_evaluate(const Node& node, const Env& env) {
  try {
    return evaluate(node, env);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

bool same_value(const std::optional<real>& a, const std::optional<real>& b) {
  if (!a || !b) return !a && !b;
  if (std::isnan(*a) || std::isnan(*b)) return std::isnan(*a) && std::isnan(*b);
  return *a == *b;
}

std::vector<const Node*> children(const Node& node) {
  return std::visit(
      overloaded{
          [](const Number&) { return std::vector<const Node*>{}; },
          [](const Variable&) { return std::vector<const Node*>{}; },
          [](const Negate& n) { return std::vector<const Node*>{n.operand.get()}; },
          [](const Binary& b) { return std::vector<const Node*>{b.lhs.get(), b.rhs.get()}; },
          [](const Call& c) { return std::vector<const Node*>{c.argument.get()}; },
          [](const Group& g) { return std::vector<const Node*>{g.inner.get()}; },
      },
      node.kind);
}

class Scanner {
 public:
  Scanner(const Ast& math, const Env& env) : math_(math), env_(env) {}

  bool differs(const Node& node) {
    return !same_value(math_value(node), sheet_value(node.span));
  }

  void descend(const Node& node, std::vector<Discrepancy>& out) {
    bool any_child = false;
    for (const Node* c : children(node)) {
      if (differs(*c)) {
        any_child = true;
        descend(*c, out);
      }
    }
    if (!any_child) {
      out.push_back({node.span, std::string(math_.text(node.span)), math_value(node),
                     sheet_value(node.span)});
    }
  }

 private:
  std::optional<real> math_value(const Node& node) { return try_evaluate(node, env_); }

  std::optional<real> sheet_value(Span span) {
    auto sub = parse(math_.text(span), Precedence::spreadsheet);
    return try_evaluate(sub.root(), env_);
  }

  const Ast& math_;
  const Env& env_;
};

}  // namespace

std::vector<Discrepancy> discrepancy_scan(std::string_view source, const Env& env) {
  const auto math = parse(source, Precedence::math);
  const auto sheet = parse(source, Precedence::spreadsheet);
  std::vector<Discrepancy> out;
  if (same_value(try_evaluate(math.root(), env), try_evaluate(sheet.root(), env))) return out;
  Scanner scanner(math, env);
  scanner.descend(math.root(), out);
  return out;
}

std::vector<SweepHit> discrepancy_sweep(std::string_view source, Env env,
                                        const std::string& variable, real lo, real hi,
                                        int samples) {
  if (samples < 1) throw DomainError("sweep needs at least one sample");
  const auto math = parse(source, Precedence::math);
  const auto sheet = parse(source, Precedence::spreadsheet);
  std::vector<SweepHit> hits;
  for (int i = 0; i < samples; ++i) {
    const real t = samples == 1 ? lo : lo + (hi - lo) * static_cast<real>(i) / static_cast<real>(samples - 1);
    env[variable] = t;
    auto m = try_evaluate(math.root(), env);
    auto s = try_evaluate(sheet.root(), env);
    if (!same_value(m, s)) hits.push_back({t, m, s});
  }
  return hits;
}

}  // namespace sigtrend::expr
