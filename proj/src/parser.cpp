#include "radiq/parser.hpp"

#include <cctype>
#include <optional>
#include <utility>
#include <vector>

namespace radiq {

namespace {

struct Token {
  enum class Type { integer, plus, minus, star, slash, lparen, rparen, ident, end };

  Type type;
  std::size_t offset;
  std::string text;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t pos = 0;
  while (pos < src.size()) {
    const char ch = src[pos];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    switch (ch) {
      case '+': out.push_back({Token::Type::plus, start, "+"}); ++pos; continue;
      case '-': out.push_back({Token::Type::minus, start, "-"}); ++pos; continue;
      case '*': out.push_back({Token::Type::star, start, "*"}); ++pos; continue;
      case '/': out.push_back({Token::Type::slash, start, "/"}); ++pos; continue;
      case '(': out.push_back({Token::Type::lparen, start, "("}); ++pos; continue;
      case ')': out.push_back({Token::Type::rparen, start, ")"}); ++pos; continue;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t end = pos;
      while (end < src.size() && std::isdigit(static_cast<unsigned char>(src[end]))) ++end;
      out.push_back({Token::Type::integer, start, std::string(src.substr(pos, end - pos))});
      pos = end;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t end = pos;
      while (end < src.size() && std::isalpha(static_cast<unsigned char>(src[end]))) ++end;
      out.push_back({Token::Type::ident, start, std::string(src.substr(pos, end - pos))});
      pos = end;
      continue;
    }
    throw ParseError(pos, std::string("unexpected character '") + ch + "'");
  }
  out.push_back({Token::Type::end, src.size(), ""});
  return out;
}

ExprPtr make_literal(Rational value) {
  auto node = std::make_unique<RadicalExpr>();
  node->kind = RadicalExpr::Kind::rational_literal;
  node->value = std::move(value);
  return node;
}

ExprPtr make_unary(RadicalExpr::Kind kind, ExprPtr child) {
  auto node = std::make_unique<RadicalExpr>();
  node->kind = kind;
  node->lhs = std::move(child);
  return node;
}

ExprPtr make_binary(RadicalExpr::Kind kind, ExprPtr lhs, ExprPtr rhs) {
  auto node = std::make_unique<RadicalExpr>();
  node->kind = kind;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return node;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(tokenize(src)) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    if (peek().type != Token::Type::end) throw ParseError(peek().offset, "expected end of input");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[index_]; }
  const Token& advance() { return tokens_[index_++]; }

  void expect(Token::Type type, const std::string& what) {
    if (peek().type != type) throw ParseError(peek().offset, "expected " + what);
    ++index_;
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (peek().type == Token::Type::plus || peek().type == Token::Type::minus) {
      const bool add = advance().type == Token::Type::plus;
      lhs = make_binary(add ? RadicalExpr::Kind::add : RadicalExpr::Kind::subtract,
                        std::move(lhs), term());
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = factor();
    while (peek().type == Token::Type::star) {
      advance();
      lhs = make_binary(RadicalExpr::Kind::multiply, std::move(lhs), factor());
    }
    return lhs;
  }

  ExprPtr factor() {
    const Token& tok = peek();
    switch (tok.type) {
      case Token::Type::minus:
        advance();
        return make_unary(RadicalExpr::Kind::negate, factor());
      case Token::Type::integer:
        return rational();
      case Token::Type::lparen: {
        advance();
        ExprPtr inner = expr();
        expect(Token::Type::rparen, "')'");
        return inner;
      }
      case Token::Type::ident: {
        RadicalExpr::Kind kind;
        if (tok.text == "sqrt") {
          kind = RadicalExpr::Kind::sqrt_of;
        } else if (tok.text == "cbrt") {
          kind = RadicalExpr::Kind::cbrt_of;
        } else {
          throw ParseError(tok.offset, "unknown function '" + tok.text + "'");
        }
        advance();
        expect(Token::Type::lparen, "'('");
        ExprPtr inner = expr();
        expect(Token::Type::rparen, "')'");
        return make_unary(kind, std::move(inner));
      }
      default:
        throw ParseError(tok.offset, "expected expression");
    }
  }

  ExprPtr rational() {
    const Token& num = advance();
    if (peek().type != Token::Type::slash) return make_literal(Rational(Integer(num.text, 10)));
    advance();
    if (peek().type != Token::Type::integer) throw ParseError(peek().offset, "expected integer");
    const Token& den = advance();
    const Integer den_value(den.text, 10);
    if (den_value == 0) throw ParseError(den.offset, "division by zero in rational literal");
    return make_literal(Rational(Integer(num.text, 10), den_value));
  }

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
};

}  // namespace

ExprPtr parse_expression(std::string_view text) { return Parser(text).parse(); }

namespace {

bool needs_parens_in_product(const RadicalExpr& e) {
  return e.kind == RadicalExpr::Kind::add || e.kind == RadicalExpr::Kind::subtract ||
         e.kind == RadicalExpr::Kind::negate;
}

std::string render_wrapped(const RadicalExpr& e, bool wrap) {
  return wrap ? "(" + render(e) + ")" : render(e);
}

}  // namespace

std::string render(const RadicalExpr& e) {
  switch (e.kind) {
    case RadicalExpr::Kind::rational_literal:
      return e.value.to_string();
    case RadicalExpr::Kind::negate:
      return "-" + render_wrapped(*e.lhs, needs_parens_in_product(*e.lhs));
    case RadicalExpr::Kind::add:
      return render(*e.lhs) + " + " + render_wrapped(*e.rhs, needs_parens_in_product(*e.rhs));
    case RadicalExpr::Kind::subtract:
      return render(*e.lhs) + " - " + render_wrapped(*e.rhs, needs_parens_in_product(*e.rhs));
    case RadicalExpr::Kind::multiply:
      return render_wrapped(*e.lhs, needs_parens_in_product(*e.lhs)) + "*" +
             render_wrapped(*e.rhs, needs_parens_in_product(*e.rhs));
    case RadicalExpr::Kind::sqrt_of:
      return "sqrt(" + render(*e.lhs) + ")";
    case RadicalExpr::Kind::cbrt_of:
      return "cbrt(" + render(*e.lhs) + ")";
  }
  return {};
}

bool equal_trees(const RadicalExpr& x, const RadicalExpr& y) {
  if (x.kind != y.kind) return false;
  if (x.kind == RadicalExpr::Kind::rational_literal) return x.value == y.value;
  if ((x.lhs == nullptr) != (y.lhs == nullptr)) return false;
  if ((x.rhs == nullptr) != (y.rhs == nullptr)) return false;
  if (x.lhs && !equal_trees(*x.lhs, *y.lhs)) return false;
  if (x.rhs && !equal_trees(*x.rhs, *y.rhs)) return false;
  return true;
}

namespace {

// a + b*sqrt(radicand); radicand absent when no sqrt occurs in the subtree.
struct Folded {
  Rational a;
  Rational b;
  std::optional<Rational> radicand;
};

Folded fold(const RadicalExpr& e) {
  switch (e.kind) {
    case RadicalExpr::Kind::rational_literal:
      return {e.value, 0, std::nullopt};
    case RadicalExpr::Kind::negate: {
      Folded f = fold(*e.lhs);
      return {-f.a, -f.b, f.radicand};
    }
    case RadicalExpr::Kind::add:
    case RadicalExpr::Kind::subtract: {
      Folded l = fold(*e.lhs);
      Folded r = fold(*e.rhs);
      if (l.radicand && r.radicand && *l.radicand != *r.radicand) {
        throw UnsupportedShape("two distinct radicands");
      }
      const bool add = e.kind == RadicalExpr::Kind::add;
      return {add ? l.a + r.a : l.a - r.a, add ? l.b + r.b : l.b - r.b,
              l.radicand ? l.radicand : r.radicand};
    }
    case RadicalExpr::Kind::multiply: {
      Folded l = fold(*e.lhs);
      Folded r = fold(*e.rhs);
      if (l.radicand && r.radicand) {
        throw UnsupportedShape("unsupported shape: product of radicals");
      }
      if (r.radicand) std::swap(l, r);
      // r is now pure rational
      return {l.a * r.a, l.b * r.a, l.radicand};
    }
    case RadicalExpr::Kind::sqrt_of: {
      Folded inner = fold(*e.lhs);
      if (inner.radicand) throw UnsupportedShape("unsupported shape: nested sqrt");
      return {0, 1, inner.a};
    }
    case RadicalExpr::Kind::cbrt_of:
      throw UnsupportedShape("unsupported shape: nested cbrt");
  }
  throw UnsupportedShape("unsupported shape");
}

}  // namespace

CbrtBody analyze_cbrt(const RadicalExpr& e) {
  if (e.kind != RadicalExpr::Kind::cbrt_of) {
    throw UnsupportedShape("expected a cbrt(...) expression");
  }
  const Folded body = fold(*e.lhs);
  if (!body.radicand) return {body.a, body.b, Rational(0), false};
  return {body.a, body.b, *body.radicand, true};
}

SurdElement normalize_to_surd(const RadicalExpr& e) {
  const CbrtBody body = analyze_cbrt(e);
  if (!body.has_sqrt) {
    throw UnsupportedShape("unsupported shape: radicand contains no sqrt");
  }
  return normalize_surd(body.a, body.b, body.radicand);
}

}  // namespace radiq
