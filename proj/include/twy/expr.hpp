#pragma once

// Expressions over generators for the command line:
//
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' integer)?
//   atom   := rational | 'c' | 'E[' int ',' int ']' | 'F[' int ',' int ']' | '(' expr ')'
//
// Rational literals are p or p/q. Every rejection carries a line and column.

#include "twy/lie.hpp"
#include "twy/multipoly.hpp"
#include "twy/pbw.hpp"
#include "twy/rational.hpp"

#include <cctype>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace twy {

struct SourceLoc {
  int line = 1;
  int col = 1;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(SourceLoc at, const std::string& msg)
      : std::runtime_error(std::to_string(at.line) + ":" + std::to_string(at.col) + ": " + msg), loc_(at), msg_(msg) {}
  SourceLoc loc() const { return loc_; }
  const std::string& message() const { return msg_; }

 private:
  SourceLoc loc_;
  std::string msg_;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Number, Symbol, Gen, Neg, Add, Sub, Mul, Pow };
  Kind kind = Kind::Number;
  SourceLoc loc;
  Rational value;        // Number
  char gen = 'E';        // Gen
  int i = 0, j = 0;      // Gen
  unsigned exponent = 0; // Pow
  ExprPtr lhs, rhs;      // Neg uses lhs
};

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  ExprPtr parse() {
    skip();
    if (eof()) fail("empty expression");
    auto e = expr();
    skip();
    if (!eof()) fail(std::string("unexpected '") + s_[p_] + "'");
    return e;
  }

 private:
  static constexpr int kMaxDepth = 200;
  static constexpr unsigned kMaxExponent = 64;

  std::string_view s_;
  std::size_t p_ = 0;
  int line_ = 1, col_ = 1;
  int depth_ = 0;

  bool eof() const { return p_ >= s_.size(); }
  SourceLoc here() const { return {line_, col_}; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(here(), msg); }
  [[noreturn]] static void fail_at(SourceLoc at, const std::string& msg) { throw ParseError(at, msg); }

  void advance() {
    if (s_[p_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++p_;
  }
  void skip() {
    while (!eof() && std::isspace(static_cast<unsigned char>(s_[p_]))) advance();
  }
  bool accept(char ch) {
    skip();
    if (!eof() && s_[p_] == ch) {
      advance();
      return true;
    }
    return false;
  }
  void expect(char ch) {
    skip();
    if (eof()) fail(std::string("expected '") + ch + "' but input ended");
    if (s_[p_] != ch) fail(std::string("expected '") + ch + "' but found '" + s_[p_] + "'");
    advance();
  }

  static std::shared_ptr<Expr> node(Expr::Kind k, SourceLoc at, ExprPtr a = {}, ExprPtr b = {}) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->loc = at;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
  }

  struct DepthGuard {
    ExprParser& p;
    explicit DepthGuard(ExprParser& q) : p(q) {
      if (++p.depth_ > kMaxDepth) p.fail("expression nested too deeply");
    }
    ~DepthGuard() { --p.depth_; }
  };

  ExprPtr expr() {
    DepthGuard g(*this);
    auto e = term();
    for (;;) {
      skip();
      SourceLoc at = here();
      if (accept('+')) e = node(Expr::Kind::Add, at, e, term());
      else if (accept('-')) e = node(Expr::Kind::Sub, at, e, term());
      else return e;
    }
  }

  ExprPtr term() {
    auto e = unary();
    for (;;) {
      skip();
      SourceLoc at = here();
      if (!accept('*')) return e;
      e = node(Expr::Kind::Mul, at, e, unary());
    }
  }

  ExprPtr unary() {
    DepthGuard g(*this);
    skip();
    SourceLoc at = here();
    if (accept('-')) return node(Expr::Kind::Neg, at, unary());
    return power();
  }

  ExprPtr power() {
    auto base = atom();
    skip();
    SourceLoc at = here();
    if (!accept('^')) return base;
    skip();
    SourceLoc ex = here();
    std::string digits = take_digits();
    if (digits.empty()) fail("expected a nonnegative integer exponent");
    if (digits.size() > 3 || std::stoul(digits) > kMaxExponent)
      fail_at(ex, "exponent larger than " + std::to_string(kMaxExponent));
    auto e = node(Expr::Kind::Pow, at, base);
    e->exponent = static_cast<unsigned>(std::stoul(digits));
    return e;
  }

  std::string take_digits() {
    std::string r;
    while (!eof() && std::isdigit(static_cast<unsigned char>(s_[p_]))) {
      r += s_[p_];
      advance();
    }
    return r;
  }

  int index() {
    skip();
    SourceLoc at = here();
    bool neg = accept('-');
    skip();
    std::string d = take_digits();
    if (d.empty()) fail("expected an integer index");
    if (d.size() > 4) fail_at(at, "index out of range");
    int v = std::stoi(d);
    return neg ? -v : v;
  }

  ExprPtr atom() {
    skip();
    SourceLoc at = here();
    if (eof()) fail("expected an operand but input ended");
    const char ch = s_[p_];
    if (ch == '(') {
      advance();
      auto e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string text = take_digits();
      if (!eof() && s_[p_] == '/') {
        advance();
        std::string den = take_digits();
        if (den.empty()) fail("expected a denominator");
        if (den.find_first_not_of('0') == std::string::npos) fail_at(at, "zero denominator");
        text += "/" + den;
      }
      auto e = node(Expr::Kind::Number, at);
      e->value = Rational::parse(text);
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::string id;
      while (!eof() && (std::isalnum(static_cast<unsigned char>(s_[p_])) || s_[p_] == '_')) {
        id += s_[p_];
        advance();
      }
      if (id == "c") return node(Expr::Kind::Symbol, at);
      if (id == "E" || id == "F") {
        expect('[');
        int i = index();
        expect(',');
        int j = index();
        expect(']');
        auto e = node(Expr::Kind::Gen, at);
        e->gen = id[0];
        e->i = i;
        e->j = j;
        return e;
      }
      fail_at(at, "unknown symbol '" + id + "'");
    }
    fail(std::string("unexpected '") + ch + "'");
  }
};

inline int precedence(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul: return 2;
    case Expr::Kind::Neg: return 3;
    case Expr::Kind::Pow: return 4;
    default: return 5;
  }
}

}  // namespace detail

inline ExprPtr parse_expr(std::string_view source) { return detail::ExprParser(source).parse(); }

/// Canonical text; parsing it gives back the same tree.
inline std::string print_expr(const Expr& e) {
  using K = Expr::Kind;
  auto wrap = [](const Expr& x, bool need) { return need ? "(" + print_expr(x) + ")" : print_expr(x); };
  const int p = detail::precedence(e.kind);
  switch (e.kind) {
    case K::Number: return e.value.to_string();
    case K::Symbol: return "c";
    case K::Gen: return std::string(1, e.gen) + "[" + std::to_string(e.i) + "," + std::to_string(e.j) + "]";
    case K::Neg: return "-" + wrap(*e.lhs, detail::precedence(e.lhs->kind) < p);
    case K::Add:
    case K::Sub:
    case K::Mul: {
      const char* op = e.kind == K::Add ? " + " : e.kind == K::Sub ? " - " : "*";
      return wrap(*e.lhs, detail::precedence(e.lhs->kind) < p) + op + wrap(*e.rhs, detail::precedence(e.rhs->kind) <= p);
    }
    case K::Pow: {
      const bool fraction = e.lhs->kind == K::Number && !e.lhs->value.is_integer();
      return wrap(*e.lhs, detail::precedence(e.lhs->kind) <= p || fraction) + "^" + std::to_string(e.exponent);
    }
  }
  return {};
}

/// Checks every generator against the algebra; E for gl, F otherwise.
inline void validate_expr(const Expr& e, const AlgebraSpec& spec) {
  if (e.lhs) validate_expr(*e.lhs, spec);
  if (e.rhs) validate_expr(*e.rhs, spec);
  if (e.kind != Expr::Kind::Gen) return;
  const char want = spec.is_gl() ? 'E' : 'F';
  if (e.gen != want)
    throw ParseError(e.loc, std::string(1, e.gen) + "[..] is not a generator of " + spec.to_string() + "; use " + want + "[i,j]");
  if (!spec.in_index_set(e.i) || !spec.in_index_set(e.j))
    throw ParseError(e.loc, "index (" + std::to_string(e.i) + "," + std::to_string(e.j) + ") out of range for " +
                                spec.to_string());
}

/// Value in U(g) with the context's order.
inline UEAElement expr_to_element(const Expr& e, const UeaPtr& ctx) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Number: return UEAElement::scalar(ctx, MultiPoly(e.value));
    case K::Symbol: return UEAElement::scalar(ctx, MultiPoly::var(Var::c()));
    case K::Gen: {
      validate_expr(e, ctx->spec());
      return UEAElement::generator(ctx, e.i, e.j);
    }
    case K::Neg: return -expr_to_element(*e.lhs, ctx);
    case K::Add: return expr_to_element(*e.lhs, ctx) + expr_to_element(*e.rhs, ctx);
    case K::Sub: return expr_to_element(*e.lhs, ctx) - expr_to_element(*e.rhs, ctx);
    case K::Mul: return expr_to_element(*e.lhs, ctx) * expr_to_element(*e.rhs, ctx);
    case K::Pow: {
      UEAElement base = expr_to_element(*e.lhs, ctx);
      UEAElement r = UEAElement::scalar(ctx, MultiPoly(1));
      for (unsigned k = 0; k < e.exponent; ++k) r = r * base;
      return r;
    }
  }
  return UEAElement(ctx);
}

}  // namespace twy
