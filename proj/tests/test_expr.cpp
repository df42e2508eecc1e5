#include "twy/expr.hpp"

#include <catch_amalgamated.hpp>

#include <functional>
#include <random>

using namespace twy;

namespace {

SourceLoc error_at(const std::string& s) {
  try {
    parse_expr(s);
  } catch (const ParseError& e) {
    return e.loc();
  }
  FAIL("no error for '" << s << "'");
  return {};
}

std::string roundtrip(const std::string& s) { return print_expr(*parse_expr(s)); }

}  // namespace

TEST_CASE("parse_expr builds the expected trees") {
  auto e = parse_expr("E[1,2]*E[2,1]");
  CHECK(e->kind == Expr::Kind::Mul);
  CHECK(e->lhs->kind == Expr::Kind::Gen);
  CHECK(e->lhs->i == 1);
  CHECK(e->rhs->j == 1);

  auto f = parse_expr("F[1,-1]^2 - 4*c");
  REQUIRE(f->kind == Expr::Kind::Sub);
  CHECK(f->lhs->kind == Expr::Kind::Pow);
  CHECK(f->lhs->exponent == 2);
  CHECK(f->lhs->lhs->j == -1);
  CHECK(f->rhs->kind == Expr::Kind::Mul);
  CHECK(f->rhs->rhs->kind == Expr::Kind::Symbol);
}

TEST_CASE("precedence and associativity") {
  CHECK(roundtrip("1 - 2 - 3") == "1 - 2 - 3");
  CHECK(roundtrip("1 - (2 - 3)") == "1 - (2 - 3)");
  CHECK(roundtrip("(E[1,1] + E[2,2])*c") == "(E[1,1] + E[2,2])*c");
  CHECK(roundtrip("-E[1,1]^2") == "-E[1,1]^2");
  CHECK(roundtrip("(-E[1,1])^2") == "(-E[1,1])^2");
  CHECK(roundtrip("(1/2)^3") == "(1/2)^3");
  CHECK(roundtrip("6/4") == "3/2");
}

TEST_CASE("syntax errors carry a location") {
  SourceLoc at = error_at("E[1,2]*");
  CHECK(at.line == 1);
  CHECK(at.col == 8);
  CHECK(error_at("E[1,2]\n + ").line == 2);
  CHECK(error_at("").col == 1);
  CHECK(error_at("E[1 2]").col == 5);
  CHECK(error_at("1/0").col == 1);
  CHECK(error_at("E[1,1]^99").col == 8);
  CHECK(error_at("2 + foo").col == 5);
  CHECK_THROWS_WITH(parse_expr("x"), Catch::Matchers::ContainsSubstring("unknown symbol"));
  CHECK(error_at(std::string(500, '(') + "1" + std::string(500, ')')).col > 1);
}

TEST_CASE("validation against the algebra") {
  auto gl2 = AlgebraSpec::parse("gl:2");
  auto sp2 = AlgebraSpec::parse("sp:2");
  CHECK_NOTHROW(validate_expr(*parse_expr("E[1,2]*E[2,1]"), gl2));
  CHECK_THROWS_AS(validate_expr(*parse_expr("E[1,3]"), gl2), ParseError);
  CHECK_THROWS_AS(validate_expr(*parse_expr("F[1,-1]"), gl2), ParseError);
  CHECK_NOTHROW(validate_expr(*parse_expr("F[1,-1]^2 - 4*c"), sp2));
  CHECK_THROWS_AS(validate_expr(*parse_expr("F[0,1]"), sp2), ParseError);
  CHECK_NOTHROW(validate_expr(*parse_expr("F[0,1]"), AlgebraSpec::parse("o:3")));
  try {
    validate_expr(*parse_expr("E[1,1] + E[1,7]"), gl2);
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.loc().col == 10);
  }
}

TEST_CASE("expressions evaluate in U(g)") {
  auto ctx = Uea::get(AlgebraSpec::parse("gl:2"), MonomialOrder::hc());
  auto a = expr_to_element(*parse_expr("E[1,2]*E[2,1] - E[2,1]*E[1,2]"), ctx);
  auto b = expr_to_element(*parse_expr("E[1,1] - E[2,2]"), ctx);
  CHECK(a == b);
  auto c2 = expr_to_element(*parse_expr("(c + 1)^2 - c^2 - 2*c"), ctx);
  CHECK(c2 == UEAElement::scalar(ctx, MultiPoly(1)));
}

TEST_CASE("print is a fixed point of parse then print") {
  std::mt19937 rng(7);
  const std::string atoms[] = {"E[1,2]", "F[-1,1]", "c", "3", "1/2", "0"};
  std::function<std::string(int)> gen = [&](int d) -> std::string {
    int k = static_cast<int>(rng() % (d > 3 ? 1 : 6));
    switch (k) {
      case 0: return atoms[rng() % 6];
      case 1: return gen(d + 1) + " + " + gen(d + 1);
      case 2: return gen(d + 1) + "-" + gen(d + 1);
      case 3: return "(" + gen(d + 1) + ")*" + gen(d + 1);
      case 4: return "-" + gen(d + 1);
      default: return "(" + gen(d + 1) + ")^" + std::to_string(rng() % 4);
    }
  };
  for (int t = 0; t < 500; ++t) {
    std::string s = gen(0);
    std::string p = roundtrip(s);
    INFO(s);
    CHECK(roundtrip(p) == p);
  }
}

TEST_CASE("the parser is total on arbitrary input") {
  std::mt19937 rng(11);
  const std::string alphabet = "EFc0123456789[],-+*^/() \n\txq";
  for (int t = 0; t < 3000; ++t) {
    std::string s;
    const auto len = rng() % 24;
    for (unsigned k = 0; k < len; ++k) s += alphabet[rng() % alphabet.size()];
    if (!s.empty() && rng() % 4 == 0) s[rng() % s.size()] = static_cast<char>(rng() % 256);
    try {
      auto e = parse_expr(s);
      std::string p = print_expr(*e);
      CHECK(roundtrip(p) == p);
    } catch (const ParseError& e) {
      CHECK(e.loc().line >= 1);
      CHECK(e.loc().col >= 1);
    }
  }
}
