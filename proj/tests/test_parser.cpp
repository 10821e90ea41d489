#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "engelkit/catalog.hpp"
#include "engelkit/parse.hpp"

using namespace engelkit;

namespace {
const Domain Z = Domain::integers();
}

TEST_CASE("word identities parse") {
  auto id = parse_identity("x*y = y*x");
  auto low = lower_identity(id);
  REQUIRE(std::holds_alternative<WordIdentity>(low));
  const auto& wi = std::get<WordIdentity>(low);
  CHECK(wi.lhs == Word::of({1, 2}));
  CHECK(wi.rhs == Word::of({2, 1}));

  auto sect3 = std::get<WordIdentity>(lower_identity(
      parse_identity("y^2*x*y^4 = y^4*x*y^2")));
  CHECK(sect3.lhs == Word::power(var_y, 2) * Word{var_x} * Word::power(var_y, 4));
  CHECK(sect3.rhs == Word::power(var_y, 4) * Word{var_x} * Word::power(var_y, 2));
}

TEST_CASE("commutator sugar lowers to the Engel polynomial") {
  auto low = lower_identity(parse_identity("[x,y,y] = 0"));
  REQUIRE(std::holds_alternative<NCPolynomial>(low));
  CHECK(std::get<NCPolynomial>(low) == engel_poly(2, Z, true));

  auto e5 = lower_identity(parse_identity("[x,y,y,y,y,y] = 0"));
  CHECK(std::get<NCPolynomial>(e5) == engel_poly(5, Z, true));
}

TEST_CASE("zero side placement") {
  CHECK(std::holds_alternative<NCPolynomial>(lower_identity(parse_identity("0 = x*y - y*x"))));
  CHECK_THROWS_AS(parse_identity("x + 0 = y"), ParseError);
  CHECK_THROWS_AS(parse_identity("0 = 0"), ParseError);
}

TEST_CASE("precedence") {
  // ^ > * > o > unary- > binary +/-
  auto a = parse_identity("x o y*z = 0").lhs;
  REQUIRE(a->kind == Expr::Kind::circle);
  CHECK(a->children[1]->kind == Expr::Kind::product);

  auto b = parse_identity("-x o y = 0").lhs;
  REQUIRE(b->kind == Expr::Kind::negate);
  CHECK(b->children[0]->kind == Expr::Kind::circle);

  auto c = parse_identity("-x + y = 0").lhs;
  REQUIRE(c->kind == Expr::Kind::sum);
  CHECK(c->children[0]->kind == Expr::Kind::negate);

  auto d = parse_identity("x*y^2 = 0").lhs;
  REQUIRE(d->kind == Expr::Kind::product);
  CHECK(d->children[1]->kind == Expr::Kind::power);

  auto e = parse_identity("(x*y)^2 = 0").lhs;
  CHECK(e->kind == Expr::Kind::power);
}

TEST_CASE("positioned errors") {
  try {
    parse_identity("x*y =\n y*w");
    FAIL("expected a parse error");
  } catch (const ParseError& err) {
    CHECK(err.line == 2);
    CHECK(err.column == 4);
  }
  CHECK_THROWS_AS(parse_identity("x^0 = y"), ParseError);
  CHECK_THROWS_AS(parse_identity("x0*y = y"), ParseError);
  CHECK_THROWS_AS(parse_identity("x*y"), ParseError);
  CHECK_THROWS_AS(parse_identity("x*y = y*x = x"), ParseError);
  CHECK_THROWS_AS(parse_identity("[x] = 0"), ParseError);
}

TEST_CASE("circle lowering") {
  auto low = lower_identity(parse_identity("x o y = 0"));
  REQUIRE(std::holds_alternative<NCPolynomial>(low));
  NCPolynomial expect = NCPolynomial::var(Z, var_x, true) +
                        NCPolynomial::var(Z, var_y, true) +
                        NCPolynomial::var(Z, var_x, true) * NCPolynomial::var(Z, var_y, true);
  CHECK(std::get<NCPolynomial>(low) == expect);
}

TEST_CASE("round-trip corpus") {
  std::vector<std::string> corpus = {
      "x*y = y*x",
      "x*y*z = y*x*z",
      "y^2*x*y^4 = y^4*x*y^2",
      "[x,y,y] = 0",
      "[x,y,y,y,y] = 0",
      "[x1,x2,x2] = 0",
      "x o y = y o x",
      "x o y o z = z o y o x",
      "x o (y o z) = x o y o z",
      "-x = 0",
      "-x + y = 0",
      "x + -y = 0",
      "x - y = 0",
      "x - y + z = 0",
      "2*x - y = 0",
      "x^2 = 0",
      "x^12 = 0",
      "(x*y)^2 = x*y*x*y",
      "(x + y)^2 = 0",
      "(x o y)*z = 0",
      "-(x*y) = 0",
      "-(x + y) = 0",
      "x*(y + z) = x*y + x*z",
      "[x + y, z] = 0",
      "[x, y, z] - [y, x, z] = 0",
      "x4*x5 = x5*x4",
      "x10*x2 = x2*x10",
      "x1*x2 = x2*x1",
      "x^3*y^3 = y^3*x^3",
      "y*x*y = x*y*y",
      "x*y o z = z o x*y",
      "-x o y = 0",
      "x - -y = 0",
      "[x, y]^2 = 0",
      "3*x = x + x + x",
      "x^2*y^2*x = x*y^2*x^2",
      "[x2, x1, x1, x1] = 0",
      "(x + y)*(x - y) = 0",
      "z o z = z",
      "x*z*y = y*z*x",
      "x^2 o y^2 = y^2 o x^2",
      "[x, y] o z = z o [x, y]",
      "x*y^2*x*y*x^2*y = y*x^2*y*x*y^2*x",
      "y^4*x*y^8 = y^8*x*y^4",
      "x - y - z = 0",
      "-(x o y) o z = 0",
      "(x + y)^3 = 0",
      "x4^2*x5^2 = x5^2*x4^2",
      "[x, y, y, y, y, y, y] = 0",
      "x*y*x*y*x = y*x*y*x*y",
  };
  // all Morse identities up to n = 5
  for (unsigned n = 1; n <= 5; ++n) {
    auto [u, v] = morse_pair(n);
    corpus.push_back(print_identity(word_identity_to_expr(WordIdentity(u, v))));
  }
  CHECK(corpus.size() >= 50);
  for (const auto& text : corpus) {
    CAPTURE(text);
    IdentityExpr ast = parse_identity(text);
    std::string printed = print_identity(ast);
    CHECK(parse_identity(printed) == ast);
    // printing is stable
    CHECK(print_identity(parse_identity(printed)) == printed);
  }
}

TEST_CASE("morse words print to words and lower back") {
  for (unsigned n = 1; n <= 5; ++n) {
    auto [u, v] = morse_pair(n);
    auto low = lower_identity(
        parse_identity(print_identity(word_identity_to_expr(WordIdentity(u, v)))));
    REQUIRE(std::holds_alternative<WordIdentity>(low));
    CHECK(std::get<WordIdentity>(low).lhs == u);
    CHECK(std::get<WordIdentity>(low).rhs == v);
  }
}

TEST_CASE("trivial identities are rejected in lowering") {
  CHECK_THROWS_AS(lower_identity(parse_identity("x = x")), std::invalid_argument);
}
