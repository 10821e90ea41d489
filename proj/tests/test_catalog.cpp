#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "engelkit/catalog.hpp"

using namespace engelkit;

namespace {
const Domain Z = Domain::integers();
}

TEST_CASE("engel_poly matches the iterated commutator") {
  CHECK(engel_poly(1, Z) ==
        NCPolynomial::monomial(Z, Word::of({1, 2})) -
            NCPolynomial::monomial(Z, Word::of({2, 1})));
  for (const Domain& d :
       {Z, Domain::rationals(), Domain::gf(2), Domain::gf(3), Domain::gf(5)}) {
    for (unsigned n = 1; n <= 10; ++n) {
      std::vector<NCPolynomial> ys(n, NCPolynomial::var(d, var_y));
      CHECK(engel_poly(n, d) == left_normed(NCPolynomial::var(d, var_x), ys));
    }
  }
}

TEST_CASE("malcev pairs") {
  auto [f1, g1] = malcev_pair(1);
  CHECK(f1 == Word::of({1, 2}));
  CHECK(g1 == Word::of({2, 1}));
  auto [f2, g2] = malcev_pair(2);
  CHECK(f2 == Word::of({1, 2, 3, 2, 1}));
  CHECK(g2 == Word::of({2, 1, 3, 1, 2}));
  for (unsigned n = 1; n <= 10; ++n) {
    auto [f, g] = malcev_pair(n);
    CHECK(f.length() == 3 * (std::size_t(1) << (n - 1)) - 1);
    CHECK(f.multidegree() == g.multidegree());
    CHECK(f != g);
    WordIdentity id(f, g);
    CHECK(id.reduced());
  }
}

TEST_CASE("morse pairs") {
  auto [u1, v1] = morse_pair(1);
  CHECK(u1 == Word::of({1, 2}));
  auto [u2, v2] = morse_pair(2);
  CHECK(u2 == Word::of({1, 2, 2, 1}));
  CHECK(v2 == Word::of({2, 1, 1, 2}));
  auto [u3, v3] = morse_pair(3);
  CHECK(u3 == u2 * v2);
  CHECK(v3 == v2 * u2);
  for (unsigned n = 1; n <= 10; ++n) {
    auto [u, v] = morse_pair(n);
    CHECK(u.length() == std::size_t(1) << n);
    CHECK(u.multidegree() == v.multidegree());
    for (const auto& l : u.letters) CHECK(l.index <= 2);
  }
}

TEST_CASE("circle words") {
  CHECK(circle_word_to_poly(Word::of({1}), Z) == NCPolynomial::var(Z, var_x, true));
  // x o y = x + y + xy
  NCPolynomial expect = NCPolynomial::var(Z, var_x, true) +
                        NCPolynomial::var(Z, var_y, true) +
                        NCPolynomial::monomial(Z, Word::of({1, 2}), true);
  CHECK(circle_word_to_poly(Word::of({1, 2}), Z) == expect);
  // (1+x)(1+y)(1+x) - 1 = 2x + y + x^2 + xy + yx + xyx
  NCPolynomial p = circle_word_to_poly(Word::of({1, 2, 1}), Z);
  CHECK(p.coefficient(Word::of({1})) == Scalar::of(Z, 2));
  CHECK(p.coefficient(Word::of({2})) == Scalar::one(Z));
  CHECK(p.coefficient(Word::of({1, 1})) == Scalar::one(Z));
  CHECK(p.coefficient(Word::of({1, 2, 1})) == Scalar::one(Z));
  CHECK(p.coefficient(Word::empty()).is_zero());
  CHECK(p.term_count() == 6);
}

TEST_CASE("circle identities") {
  WordIdentity comm(Word::of({1, 2}), Word::of({2, 1}), WordIdentity::Kind::circle);
  CHECK(circle_identity_to_poly(comm, Z) == engel_poly(1, Z, true));
  CHECK_THROWS(WordIdentity(Word::of({1}), Word::of({1})));

  auto [u2, v2] = morse_pair(2);
  WordIdentity morse2(u2, v2, WordIdentity::Kind::circle);
  NCPolynomial top = circle_identity_to_poly(morse2, Z).total_degree_component(4);
  CHECK(top == NCPolynomial::monomial(Z, u2, true) -
                   NCPolynomial::monomial(Z, v2, true));
}

TEST_CASE("sandwich") {
  PartialLinear e1(1, {Scalar::one(Z), Scalar::of(Z, -1)});
  CHECK(sandwich(0, e1, 0) == e1.to_poly());
  NCPolynomial s = sandwich(1, e1, 0);
  NCPolynomial expect = NCPolynomial::monomial(Z, Word::of({2, 1, 2})) -
                        NCPolynomial::monomial(Z, Word::of({2, 2, 1}));
  CHECK(s == expect);
}

TEST_CASE("engel sandwich semigroup identities") {
  WordIdentity i21 = engel_sandwich_semigroup(2, 1);
  CHECK(i21.lhs == Word::power(var_y, 2) * Word{var_x} * Word::power(var_y, 4));
  CHECK(i21.rhs == Word::power(var_y, 4) * Word{var_x} * Word::power(var_y, 2));

  // p=3, t=0: y x y^2 - y^2 x y = y e_1 y
  WordIdentity i30 = engel_sandwich_semigroup(3, 0);
  Domain g3 = Domain::gf(3);
  NCPolynomial diff = NCPolynomial::monomial(g3, i30.lhs) -
                      NCPolynomial::monomial(g3, i30.rhs);
  PartialLinear e1(1, {Scalar::one(g3), -Scalar::one(g3)});
  CHECK(diff == sandwich(1, e1, 1));

  // over GF(2): y^2 x y^4 - y^4 x y^2 = y^2 e_2 y^2
  Domain g2 = Domain::gf(2);
  NCPolynomial diff2 = NCPolynomial::monomial(g2, i21.lhs) -
                       NCPolynomial::monomial(g2, i21.rhs);
  auto e2 = PartialLinear::from_poly(engel_poly(2, g2));
  REQUIRE(e2.has_value());
  CHECK(diff2 == sandwich(2, *e2, 2));

  CHECK_THROWS(engel_sandwich_semigroup(4, 1));
}

TEST_CASE("morse commutator identity") {
  for (unsigned m = 2; m <= 4; ++m) CHECK(verify_morse_commutator(m));
}
