#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "engelkit/catalog.hpp"
#include "engelkit/ncpoly.hpp"

using namespace engelkit;

namespace {

const Domain Z = Domain::integers();
const Domain Q = Domain::rationals();

NCPolynomial xp(const Domain& d, bool unital = false) {
  return NCPolynomial::var(d, var_x, unital);
}
NCPolynomial yp(const Domain& d, bool unital = false) {
  return NCPolynomial::var(d, var_y, unital);
}

NCPolynomial random_poly(std::mt19937_64& rng, const Domain& d, bool unital,
                         std::size_t max_deg = 4) {
  NCPolynomial p(d, unital);
  std::size_t nterms = rng() % 4;
  for (std::size_t t = 0; t < nterms; ++t) {
    std::size_t len = rng() % (max_deg + 1);
    if (len == 0 && !unital) len = 1;
    Word w;
    for (std::size_t i = 0; i < len; ++i)
      w.letters.emplace_back(static_cast<std::uint32_t>(1 + rng() % 2));
    p.add_term(w, Scalar::of(d, static_cast<long long>(rng() % 7) - 3));
  }
  return p;
}

}  // namespace

TEST_CASE("add examples") {
  NCPolynomial xy = NCPolynomial::monomial(Z, Word::of({1, 2}));
  NCPolynomial yx = NCPolynomial::monomial(Z, Word::of({2, 1}));
  CHECK((xy - xy).is_zero());
  CHECK((xy + yx).term_count() == 2);
  // e1 + 2yx = xy + yx
  NCPolynomial e1 = engel_poly(1, Z);
  CHECK(e1 + yx.scaled(Scalar::of(Z, 2)) == xy + yx);
}

TEST_CASE("mul examples") {
  NCPolynomial xy = NCPolynomial::monomial(Z, Word::of({1, 2}));
  NCPolynomial yx = NCPolynomial::monomial(Z, Word::of({2, 1}));
  CHECK(xy * yx == NCPolynomial::monomial(Z, Word::of({1, 2, 2, 1})));

  NCPolynomial s = xp(Z) + yp(Z);
  NCPolynomial sq = s * s;
  CHECK(sq.term_count() == 4);
  CHECK(sq.coefficient(Word::of({1, 2})) == Scalar::one(Z));

  // (1+x)(1-x+x^2) = 1 + x^3
  NCPolynomial one = NCPolynomial::unit(Z);
  NCPolynomial x = xp(Z, true);
  NCPolynomial lhs = (one + x) * (one - x + x * x);
  CHECK(lhs == one + x * x * x);
}

TEST_CASE("commutator examples") {
  CHECK(commutator(xp(Z), xp(Z)).is_zero());
  CHECK(commutator(xp(Z), yp(Z)) == engel_poly(1, Z));
  // [x,y,y] = xy^2 - 2yxy + y^2x
  std::vector<NCPolynomial> ys = {yp(Z), yp(Z)};
  CHECK(left_normed(xp(Z), ys) == engel_poly(2, Z));
}

TEST_CASE("substitute examples") {
  NCPolynomial xy = NCPolynomial::monomial(Z, Word::of({1, 2}));
  std::map<Variable, NCPolynomial> swap = {{var_x, yp(Z)}, {var_y, xp(Z)}};
  CHECK(xy.substituted(swap) == NCPolynomial::monomial(Z, Word::of({2, 1})));

  // e1(x, y+1) = e1
  NCPolynomial e1 = engel_poly(1, Z, true);
  std::map<Variable, NCPolynomial> shift = {
      {var_x, xp(Z, true)}, {var_y, yp(Z, true) + NCPolynomial::unit(Z)}};
  CHECK(e1.substituted(shift) == e1);

  // a0*xy + a1*yx under y -> y(y+1)
  NCPolynomial p(Z, true);
  p.add_term(Word::of({1, 2}), Scalar::of(Z, 5));
  p.add_term(Word::of({2, 1}), Scalar::of(Z, 7));
  std::map<Variable, NCPolynomial> sub = {
      {var_x, xp(Z, true)},
      {var_y, yp(Z, true) * (yp(Z, true) + NCPolynomial::unit(Z))}};
  NCPolynomial img = p.substituted(sub);
  NCPolynomial expect(Z, true);
  expect.add_term(Word::of({1, 2, 2}), Scalar::of(Z, 5));
  expect.add_term(Word::of({1, 2}), Scalar::of(Z, 5));
  expect.add_term(Word::of({2, 2, 1}), Scalar::of(Z, 7));
  expect.add_term(Word::of({2, 1}), Scalar::of(Z, 7));
  CHECK(img == expect);

  CHECK_THROWS(xy.substituted({{var_x, yp(Z)}}));  // y unbound
  // constant term binding in a non-unital context
  CHECK_THROWS(xy.substituted(
      {{var_x, xp(Z)}, {var_y, yp(Z, true) + NCPolynomial::unit(Z)}}));
}

TEST_CASE("homogeneous components") {
  NCPolynomial p(Z);
  p.add_term(Word::of({1, 2}), Scalar::one(Z));
  p.add_term(Word::of({1, 2, 2}), Scalar::one(Z));
  p.add_term(Word::of({2, 2, 1}), Scalar::one(Z));
  NCPolynomial c2 = p.homogeneous_component(var_y, 2);
  CHECK(c2.term_count() == 2);
  CHECK(c2.coefficient(Word::of({1, 2, 2})) == Scalar::one(Z));
  CHECK(NCPolynomial::zero(Z).homogeneous_component(var_y, 3).is_zero());
}

TEST_CASE("hausdorff derivative") {
  NCPolynomial y2 = yp(Z) * yp(Z);
  CHECK(y2.hausdorff_derivative(var_y) == yp(Z, true).scaled(Scalar::of(Z, 2)));
  NCPolynomial yxy = NCPolynomial::monomial(Z, Word::of({2, 1, 2}));
  NCPolynomial expect = NCPolynomial::monomial(Z, Word::of({1, 2}), true) +
                        NCPolynomial::monomial(Z, Word::of({2, 1}), true);
  CHECK(yxy.hausdorff_derivative(var_y) == expect);
  CHECK(engel_poly(2, Z).hausdorff_derivative(var_y).is_zero());
}

TEST_CASE("delta examples") {
  CHECK(delta(xp(Z, true), var_y).is_zero());
  for (unsigned n = 1; n <= 6; ++n)
    CHECK(delta(engel_poly(n, Z, true), var_y).is_zero());
  NCPolynomial yxy = NCPolynomial::monomial(Z, Word::of({2, 1, 2}), true);
  NCPolynomial expect = NCPolynomial::monomial(Z, Word::of({1, 2}), true) +
                        NCPolynomial::monomial(Z, Word::of({2, 1}), true) +
                        xp(Z, true);
  CHECK(delta(yxy, var_y) == expect);
  CHECK_THROWS(delta(xp(Z, false), var_y));
}

TEST_CASE("ring axioms, canonical form, homomorphism, grading, Leibniz") {
  std::mt19937_64 rng(42);
  std::vector<Domain> doms = {Z, Q, Domain::gf(2), Domain::gf(3), Domain::gf(5)};
  int triples = 0;
  for (const auto& d : doms) {
    for (int it = 0; it < 250; ++it, ++triples) {
      bool unital = it % 2 == 0;
      NCPolynomial p = random_poly(rng, d, unital);
      NCPolynomial q = random_poly(rng, d, unital);
      NCPolynomial r = random_poly(rng, d, unital);
      CHECK((p * q) * r == p * (q * r));
      CHECK(p * (q + r) == p * q + p * r);
      CHECK((p + q) * r == p * r + q * r);
      CHECK((p - p).term_count() == 0);

      // substitution is a ring homomorphism
      std::map<Variable, NCPolynomial> sigma = {
          {var_x, random_poly(rng, d, unital, 2)},
          {var_y, random_poly(rng, d, unital, 2)}};
      CHECK((p * q).substituted(sigma) ==
            p.substituted(sigma) * q.substituted(sigma));

      // grading in y
      NCPolynomial sum(d, unital);
      for (std::size_t deg = 0; deg <= p.max_degree_in(var_y); ++deg)
        sum = sum + p.homogeneous_component(var_y, deg);
      CHECK(sum == p);

      // Leibniz rule
      CHECK((p * q).hausdorff_derivative(var_y) ==
            p.hausdorff_derivative(var_y) * q + p * q.hausdorff_derivative(var_y));
    }
  }
  CHECK(triples >= 1000);
}

TEST_CASE("delta vs hausdorff on W_n, and delta(e_n) = 0 everywhere") {
  std::mt19937_64 rng(3);
  std::vector<Domain> doms = {Q, Domain::gf(2), Domain::gf(3), Domain::gf(5)};
  for (const auto& d : doms) {
    for (unsigned n = 1; n <= 5; ++n) {
      std::vector<Scalar> cs;
      for (unsigned i = 0; i <= n; ++i)
        cs.push_back(Scalar::of(d, static_cast<long long>(rng() % 7) - 3));
      PartialLinear alpha(n, cs);
      NCPolynomial a = alpha.to_poly(true);
      // degree-(n-1) y-component of delta(a) is the Hausdorff derivative
      CHECK(delta(a, var_y).homogeneous_component(var_y, n - 1) ==
            a.hausdorff_derivative(var_y));
    }
    for (unsigned n = 1; n <= 8; ++n)
      CHECK(delta(engel_poly(n, d, true), var_y).is_zero());
  }
}

TEST_CASE("partial linear round trip and reducedness") {
  std::vector<Scalar> cs = {Scalar::of(Z, 0), Scalar::of(Z, 2), Scalar::of(Z, -1)};
  PartialLinear a(2, cs);
  CHECK_FALSE(a.left_reduced());
  CHECK(a.right_reduced());
  auto back = PartialLinear::from_poly(a.to_poly());
  REQUIRE(back.has_value());
  CHECK(*back == a);
  CHECK_FALSE(PartialLinear::from_poly(
      NCPolynomial::monomial(Z, Word::of({1, 1, 2}))).has_value());
}

TEST_CASE("canonical printing is deterministic deglex") {
  NCPolynomial p = engel_poly(2, Z);
  CHECK(p.to_string() == "x*y^2 - 2*y*x*y + y^2*x");
}
