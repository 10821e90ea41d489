#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "engelkit/scalar.hpp"

using namespace engelkit;

TEST_CASE("prime field arithmetic") {
  FiniteField f5(5);
  CHECK(f5.order() == 5);
  CHECK(f5.add(3, 4) == 2);
  CHECK(f5.mul(3, 4) == 2);
  CHECK(f5.inv(3) == 2);
  CHECK(f5.neg(0) == 0);
  CHECK(f5.from_int(-1) == 4);
  CHECK_THROWS(FiniteField(6));
}

TEST_CASE("GF(4) via default modulus") {
  FiniteField f = FiniteField::with_default_modulus(2, 2);
  CHECK(f.order() == 4);
  // t^2 = t + 1 under t^2 + t + 1
  CHECK(f.mul(f.gen(), f.gen()) == f.add(f.gen(), 1));
  // Frobenius is an automorphism of order 2
  for (FiniteField::Elem a = 0; a < 4; ++a)
    CHECK(f.frobenius(f.frobenius(a)) == a);
  // every nonzero element has order dividing 3
  for (FiniteField::Elem a = 1; a < 4; ++a) CHECK(f.pow(a, 3) == 1);
}

TEST_CASE("GF(9), GF(25) defaults are fields") {
  for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{3, 2}, {5, 2}}) {
    FiniteField f = FiniteField::with_default_modulus(p, k);
    for (FiniteField::Elem a = 1; a < f.order(); ++a) {
      CHECK(f.mul(a, f.inv(a)) == 1);
    }
  }
}

TEST_CASE("reducible modulus rejected") {
  // t^2 + 1 = (t+1)^2 over GF(2)
  CHECK_THROWS(FiniteField(2, {1, 0, 1}));
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(7);
  std::vector<Domain> doms = {Domain::rationals(), Domain::gf(2), Domain::gf(3, 2),
                              Domain::gf(5)};
  for (const auto& d : doms) {
    for (int it = 0; it < 200; ++it) {
      auto rand_scalar = [&] {
        return Scalar::of(d, static_cast<long long>(rng() % 19) - 9);
      };
      Scalar a = rand_scalar(), b = rand_scalar(), c = rand_scalar();
      CHECK((a + b) * c == a * c + b * c);
      CHECK(a * (b * c) == (a * b) * c);
      CHECK(a + (-a) == Scalar::zero(d));
      if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(d));
    }
  }
}

TEST_CASE("scalar conversions") {
  Scalar z = Scalar::of(Domain::integers(), -7);
  CHECK(z.convert_to(Domain::rationals()).as_rational() == BigRat(-7));
  CHECK(z.convert_to(Domain::gf(5)).as_finite() == 3);
  Scalar half = Scalar::rational(BigRat(1, 2));
  CHECK(half.convert_to(Domain::gf(5)).as_finite() == 3);  // 2^-1 = 3 mod 5
  Scalar bad = Scalar::rational(BigRat(1, 5));
  CHECK_THROWS(bad.convert_to(Domain::gf(5)));
}

TEST_CASE("domain mismatch is an error") {
  Scalar a = Scalar::of(Domain::gf(2), 1);
  Scalar b = Scalar::of(Domain::gf(3), 1);
  CHECK_THROWS_AS((void)(a + b), DomainMismatch);
}
