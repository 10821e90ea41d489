#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "engelkit/catalog.hpp"
#include "engelkit/deltakernel.hpp"

using namespace engelkit;

namespace {
const Domain Q = Domain::rationals();
}

TEST_CASE("delta matrix entries by hand") {
  ExactMatrix m1 = build_delta_matrix(1, Q);
  REQUIRE(m1.rows() == 1);
  CHECK(m1.at(0, 0) == Scalar::one(Q));
  CHECK(m1.at(0, 1) == Scalar::one(Q));

  // n=2, row (1,0) is the third row under (s+t, s) ordering
  ExactMatrix m2 = build_delta_matrix(2, Q);
  REQUIRE(m2.rows() == 3);
  CHECK(m2.at(2, 0) == Scalar::zero(Q));
  CHECK(m2.at(2, 1) == Scalar::one(Q));
  CHECK(m2.at(2, 2) == Scalar::of(Q, 2));
}

TEST_CASE("rows (0,m) form the unitriangular display") {
  // entries C(i,0)*C(n-i,m) at row (0,m): the column i = n-m entry is 1 and
  // all columns to its right are 0
  unsigned n = 5;
  ExactMatrix m = build_delta_matrix(n, Q);
  // row (0, t) has index sum_{j<t}(j+1) = t(t+1)/2 under the (s+t, s) order
  for (unsigned t = 0; t < n; ++t) {
    std::size_t row = t * (t + 1) / 2;
    CHECK(m.at(row, n - t) == Scalar::one(Q));
    for (unsigned c = n - t + 1; c <= n; ++c)
      CHECK(m.at(row, c) == Scalar::zero(Q));
  }
}

TEST_CASE("hausdorff matrix displays") {
  ExactMatrix h1 = build_hausdorff_matrix(1, Q);
  CHECK(h1.at(0, 0) == Scalar::one(Q));
  CHECK(h1.at(0, 1) == Scalar::one(Q));

  ExactMatrix h2 = build_hausdorff_matrix(2, Q);
  long expect2[2][3] = {{2, 1, 0}, {0, 1, 2}};
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 3; ++c)
      CHECK(h2.at(r, c) == Scalar::of(Q, expect2[r][c]));

  ExactMatrix h3 = build_hausdorff_matrix(3, Q);
  long expect3[3][4] = {{3, 1, 0, 0}, {0, 2, 2, 0}, {0, 0, 1, 3}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 4; ++c)
      CHECK(h3.at(r, c) == Scalar::of(Q, expect3[r][c]));
}

TEST_CASE("delta matrix rank and kernel") {
  for (const Domain& d : {Q, Domain::gf(2), Domain::gf(3)}) {
    for (unsigned n = 1; n <= 8; ++n) {
      CHECK(rank(build_delta_matrix(n, d)) == n);
      CHECK(verify_prop_kernel(n, d));
    }
  }
  auto k1 = kernel_basis(build_delta_matrix(1, Q));
  REQUIRE(k1.size() == 1);
  // normalized so the last nonzero coordinate is 1: (-1, 1)
  CHECK(k1[0][0] == Scalar::of(Q, -1));
  CHECK(k1[0][1] == Scalar::one(Q));
}

TEST_CASE("hausdorff rank: characteristic zero vs p") {
  for (unsigned n = 1; n <= 8; ++n)
    CHECK(rank(build_hausdorff_matrix(n, Q)) == n);
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL})
    CHECK(rank(build_hausdorff_matrix(static_cast<unsigned>(p), Domain::gf(p))) <
          p);
}

TEST_CASE("leading n x n determinant of the hausdorff matrix is n!") {
  // bidiagonal: determinant of the first n columns equals n!
  for (unsigned n = 1; n <= 8; ++n) {
    ExactMatrix h = build_hausdorff_matrix(n, Q);
    // exact elimination-based determinant of the left block
    std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(n, Scalar::zero(Q)));
    for (unsigned r = 0; r < n; ++r)
      for (unsigned c = 0; c < n; ++c) a[r][c] = h.at(r, c);
    Scalar det = Scalar::one(Q);
    for (unsigned c = 0; c < n; ++c) {
      unsigned piv = c;
      while (piv < n && a[piv][c].is_zero()) ++piv;
      REQUIRE(piv < n);
      if (piv != c) {
        std::swap(a[piv], a[c]);
        det = -det;
      }
      det = det * a[c][c];
      Scalar inv = a[c][c].inverse();
      for (unsigned r = c + 1; r < n; ++r) {
        Scalar f = a[r][c] * inv;
        for (unsigned cc = c; cc < n; ++cc) a[r][cc] = a[r][cc] - f * a[c][cc];
      }
    }
    BigInt fact = 1;
    for (unsigned i = 2; i <= n; ++i) fact *= i;
    CHECK(det == Scalar::of(Q, fact));
  }
}

TEST_CASE("kernel cross-validation against delta in the free algebra") {
  std::mt19937_64 rng(17);
  for (const Domain& d : {Q, Domain::gf(2), Domain::gf(3), Domain::gf(5)}) {
    for (unsigned n = 1; n <= 6; ++n) {
      // kernel vector -> delta of its polynomial vanishes
      auto kernel = kernel_basis(build_delta_matrix(n, d));
      REQUIRE(kernel.size() == 1);
      PartialLinear in_kernel(n, kernel[0]);
      CHECK(delta(in_kernel.to_poly(true), var_y).is_zero());

      // random non-kernel vector -> delta nonzero
      for (int it = 0; it < 5; ++it) {
        std::vector<Scalar> cs;
        Domain field = d.kind() == Domain::Kind::Integers ? Q : d;
        for (unsigned i = 0; i <= n; ++i)
          cs.push_back(Scalar::of(field, static_cast<long long>(rng() % 7) - 3));
        PartialLinear a(n, cs);
        bool multiple_of_engel = true;
        // a is in the kernel iff it is proportional to the kernel vector
        std::optional<Scalar> ratio;
        for (unsigned i = 0; i <= n; ++i) {
          if (kernel[0][i].is_zero()) {
            if (!cs[i].is_zero()) multiple_of_engel = false;
            continue;
          }
          Scalar r = cs[i] / kernel[0][i];
          if (!ratio)
            ratio = r;
          else if (*ratio != r)
            multiple_of_engel = false;
        }
        CHECK(delta(a.to_poly(true), var_y).is_zero() == multiple_of_engel);
      }
    }
  }
}
