#include "engelkit/selftest.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include "engelkit/catalog.hpp"
#include "engelkit/deltakernel.hpp"
#include "engelkit/finalg.hpp"
#include "engelkit/transforms.hpp"

namespace engelkit {

namespace {

const Domain Z = Domain::integers();
const Domain Q = Domain::rationals();

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw CheckFailure(what);
}

PartialLinear random_alpha(std::mt19937_64& rng, const Domain& d, unsigned n) {
  std::vector<Scalar> cs;
  for (unsigned i = 0; i <= n; ++i) {
    long long v;
    if (i == 0 || i == n) {
      do {
        v = static_cast<long long>(rng() % 7) - 3;
      } while (Scalar::of(d, v).is_zero());
    } else {
      v = static_cast<long long>(rng() % 7) - 3;
    }
    cs.push_back(Scalar::of(d, v));
  }
  return PartialLinear(n, std::move(cs));
}

std::vector<Domain> four_fields() {
  return {Q, Domain::gf(2), Domain::gf(3), Domain::gf(5)};
}

void criterion_amazing() {
  std::mt19937_64 rng(11);
  int cases = 0;
  for (const Domain& d : four_fields())
    for (unsigned n = 1; n <= 6; ++n)
      for (int it = 0; it < 10; ++it, ++cases)
        require(verify_amazing(random_alpha(rng, d, n)),
                "amazing identity failed over " + d.name());
  require(cases >= 200, "fewer than 200 cases");
}

void criterion_lemma1_general() {
  std::mt19937_64 rng(5);
  int cases = 0;
  for (const Domain& d : {Q, Domain::gf(3)})
    for (unsigned n = 1; n <= 4; ++n)
      for (std::size_t m = 0; m <= 3; ++m)
        for (std::size_t k = 0; k <= 3; ++k) {
          if (m + k == 0) continue;
          require(lemma1_general_case_check(random_alpha(rng, d, n), m, k),
                  "general-case decomposition failed");
          ++cases;
        }
  require(cases >= 100, "fewer than 100 cases");
}

void criterion_engel_consistency() {
  for (unsigned n = 1; n <= 10; ++n) {
    NCPolynomial x = NCPolynomial::var(Z, var_x);
    std::vector<NCPolynomial> ys(n, NCPolynomial::var(Z, var_y));
    require(engel_poly(n, Z) == left_normed(x, ys), "Engel polynomial mismatch");
  }
  std::vector<Domain> domains = four_fields();
  domains.push_back(Z);
  for (const Domain& d : domains)
    for (unsigned n = 1; n <= 8; ++n)
      require(delta(engel_poly(n, d, true), var_y).is_zero(),
              "delta(e_n) nonzero over " + d.name());
}

void criterion_morse_commutator() {
  for (unsigned m = 2; m <= 4; ++m)
    require(verify_morse_commutator(m), "Morse commutator identity failed");
}

void criterion_rank_suite() {
  for (const Domain& d : {Q, Domain::gf(2), Domain::gf(3)})
    for (unsigned n = 1; n <= 8; ++n) {
      require(rank(build_delta_matrix(n, d)) == n, "delta matrix rank != n");
      require(verify_prop_kernel(n, d), "kernel is not the Engel vector");
    }
  for (unsigned n = 1; n <= 8; ++n)
    require(rank(build_hausdorff_matrix(n, Q)) == n, "Hausdorff rank != n over Q");
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL})
    require(rank(build_hausdorff_matrix(static_cast<unsigned>(p), Domain::gf(p))) < p,
            "Hausdorff rank did not drop in characteristic p");
}

void criterion_matrix_unit_example() {
  FiniteAlgebra alg = builtin_example1(Domain::gf(2));
  WordIdentity xyz(Word::of({1, 2, 3}), Word::of({2, 1, 3}));
  require(check_identity(alg, xyz, CheckMode::multiplicative).holds,
          "xyz = yxz does not hold");
  auto engel = check_engel_upto(alg, 6);
  for (const auto& r : engel) {
    require(!r.holds, "an Engel identity unexpectedly holds");
    require(r.witness->at(var_x) == alg.basis_element(1) &&
                r.witness->at(var_y) == alg.basis_element(0),
            "witness is not (e12, e11)");
  }
  require(!gamma_series(alg).index.has_value(), "gamma series reached zero");
}

void criterion_paison() {
  FiniteAlgebra alg = builtin_paison(2);
  auto idem = idempotents(alg);
  require(idem.size() == 2 && alg.is_zero(idem[0]) && idem[1] == alg.unit(),
          "idempotents are not {0, 1}");
  require(find_exponent(alg).least == 6, "exponent is not 6");
  WordIdentity id(Word::power(var_x, 6) * Word{var_y},
                  Word{var_y} * Word::power(var_x, 6));
  auto mult = check_identity(alg, id, CheckMode::multiplicative);
  require(mult.holds && mult.tuples_checked == 256, "x^6 y = y x^6 fails (mult)");
  require(check_identity(alg, id, CheckMode::circle).holds,
          "x^6 y = y x^6 fails (circle)");
  for (const auto& r : check_engel_upto(alg, 8))
    require(!r.holds, "an Engel identity unexpectedly holds");
}

void criterion_nil_engel() {
  struct Case {
    std::size_t k;
    std::uint64_t p;
  };
  for (Case c : {Case{2, 2}, Case{2, 3}, Case{3, 2}}) {
    FiniteAlgebra alg = builtin_strict_upper(c.k, Domain::gf(c.p));
    NCPolynomial nil = NCPolynomial::monomial(Z, Word::power(var_y, c.k));
    require(check_identity(alg, nil, CheckMode::multiplicative).holds,
            "y^k = 0 fails");
    require(check_engel_upto(alg, static_cast<unsigned>(2 * c.k - 1)).back().holds,
            "e_{2k-1} fails");
  }
  for (unsigned n = 1; n <= 10; ++n) {
    auto [m, ok] = nil_implies_engel(n);
    require(m == 2 * n - 1 && ok, "y-run certificate failed");
  }
}

void criterion_char_p_identity() {
  struct Case {
    std::uint64_t p;
    unsigned t;
  };
  for (Case c : {Case{2, 1}, Case{2, 2}, Case{3, 1}, Case{5, 1}}) {
    Domain d = Domain::gf(c.p);
    std::uint64_t q = 1;
    for (unsigned i = 0; i < c.t; ++i) q *= c.p;
    WordIdentity id = engel_sandwich_semigroup(c.p, c.t);
    NCPolynomial diff = NCPolynomial::monomial(d, id.lhs) -
                        NCPolynomial::monomial(d, id.rhs);
    std::vector<Scalar> cs;
    for (std::uint64_t i = 0; i <= q; ++i) {
      BigInt b = binomial(q, i);
      cs.push_back(Scalar::of(d, i % 2 ? -b : b));
    }
    PartialLinear engel(static_cast<unsigned>(q), std::move(cs));
    require(diff == sandwich(q, engel, q), "sandwich difference != y^q e_q y^q");
  }
}

void criterion_malcev_lie() {
  FiniteAlgebra n3 = builtin_strict_upper(3, Domain::gf(2));
  require(lie_lower_central_class(n3) == 2, "Lie class is not 2");
  auto [f2, g2] = malcev_pair(2);
  auto r = check_identity(n3, WordIdentity(f2, g2), CheckMode::circle);
  require(r.holds && r.tuples_checked == 512, "Malcev n=2 circle identity fails");

  FiniteAlgebra ex1 = builtin_example1(Domain::gf(2));
  for (unsigned n = 1; n <= 3; ++n) {
    auto [f, g] = malcev_pair(n);
    require(!check_identity(ex1, WordIdentity(f, g), CheckMode::circle).holds,
            "a Malcev circle identity unexpectedly holds");
  }
}

void criterion_pipeline() {
  for (unsigned n = 1; n <= 4; ++n) {
    auto [u, v] = morse_pair(n);
    TransformReport rep;
    PartialLinear a = binomial_to_partial_linear(WordIdentity(u, v), Q, &rep);
    require(a.reduced(), "linearized Morse identity is not reduced");
    require(replay_matches(rep), "linearize trace does not replay");
  }

  WordIdentity id(Word::of({1, 3, 1}), Word::of({2, 3, 2}));
  TransformReport rep;
  rep.operation = "pipeline";
  rep.input = id;
  TransformReport r1, r2, r3;
  WordIdentity two = reduce_to_two_vars(id, &r1);
  PartialLinear alpha = binomial_to_partial_linear(two, Q, &r2);
  require(alpha.reduced(), "pipeline alpha is not reduced");
  NCPolynomial out = lemma1_transform(alpha, 0, 0, Side::reduced, &r3);
  for (const auto* part : {&r1, &r2, &r3})
    rep.trace.insert(rep.trace.end(), part->trace.begin(), part->trace.end());
  rep.output = out;
  require(replay_matches(rep), "pipeline trace does not replay bit-exactly");
  require(out == engel_poly(3 * alpha.n - 1, Q), "pipeline output is not e_{3n-1}");
}

}  // namespace

std::vector<CriterionResult> run_acceptance_criteria(std::ostream* log) {
  struct Entry {
    const char* name;
    std::function<void()> run;
  };
  std::vector<Entry> entries = {
      {"amazing-identity-suite", criterion_amazing},
      {"lemma1-general-case", criterion_lemma1_general},
      {"engel-consistency", criterion_engel_consistency},
      {"morse-commutator", criterion_morse_commutator},
      {"delta-rank-kernel", criterion_rank_suite},
      {"matrix-unit-counterexample", criterion_matrix_unit_example},
      {"paison-ring", criterion_paison},
      {"nil-implies-engel", criterion_nil_engel},
      {"char-p-sandwich-identity", criterion_char_p_identity},
      {"malcev-lie-crosscheck", criterion_malcev_lie},
      {"transform-pipeline", criterion_pipeline},
  };

  std::vector<CriterionResult> out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    CriterionResult r;
    r.number = static_cast<int>(i + 1);
    r.name = entries[i].name;
    auto start = std::chrono::steady_clock::now();
    try {
      entries[i].run();
      r.passed = true;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (log) {
      std::ostringstream line;
      line << (r.passed ? "PASS" : "FAIL") << "  " << r.number << "  " << r.name;
      if (!r.detail.empty()) line << "  (" << r.detail << ")";
      *log << line.str() << "\n";
    }
    out.push_back(std::move(r));
  }
  return out;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return !results.empty();
}

}  // namespace engelkit
