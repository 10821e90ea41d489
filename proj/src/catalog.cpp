#include "engelkit/catalog.hpp"

#include <stdexcept>
#include <vector>

namespace engelkit {

WordIdentity::WordIdentity(Word l, Word r, Kind k)
    : lhs(std::move(l)), rhs(std::move(r)), kind(k) {
  if (lhs.is_empty() || rhs.is_empty())
    throw std::invalid_argument("identity words must be nonempty");
  if (lhs == rhs) throw std::invalid_argument("trivial identity u = u");
}

std::string WordIdentity::to_string() const {
  return lhs.to_string() + " = " + rhs.to_string();
}

BinomialIdentity::BinomialIdentity(Scalar c1, Word w1, Scalar c2, Word w2)
    : a1(std::move(c1)), a2(std::move(c2)), u1(std::move(w1)), u2(std::move(w2)) {
  if (u1.is_empty() || u2.is_empty())
    throw std::invalid_argument("binomial identity words must be nonempty");
  if (a1.domain() != a2.domain())
    throw DomainMismatch("binomial coefficients must share a domain");
}

NCPolynomial BinomialIdentity::to_poly() const {
  NCPolynomial p(a1.domain());
  p.add_term(u1, a1);
  p.add_term(u2, a2);
  return p;
}

NCPolynomial engel_poly(unsigned n, const Domain& d, bool unital) {
  if (n < 1) throw std::invalid_argument("engel degree must be >= 1");
  NCPolynomial p(d, unital);
  for (unsigned i = 0; i <= n; ++i) {
    BigInt c = binomial(n, i);
    if (i % 2) c = -c;
    Word w = Word::power(var_y, i) * Word{var_x} * Word::power(var_y, n - i);
    p.add_term(w, Scalar::of(d, c));
  }
  return p;
}

std::pair<Word, Word> malcev_pair(unsigned n) {
  if (n < 1) throw std::invalid_argument("malcev index must be >= 1");
  Word f = Word::of({1, 2});
  Word g = Word::of({2, 1});
  for (unsigned i = 1; i < n; ++i) {
    Word mid{Variable(i + 2)};  // x_{i+2}
    Word nf = f * mid * g;
    Word ng = g * mid * f;
    f = std::move(nf);
    g = std::move(ng);
  }
  return {f, g};
}

std::pair<Word, Word> morse_pair(unsigned n) {
  auto [f, g] = malcev_pair(n);
  auto erase_high = [](Word& w) {
    std::erase_if(w.letters, [](const Variable& v) { return v.index >= 3; });
  };
  erase_high(f);
  erase_high(g);
  return {f, g};
}

NCPolynomial circle_word_to_poly(const Word& w, const Domain& d) {
  if (w.is_empty()) throw std::invalid_argument("circle word must be nonempty");
  NCPolynomial prod = NCPolynomial::unit(d);
  for (const auto& l : w.letters)
    prod = prod * (NCPolynomial::unit(d) + NCPolynomial::var(d, l, true));
  return prod - NCPolynomial::unit(d);
}

NCPolynomial circle_identity_to_poly(const WordIdentity& id, const Domain& d) {
  if (id.kind != WordIdentity::Kind::circle)
    throw std::invalid_argument("identity is not a circle identity");
  return circle_word_to_poly(id.lhs, d) - circle_word_to_poly(id.rhs, d);
}

NCPolynomial sandwich(std::size_t m, const PartialLinear& alpha, std::size_t k,
                      bool unital) {
  const Domain& d = alpha.domain();
  NCPolynomial r(d, unital);
  Word pre = Word::power(var_y, m);
  Word post = Word::power(var_y, k);
  for (unsigned i = 0; i <= alpha.n; ++i) {
    Word w = pre * Word::power(var_y, i) * Word{var_x} *
             Word::power(var_y, alpha.n - i) * post;
    r.add_term(w, alpha.coeffs[i]);
  }
  return r;
}

WordIdentity engel_sandwich_semigroup(std::uint64_t p, unsigned t) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < t; ++i) q *= p;
  Word l = Word::power(var_y, q) * Word{var_x} * Word::power(var_y, 2 * q);
  Word r = Word::power(var_y, 2 * q) * Word{var_x} * Word::power(var_y, q);
  return WordIdentity(l, r);
}

bool verify_morse_commutator(unsigned m, const Domain& d) {
  if (m < 2) throw std::invalid_argument("m must be >= 2");
  auto to_poly = [&](const Word& w) { return NCPolynomial::monomial(d, w); };
  auto [um, vm] = morse_pair(m);
  NCPolynomial lhs = to_poly(um) - to_poly(vm);
  auto [u1, v1] = morse_pair(1);
  std::vector<NCPolynomial> tail;
  tail.push_back(to_poly(v1));
  for (unsigned i = 2; i < m; ++i) tail.push_back(to_poly(morse_pair(i).second));
  NCPolynomial rhs = left_normed(to_poly(u1), tail);
  return lhs == rhs;
}

}  // namespace engelkit
