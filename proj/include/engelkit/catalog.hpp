#pragma once

#include <cstdint>
#include <utility>

#include "engelkit/ncpoly.hpp"

namespace engelkit {

// Nontrivial semigroup identity u = v, multiplicative or circle.
struct WordIdentity {
  enum class Kind { multiplicative, circle };

  WordIdentity(Word l, Word r, Kind k = Kind::multiplicative);

  Word lhs, rhs;
  Kind kind;

  bool left_reduced() const {
    return lhs.letters.front() != rhs.letters.front();
  }
  bool right_reduced() const {
    return lhs.letters.back() != rhs.letters.back();
  }
  bool reduced() const { return left_reduced() && right_reduced(); }

  bool operator==(const WordIdentity&) const = default;
  std::string to_string() const;
};

// Polynomial identity a1*u1 + a2*u2 = 0 with u1, u2 monomials.
struct BinomialIdentity {
  Scalar a1, a2;
  Word u1, u2;

  BinomialIdentity(Scalar c1, Word w1, Scalar c2, Word w2);
  NCPolynomial to_poly() const;
};

// e_n = [x, y, ..., y] = sum_{i=0}^n (-1)^i C(n,i) y^i x y^{n-i}.
NCPolynomial engel_poly(unsigned n, const Domain& d, bool unital = false);

// (f_n, g_n): f_1 = xy, g_1 = yx, f_{n+1} = f_n x_{n+2} g_n, g_{n+1} = g_n x_{n+2} f_n.
std::pair<Word, Word> malcev_pair(unsigned n);

// (u_n, v_n): the Malcev pair with every x_i, i >= 3, deleted.
std::pair<Word, Word> morse_pair(unsigned n);

// Evaluation of a word under the circle operation, via r -> 1 + r: the
// product of (1 + x_i) over the letters, minus 1.
NCPolynomial circle_word_to_poly(const Word& w, const Domain& d);

// circle_word_to_poly(lhs) - circle_word_to_poly(rhs); its top-degree
// component is lhs - rhs as multiplicative polynomials.
NCPolynomial circle_identity_to_poly(const WordIdentity& id, const Domain& d);

// y^m * alpha * y^k.
NCPolynomial sandwich(std::size_t m, const PartialLinear& alpha, std::size_t k,
                      bool unital = false);

// The multiplicative identity (y^q x y^{2q}, y^{2q} x y^q) with q = p^t;
// over GF(p) its difference equals y^q e_q y^q.
WordIdentity engel_sandwich_semigroup(std::uint64_t p, unsigned t);

// Checks u_m - v_m = [u_1, v_1, v_2, ..., v_{m-1}] for the Morse words.
bool verify_morse_commutator(unsigned m, const Domain& d = Domain::integers());

}  // namespace engelkit
