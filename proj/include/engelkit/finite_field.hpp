#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "engelkit/bigint.hpp"

namespace engelkit {

// GF(p^k) with elements encoded as integers in [0, p^k): the element
// sum d_i t^i (with 0 <= d_i < p) is encoded as sum d_i p^i, where t is
// the class of the modulus variable.  The modulus is a monic irreducible
// polynomial of degree k over GF(p), stored as coefficients c0..ck.
class FiniteField {
 public:
  using Elem = std::uint64_t;

  explicit FiniteField(std::uint64_t p);  // prime field, modulus t - ?: k = 1
  FiniteField(std::uint64_t p, std::vector<std::uint64_t> modulus);

  // GF(p^k) with a shipped default modulus (k = 1 always; k = 2 for p in
  // {2, 3, 5}: the Conway polynomials for GF(4), GF(9), GF(25)).
  static FiniteField with_default_modulus(std::uint64_t p, unsigned k);

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint64_t order() const { return order_; }
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  // The class of t; a generator of GF(p^k) over GF(p) for k > 1.
  Elem gen() const { return k_ > 1 ? p_ : (p_ > 2 ? 2 : 1); }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;  // throws on zero
  Elem pow(Elem a, std::uint64_t e) const;
  Elem frobenius(Elem a) const { return pow(a, p_); }

  Elem from_int(long long v) const;
  Elem from_bigint(const BigInt& v) const;

  // Coefficients d_0..d_{k-1} of the representative polynomial.
  std::vector<std::uint64_t> digits(Elem a) const;
  Elem from_digits(const std::vector<std::uint64_t>& d) const;

  std::string to_string(Elem a) const;

  bool operator==(const FiniteField& o) const {
    return p_ == o.p_ && modulus_ == o.modulus_;
  }

 private:
  void validate();

  std::uint64_t p_ = 0;
  unsigned k_ = 1;
  std::uint64_t order_ = 0;
  std::vector<std::uint64_t> modulus_;  // c0..ck, monic
};

using FieldPtr = std::shared_ptr<const FiniteField>;

bool is_prime(std::uint64_t n);

}  // namespace engelkit
