#include "engelkit/finite_field.hpp"

#include <sstream>
#include <stdexcept>

namespace engelkit {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Poly = std::vector<std::uint64_t>;  // coefficients mod p, low to high

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return trim(r);
}

// a mod m, m monic
Poly poly_mod(Poly a, const Poly& m, std::uint64_t p) {
  a = trim(a);
  while (a.size() >= m.size()) {
    std::uint64_t lead = a.back();
    size_t shift = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i) {
      std::uint64_t s = (lead * m[i]) % p;
      a[i + shift] = (a[i + shift] + p - s) % p;
    }
    a = trim(a);
  }
  return a;
}

std::uint64_t encode(const Poly& a, std::uint64_t p) {
  std::uint64_t v = 0;
  for (size_t i = a.size(); i-- > 0;) v = v * p + a[i];
  return v;
}

Poly decode(std::uint64_t v, std::uint64_t p) {
  Poly d;
  while (v) {
    d.push_back(v % p);
    v /= p;
  }
  return d;
}

bool divides(const Poly& d, Poly a, std::uint64_t p) {
  return poly_mod(std::move(a), d, p).empty();
}

}  // namespace

FiniteField::FiniteField(std::uint64_t p) : p_(p), k_(1), modulus_{0, 1} {
  validate();
}

FiniteField::FiniteField(std::uint64_t p, std::vector<std::uint64_t> modulus)
    : p_(p), modulus_(std::move(modulus)) {
  if (modulus_.size() < 2) throw std::invalid_argument("modulus must have degree >= 1");
  k_ = static_cast<unsigned>(modulus_.size() - 1);
  validate();
}

void FiniteField::validate() {
  if (!is_prime(p_)) throw std::invalid_argument("characteristic must be prime");
  for (auto& c : modulus_) c %= p_;
  if (modulus_.back() != 1)
    throw std::invalid_argument("modulus must be monic");
  order_ = 1;
  for (unsigned i = 0; i < k_; ++i) {
    if (order_ > (std::uint64_t(1) << 40) / p_)
      throw std::invalid_argument("field too large");
    order_ *= p_;
  }
  // Irreducibility by trial division, exhaustive for small degree.
  if (k_ >= 2 && k_ <= 4) {
    for (unsigned d = 1; d <= k_ / 2; ++d) {
      std::uint64_t count = 1;
      for (unsigned i = 0; i < d; ++i) count *= p_;
      for (std::uint64_t low = 0; low < count; ++low) {
        Poly cand = decode(low, p_);
        cand.resize(d + 1, 0);
        cand[d] = 1;  // monic degree-d candidate
        if (divides(cand, modulus_, p_))
          throw std::invalid_argument("modulus is reducible");
      }
    }
  }
}

FiniteField FiniteField::with_default_modulus(std::uint64_t p, unsigned k) {
  if (k == 1) return FiniteField(p);
  if (k == 2) {
    if (p == 2) return FiniteField(2, {1, 1, 1});
    if (p == 3) return FiniteField(3, {2, 2, 1});
    if (p == 5) return FiniteField(5, {2, 4, 1});
  }
  throw std::invalid_argument(
      "no default modulus for GF(" + std::to_string(p) + "^" + std::to_string(k) +
      "); supply one explicitly");
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
  if (k_ == 1) return (a + b) % p_;
  Poly x = decode(a, p_), y = decode(b, p_);
  x.resize(k_, 0);
  y.resize(k_, 0);
  for (unsigned i = 0; i < k_; ++i) x[i] = (x[i] + y[i]) % p_;
  return encode(trim(x), p_);
}

FiniteField::Elem FiniteField::neg(Elem a) const {
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  Poly x = decode(a, p_);
  for (auto& c : x) c = c == 0 ? 0 : p_ - c;
  return encode(x, p_);
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
  if (k_ == 1) return (a * b) % p_;
  Poly r = poly_mod(poly_mul(decode(a, p_), decode(b, p_), p_), modulus_, p_);
  return encode(r, p_);
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t e) const {
  Elem r = 1, base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("division by zero in finite field");
  return pow(a, order_ - 2);
}

FiniteField::Elem FiniteField::from_int(long long v) const {
  long long m = static_cast<long long>(p_);
  long long r = v % m;
  if (r < 0) r += m;
  return static_cast<Elem>(r);
}

FiniteField::Elem FiniteField::from_bigint(const BigInt& v) const {
  BigInt r = v % BigInt(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r.convert_to<std::uint64_t>());
}

std::vector<std::uint64_t> FiniteField::digits(Elem a) const {
  Poly d = decode(a, p_);
  d.resize(k_, 0);
  return d;
}

FiniteField::Elem FiniteField::from_digits(const std::vector<std::uint64_t>& d) const {
  Poly x;
  for (auto c : d) x.push_back(c % p_);
  x.resize(k_, 0);
  return encode(trim(x), p_);
}

std::string FiniteField::to_string(Elem a) const {
  if (k_ == 1) return std::to_string(a);
  Poly d = decode(a, p_);
  if (d.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    if (!first) out << "+";
    first = false;
    if (i == 0 || d[i] != 1) out << d[i];
    if (i >= 1) {
      if (d[i] != 1) out << "*";
      out << "t";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

}  // namespace engelkit
