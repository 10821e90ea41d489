#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>

#include "engelkit/bigint.hpp"
#include "engelkit/finite_field.hpp"

namespace engelkit {

struct DomainMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Coefficient domain: the integers, the rationals, or a finite field.
class Domain {
 public:
  enum class Kind { Integers, Rationals, Finite };

  static Domain integers() { return Domain(Kind::Integers, nullptr); }
  static Domain rationals() { return Domain(Kind::Rationals, nullptr); }
  static Domain finite(FieldPtr f) {
    if (!f) throw std::invalid_argument("null field");
    return Domain(Kind::Finite, std::move(f));
  }
  static Domain gf(std::uint64_t p, unsigned k = 1) {
    return finite(std::make_shared<FiniteField>(FiniteField::with_default_modulus(p, k)));
  }

  Kind kind() const { return kind_; }
  bool is_field() const { return kind_ != Kind::Integers; }
  const FiniteField& field() const {
    if (kind_ != Kind::Finite) throw std::logic_error("domain has no finite field");
    return *field_;
  }
  FieldPtr field_ptr() const { return field_; }

  BigInt characteristic() const {
    return kind_ == Kind::Finite ? BigInt(field_->characteristic()) : BigInt(0);
  }

  bool operator==(const Domain& o) const {
    if (kind_ != o.kind_) return false;
    if (kind_ != Kind::Finite) return true;
    return *field_ == *o.field_;
  }
  bool operator!=(const Domain& o) const { return !(*this == o); }

  std::string name() const;

 private:
  Domain(Kind k, FieldPtr f) : kind_(k), field_(std::move(f)) {}
  Kind kind_;
  FieldPtr field_;
};

// Exact scalar over a fixed Domain; canonical representation per value.
class Scalar {
 public:
  static Scalar zero(const Domain& d);
  static Scalar one(const Domain& d);
  static Scalar of(const Domain& d, long long v);
  static Scalar of(const Domain& d, const BigInt& v);
  static Scalar rational(const BigRat& v);  // rationals domain
  static Scalar finite(const Domain& d, FiniteField::Elem e);

  const Domain& domain() const { return dom_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar inverse() const;  // fields only; in Z only +-1
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Embed this scalar into another domain (Z -> anything; Q -> Q or GF when
  // the denominator is invertible; GF -> same GF).
  Scalar convert_to(const Domain& d) const;

  const BigInt& as_integer() const { return std::get<BigInt>(v_); }
  const BigRat& as_rational() const { return std::get<BigRat>(v_); }
  FiniteField::Elem as_finite() const { return std::get<FiniteField::Elem>(v_); }

  std::string to_string() const;

 private:
  Scalar(Domain d, std::variant<BigInt, BigRat, FiniteField::Elem> v)
      : dom_(std::move(d)), v_(std::move(v)) {}
  void require_same(const Scalar& o) const {
    if (dom_ != o.dom_) throw DomainMismatch("scalar domain mismatch");
  }

  Domain dom_;
  std::variant<BigInt, BigRat, FiniteField::Elem> v_;
};

}  // namespace engelkit
