#include "engelkit/scalar.hpp"

#include <sstream>

namespace engelkit {

std::string Domain::name() const {
  switch (kind_) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    case Kind::Finite: {
      std::ostringstream out;
      out << "GF(" << field_->order() << ")";
      return out.str();
    }
  }
  return "?";
}

Scalar Scalar::zero(const Domain& d) { return of(d, 0); }
Scalar Scalar::one(const Domain& d) { return of(d, 1); }

Scalar Scalar::of(const Domain& d, long long v) { return of(d, BigInt(v)); }

Scalar Scalar::of(const Domain& d, const BigInt& v) {
  switch (d.kind()) {
    case Domain::Kind::Integers: return Scalar(d, v);
    case Domain::Kind::Rationals: return Scalar(d, BigRat(v));
    case Domain::Kind::Finite: return Scalar(d, d.field().from_bigint(v));
  }
  throw std::logic_error("bad domain");
}

Scalar Scalar::rational(const BigRat& v) { return Scalar(Domain::rationals(), v); }

Scalar Scalar::finite(const Domain& d, FiniteField::Elem e) {
  if (d.kind() != Domain::Kind::Finite) throw DomainMismatch("not a finite domain");
  if (e >= d.field().order()) throw std::invalid_argument("element out of range");
  return Scalar(d, e);
}

bool Scalar::is_zero() const {
  switch (dom_.kind()) {
    case Domain::Kind::Integers: return as_integer() == 0;
    case Domain::Kind::Rationals: return as_rational() == 0;
    case Domain::Kind::Finite: return as_finite() == 0;
  }
  return false;
}

bool Scalar::is_one() const {
  switch (dom_.kind()) {
    case Domain::Kind::Integers: return as_integer() == 1;
    case Domain::Kind::Rationals: return as_rational() == 1;
    case Domain::Kind::Finite: return as_finite() == 1;
  }
  return false;
}

Scalar Scalar::operator-() const {
  switch (dom_.kind()) {
    case Domain::Kind::Integers: return Scalar(dom_, BigInt(-as_integer()));
    case Domain::Kind::Rationals: return Scalar(dom_, BigRat(-as_rational()));
    case Domain::Kind::Finite: return Scalar(dom_, dom_.field().neg(as_finite()));
  }
  throw std::logic_error("bad domain");
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same(o);
  switch (dom_.kind()) {
    case Domain::Kind::Integers: return Scalar(dom_, BigInt(as_integer() + o.as_integer()));
    case Domain::Kind::Rationals: return Scalar(dom_, BigRat(as_rational() + o.as_rational()));
    case Domain::Kind::Finite:
      return Scalar(dom_, dom_.field().add(as_finite(), o.as_finite()));
  }
  throw std::logic_error("bad domain");
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  require_same(o);
  switch (dom_.kind()) {
    case Domain::Kind::Integers: return Scalar(dom_, BigInt(as_integer() * o.as_integer()));
    case Domain::Kind::Rationals: return Scalar(dom_, BigRat(as_rational() * o.as_rational()));
    case Domain::Kind::Finite:
      return Scalar(dom_, dom_.field().mul(as_finite(), o.as_finite()));
  }
  throw std::logic_error("bad domain");
}

Scalar Scalar::inverse() const {
  switch (dom_.kind()) {
    case Domain::Kind::Integers: {
      const BigInt& v = as_integer();
      if (v != 1 && v != -1) throw std::domain_error("not a unit in Z");
      return *this;
    }
    case Domain::Kind::Rationals: {
      if (as_rational() == 0) throw std::domain_error("division by zero");
      return Scalar(dom_, BigRat(1 / as_rational()));
    }
    case Domain::Kind::Finite:
      return Scalar(dom_, dom_.field().inv(as_finite()));
  }
  throw std::logic_error("bad domain");
}

bool Scalar::operator==(const Scalar& o) const {
  if (dom_ != o.dom_) return false;
  return v_ == o.v_;
}

Scalar Scalar::convert_to(const Domain& d) const {
  if (dom_ == d) return *this;
  switch (dom_.kind()) {
    case Domain::Kind::Integers:
      return of(d, as_integer());
    case Domain::Kind::Rationals: {
      if (d.kind() == Domain::Kind::Finite) {
        const BigRat& q = as_rational();
        Scalar num = of(d, BigInt(boost::multiprecision::numerator(q)));
        Scalar den = of(d, BigInt(boost::multiprecision::denominator(q)));
        if (den.is_zero())
          throw std::domain_error("denominator not invertible in " + d.name());
        return num * den.inverse();
      }
      throw DomainMismatch("cannot convert Q scalar to " + d.name());
    }
    case Domain::Kind::Finite:
      throw DomainMismatch("cannot convert " + dom_.name() + " scalar to " + d.name());
  }
  throw std::logic_error("bad domain");
}

std::string Scalar::to_string() const {
  switch (dom_.kind()) {
    case Domain::Kind::Integers: return as_integer().str();
    case Domain::Kind::Rationals: return as_rational().str();
    case Domain::Kind::Finite: {
      std::string s = dom_.field().to_string(as_finite());
      if (s.find('+') != std::string::npos || s.find('*') != std::string::npos)
        return "(" + s + ")";
      return s;
    }
  }
  return "?";
}

}  // namespace engelkit
