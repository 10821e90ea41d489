#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "engelkit/scalar.hpp"
#include "engelkit/word.hpp"

namespace engelkit {

// Element of the free noncommutative algebra K<x1, x2, ...> in canonical
// form: a finite Word -> Scalar map with no zero coefficients.  The unit
// monomial (empty word) is admitted only when the `unital` flag is set.
class NCPolynomial {
 public:
  explicit NCPolynomial(Domain dom, bool unital = false)
      : dom_(std::move(dom)), unital_(unital) {}

  static NCPolynomial zero(const Domain& d, bool unital = false) {
    return NCPolynomial(d, unital);
  }
  static NCPolynomial unit(const Domain& d);  // the constant 1, unital
  static NCPolynomial var(const Domain& d, Variable v, bool unital = false);
  static NCPolynomial monomial(const Domain& d, const Word& w, bool unital = false);
  static NCPolynomial monomial(const Word& w, const Scalar& c, bool unital = false);
  static NCPolynomial constant(const Scalar& c);  // unital

  const Domain& domain() const { return dom_; }
  bool unital() const { return unital_; }
  NCPolynomial with_unital(bool u) const;

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Word, Scalar, DegLexLess>& terms() const { return terms_; }
  Scalar coefficient(const Word& w) const;

  void add_term(const Word& w, const Scalar& c);

  NCPolynomial operator-() const;
  NCPolynomial operator+(const NCPolynomial& o) const;
  NCPolynomial operator-(const NCPolynomial& o) const;
  NCPolynomial operator*(const NCPolynomial& o) const;
  NCPolynomial scaled(const Scalar& c) const;

  bool operator==(const NCPolynomial& o) const {
    return dom_ == o.dom_ && terms_ == o.terms_;
  }
  bool operator!=(const NCPolynomial& o) const { return !(*this == o); }

  std::set<Variable> variables() const;

  // Ring-homomorphic substitution; every occurring variable must be bound.
  NCPolynomial substituted(const std::map<Variable, NCPolynomial>& bindings) const;

  NCPolynomial homogeneous_component(Variable v, std::size_t d) const;
  NCPolynomial total_degree_component(std::size_t d) const;
  std::size_t max_degree_in(Variable v) const;
  std::size_t total_degree() const;  // 0 for the zero polynomial

  // The derivation sending v -> 1 and every other variable -> 0.
  NCPolynomial hausdorff_derivative(Variable v) const;

  std::string to_string() const;

 private:
  Domain dom_;
  bool unital_;
  std::map<Word, Scalar, DegLexLess> terms_;
};

NCPolynomial commutator(const NCPolynomial& p, const NCPolynomial& q);
NCPolynomial left_normed(const NCPolynomial& p, std::span<const NCPolynomial> qs);

// delta(p, v) = p(.., v+1, ..) - p; requires a unital context.
NCPolynomial delta(const NCPolynomial& p, Variable v);

// Partial linear shape sum_{i=0}^n a_i y^i x y^{n-i}.
struct PartialLinear {
  unsigned n;
  std::vector<Scalar> coeffs;  // a_0..a_n

  PartialLinear(unsigned degree, std::vector<Scalar> cs);

  const Domain& domain() const { return coeffs.front().domain(); }
  bool left_reduced() const { return !coeffs.front().is_zero(); }
  bool right_reduced() const { return !coeffs.back().is_zero(); }
  bool reduced() const { return left_reduced() && right_reduced(); }

  NCPolynomial to_poly(bool unital = false) const;
  static std::optional<PartialLinear> from_poly(const NCPolynomial& p);

  bool operator==(const PartialLinear& o) const {
    return n == o.n && coeffs == o.coeffs;
  }
};

}  // namespace engelkit
