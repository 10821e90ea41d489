#include "engelkit/ncpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace engelkit {

NCPolynomial NCPolynomial::unit(const Domain& d) {
  NCPolynomial p(d, true);
  p.add_term(Word::empty(), Scalar::one(d));
  return p;
}

NCPolynomial NCPolynomial::var(const Domain& d, Variable v, bool unital) {
  NCPolynomial p(d, unital);
  p.add_term(Word{v}, Scalar::one(d));
  return p;
}

NCPolynomial NCPolynomial::monomial(const Domain& d, const Word& w, bool unital) {
  NCPolynomial p(d, unital);
  p.add_term(w, Scalar::one(d));
  return p;
}

NCPolynomial NCPolynomial::monomial(const Word& w, const Scalar& c, bool unital) {
  NCPolynomial p(c.domain(), unital);
  p.add_term(w, c);
  return p;
}

NCPolynomial NCPolynomial::constant(const Scalar& c) {
  NCPolynomial p(c.domain(), true);
  p.add_term(Word::empty(), c);
  return p;
}

NCPolynomial NCPolynomial::with_unital(bool u) const {
  if (!u && terms_.count(Word::empty()))
    throw std::logic_error("polynomial has a constant term; context must stay unital");
  NCPolynomial p = *this;
  p.unital_ = u;
  return p;
}

Scalar NCPolynomial::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar::zero(dom_) : it->second;
}

void NCPolynomial::add_term(const Word& w, const Scalar& c) {
  if (c.domain() != dom_) throw DomainMismatch("coefficient domain mismatch");
  if (c.is_zero()) return;
  if (w.is_empty() && !unital_)
    throw std::logic_error("unit monomial in non-unital context");
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCPolynomial NCPolynomial::operator-() const {
  NCPolynomial r(dom_, unital_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

NCPolynomial NCPolynomial::operator+(const NCPolynomial& o) const {
  if (dom_ != o.dom_) throw DomainMismatch("polynomial domain mismatch");
  NCPolynomial r(dom_, unital_ || o.unital_);
  r.terms_ = terms_;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

NCPolynomial NCPolynomial::operator-(const NCPolynomial& o) const {
  return *this + (-o);
}

NCPolynomial NCPolynomial::operator*(const NCPolynomial& o) const {
  if (dom_ != o.dom_) throw DomainMismatch("polynomial domain mismatch");
  NCPolynomial r(dom_, unital_ || o.unital_);
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : o.terms_) r.add_term(w1 * w2, c1 * c2);
  return r;
}

NCPolynomial NCPolynomial::scaled(const Scalar& c) const {
  NCPolynomial r(dom_, unital_);
  if (c.is_zero()) return r;
  for (const auto& [w, k] : terms_) r.add_term(w, k * c);
  return r;
}

std::set<Variable> NCPolynomial::variables() const {
  std::set<Variable> vs;
  for (const auto& [w, c] : terms_)
    for (const auto& l : w.letters) vs.insert(l);
  return vs;
}

NCPolynomial NCPolynomial::substituted(
    const std::map<Variable, NCPolynomial>& bindings) const {
  for (const auto& v : variables())
    if (!bindings.count(v))
      throw std::invalid_argument("unbound variable " + v.name() +
                                  " in substitution");
  bool image_unital = unital_;
  for (const auto& [v, img] : bindings) {
    if (img.domain() != dom_) throw DomainMismatch("binding domain mismatch");
    if (!img.coefficient(Word::empty()).is_zero()) {
      if (!unital_)
        throw std::logic_error(
            "binding has a constant term; substitution context must be unital");
      image_unital = true;
    }
  }
  NCPolynomial r(dom_, image_unital);
  for (const auto& [w, c] : terms_) {
    // Scratch product lives in a unital context; the unit never survives
    // into r unless r itself is unital.
    NCPolynomial prod = NCPolynomial::constant(Scalar::one(dom_));
    for (const auto& l : w.letters) prod = prod * bindings.at(l);
    for (const auto& [pw, pc] : prod.terms_) r.add_term(pw, pc * c);
  }
  return r;
}

NCPolynomial NCPolynomial::homogeneous_component(Variable v, std::size_t d) const {
  NCPolynomial r(dom_, unital_);
  for (const auto& [w, c] : terms_)
    if (w.degree_in(v) == d) r.terms_.emplace(w, c);
  return r;
}

NCPolynomial NCPolynomial::total_degree_component(std::size_t d) const {
  NCPolynomial r(dom_, unital_);
  for (const auto& [w, c] : terms_)
    if (w.length() == d) r.terms_.emplace(w, c);
  return r;
}

std::size_t NCPolynomial::max_degree_in(Variable v) const {
  std::size_t m = 0;
  for (const auto& [w, c] : terms_) m = std::max(m, w.degree_in(v));
  return m;
}

std::size_t NCPolynomial::total_degree() const {
  std::size_t m = 0;
  for (const auto& [w, c] : terms_) m = std::max(m, w.length());
  return m;
}

NCPolynomial NCPolynomial::hausdorff_derivative(Variable v) const {
  NCPolynomial r(dom_, true);
  for (const auto& [w, c] : terms_) {
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
      if (w.letters[i] != v) continue;
      Word d = w;
      d.letters.erase(d.letters.begin() + static_cast<std::ptrdiff_t>(i));
      r.add_term(d, c);
    }
  }
  return r;
}

std::string NCPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    std::string cs = c.to_string();
    bool negative = !cs.empty() && cs[0] == '-';
    if (first) {
      if (negative) out << "- ", cs = cs.substr(1);
    } else {
      out << (negative ? " - " : " + ");
      if (negative) cs = cs.substr(1);
    }
    first = false;
    if (w.is_empty()) {
      out << cs;
    } else if (cs == "1") {
      out << w.to_string();
    } else {
      out << cs << "*" << w.to_string();
    }
  }
  return out.str();
}

NCPolynomial commutator(const NCPolynomial& p, const NCPolynomial& q) {
  return p * q - q * p;
}

NCPolynomial left_normed(const NCPolynomial& p, std::span<const NCPolynomial> qs) {
  NCPolynomial r = p;
  for (const auto& q : qs) r = commutator(r, q);
  return r;
}

NCPolynomial delta(const NCPolynomial& p, Variable v) {
  if (!p.unital())
    throw std::logic_error("delta requires a unital context");
  std::map<Variable, NCPolynomial> b;
  for (const auto& u : p.variables())
    b.emplace(u, NCPolynomial::var(p.domain(), u, true));
  NCPolynomial shift = NCPolynomial::var(p.domain(), v, true) +
                       NCPolynomial::unit(p.domain());
  b.insert_or_assign(v, shift);
  return p.substituted(b) - p;
}

PartialLinear::PartialLinear(unsigned degree, std::vector<Scalar> cs)
    : n(degree), coeffs(std::move(cs)) {
  if (n < 1) throw std::invalid_argument("partial linear degree must be >= 1");
  if (coeffs.size() != n + 1)
    throw std::invalid_argument("partial linear needs n+1 coefficients");
  for (const auto& c : coeffs)
    if (c.domain() != coeffs.front().domain())
      throw DomainMismatch("partial linear coefficients must share a domain");
}

NCPolynomial PartialLinear::to_poly(bool unital) const {
  NCPolynomial r(domain(), unital);
  for (unsigned i = 0; i <= n; ++i) {
    Word w = Word::power(var_y, i) * Word{var_x} * Word::power(var_y, n - i);
    r.add_term(w, coeffs[i]);
  }
  return r;
}

std::optional<PartialLinear> PartialLinear::from_poly(const NCPolynomial& p) {
  if (p.is_zero()) return std::nullopt;
  std::size_t deg = p.total_degree();
  if (deg < 2) return std::nullopt;
  unsigned n = static_cast<unsigned>(deg - 1);
  std::vector<Scalar> cs(n + 1, Scalar::zero(p.domain()));
  std::size_t seen = 0;
  for (const auto& [w, c] : p.terms()) {
    if (w.length() != deg) return std::nullopt;
    std::size_t i = 0;
    while (i < w.length() && w.letters[i] == var_y) ++i;
    if (i >= w.length() || w.letters[i] != var_x) return std::nullopt;
    for (std::size_t j = i + 1; j < w.length(); ++j)
      if (w.letters[j] != var_y) return std::nullopt;
    cs[i] = c;
    ++seen;
  }
  if (seen == 0) return std::nullopt;
  return PartialLinear(n, std::move(cs));
}

}  // namespace engelkit
