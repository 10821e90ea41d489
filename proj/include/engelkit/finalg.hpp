#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "engelkit/catalog.hpp"
#include "engelkit/ncpoly.hpp"

namespace engelkit {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Coefficient vector over the algebra's field, length dim.
struct AlgebraElement {
  std::vector<Scalar> coeffs;
  bool operator==(const AlgebraElement&) const = default;
};

// Finite-dimensional structure-constant algebra over GF(p^k) or Q.
// Associativity (and the declared unit) is verified at construction.
class FiniteAlgebra {
 public:
  FiniteAlgebra(Domain field, std::vector<std::string> basis_names,
                std::vector<std::vector<std::vector<Scalar>>> mul_table,
                std::optional<std::vector<Scalar>> unit = std::nullopt);

  static FiniteAlgebra from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  const Domain& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  bool is_unital() const { return unit_.has_value(); }
  const std::vector<Scalar>& unit_vector() const;

  bool is_finite() const { return field_.kind() == Domain::Kind::Finite; }
  std::uint64_t element_count() const;  // finite fields only

  AlgebraElement zero() const;
  AlgebraElement basis_element(std::size_t i) const;
  AlgebraElement unit() const;
  AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement neg(const AlgebraElement& a) const;
  AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement scale(const Scalar& c, const AlgebraElement& a) const;
  // x o y = x + y + xy
  AlgebraElement circle(const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement pow(const AlgebraElement& a, std::uint64_t e) const;  // e >= 1
  bool is_zero(const AlgebraElement& a) const;

  // Enumeration in coefficient-vector lexicographic order (first basis
  // coordinate most significant, field elements by representative index).
  AlgebraElement element_at(std::uint64_t index) const;
  std::uint64_t index_of(const AlgebraElement& a) const;

  std::string to_string(const AlgebraElement& a) const;

 private:
  void validate() const;

  Domain field_;
  std::size_t dim_;
  std::vector<std::string> names_;
  std::vector<std::vector<std::vector<Scalar>>> mul_;
  std::optional<std::vector<Scalar>> unit_;
};

// Builtins: example1 (span{e11,e12} in M2), paison (Paison's subring of
// M2(GF(p^2)) as a 4-dimensional GF(p)-algebra), strict_upper(n),
// full_matrix(n).
FiniteAlgebra builtin_example1(const Domain& field);
FiniteAlgebra builtin_paison(std::uint64_t p);
FiniteAlgebra builtin_strict_upper(std::size_t n, const Domain& field);
FiniteAlgebra builtin_full_matrix(std::size_t n, const Domain& field);
// Name forms: "example1", "example1:q", "paison2", "paison:p",
// "strict_upper:n:q", "full_matrix:n:q" with q a prime power.
FiniteAlgebra builtin(const std::string& name);

// "Q" or a prime power q = p^k (with the shipped default modulus for k > 1).
Domain parse_field_spec(const std::string& s);

// K1 + R, the minimal unital extension; basis "1" followed by R's basis.
FiniteAlgebra unital_hull(const FiniteAlgebra& alg);

// Identity to be checked: a word pair or a polynomial equated to zero.
using CheckableIdentity = std::variant<WordIdentity, NCPolynomial>;

enum class CheckMode { multiplicative, circle };

struct CheckResult {
  bool holds = true;
  std::optional<std::map<Variable, AlgebraElement>> witness;  // lexicographically least
  std::uint64_t tuples_checked = 0;
};

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;
// ENGELKIT_BUDGET overrides the default evaluation budget.
std::uint64_t evaluation_budget();

CheckResult check_identity(const FiniteAlgebra& alg, const CheckableIdentity& id,
                           CheckMode mode, unsigned jobs = 1,
                           std::uint64_t budget = evaluation_budget());

// e_n on all pairs, n = 1..N, via the iterated commutator.
std::vector<CheckResult> check_engel_upto(const FiniteAlgebra& alg, unsigned n_max,
                                          unsigned jobs = 1,
                                          std::uint64_t budget = evaluation_budget());

// Homomorphic evaluation of a word/polynomial under an assignment.
AlgebraElement eval_word(const FiniteAlgebra& alg, const Word& w,
                         const std::map<Variable, AlgebraElement>& assignment);
AlgebraElement eval_poly(const FiniteAlgebra& alg, const NCPolynomial& p,
                         const std::map<Variable, AlgebraElement>& assignment);

struct ExponentReport {
  std::uint64_t least;   // least t >= 1 with x^t = x^{2t} for all x
  BigInt product;        // the product-of-periods construction, for comparison
};
ExponentReport find_exponent(const FiniteAlgebra& alg);

std::vector<AlgebraElement> idempotents(const FiniteAlgebra& alg);
bool all_idempotents_central(const FiniteAlgebra& alg);

// gamma^1 = R, gamma^{i+1} = associative ideal generated by [gamma^i, R].
struct GammaSeries {
  std::vector<std::size_t> dims;            // dim gamma^1, gamma^2, ... until stable
  std::optional<std::size_t> index;         // least i with gamma^i = 0, if reached
};
GammaSeries gamma_series(const FiniteAlgebra& alg);

// Lie lower central series of (R, [.,.]); nullopt if it stabilizes nonzero.
std::optional<std::size_t> lie_lower_central_class(const FiniteAlgebra& alg);

}  // namespace engelkit
