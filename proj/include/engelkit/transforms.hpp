#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "engelkit/catalog.hpp"
#include "engelkit/ncpoly.hpp"

namespace engelkit {

enum class Side { left, right, reduced };

// Certificate that every element satisfies x^n = 0.
struct NilCertificate {
  std::size_t n;
  bool operator==(const NilCertificate&) const = default;
};

using TransformState =
    std::variant<std::monostate, WordIdentity, NCPolynomial, PartialLinear>;

bool states_equal(const TransformState& a, const TransformState& b);
std::string state_to_string(const TransformState& s);

// One replayable derivation step.  Only the fields relevant to `kind` are
// populated; replay_step applies it through the ncpoly/catalog operations.
struct TraceStep {
  enum class Kind {
    PermuteVariables,          // permutation on a word identity
    SubstituteWordForVariable, // var -> word on a word identity
    ConcatenateIdentity,       // concatenate another identity on the right
    ToPolynomial,              // word identity -> lhs - rhs
    SubstitutePolynomial,      // bindings on a polynomial
    ExtractComponent,          // homogeneous component in a variable
    ToPartialLinear,           // recognize partial-linear shape
    StripPrefixLetter,         // drop one shared first letter
    StripSuffixLetter,         // drop one shared last letter
    EngelConclusion,           // build y^m e_n y^k
  };

  Kind kind;
  std::string note;

  std::map<Variable, Variable> permutation;
  std::optional<Variable> var;
  std::optional<Word> word;
  std::optional<WordIdentity> identity;
  std::map<Variable, NCPolynomial> bindings;
  std::optional<Domain> domain;
  std::size_t degree = 0;
  std::size_t engel_n = 0, m = 0, k = 0;
};

struct TransformReport {
  std::string operation;
  TransformState input;
  TransformState output;
  std::vector<TraceStep> trace;
};

TransformState replay_step(const TraceStep& step, const TransformState& state);
TransformState replay(const TransformReport& report);
bool replay_matches(const TransformReport& report);

// Proposition "linear" (i): a left/right/reduced identity in many variables
// yields one of the same type in x and y only.
WordIdentity reduce_to_two_vars(const WordIdentity& id,
                                TransformReport* report = nullptr);

// Proposition "linear" (ii): collapse all variables to y.
std::variant<NilCertificate, WordIdentity> binomial_collapse(
    const BinomialIdentity& b);

// Proposition "linear" (iii): x-degree-1 component of u(x+y,y) - v(x+y,y).
PartialLinear binomial_to_partial_linear(const WordIdentity& id, const Domain& d,
                                         TransformReport* report = nullptr);

// Proposition "linear" (iv): y^n = 0 implies e_{2n-1} = 0; the boolean is
// the y^n-factor certificate for every word of e_{2n-1}.
std::pair<unsigned, bool> nil_implies_engel(unsigned n);

// Checks sum_r (-1)^r v_r y^{n-r} = a_n y^n e_n, where v_r are the
// homogeneous components of alpha under y -> y(y+1).
bool verify_amazing(const PartialLinear& alpha);

// Lemma l1 (i)-(iii): the concluded identity polynomial.
NCPolynomial lemma1_transform(const PartialLinear& alpha, std::size_t m,
                              std::size_t k, Side side,
                              TransformReport* report = nullptr);

// The triangular decomposition of the general (m + k >= 1) case.
bool lemma1_general_case_check(const PartialLinear& alpha, std::size_t m,
                               std::size_t k);

// Proposition "circle" (ii): strip the longest common prefix and suffix.
WordIdentity strip_affixes(const WordIdentity& id,
                           TransformReport* report = nullptr);

// Unital refinement: substitute y -> y + 1 into the Lemma l1 conclusion and
// extract the degree-n component, recovering e_n.
NCPolynomial unital_engel_refinement(const NCPolynomial& lemma_output,
                                     unsigned engel_degree);
NCPolynomial unital_engel_refinement(const PartialLinear& alpha, std::size_t m,
                                     std::size_t k, Side side);

}  // namespace engelkit
