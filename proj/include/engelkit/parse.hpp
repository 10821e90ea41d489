#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "engelkit/catalog.hpp"
#include "engelkit/ncpoly.hpp"

namespace engelkit {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, unsigned line, unsigned column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                           ": " + msg),
        line(line),
        column(column) {}
  unsigned line, column;
};

// Identity expression AST.  Surface syntax: variables x1..xN (aliases x, y,
// z), explicit `*`, `+`, `-`, `o` (circle), `^`, `[a, b, ...]` (left-normed
// commutator), parentheses; `=` separates the two sides and `0` is legal
// only as an entire side.  Precedence: ^ > * > o > unary- > binary +/-.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind {
    variable,
    integer,
    power,
    product,     // n-ary, left-assoc `*`
    circle,      // n-ary, left-assoc `o`
    negate,
    sum,         // terms joined by binary +/-
    commutator,  // [a, b, ...], n >= 2 arguments
  };

  Kind kind;
  std::uint32_t var_index = 0;    // variable
  long long value = 0;            // integer
  unsigned exponent = 0;          // power
  std::vector<ExprPtr> children;  // power (1), product/circle/commutator (>=2), negate (1)
  std::vector<bool> negated;      // sum: per-term binary sign (first is always +)

  bool operator==(const Expr& o) const;
};

ExprPtr make_var(std::uint32_t index);
ExprPtr make_int(long long v);
ExprPtr make_power(ExprPtr base, unsigned e);
ExprPtr make_product(std::vector<ExprPtr> factors);
ExprPtr make_circle(std::vector<ExprPtr> args);
ExprPtr make_negate(ExprPtr e);
ExprPtr make_sum(std::vector<ExprPtr> terms, std::vector<bool> negated);
ExprPtr make_commutator(std::vector<ExprPtr> args);

// A side holding the literal 0 is represented by a null ExprPtr.
struct IdentityExpr {
  ExprPtr lhs, rhs;
  bool operator==(const IdentityExpr& o) const;
};

IdentityExpr parse_identity(const std::string& text);
std::string print_identity(const IdentityExpr& id);
std::string print_expr(const ExprPtr& e);

// Word -> expression with runs collapsed into powers (matches Word printing).
ExprPtr word_to_expr(const Word& w);
IdentityExpr word_identity_to_expr(const WordIdentity& id);

// A parsed identity lowers to a word pair when both sides are plain words
// with coefficient 1, and to the polynomial lhs - rhs = 0 otherwise.
using LoweredIdentity = std::variant<WordIdentity, NCPolynomial>;
LoweredIdentity lower_identity(const IdentityExpr& id);
NCPolynomial lower_expr(const ExprPtr& e, const Domain& d);

}  // namespace engelkit
