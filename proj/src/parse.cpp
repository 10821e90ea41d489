#include "engelkit/parse.hpp"

#include <algorithm>
#include <cctype>

namespace engelkit {

bool Expr::operator==(const Expr& o) const {
  if (kind != o.kind || var_index != o.var_index || value != o.value ||
      exponent != o.exponent || negated != o.negated)
    return false;
  if (children.size() != o.children.size()) return false;
  for (std::size_t i = 0; i < children.size(); ++i)
    if (!(*children[i] == *o.children[i])) return false;
  return true;
}

bool IdentityExpr::operator==(const IdentityExpr& o) const {
  auto side_eq = [](const ExprPtr& a, const ExprPtr& b) {
    if (!a || !b) return !a && !b;
    return *a == *b;
  };
  return side_eq(lhs, o.lhs) && side_eq(rhs, o.rhs);
}

ExprPtr make_var(std::uint32_t index) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::variable;
  e->var_index = index;
  return e;
}

ExprPtr make_int(long long v) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::integer;
  e->value = v;
  return e;
}

ExprPtr make_power(ExprPtr base, unsigned ex) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::power;
  e->exponent = ex;
  e->children = {std::move(base)};
  return e;
}

namespace {

ExprPtr make_nary(Expr::Kind kind, std::vector<ExprPtr> args) {
  if (args.size() == 1) return args.front();
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->children = std::move(args);
  return e;
}

}  // namespace

ExprPtr make_product(std::vector<ExprPtr> factors) {
  return make_nary(Expr::Kind::product, std::move(factors));
}

ExprPtr make_circle(std::vector<ExprPtr> args) {
  return make_nary(Expr::Kind::circle, std::move(args));
}

ExprPtr make_negate(ExprPtr x) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::negate;
  e->children = {std::move(x)};
  return e;
}

ExprPtr make_sum(std::vector<ExprPtr> terms, std::vector<bool> negated) {
  if (terms.size() != negated.size() || terms.empty() || negated.front())
    throw std::invalid_argument("malformed sum");
  if (terms.size() == 1) return terms.front();
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::sum;
  e->children = std::move(terms);
  e->negated = std::move(negated);
  return e;
}

ExprPtr make_commutator(std::vector<ExprPtr> args) {
  if (args.size() < 2) throw std::invalid_argument("commutator needs two or more arguments");
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::commutator;
  e->children = std::move(args);
  return e;
}

// ---------------------------------------------------------------- lexer

namespace {

struct Token {
  enum class Kind { number, ident, symbol, end };
  Kind kind;
  std::string text;
  unsigned line, col;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  unsigned line = 1, col = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
      continue;
    }
    unsigned start_col = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        num += text[i++];
        ++col;
      }
      out.push_back({Token::Kind::number, num, line, start_col});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string id;
      while (i < text.size() &&
             std::isalnum(static_cast<unsigned char>(text[i]))) {
        id += text[i++];
        ++col;
      }
      out.push_back({Token::Kind::ident, id, line, start_col});
      continue;
    }
    if (std::string("*+-^=[](),").find(c) != std::string::npos) {
      out.push_back({Token::Kind::symbol, std::string(1, c), line, start_col});
      ++i;
      ++col;
      continue;
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", line, col);
  }
  out.push_back({Token::Kind::end, "", line, col});
  return out;
}

// ---------------------------------------------------------------- parser

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

  IdentityExpr parse() {
    IdentityExpr id;
    id.lhs = parse_side();
    expect_symbol("=");
    id.rhs = parse_side();
    if (peek().kind != Token::Kind::end)
      throw ParseError("trailing input after identity", peek().line, peek().col);
    if (!id.lhs && !id.rhs)
      throw ParseError("0 = 0 is not an identity", toks_.front().line, toks_.front().col);
    return id;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  bool at_symbol(const std::string& s) const {
    return peek().kind == Token::Kind::symbol && peek().text == s;
  }
  bool at_ident(const std::string& s) const {
    return peek().kind == Token::Kind::ident && peek().text == s;
  }
  void expect_symbol(const std::string& s) {
    if (!at_symbol(s))
      throw ParseError("expected '" + s + "'", peek().line, peek().col);
    next();
  }

  ExprPtr parse_side() {
    if (peek().kind == Token::Kind::number && peek().text == "0") {
      const Token& la = peek(1);
      bool side_end = la.kind == Token::Kind::end ||
                      (la.kind == Token::Kind::symbol && la.text == "=");
      if (side_end) {
        next();
        return nullptr;
      }
    }
    return parse_sum();
  }

  ExprPtr parse_sum() {
    std::vector<ExprPtr> terms = {parse_neg()};
    std::vector<bool> signs = {false};
    while (at_symbol("+") || at_symbol("-")) {
      bool minus = peek().text == "-";
      next();
      terms.push_back(parse_neg());
      signs.push_back(minus);
    }
    return make_sum(std::move(terms), std::move(signs));
  }

  ExprPtr parse_neg() {
    if (at_symbol("-")) {
      next();
      return make_negate(parse_neg());
    }
    return parse_circle();
  }

  ExprPtr parse_circle() {
    std::vector<ExprPtr> args = {parse_product()};
    while (at_ident("o")) {
      next();
      args.push_back(parse_product());
    }
    return make_circle(std::move(args));
  }

  ExprPtr parse_product() {
    std::vector<ExprPtr> factors = {parse_power()};
    while (at_symbol("*")) {
      next();
      factors.push_back(parse_power());
    }
    return make_product(std::move(factors));
  }

  ExprPtr parse_power() {
    ExprPtr base = parse_atom();
    if (at_symbol("^")) {
      next();
      const Token& t = peek();
      if (t.kind != Token::Kind::number || t.text == "0")
        throw ParseError("exponent must be a positive integer", t.line, t.col);
      unsigned e = static_cast<unsigned>(std::stoul(next().text));
      return make_power(std::move(base), e);
    }
    return base;
  }

  ExprPtr parse_atom() {
    const Token& t = peek();
    if (t.kind == Token::Kind::number) {
      if (t.text == "0")
        throw ParseError("'0' is only legal as an entire side of '='", t.line, t.col);
      return make_int(std::stoll(next().text));
    }
    if (t.kind == Token::Kind::ident) return parse_variable();
    if (at_symbol("(")) {
      next();
      ExprPtr e = parse_sum();
      expect_symbol(")");
      return e;
    }
    if (at_symbol("[")) {
      next();
      std::vector<ExprPtr> args = {parse_sum()};
      while (at_symbol(",")) {
        next();
        args.push_back(parse_sum());
      }
      if (args.size() < 2)
        throw ParseError("commutator needs at least two arguments", peek().line, peek().col);
      expect_symbol("]");
      return make_commutator(std::move(args));
    }
    throw ParseError("expected a variable, number, '(' or '['", t.line, t.col);
  }

  ExprPtr parse_variable() {
    const Token& t = next();
    const std::string& s = t.text;
    if (s == "x") return make_var(1);
    if (s == "y") return make_var(2);
    if (s == "z") return make_var(3);
    if (s.size() > 1 && s[0] == 'x' &&
        std::all_of(s.begin() + 1, s.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      unsigned long idx = std::stoul(s.substr(1));
      if (idx == 0) throw ParseError("variable index must be >= 1", t.line, t.col);
      return make_var(static_cast<std::uint32_t>(idx));
    }
    throw ParseError("unknown symbol '" + s + "'", t.line, t.col);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

IdentityExpr parse_identity(const std::string& text) { return Parser(text).parse(); }

// ---------------------------------------------------------------- printer

namespace {

// sum < negate < circle < product < power < atom
int level(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::sum: return 0;
    case Expr::Kind::negate: return 1;
    case Expr::Kind::circle: return 2;
    case Expr::Kind::product: return 3;
    case Expr::Kind::power: return 4;
    default: return 5;
  }
}

std::string print(const Expr& e, int min_level);

std::string print_raw(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::variable:
      return Variable(e.var_index).name();
    case Expr::Kind::integer:
      return std::to_string(e.value);
    case Expr::Kind::power:
      return print(*e.children[0], 5) + "^" + std::to_string(e.exponent);
    case Expr::Kind::product: {
      std::string out;
      for (const auto& c : e.children) {
        if (!out.empty()) out += "*";
        out += print(*c, 4);
      }
      return out;
    }
    case Expr::Kind::circle: {
      std::string out;
      for (const auto& c : e.children) {
        if (!out.empty()) out += " o ";
        out += print(*c, 3);
      }
      return out;
    }
    case Expr::Kind::negate:
      return "-" + print(*e.children[0], 2);
    case Expr::Kind::sum: {
      std::string out = print(*e.children[0], 1);
      for (std::size_t i = 1; i < e.children.size(); ++i)
        out += (e.negated[i] ? " - " : " + ") + print(*e.children[i], 1);
      return out;
    }
    case Expr::Kind::commutator: {
      std::string out = "[";
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) out += ", ";
        out += print(*e.children[i], 0);
      }
      return out + "]";
    }
  }
  throw std::logic_error("unreachable");
}

std::string print(const Expr& e, int min_level) {
  std::string s = print_raw(e);
  return level(e) < min_level ? "(" + s + ")" : s;
}

}  // namespace

std::string print_expr(const ExprPtr& e) { return e ? print(*e, 0) : "0"; }

std::string print_identity(const IdentityExpr& id) {
  return print_expr(id.lhs) + " = " + print_expr(id.rhs);
}

ExprPtr word_to_expr(const Word& w) {
  if (w.is_empty()) throw std::invalid_argument("cannot print the empty word");
  std::vector<ExprPtr> factors;
  std::size_t i = 0;
  while (i < w.length()) {
    std::size_t j = i;
    while (j < w.length() && w.letters[j] == w.letters[i]) ++j;
    ExprPtr v = make_var(w.letters[i].index);
    factors.push_back(j - i > 1 ? make_power(v, static_cast<unsigned>(j - i)) : v);
    i = j;
  }
  return make_product(std::move(factors));
}

IdentityExpr word_identity_to_expr(const WordIdentity& id) {
  return {word_to_expr(id.lhs), word_to_expr(id.rhs)};
}

// ---------------------------------------------------------------- lowering

NCPolynomial lower_expr(const ExprPtr& e, const Domain& d) {
  if (!e) return NCPolynomial::zero(d, true);
  switch (e->kind) {
    case Expr::Kind::variable:
      return NCPolynomial::var(d, Variable(e->var_index), true);
    case Expr::Kind::integer:
      return NCPolynomial::constant(Scalar::of(d, e->value));
    case Expr::Kind::power: {
      NCPolynomial base = lower_expr(e->children[0], d);
      NCPolynomial r = base;
      for (unsigned i = 1; i < e->exponent; ++i) r = r * base;
      return r;
    }
    case Expr::Kind::product: {
      NCPolynomial r = lower_expr(e->children[0], d);
      for (std::size_t i = 1; i < e->children.size(); ++i)
        r = r * lower_expr(e->children[i], d);
      return r;
    }
    case Expr::Kind::circle: {
      NCPolynomial r = lower_expr(e->children[0], d);
      for (std::size_t i = 1; i < e->children.size(); ++i) {
        NCPolynomial b = lower_expr(e->children[i], d);
        r = r + b + r * b;
      }
      return r;
    }
    case Expr::Kind::negate:
      return -lower_expr(e->children[0], d);
    case Expr::Kind::sum: {
      NCPolynomial r = lower_expr(e->children[0], d);
      for (std::size_t i = 1; i < e->children.size(); ++i) {
        NCPolynomial t = lower_expr(e->children[i], d);
        r = e->negated[i] ? r - t : r + t;
      }
      return r;
    }
    case Expr::Kind::commutator: {
      std::vector<NCPolynomial> args;
      for (const auto& c : e->children) args.push_back(lower_expr(c, d));
      return left_normed(args.front(), std::span(args).subspan(1));
    }
  }
  throw std::logic_error("unreachable");
}

LoweredIdentity lower_identity(const IdentityExpr& id) {
  Domain Z = Domain::integers();
  NCPolynomial l = lower_expr(id.lhs, Z);
  NCPolynomial r = lower_expr(id.rhs, Z);
  auto as_word = [](const NCPolynomial& p) -> std::optional<Word> {
    if (p.term_count() != 1) return std::nullopt;
    const auto& [w, c] = *p.terms().begin();
    if (!c.is_one() || w.is_empty()) return std::nullopt;
    return w;
  };
  if (id.lhs && id.rhs) {
    auto wl = as_word(l), wr = as_word(r);
    if (wl && wr) return WordIdentity(*wl, *wr);
  }
  return l - r;
}

}  // namespace engelkit
