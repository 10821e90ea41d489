#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace engelkit {

// Generator of the free semigroup on X = {x = x1, y = x2, x3, x4, ...}.
struct Variable {
  explicit Variable(std::uint32_t idx) : index(idx) {
    if (idx == 0) throw std::invalid_argument("variable index must be >= 1");
  }
  std::uint32_t index;

  std::string name() const {
    switch (index) {
      case 1: return "x";
      case 2: return "y";
      case 3: return "z";
      default: return "x" + std::to_string(index);
    }
  }

  auto operator<=>(const Variable&) const = default;
};

inline const Variable var_x{1};
inline const Variable var_y{2};

// Word in the free semigroup; the empty word is the unit monomial and is
// legal only in unital polynomial contexts.
struct Word {
  std::vector<Variable> letters;

  Word() = default;
  explicit Word(std::vector<Variable> ls) : letters(std::move(ls)) {}
  Word(std::initializer_list<Variable> ls) : letters(ls) {}

  static Word empty() { return Word(); }
  static Word of(std::initializer_list<std::uint32_t> idxs) {
    Word w;
    for (auto i : idxs) w.letters.emplace_back(i);
    return w;
  }
  static Word power(Variable v, std::size_t n) {
    Word w;
    w.letters.assign(n, v);
    return w;
  }

  std::size_t length() const { return letters.size(); }
  bool is_empty() const { return letters.empty(); }

  Word operator*(const Word& o) const {
    Word r = *this;
    r.letters.insert(r.letters.end(), o.letters.begin(), o.letters.end());
    return r;
  }

  std::map<Variable, std::size_t> multidegree() const {
    std::map<Variable, std::size_t> d;
    for (const auto& v : letters) ++d[v];
    return d;
  }

  std::size_t degree_in(Variable v) const {
    std::size_t n = 0;
    for (const auto& l : letters)
      if (l == v) ++n;
    return n;
  }

  bool operator==(const Word&) const = default;

  std::string to_string() const;
};

// Degree-lexicographic order: by length, then letter-by-letter by index.
struct DegLexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.letters < b.letters;
  }
};

inline std::string Word::to_string() const {
  if (letters.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < letters.size()) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    if (!out.empty()) out += "*";
    out += letters[i].name();
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace engelkit
