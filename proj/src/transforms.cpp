#include "engelkit/transforms.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "engelkit/deltakernel.hpp"

namespace engelkit {

namespace {

NCPolynomial id_binding(const Domain& d, Variable v, bool unital) {
  return NCPolynomial::var(d, v, unital);
}

std::map<Variable, NCPolynomial> full_bindings(const NCPolynomial& p,
                                               Variable v,
                                               const NCPolynomial& image) {
  std::map<Variable, NCPolynomial> b;
  for (const auto& u : p.variables())
    b.emplace(u, id_binding(p.domain(), u, image.unital()));
  b.insert_or_assign(v, image);
  return b;
}

// y -> y(y+1) on a unital polynomial.
NCPolynomial sub_y_shiftmul(const NCPolynomial& p) {
  const Domain& d = p.domain();
  NCPolynomial y = NCPolynomial::var(d, var_y, true);
  return p.substituted(full_bindings(p, var_y, y * (y + NCPolynomial::unit(d))));
}

Word apply_perm(const Word& w, const std::map<Variable, Variable>& perm) {
  Word r = w;
  for (auto& l : r.letters) {
    auto it = perm.find(l);
    if (it != perm.end()) l = it->second;
  }
  return r;
}

Word substitute_word(const Word& w, Variable v, const Word& image) {
  Word r;
  for (const auto& l : w.letters) {
    if (l == v)
      r.letters.insert(r.letters.end(), image.letters.begin(), image.letters.end());
    else
      r.letters.push_back(l);
  }
  return r;
}

// Bijective relabeling moving a -> x and b -> y (a != b), the composition
// of the transpositions (a x) then (b' y) with b' the image of b under the
// first one; ties broken toward lower indices by construction.
std::map<Variable, Variable> perm_to_xy(Variable a, Variable b) {
  auto t1 = [&](Variable v) {
    if (v == a) return var_x;
    if (v == var_x) return a;
    return v;
  };
  Variable b1 = t1(b);
  auto t2 = [&](Variable v) {
    if (v == b1) return var_y;
    if (v == var_y) return b1;
    return v;
  };
  std::map<Variable, Variable> perm;
  for (Variable v : {a, b, var_x, var_y}) {
    Variable img = t2(t1(v));
    if (img != v) perm.insert({v, img});
  }
  return perm;
}

}  // namespace

bool states_equal(const TransformState& a, const TransformState& b) {
  return a == b;
}

std::string state_to_string(const TransformState& s) {
  if (std::holds_alternative<std::monostate>(s)) return "(empty)";
  if (std::holds_alternative<WordIdentity>(s))
    return std::get<WordIdentity>(s).to_string();
  if (std::holds_alternative<NCPolynomial>(s))
    return std::get<NCPolynomial>(s).to_string() + " = 0";
  return std::get<PartialLinear>(s).to_poly().to_string() + " = 0";
}

TransformState replay_step(const TraceStep& step, const TransformState& state) {
  using K = TraceStep::Kind;
  switch (step.kind) {
    case K::PermuteVariables: {
      const auto& id = std::get<WordIdentity>(state);
      return WordIdentity(apply_perm(id.lhs, step.permutation),
                          apply_perm(id.rhs, step.permutation), id.kind);
    }
    case K::SubstituteWordForVariable: {
      const auto& id = std::get<WordIdentity>(state);
      return WordIdentity(substitute_word(id.lhs, *step.var, *step.word),
                          substitute_word(id.rhs, *step.var, *step.word), id.kind);
    }
    case K::ConcatenateIdentity: {
      const auto& id = std::get<WordIdentity>(state);
      const auto& other = *step.identity;
      return WordIdentity(id.lhs * other.lhs, id.rhs * other.rhs, id.kind);
    }
    case K::ToPolynomial: {
      const auto& id = std::get<WordIdentity>(state);
      return NCPolynomial::monomial(*step.domain, id.lhs) -
             NCPolynomial::monomial(*step.domain, id.rhs);
    }
    case K::SubstitutePolynomial: {
      const auto& p = std::get<NCPolynomial>(state);
      std::map<Variable, NCPolynomial> b = step.bindings;
      for (const auto& v : p.variables())
        if (!b.count(v)) b.emplace(v, id_binding(p.domain(), v, false));
      return p.substituted(b);
    }
    case K::ExtractComponent: {
      const auto& p = std::get<NCPolynomial>(state);
      return p.homogeneous_component(*step.var, step.degree);
    }
    case K::ToPartialLinear: {
      const auto& p = std::get<NCPolynomial>(state);
      auto pl = PartialLinear::from_poly(p);
      if (!pl) throw std::domain_error("polynomial is not partial linear");
      return *pl;
    }
    case K::StripPrefixLetter: {
      const auto& id = std::get<WordIdentity>(state);
      if (id.lhs.letters.front() != id.rhs.letters.front())
        throw std::logic_error("no shared first letter to strip");
      Word l = id.lhs, r = id.rhs;
      l.letters.erase(l.letters.begin());
      r.letters.erase(r.letters.begin());
      return WordIdentity(l, r, id.kind);
    }
    case K::StripSuffixLetter: {
      const auto& id = std::get<WordIdentity>(state);
      if (id.lhs.letters.back() != id.rhs.letters.back())
        throw std::logic_error("no shared last letter to strip");
      Word l = id.lhs, r = id.rhs;
      l.letters.pop_back();
      r.letters.pop_back();
      return WordIdentity(l, r, id.kind);
    }
    case K::EngelConclusion: {
      const Domain& d = *step.domain;
      NCPolynomial r = engel_poly(static_cast<unsigned>(step.engel_n), d);
      if (step.m)
        r = NCPolynomial::monomial(d, Word::power(var_y, step.m)) * r;
      if (step.k)
        r = r * NCPolynomial::monomial(d, Word::power(var_y, step.k));
      return r;
    }
  }
  throw std::logic_error("unknown trace step");
}

TransformState replay(const TransformReport& report) {
  TransformState s = report.input;
  for (const auto& step : report.trace) s = replay_step(step, s);
  return s;
}

bool replay_matches(const TransformReport& report) {
  return states_equal(replay(report), report.output);
}

namespace {

void push_step(TransformReport* rep, TraceStep step) {
  if (rep) rep->trace.push_back(std::move(step));
}

// Permutation step moving the given pair of letters to (x, y); applies it
// to the identity and records it.
WordIdentity relabel_to_xy(const WordIdentity& id, Variable a, Variable b,
                           const char* which, TransformReport* rep) {
  auto perm = perm_to_xy(a, b);
  bool trivial = true;
  for (const auto& [from, to] : perm)
    if (from != to) trivial = false;
  if (trivial) return id;
  TraceStep step;
  step.kind = TraceStep::Kind::PermuteVariables;
  step.permutation = perm;
  step.note = std::string("relabel ") + which + " letters to x, y";
  WordIdentity out(apply_perm(id.lhs, perm), apply_perm(id.rhs, perm), id.kind);
  push_step(rep, std::move(step));
  return out;
}

// x_i -> x y^i for every variable with index >= 3.
WordIdentity eliminate_high_variables(WordIdentity id, TransformReport* rep) {
  std::set<Variable> vars;
  for (const auto& l : id.lhs.letters) vars.insert(l);
  for (const auto& l : id.rhs.letters) vars.insert(l);
  for (const auto& v : vars) {
    if (v.index < 3) continue;
    Word image = Word{var_x} * Word::power(var_y, v.index);
    TraceStep step;
    step.kind = TraceStep::Kind::SubstituteWordForVariable;
    step.var = v;
    step.word = image;
    step.note = v.name() + " -> x*y^" + std::to_string(v.index);
    id = WordIdentity(substitute_word(id.lhs, v, image),
                      substitute_word(id.rhs, v, image), id.kind);
    push_step(rep, std::move(step));
  }
  return id;
}

bool two_variable(const WordIdentity& id) {
  for (const auto& l : id.lhs.letters)
    if (l.index > 2) return false;
  for (const auto& l : id.rhs.letters)
    if (l.index > 2) return false;
  return true;
}

}  // namespace

WordIdentity reduce_to_two_vars(const WordIdentity& id, TransformReport* rep) {
  bool lr = id.left_reduced(), rr = id.right_reduced();
  if (!lr && !rr)
    throw std::invalid_argument("identity is not left, right or reduced");
  if (rep) {
    rep->operation = "reduce_to_two_vars";
    rep->input = id;
  }
  WordIdentity out = id;
  if (two_variable(id)) {
    // already in x and y only
  } else if (lr && rr) {
    // left part: fix first letters, eliminate high variables
    WordIdentity left =
        relabel_to_xy(id, id.lhs.letters.front(), id.rhs.letters.front(),
                      "first", rep);
    left = eliminate_high_variables(left, rep);
    // right part: same construction on the last letters, recorded inline
    WordIdentity right =
        relabel_to_xy(id, id.lhs.letters.back(), id.rhs.letters.back(),
                      "last", nullptr);
    right = eliminate_high_variables(right, nullptr);
    TraceStep step;
    step.kind = TraceStep::Kind::ConcatenateIdentity;
    step.identity = right;
    step.note = "concatenate with the 2-variable right-reduced companion";
    out = WordIdentity(left.lhs * right.lhs, left.rhs * right.rhs, id.kind);
    push_step(rep, std::move(step));
  } else if (lr) {
    out = relabel_to_xy(id, id.lhs.letters.front(), id.rhs.letters.front(),
                        "first", rep);
    out = eliminate_high_variables(out, rep);
  } else {
    out = relabel_to_xy(id, id.lhs.letters.back(), id.rhs.letters.back(),
                        "last", rep);
    out = eliminate_high_variables(out, rep);
  }
  if (rep) rep->output = out;
  if (lr && !out.left_reduced()) throw std::logic_error("lost left reducedness");
  if (rr && !out.right_reduced()) throw std::logic_error("lost right reducedness");
  return out;
}

std::variant<NilCertificate, WordIdentity> binomial_collapse(
    const BinomialIdentity& b) {
  std::size_t n1 = b.u1.length(), n2 = b.u2.length();
  if (n1 != n2) return NilCertificate{std::max(n1, n2)};
  if (b.a1 == -b.a2) return WordIdentity(b.u1, b.u2);
  return NilCertificate{n1};
}

PartialLinear binomial_to_partial_linear(const WordIdentity& id, const Domain& d,
                                         TransformReport* rep) {
  if (!two_variable(id))
    throw std::invalid_argument("identity must be in x and y only");
  if (id.lhs.length() != id.rhs.length())
    throw std::invalid_argument("identity must be homogeneous");
  if (rep) {
    rep->operation = "binomial_to_partial_linear";
    rep->input = id;
  }

  TraceStep to_poly;
  to_poly.kind = TraceStep::Kind::ToPolynomial;
  to_poly.domain = d;
  to_poly.note = "form u - v";
  NCPolynomial p = NCPolynomial::monomial(d, id.lhs) -
                   NCPolynomial::monomial(d, id.rhs);
  push_step(rep, std::move(to_poly));

  TraceStep sub;
  sub.kind = TraceStep::Kind::SubstitutePolynomial;
  sub.bindings.emplace(var_x, NCPolynomial::var(d, var_x) +
                                  NCPolynomial::var(d, var_y));
  sub.note = "x -> x + y";
  std::map<Variable, NCPolynomial> bindings = sub.bindings;
  for (const auto& v : p.variables())
    if (!bindings.count(v)) bindings.emplace(v, NCPolynomial::var(d, v));
  p = p.substituted(bindings);
  push_step(rep, std::move(sub));

  TraceStep comp;
  comp.kind = TraceStep::Kind::ExtractComponent;
  comp.var = var_x;
  comp.degree = 1;
  comp.note = "homogeneous component of degree 1 in x";
  p = p.homogeneous_component(var_x, 1);
  push_step(rep, std::move(comp));

  if (p.is_zero())
    throw std::domain_error(
        "degree-1 component vanished; identity was trivial or hypotheses "
        "violated");

  TraceStep pl;
  pl.kind = TraceStep::Kind::ToPartialLinear;
  pl.note = "read off partial linear coefficients";
  auto alpha = PartialLinear::from_poly(p);
  if (!alpha) throw std::domain_error("component is not partial linear");
  push_step(rep, std::move(pl));

  if (rep) rep->output = *alpha;
  return *alpha;
}

std::pair<unsigned, bool> nil_implies_engel(unsigned n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  unsigned m = 2 * n - 1;
  NCPolynomial e = engel_poly(m, Domain::integers());
  bool ok = true;
  for (const auto& [w, c] : e.terms()) {
    std::size_t run = 0, best = 0;
    for (const auto& l : w.letters) {
      run = (l == var_y) ? run + 1 : 0;
      best = std::max(best, run);
    }
    if (best < n) ok = false;
  }
  return {m, ok};
}

bool verify_amazing(const PartialLinear& alpha) {
  const Domain& d = alpha.domain();
  unsigned n = alpha.n;
  NCPolynomial a = alpha.to_poly(true);
  NCPolynomial image = sub_y_shiftmul(a);
  NCPolynomial lhs(d, true);
  for (unsigned r = 0; r <= n; ++r) {
    NCPolynomial vr = image.homogeneous_component(var_y, n + r);
    NCPolynomial tail =
        NCPolynomial::monomial(d, Word::power(var_y, n - r), true);
    NCPolynomial term = (n - r) ? vr * tail : vr;
    if (r % 2)
      lhs = lhs - term;
    else
      lhs = lhs + term;
  }
  NCPolynomial rhs = (NCPolynomial::monomial(d, Word::power(var_y, n), true) *
                      engel_poly(n, d, true))
                         .scaled(alpha.coeffs[n]);
  return lhs == rhs;
}

NCPolynomial lemma1_transform(const PartialLinear& alpha, std::size_t m,
                              std::size_t k, Side side, TransformReport* rep) {
  const Domain& d = alpha.domain();
  unsigned n = alpha.n;
  switch (side) {
    case Side::right:
      if (!alpha.right_reduced())
        throw std::invalid_argument("alpha is not right reduced");
      break;
    case Side::left:
      if (!alpha.left_reduced())
        throw std::invalid_argument("alpha is not left reduced");
      break;
    case Side::reduced:
      if (!alpha.reduced())
        throw std::invalid_argument("alpha is not reduced");
      break;
  }
  std::size_t out_m = m, out_k = k;
  unsigned out_n = n;
  switch (side) {
    case Side::right: out_m = m + n; break;
    case Side::left: out_k = n + k; break;
    case Side::reduced: out_n = 3 * n - 1; break;
  }

  if (rep) {
    rep->operation = "lemma1_transform";
    rep->input = alpha;
  }
  TraceStep step;
  step.kind = TraceStep::Kind::EngelConclusion;
  step.domain = d;
  step.engel_n = out_n;
  step.m = out_m;
  step.k = out_k;
  step.note = "conclude y^" + std::to_string(out_m) + " e_" +
              std::to_string(out_n) + " y^" + std::to_string(out_k) + " = 0";
  NCPolynomial out = std::get<NCPolynomial>(replay_step(step, TransformState(alpha)));
  push_step(rep, std::move(step));

  if (side == Side::reduced) {
    // assembly identity: y^m e_{3n-1} y^k = y^m sum_i (-1)^i C(2n-1,i)
    // y^i e_n y^{2n-1-i} y^k
    NCPolynomial sum(d);
    for (unsigned i = 0; i <= 2 * n - 1; ++i) {
      BigInt c = binomial(2 * n - 1, i);
      if (i % 2) c = -c;
      NCPolynomial term = engel_poly(n, d);
      if (m + i)
        term = NCPolynomial::monomial(d, Word::power(var_y, m + i)) * term;
      if (2 * n - 1 - i + k)
        term = term * NCPolynomial::monomial(d, Word::power(var_y, 2 * n - 1 - i + k));
      sum = sum + term.scaled(Scalar::of(d, c));
    }
    if (sum != out)
      throw std::logic_error("engel assembly identity failed");
  }
  if (rep) rep->output = out;
  return out;
}

bool lemma1_general_case_check(const PartialLinear& alpha, std::size_t m,
                               std::size_t k) {
  if (m + k < 1)
    throw std::invalid_argument("m + k must be >= 1 (use verify_amazing)");
  const Domain& d = alpha.domain();
  unsigned n = alpha.n;

  NCPolynomial image = sub_y_shiftmul(alpha.to_poly(true));
  std::vector<NCPolynomial> v;
  for (unsigned r = 0; r <= n; ++r)
    v.push_back(image.homogeneous_component(var_y, n + r));

  NCPolynomial big = sub_y_shiftmul(sandwich(m, alpha, k, true));

  auto mono = [&](std::size_t e) {
    return NCPolynomial::monomial(d, Word::power(var_y, e), true);
  };
  auto wrap = [&](const NCPolynomial& p, std::size_t s, std::size_t t) {
    return mono(s + m) * p * mono(k + t);
  };

  for (unsigned a = 0; a <= n; ++a) {
    NCPolynomial comp = big.homogeneous_component(var_y, m + n + k + a);
    NCPolynomial target = comp - wrap(v[a], 0, 0);
    // collect candidate generators y^s (y^m v_r y^k) y^t with r < a, s+t = a-r
    std::vector<NCPolynomial> gens;
    for (unsigned r = 0; r < a; ++r)
      for (unsigned s = 0; s <= a - r; ++s) gens.push_back(wrap(v[r], s, a - r - s));
    // membership via exact linear algebra over the word support
    std::set<Word, DegLexLess> support;
    for (const auto& [w, c] : target.terms()) support.insert(w);
    for (const auto& g : gens)
      for (const auto& [w, c] : g.terms()) support.insert(w);
    std::vector<Word> words(support.begin(), support.end());
    auto to_vec = [&](const NCPolynomial& p) {
      std::vector<Scalar> vec;
      vec.reserve(words.size());
      for (const auto& w : words) vec.push_back(p.coefficient(w));
      return vec;
    };
    if (target.is_zero()) continue;
    std::vector<std::vector<Scalar>> gvecs;
    for (const auto& g : gens) gvecs.push_back(to_vec(g));
    if (!in_span(gvecs, to_vec(target))) return false;
  }
  return true;
}

WordIdentity strip_affixes(const WordIdentity& id, TransformReport* rep) {
  if (rep) {
    rep->operation = "strip_affixes";
    rep->input = id;
  }
  WordIdentity cur = id;
  auto can_strip_front = [&] {
    return cur.lhs.length() > 1 && cur.rhs.length() > 1 &&
           cur.lhs.letters.front() == cur.rhs.letters.front();
  };
  auto can_strip_back = [&] {
    return cur.lhs.length() > 1 && cur.rhs.length() > 1 &&
           cur.lhs.letters.back() == cur.rhs.letters.back();
  };
  while (can_strip_front()) {
    TraceStep step;
    step.kind = TraceStep::Kind::StripPrefixLetter;
    step.note = "strip shared first letter " + cur.lhs.letters.front().name();
    cur = std::get<WordIdentity>(replay_step(step, cur));
    push_step(rep, std::move(step));
  }
  while (can_strip_back()) {
    TraceStep step;
    step.kind = TraceStep::Kind::StripSuffixLetter;
    step.note = "strip shared last letter " + cur.lhs.letters.back().name();
    cur = std::get<WordIdentity>(replay_step(step, cur));
    push_step(rep, std::move(step));
  }
  // a*w*b = a*b shape: one side reduces to nothing but the affixes
  if ((cur.lhs.length() == 1 || cur.rhs.length() == 1) &&
      (cur.lhs.letters.front() == cur.rhs.letters.front() ||
       cur.lhs.letters.back() == cur.rhs.letters.back()))
    throw std::domain_error(
        "identity has the form a*w*b = a*b; no reduced core remains");
  if (rep) rep->output = cur;
  return cur;
}

NCPolynomial unital_engel_refinement(const NCPolynomial& lemma_output,
                                     unsigned engel_degree) {
  const Domain& d = lemma_output.domain();
  NCPolynomial p = lemma_output.unital() ? lemma_output
                                         : lemma_output.with_unital(true);
  NCPolynomial shift =
      NCPolynomial::var(d, var_y, true) + NCPolynomial::unit(d);
  std::map<Variable, NCPolynomial> b;
  for (const auto& v : p.variables()) b.emplace(v, id_binding(d, v, true));
  b.insert_or_assign(var_y, shift);
  return p.substituted(b).homogeneous_component(var_y, engel_degree);
}

NCPolynomial unital_engel_refinement(const PartialLinear& alpha, std::size_t m,
                                     std::size_t k, Side side) {
  unsigned n = alpha.n;
  unsigned out_n = side == Side::reduced ? 3 * n - 1 : n;
  return unital_engel_refinement(lemma1_transform(alpha, m, k, side), out_n);
}

}  // namespace engelkit
