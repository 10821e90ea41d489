#include "engelkit/finalg.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace engelkit {

namespace {

void require_field(const Domain& d) {
  if (!d.is_field()) throw std::invalid_argument("algebra field must be Q or GF(p^k)");
}

std::uint64_t checked_pow(std::uint64_t base, std::size_t e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > cap / base) throw BudgetExceeded("enumeration space exceeds the evaluation budget");
    r *= base;
  }
  return r;
}

}  // namespace

FiniteAlgebra::FiniteAlgebra(Domain field, std::vector<std::string> basis_names,
                             std::vector<std::vector<std::vector<Scalar>>> mul_table,
                             std::optional<std::vector<Scalar>> unit)
    : field_(std::move(field)),
      dim_(basis_names.size()),
      names_(std::move(basis_names)),
      mul_(std::move(mul_table)),
      unit_(std::move(unit)) {
  validate();
}

void FiniteAlgebra::validate() const {
  require_field(field_);
  if (dim_ == 0) throw std::invalid_argument("algebra dimension must be positive");
  if (mul_.size() != dim_) throw std::invalid_argument("multiplication table has wrong shape");
  for (const auto& row : mul_) {
    if (row.size() != dim_) throw std::invalid_argument("multiplication table has wrong shape");
    for (const auto& vec : row) {
      if (vec.size() != dim_) throw std::invalid_argument("structure-constant vector has wrong length");
      for (const auto& c : vec)
        if (c.domain() != field_) throw DomainMismatch("structure constant outside the algebra field");
    }
  }
  if (unit_) {
    if (unit_->size() != dim_) throw std::invalid_argument("unit vector has wrong length");
    for (const auto& c : *unit_)
      if (c.domain() != field_) throw DomainMismatch("unit coefficient outside the algebra field");
  }

  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t l = 0; l < dim_; ++l) {
        AlgebraElement lhs = mul(mul(basis_element(i), basis_element(j)), basis_element(l));
        AlgebraElement rhs = mul(basis_element(i), mul(basis_element(j), basis_element(l)));
        if (!(lhs == rhs)) throw std::invalid_argument("multiplication table is not associative");
      }
  if (unit_) {
    AlgebraElement e{*unit_};
    for (std::size_t i = 0; i < dim_; ++i) {
      AlgebraElement b = basis_element(i);
      if (!(mul(e, b) == b) || !(mul(b, e) == b))
        throw std::invalid_argument("declared unit is not a two-sided unit");
    }
  }
}

const std::vector<Scalar>& FiniteAlgebra::unit_vector() const {
  if (!unit_) throw std::logic_error("algebra has no unit");
  return *unit_;
}

std::uint64_t FiniteAlgebra::element_count() const {
  if (!is_finite()) throw std::logic_error("element enumeration requires a finite field");
  std::uint64_t q = field_.field().order();
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (r > (std::uint64_t(1) << 62) / q)
      throw std::overflow_error("algebra too large to enumerate");
    r *= q;
  }
  return r;
}

AlgebraElement FiniteAlgebra::zero() const {
  return AlgebraElement{std::vector<Scalar>(dim_, Scalar::zero(field_))};
}

AlgebraElement FiniteAlgebra::basis_element(std::size_t i) const {
  AlgebraElement e = zero();
  e.coeffs[i] = Scalar::one(field_);
  return e;
}

AlgebraElement FiniteAlgebra::unit() const { return AlgebraElement{unit_vector()}; }

AlgebraElement FiniteAlgebra::add(const AlgebraElement& a, const AlgebraElement& b) const {
  AlgebraElement r = a;
  for (std::size_t i = 0; i < dim_; ++i) r.coeffs[i] = r.coeffs[i] + b.coeffs[i];
  return r;
}

AlgebraElement FiniteAlgebra::sub(const AlgebraElement& a, const AlgebraElement& b) const {
  AlgebraElement r = a;
  for (std::size_t i = 0; i < dim_; ++i) r.coeffs[i] = r.coeffs[i] - b.coeffs[i];
  return r;
}

AlgebraElement FiniteAlgebra::neg(const AlgebraElement& a) const {
  AlgebraElement r = a;
  for (auto& c : r.coeffs) c = -c;
  return r;
}

AlgebraElement FiniteAlgebra::mul(const AlgebraElement& a, const AlgebraElement& b) const {
  AlgebraElement r = zero();
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a.coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b.coeffs[j].is_zero()) continue;
      Scalar f = a.coeffs[i] * b.coeffs[j];
      for (std::size_t l = 0; l < dim_; ++l)
        r.coeffs[l] = r.coeffs[l] + f * mul_[i][j][l];
    }
  }
  return r;
}

AlgebraElement FiniteAlgebra::scale(const Scalar& c, const AlgebraElement& a) const {
  AlgebraElement r = a;
  for (auto& x : r.coeffs) x = c * x;
  return r;
}

AlgebraElement FiniteAlgebra::circle(const AlgebraElement& a, const AlgebraElement& b) const {
  return add(add(a, b), mul(a, b));
}

AlgebraElement FiniteAlgebra::pow(const AlgebraElement& a, std::uint64_t e) const {
  if (e == 0) throw std::invalid_argument("power exponent must be >= 1");
  AlgebraElement r = a;
  for (std::uint64_t i = 1; i < e; ++i) r = mul(r, a);
  return r;
}

bool FiniteAlgebra::is_zero(const AlgebraElement& a) const {
  return std::all_of(a.coeffs.begin(), a.coeffs.end(),
                     [](const Scalar& c) { return c.is_zero(); });
}

AlgebraElement FiniteAlgebra::element_at(std::uint64_t index) const {
  std::uint64_t q = field_.field().order();
  AlgebraElement r = zero();
  for (std::size_t i = dim_; i-- > 0;) {
    r.coeffs[i] = Scalar::finite(field_, index % q);
    index /= q;
  }
  if (index != 0) throw std::out_of_range("element index out of range");
  return r;
}

std::uint64_t FiniteAlgebra::index_of(const AlgebraElement& a) const {
  std::uint64_t q = field_.field().order();
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < dim_; ++i) idx = idx * q + a.coeffs[i].as_finite();
  return idx;
}

std::string FiniteAlgebra::to_string(const AlgebraElement& a) const {
  std::string out;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a.coeffs[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (!a.coeffs[i].is_one()) out += a.coeffs[i].to_string() + "*";
    out += names_[i];
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------- JSON

namespace {

nlohmann::json scalar_to_json(const Scalar& s) {
  if (s.domain().kind() == Domain::Kind::Finite)
    return s.as_finite();
  const BigRat& r = s.as_rational();
  if (boost::multiprecision::denominator(r) == 1) {
    BigInt num = boost::multiprecision::numerator(r);
    return static_cast<std::int64_t>(num);
  }
  return r.str();
}

Scalar scalar_from_json(const nlohmann::json& j, const Domain& d) {
  if (d.kind() == Domain::Kind::Finite) {
    if (!j.is_number_unsigned() || j.get<std::uint64_t>() >= d.field().order())
      throw std::invalid_argument("coefficient is not a field element index");
    return Scalar::finite(d, j.get<std::uint64_t>());
  }
  if (j.is_number_integer()) return Scalar::of(d, j.get<std::int64_t>());
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    auto slash = s.find('/');
    BigInt num(slash == std::string::npos ? s : s.substr(0, slash));
    BigInt den(slash == std::string::npos ? std::string("1") : s.substr(slash + 1));
    return Scalar::rational(BigRat(num, den));
  }
  throw std::invalid_argument("bad coefficient value");
}

}  // namespace

FiniteAlgebra FiniteAlgebra::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("algebra file must be a JSON object");
  Domain field = Domain::rationals();
  const auto& fj = j.at("field");
  if (fj.is_string()) {
    if (fj.get<std::string>() != "Q") throw std::invalid_argument("unknown field name");
  } else {
    std::uint64_t p = fj.at("p").get<std::uint64_t>();
    unsigned k = fj.at("k").get<unsigned>();
    std::vector<std::uint64_t> modulus = fj.at("modulus").get<std::vector<std::uint64_t>>();
    field = Domain::finite(std::make_shared<FiniteField>(p, std::move(modulus)));
    if (field.field().degree() != k) throw std::invalid_argument("modulus degree does not match k");
  }
  std::size_t dim = j.at("dim").get<std::size_t>();
  auto basis = j.at("basis").get<std::vector<std::string>>();
  if (basis.size() != dim) throw std::invalid_argument("basis size does not match dim");
  const auto& mj = j.at("mul");
  if (!mj.is_array() || mj.size() != dim) throw std::invalid_argument("mul table has wrong shape");
  std::vector<std::vector<std::vector<Scalar>>> mul;
  for (const auto& row : mj) {
    auto& mr = mul.emplace_back();
    if (!row.is_array() || row.size() != dim) throw std::invalid_argument("mul table has wrong shape");
    for (const auto& vec : row) {
      auto& mv = mr.emplace_back();
      if (!vec.is_array() || vec.size() != dim)
        throw std::invalid_argument("structure-constant vector has wrong length");
      for (const auto& c : vec) mv.push_back(scalar_from_json(c, field));
    }
  }
  std::optional<std::vector<Scalar>> unit;
  if (j.contains("unit")) {
    unit.emplace();
    for (const auto& c : j.at("unit")) unit->push_back(scalar_from_json(c, field));
  }
  return FiniteAlgebra(std::move(field), std::move(basis), std::move(mul), std::move(unit));
}

nlohmann::json FiniteAlgebra::to_json() const {
  nlohmann::json j;
  if (field_.kind() == Domain::Kind::Finite) {
    const FiniteField& f = field_.field();
    j["field"] = {{"p", f.characteristic()}, {"k", f.degree()}, {"modulus", f.modulus()}};
  } else {
    j["field"] = "Q";
  }
  j["dim"] = dim_;
  j["basis"] = names_;
  nlohmann::json mul = nlohmann::json::array();
  for (const auto& row : mul_) {
    nlohmann::json jrow = nlohmann::json::array();
    for (const auto& vec : row) {
      nlohmann::json jvec = nlohmann::json::array();
      for (const auto& c : vec) jvec.push_back(scalar_to_json(c));
      jrow.push_back(std::move(jvec));
    }
    mul.push_back(std::move(jrow));
  }
  j["mul"] = std::move(mul);
  if (unit_) {
    nlohmann::json u = nlohmann::json::array();
    for (const auto& c : *unit_) u.push_back(scalar_to_json(c));
    j["unit"] = std::move(u);
  }
  return j;
}

// ---------------------------------------------------------------- builtins

FiniteAlgebra builtin_example1(const Domain& field) {
  require_field(field);
  Scalar z = Scalar::zero(field), o = Scalar::one(field);
  // e11*e11 = e11, e11*e12 = e12, e12*e11 = e12*e12 = 0
  std::vector<std::vector<std::vector<Scalar>>> mul = {
      {{o, z}, {z, o}},
      {{z, z}, {z, z}},
  };
  return FiniteAlgebra(field, {"e11", "e12"}, std::move(mul));
}

FiniteAlgebra builtin_paison(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("paison parameter must be prime");
  // Elements a*e11 + a^p*e22 + b*e12 with a, b in GF(p^2), represented as
  // pairs (a, b) with (a,b)(c,d) = (ac, ad + b c^p).  GF(p)-basis: the pairs
  // (1,0), (g,0), (0,1), (0,g) with g the generator of GF(p^2).
  FiniteField big = FiniteField::with_default_modulus(p, 2);
  Domain base = Domain::gf(p);
  using Pair = std::pair<FiniteField::Elem, FiniteField::Elem>;
  std::vector<Pair> basis = {
      {big.one(), big.zero()}, {big.gen(), big.zero()},
      {big.zero(), big.one()}, {big.zero(), big.gen()}};
  auto decompose = [&](const Pair& e) {
    std::vector<Scalar> v;
    for (auto digit : big.digits(e.first)) v.push_back(Scalar::finite(base, digit));
    for (auto digit : big.digits(e.second)) v.push_back(Scalar::finite(base, digit));
    return v;
  };
  std::vector<std::vector<std::vector<Scalar>>> mul;
  for (const auto& [a, b] : basis) {
    auto& row = mul.emplace_back();
    for (const auto& [c, d] : basis)
      row.push_back(decompose({big.mul(a, c),
                               big.add(big.mul(a, d), big.mul(b, big.frobenius(c)))}));
  }
  std::vector<Scalar> unit = decompose({big.one(), big.zero()});
  return FiniteAlgebra(base, {"1", "g", "e12", "ge12"}, std::move(mul), std::move(unit));
}

namespace {

FiniteAlgebra matrix_units_algebra(std::size_t n, const Domain& field, bool strict) {
  require_field(field);
  if (n == 0 || (strict && n < 2)) throw std::invalid_argument("matrix size too small");
  std::vector<std::pair<std::size_t, std::size_t>> units;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = strict ? i + 1 : 1; j <= n; ++j) units.emplace_back(i, j);
  std::size_t d = units.size();
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pos;
  std::vector<std::string> names;
  for (std::size_t l = 0; l < d; ++l) {
    pos[units[l]] = l;
    names.push_back("e" + std::to_string(units[l].first) + std::to_string(units[l].second));
  }
  std::vector<std::vector<std::vector<Scalar>>> mul(
      d, std::vector<std::vector<Scalar>>(d, std::vector<Scalar>(d, Scalar::zero(field))));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      if (units[a].second == units[b].first) {
        auto it = pos.find({units[a].first, units[b].second});
        if (it != pos.end()) mul[a][b][it->second] = Scalar::one(field);
      }
  std::optional<std::vector<Scalar>> unit;
  if (!strict) {
    unit.emplace(d, Scalar::zero(field));
    for (std::size_t i = 1; i <= n; ++i) (*unit)[pos.at({i, i})] = Scalar::one(field);
  }
  return FiniteAlgebra(field, std::move(names), std::move(mul), std::move(unit));
}

}  // namespace

FiniteAlgebra builtin_strict_upper(std::size_t n, const Domain& field) {
  return matrix_units_algebra(n, field, true);
}

FiniteAlgebra builtin_full_matrix(std::size_t n, const Domain& field) {
  return matrix_units_algebra(n, field, false);
}

Domain parse_field_spec(const std::string& s) {
  if (s == "Q" || s == "q") return Domain::rationals();
  std::uint64_t q = 0;
  try {
    std::size_t used = 0;
    q = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad field spec '" + s + "' (expected Q or a prime power)");
  }
  if (q < 2) throw std::invalid_argument("field order must be at least 2");
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  unsigned k = 0;
  std::uint64_t r = q;
  while (r > 1) {
    if (r % p != 0) throw std::invalid_argument("field order must be a prime power");
    r /= p;
    ++k;
  }
  return Domain::gf(p, k);
}

FiniteAlgebra builtin(const std::string& name) {
  std::vector<std::string> parts;
  std::stringstream ss(name);
  std::string part;
  while (std::getline(ss, part, ':')) parts.push_back(part);
  if (parts.empty()) throw std::invalid_argument("empty builtin name");
  const std::string& head = parts[0];

  if (head == "example1") {
    Domain d = parts.size() > 1 ? parse_field_spec(parts[1]) : Domain::gf(2);
    return builtin_example1(d);
  }
  if (head == "paison" || (head.rfind("paison", 0) == 0 && parts.size() == 1)) {
    std::uint64_t p = 2;
    if (head.size() > 6)
      p = std::stoull(head.substr(6));
    else if (parts.size() > 1)
      p = std::stoull(parts[1]);
    return builtin_paison(p);
  }
  if (head == "strict_upper" || head == "full_matrix") {
    if (parts.size() < 2) throw std::invalid_argument(head + " needs a size parameter");
    std::size_t n = std::stoull(parts[1]);
    Domain d = parts.size() > 2 ? parse_field_spec(parts[2]) : Domain::gf(2);
    return head == "strict_upper" ? builtin_strict_upper(n, d) : builtin_full_matrix(n, d);
  }
  throw std::invalid_argument("unknown builtin '" + name + "'");
}

FiniteAlgebra unital_hull(const FiniteAlgebra& alg) {
  const Domain& f = alg.field();
  std::size_t d = alg.dim();
  Scalar z = Scalar::zero(f), o = Scalar::one(f);
  std::vector<std::string> names = {"1"};
  names.insert(names.end(), alg.basis_names().begin(), alg.basis_names().end());
  auto pad = [&](std::size_t slot, const std::vector<Scalar>* tail) {
    std::vector<Scalar> v(d + 1, z);
    if (tail)
      std::copy(tail->begin(), tail->end(), v.begin() + 1);
    else
      v[slot] = o;
    return v;
  };
  std::vector<std::vector<std::vector<Scalar>>> mul(
      d + 1, std::vector<std::vector<Scalar>>(d + 1));
  for (std::size_t i = 0; i <= d; ++i)
    for (std::size_t j = 0; j <= d; ++j) {
      if (i == 0 || j == 0) {
        mul[i][j] = pad(std::max(i, j), nullptr);
      } else {
        AlgebraElement p = alg.mul(alg.basis_element(i - 1), alg.basis_element(j - 1));
        mul[i][j] = pad(0, &p.coeffs);
      }
    }
  std::vector<Scalar> unit(d + 1, z);
  unit[0] = o;
  return FiniteAlgebra(f, std::move(names), std::move(mul), std::move(unit));
}

// ---------------------------------------------------------------- checking

std::uint64_t evaluation_budget() {
  if (const char* env = std::getenv("ENGELKIT_BUDGET")) {
    char* end = nullptr;
    std::uint64_t v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw std::invalid_argument("ENGELKIT_BUDGET must be a positive integer");
  }
  return kDefaultBudget;
}

AlgebraElement eval_word(const FiniteAlgebra& alg, const Word& w,
                         const std::map<Variable, AlgebraElement>& assignment) {
  if (w.is_empty()) {
    if (!alg.is_unital()) throw std::logic_error("empty word over a non-unital algebra");
    return alg.unit();
  }
  AlgebraElement r = assignment.at(w.letters.front());
  for (std::size_t i = 1; i < w.length(); ++i) r = alg.mul(r, assignment.at(w.letters[i]));
  return r;
}

AlgebraElement eval_poly(const FiniteAlgebra& alg, const NCPolynomial& p,
                         const std::map<Variable, AlgebraElement>& assignment) {
  AlgebraElement r = alg.zero();
  for (const auto& [w, c] : p.terms())
    r = alg.add(r, alg.scale(c.convert_to(alg.field()), eval_word(alg, w, assignment)));
  return r;
}

namespace {

std::vector<Variable> identity_variables(const CheckableIdentity& id) {
  std::set<Variable> vars;
  if (const auto* wi = std::get_if<WordIdentity>(&id)) {
    for (const auto& v : wi->lhs.letters) vars.insert(v);
    for (const auto& v : wi->rhs.letters) vars.insert(v);
  } else {
    auto pv = std::get<NCPolynomial>(id).variables();
    vars.insert(pv.begin(), pv.end());
  }
  return {vars.begin(), vars.end()};
}

std::map<Variable, AlgebraElement> assignment_at(const FiniteAlgebra& alg,
                                                 const std::vector<Variable>& vars,
                                                 std::uint64_t count, std::uint64_t idx) {
  std::map<Variable, AlgebraElement> a;
  for (std::size_t i = vars.size(); i-- > 0;) {
    a.emplace(vars[i], alg.element_at(idx % count));
    idx /= count;
  }
  return a;
}

// Scans tuple indices in ascending order; returns the least failing index,
// or `total` when every scanned tuple satisfies the predicate.
std::uint64_t parallel_least_failure(
    std::uint64_t total, unsigned jobs,
    const std::function<bool(std::uint64_t)>& tuple_ok) {
  jobs = std::max(1u, std::min<unsigned>(jobs, std::thread::hardware_concurrency()));
  std::atomic<std::uint64_t> best{total};
  auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t i = lo; i < hi; ++i) {
      if (i >= best.load(std::memory_order_relaxed)) return;
      if (!tuple_ok(i)) {
        std::uint64_t prev = best.load();
        while (i < prev && !best.compare_exchange_weak(prev, i)) {
        }
        return;
      }
    }
  };
  if (jobs == 1 || total < 2 * jobs) {
    scan(0, total);
  } else {
    std::vector<std::thread> workers;
    std::uint64_t chunk = (total + jobs - 1) / jobs;
    for (unsigned w = 0; w < jobs; ++w) {
      std::uint64_t lo = std::min<std::uint64_t>(total, w * chunk);
      std::uint64_t hi = std::min<std::uint64_t>(total, lo + chunk);
      workers.emplace_back(scan, lo, hi);
    }
    for (auto& t : workers) t.join();
  }
  return best.load();
}

}  // namespace

CheckResult check_identity(const FiniteAlgebra& alg, const CheckableIdentity& id,
                           CheckMode mode, unsigned jobs, std::uint64_t budget) {
  if (!alg.is_finite())
    throw std::invalid_argument("exhaustive identity checking requires a finite field");
  if (mode == CheckMode::circle && std::holds_alternative<NCPolynomial>(id))
    throw std::invalid_argument("circle mode applies to word identities only");

  std::vector<Variable> vars = identity_variables(id);
  std::uint64_t count = alg.element_count();
  std::size_t weight = 1;
  if (const auto* wi = std::get_if<WordIdentity>(&id))
    weight = wi->lhs.length() + wi->rhs.length();
  else
    weight = std::max<std::size_t>(1, std::get<NCPolynomial>(id).term_count());
  std::uint64_t total = checked_pow(count, vars.size(), budget / std::max<std::size_t>(weight, 1));

  auto eval_side = [&](const Word& w, const std::map<Variable, AlgebraElement>& a) {
    if (mode == CheckMode::multiplicative) return eval_word(alg, w, a);
    AlgebraElement r = a.at(w.letters.front());
    for (std::size_t i = 1; i < w.length(); ++i) r = alg.circle(r, a.at(w.letters[i]));
    return r;
  };
  auto tuple_ok = [&](std::uint64_t idx) {
    auto a = assignment_at(alg, vars, count, idx);
    if (const auto* wi = std::get_if<WordIdentity>(&id))
      return eval_side(wi->lhs, a) == eval_side(wi->rhs, a);
    return alg.is_zero(eval_poly(alg, std::get<NCPolynomial>(id), a));
  };

  std::uint64_t first_fail = parallel_least_failure(total, jobs, tuple_ok);
  CheckResult res;
  if (first_fail == total) {
    res.tuples_checked = total;
  } else {
    res.holds = false;
    res.witness = assignment_at(alg, vars, count, first_fail);
    res.tuples_checked = first_fail + 1;
    if (tuple_ok(first_fail)) throw std::logic_error("witness does not reproduce");
  }
  return res;
}

std::vector<CheckResult> check_engel_upto(const FiniteAlgebra& alg, unsigned n_max,
                                          unsigned jobs, std::uint64_t budget) {
  if (n_max == 0) throw std::invalid_argument("Engel bound must be >= 1");
  if (!alg.is_finite())
    throw std::invalid_argument("exhaustive identity checking requires a finite field");
  std::uint64_t count = alg.element_count();
  std::uint64_t pairs = checked_pow(count, 2, budget / n_max);

  // e_n(x, y) via the iterated commutator chain; one chain per pair serves
  // every n at once.
  std::vector<std::atomic<std::uint64_t>> first_fail(n_max);
  for (auto& a : first_fail) a.store(pairs);
  jobs = std::max(1u, std::min<unsigned>(jobs, std::thread::hardware_concurrency()));
  auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      AlgebraElement x = alg.element_at(idx / count);
      AlgebraElement y = alg.element_at(idx % count);
      AlgebraElement c = x;
      for (unsigned n = 1; n <= n_max; ++n) {
        c = alg.sub(alg.mul(c, y), alg.mul(y, c));
        if (!alg.is_zero(c)) {
          std::uint64_t prev = first_fail[n - 1].load();
          while (idx < prev && !first_fail[n - 1].compare_exchange_weak(prev, idx)) {
          }
        }
      }
    }
  };
  if (jobs == 1 || pairs < 2 * jobs) {
    scan(0, pairs);
  } else {
    std::vector<std::thread> workers;
    std::uint64_t chunk = (pairs + jobs - 1) / jobs;
    for (unsigned w = 0; w < jobs; ++w) {
      std::uint64_t lo = std::min<std::uint64_t>(pairs, w * chunk);
      std::uint64_t hi = std::min<std::uint64_t>(pairs, lo + chunk);
      workers.emplace_back(scan, lo, hi);
    }
    for (auto& t : workers) t.join();
  }

  std::vector<CheckResult> out;
  for (unsigned n = 1; n <= n_max; ++n) {
    CheckResult r;
    std::uint64_t idx = first_fail[n - 1].load();
    if (idx == pairs) {
      r.tuples_checked = pairs;
    } else {
      r.holds = false;
      r.witness = std::map<Variable, AlgebraElement>{
          {var_x, alg.element_at(idx / count)}, {var_y, alg.element_at(idx % count)}};
      r.tuples_checked = idx + 1;
    }
    out.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------- analysis

ExponentReport find_exponent(const FiniteAlgebra& alg) {
  std::uint64_t count = alg.element_count();
  std::uint64_t max_preperiod = 1;
  std::uint64_t period_lcm = 1;
  BigInt product = 1;
  for (std::uint64_t i = 0; i < count; ++i) {
    AlgebraElement x = alg.element_at(i);
    // first repeat in x, x^2, ... gives preperiod m and period a
    std::unordered_map<std::uint64_t, std::uint64_t> seen;
    AlgebraElement p = x;
    std::uint64_t pos = 1;
    while (true) {
      auto [it, fresh] = seen.emplace(alg.index_of(p), pos);
      if (!fresh) {
        std::uint64_t m = it->second;
        std::uint64_t a = pos - m;
        max_preperiod = std::max(max_preperiod, m);
        period_lcm = std::lcm(period_lcm, a);
        std::uint64_t tx = ((m + a - 1) / a) * a;
        product *= tx;
        break;
      }
      p = alg.mul(p, x);
      ++pos;
    }
  }
  std::uint64_t least = ((max_preperiod + period_lcm - 1) / period_lcm) * period_lcm;
  return {least, product};
}

std::vector<AlgebraElement> idempotents(const FiniteAlgebra& alg) {
  std::uint64_t count = alg.element_count();
  std::vector<AlgebraElement> out;
  for (std::uint64_t i = 0; i < count; ++i) {
    AlgebraElement x = alg.element_at(i);
    if (alg.mul(x, x) == x) out.push_back(std::move(x));
  }
  return out;
}

bool all_idempotents_central(const FiniteAlgebra& alg) {
  for (const auto& e : idempotents(alg))
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      AlgebraElement b = alg.basis_element(i);
      if (!(alg.mul(e, b) == alg.mul(b, e))) return false;
    }
  return true;
}

namespace {

// Row space in reduced echelon form with leftmost-pivot elimination.
class LinearSpan {
 public:
  explicit LinearSpan(std::size_t width) : width_(width) {}

  std::size_t dimension() const { return rows_.size(); }
  const std::vector<std::vector<Scalar>>& rows() const { return rows_; }

  bool insert(std::vector<Scalar> v) {
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (!v[pivots_[r]].is_zero()) {
        Scalar f = v[pivots_[r]];
        for (std::size_t c = 0; c < width_; ++c) v[c] = v[c] - f * rows_[r][c];
      }
    std::size_t piv = 0;
    while (piv < width_ && v[piv].is_zero()) ++piv;
    if (piv == width_) return false;
    Scalar inv = v[piv].inverse();
    for (auto& c : v) c = inv * c;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (!rows_[r][piv].is_zero()) {
        Scalar f = rows_[r][piv];
        for (std::size_t c = 0; c < width_; ++c) rows_[r][c] = rows_[r][c] - f * v[c];
      }
    std::size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < piv) ++at;
    rows_.insert(rows_.begin() + at, std::move(v));
    pivots_.insert(pivots_.begin() + at, piv);
    return true;
  }

 private:
  std::size_t width_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<std::size_t> pivots_;
};

LinearSpan commutator_span(const FiniteAlgebra& alg, const LinearSpan& part) {
  LinearSpan out(alg.dim());
  for (const auto& row : part.rows())
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      AlgebraElement g{row};
      AlgebraElement b = alg.basis_element(i);
      out.insert(alg.sub(alg.mul(g, b), alg.mul(b, g)).coeffs);
    }
  return out;
}

void close_under_ideal(const FiniteAlgebra& alg, LinearSpan& span) {
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<Scalar>> snapshot = span.rows();
    for (const auto& row : snapshot)
      for (std::size_t i = 0; i < alg.dim(); ++i) {
        AlgebraElement s{row};
        AlgebraElement b = alg.basis_element(i);
        grew |= span.insert(alg.mul(b, s).coeffs);
        grew |= span.insert(alg.mul(s, b).coeffs);
      }
  }
}

LinearSpan full_span(const FiniteAlgebra& alg) {
  LinearSpan s(alg.dim());
  for (std::size_t i = 0; i < alg.dim(); ++i) s.insert(alg.basis_element(i).coeffs);
  return s;
}

}  // namespace

GammaSeries gamma_series(const FiniteAlgebra& alg) {
  GammaSeries out;
  LinearSpan cur = full_span(alg);
  out.dims.push_back(cur.dimension());
  while (true) {
    LinearSpan next = commutator_span(alg, cur);
    close_under_ideal(alg, next);
    out.dims.push_back(next.dimension());
    if (next.dimension() == 0) {
      out.index = out.dims.size();
      break;
    }
    // the series is nested, so equal dimensions mean it has stabilized
    if (next.dimension() == cur.dimension()) break;
    cur = std::move(next);
  }
  return out;
}

std::optional<std::size_t> lie_lower_central_class(const FiniteAlgebra& alg) {
  LinearSpan cur = full_span(alg);
  std::size_t steps = 0;
  while (cur.dimension() > 0) {
    LinearSpan next = commutator_span(alg, cur);
    if (next.dimension() == cur.dimension()) return std::nullopt;
    cur = std::move(next);
    ++steps;
  }
  return steps;
}

}  // namespace engelkit
