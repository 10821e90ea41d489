#include "engelkit/deltakernel.hpp"

#include <stdexcept>

#include "engelkit/bigint.hpp"

namespace engelkit {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, const Domain& d)
    : rows_(rows), cols_(cols), dom_(d), data_(rows * cols, Scalar::zero(d)) {}

ExactMatrix build_delta_matrix(unsigned n, const Domain& d) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::vector<std::pair<unsigned, unsigned>> rows;  // (s, t), s+t <= n-1
  for (unsigned total = 0; total < n; ++total)
    for (unsigned s = 0; s <= total; ++s) rows.emplace_back(s, total - s);
  ExactMatrix m(rows.size(), n + 1, d);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto [s, t] = rows[r];
    for (unsigned i = 0; i <= n; ++i)
      m.at(r, i) = Scalar::of(d, binomial(i, s) * binomial(n - i, t));
  }
  return m;
}

ExactMatrix build_hausdorff_matrix(unsigned n, const Domain& d) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  ExactMatrix m(n, n + 1, d);
  for (unsigned s = 0; s < n; ++s) {
    unsigned t = n - 1 - s;
    for (unsigned i = 0; i <= n; ++i)
      m.at(s, i) = Scalar::of(d, binomial(i, s) * binomial(n - i, t));
  }
  return m;
}

namespace {

Domain lift(const Domain& d) {
  return d.kind() == Domain::Kind::Integers ? Domain::rationals() : d;
}

struct Echelon {
  std::vector<std::vector<Scalar>> rows;  // reduced rows
  std::vector<std::size_t> pivots;        // pivot column per row
};

// Reduced row echelon form with the leftmost-nonzero pivot rule.
Echelon rref(std::vector<std::vector<Scalar>> rows, std::size_t cols,
             const Domain& field) {
  Echelon e;
  std::size_t lead = 0;
  std::size_t r = 0;
  std::size_t nrows = rows.size();
  while (r < nrows && lead < cols) {
    std::size_t piv = r;
    while (piv < nrows && rows[piv][lead].is_zero()) ++piv;
    if (piv == nrows) {
      ++lead;
      continue;
    }
    std::swap(rows[r], rows[piv]);
    Scalar inv = rows[r][lead].inverse();
    for (auto& v : rows[r]) v = v * inv;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == r || rows[i][lead].is_zero()) continue;
      Scalar f = rows[i][lead];
      for (std::size_t c = 0; c < cols; ++c)
        rows[i][c] = rows[i][c] - f * rows[r][c];
    }
    e.pivots.push_back(lead);
    ++r;
    ++lead;
  }
  rows.resize(e.pivots.size(), std::vector<Scalar>(cols, Scalar::zero(field)));
  e.rows = std::move(rows);
  return e;
}

std::vector<std::vector<Scalar>> lifted_rows(const ExactMatrix& m, Domain& field) {
  field = lift(m.domain());
  std::vector<std::vector<Scalar>> rows(
      m.rows(), std::vector<Scalar>(m.cols(), Scalar::zero(field)));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      rows[r][c] = m.at(r, c).convert_to(field);
  return rows;
}

}  // namespace

unsigned rank(const ExactMatrix& m) {
  Domain field = Domain::rationals();
  auto rows = lifted_rows(m, field);
  return static_cast<unsigned>(rref(std::move(rows), m.cols(), field).pivots.size());
}

std::vector<std::vector<Scalar>> kernel_basis(const ExactMatrix& m) {
  Domain field = Domain::rationals();
  auto rows = lifted_rows(m, field);
  Echelon e = rref(std::move(rows), m.cols(), field);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> kernel;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols(), Scalar::zero(field));
    v[free] = Scalar::one(field);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      v[e.pivots[r]] = -e.rows[r][free];
    // normalize: last nonzero coordinate = 1
    std::size_t last = m.cols();
    for (std::size_t c = m.cols(); c-- > 0;)
      if (!v[c].is_zero()) {
        last = c;
        break;
      }
    if (last < m.cols()) {
      Scalar inv = v[last].inverse();
      for (auto& x : v) x = x * inv;
    }
    kernel.push_back(std::move(v));
  }
  return kernel;
}

bool verify_prop_kernel(unsigned n, const Domain& d) {
  auto kernel = kernel_basis(build_delta_matrix(n, d));
  if (kernel.size() != 1) return false;
  Domain field = lift(d);
  std::vector<Scalar> engel(n + 1, Scalar::zero(field));
  for (unsigned i = 0; i <= n; ++i) {
    BigInt c = binomial(n, i);
    if (i % 2) c = -c;
    engel[i] = Scalar::of(field, c);
  }
  // compare up to the same normalization
  std::size_t last = n;
  while (engel[last].is_zero()) --last;
  Scalar inv = engel[last].inverse();
  for (auto& x : engel) x = x * inv;
  return kernel[0] == engel;
}

bool in_span(const std::vector<std::vector<Scalar>>& gens,
             const std::vector<Scalar>& target) {
  if (target.empty()) return true;
  Domain field = lift(target.front().domain());
  std::size_t cols = target.size();
  std::vector<std::vector<Scalar>> rows;
  for (const auto& g : gens) {
    if (g.size() != cols) throw std::invalid_argument("vector length mismatch");
    std::vector<Scalar> r;
    for (const auto& v : g) r.push_back(v.convert_to(field));
    rows.push_back(std::move(r));
  }
  Echelon e = rref(std::move(rows), cols, field);
  std::vector<Scalar> t;
  for (const auto& v : target) t.push_back(v.convert_to(field));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    Scalar f = t[e.pivots[r]];
    if (f.is_zero()) continue;
    for (std::size_t c = 0; c < cols; ++c) t[c] = t[c] - f * e.rows[r][c];
  }
  for (const auto& v : t)
    if (!v.is_zero()) return false;
  return true;
}

}  // namespace engelkit
