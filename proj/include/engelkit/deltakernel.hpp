#pragma once

#include <cstddef>
#include <vector>

#include "engelkit/scalar.hpp"

namespace engelkit {

// Dense matrix of exact scalars over Q or GF(p^k).
class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols, const Domain& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Domain& domain() const { return dom_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

 private:
  std::size_t rows_, cols_;
  Domain dom_;
  std::vector<Scalar> data_;
};

// Coefficient matrix of the Delta(alpha) = 0 system: rows indexed by the
// monomials y^s x y^t with s + t <= n - 1 (sorted by s + t, then s),
// columns by a_0..a_n; entry C(i,s) * C(n-i,t).
ExactMatrix build_delta_matrix(unsigned n, const Domain& d);

// The n x (n+1) submatrix of rows with s + t = n - 1, bidiagonal with
// diagonal n, n-1, ..., 1 and superdiagonal 1, 2, ..., n.
ExactMatrix build_hausdorff_matrix(unsigned n, const Domain& d);

// Exact row reduction; the domain must be a field (Z is lifted to Q).
unsigned rank(const ExactMatrix& m);

// Kernel basis in reduced echelon parametrization, each vector normalized
// so its last nonzero coordinate is 1.
std::vector<std::vector<Scalar>> kernel_basis(const ExactMatrix& m);

// Kernel of the Delta matrix is 1-dimensional and spanned by the Engel
// coefficient vector (-1)^i C(n,i).
bool verify_prop_kernel(unsigned n, const Domain& d);

// Is `target` in the span of `gens`?  All vectors over one field domain.
bool in_span(const std::vector<std::vector<Scalar>>& gens,
             const std::vector<Scalar>& target);

}  // namespace engelkit
