#pragma once

#include <utility>
#include <vector>

#include "lcz/matrix.hpp"

namespace lcz {

// Symmetric bilinear form; symmetry is checked at construction.
class BilinearForm {
 public:
  BilinearForm() = default;
  explicit BilinearForm(Matrix G, const Tolerance& tol = {});

  std::size_t dim() const { return G_.rows(); }
  Backend backend() const { return G_.backend(); }
  const Matrix& matrix() const { return G_; }
  Scalar operator()(const Vector& u, const Vector& v) const { return inner(G_, u, v); }

  bool nondegenerate(const Tolerance& tol = {}) const;
  // Cached inverse; DegenerateMetric if singular.
  const Matrix& inverse() const;

 private:
  Matrix G_;
  mutable Matrix inv_;
  mutable bool have_inv_ = false;
};

struct Signature {
  std::size_t p = 0;  // positive directions
  std::size_t q = 0;  // negative directions
  bool operator==(const Signature& o) const { return p == o.p && q == o.q; }
};

// Symmetric congruence diagonalization; pivots below tol.rel*|G| count as zero.
Signature signature_of_form(const BilinearForm& G, const Tolerance& tol = {});
Signature signature_of_form(const Matrix& G, const Tolerance& tol = {});

// M* = G^{-1} M^T G.
Matrix adjoint_wrt_form(const Matrix& M, const BilinearForm& G);

// Coefficients c_0..c_n of det(x I - M) in ascending powers; c_n = 1.
std::vector<Scalar> char_poly(const Matrix& M);

}  // namespace lcz
