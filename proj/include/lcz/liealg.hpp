#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "lcz/forms.hpp"

namespace lcz {

// Structure constants c[i][j] = [b_i, b_j] in the basis. Antisymmetry is
// checked when the table is set; Jacobi is not (see jacobi_defect).
class LieAlgebra {
 public:
  LieAlgebra() = default;
  LieAlgebra(std::vector<std::string> names, Backend b);
  LieAlgebra(std::vector<std::string> names, std::vector<std::vector<Vector>> table,
             const Tolerance& tol = {});

  std::size_t dim() const { return names_.size(); }
  Backend backend() const { return backend_; }
  const std::vector<std::string>& names() const { return names_; }
  const Vector& structure(std::size_t i, std::size_t j) const { return c_[i][j]; }
  const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const { return c_[i][j][k]; }
  double max_constant() const;

  // Sets [b_i,b_j] = v and [b_j,b_i] = -v.
  void set_bracket(std::size_t i, std::size_t j, const Vector& v);

  Vector bracket(const Vector& u, const Vector& v) const;
  Matrix ad_matrix(const Vector& u) const;
  Matrix ad_basis(std::size_t i) const;
  LieAlgebra to_backend(Backend b) const;

 private:
  std::vector<std::string> names_;
  Backend backend_ = Backend::Exact;
  std::vector<std::vector<Vector>> c_;
};

struct JacobiDefect {
  Scalar value;                          // max-norm of the Jacobiator
  std::tuple<std::size_t, std::size_t, std::size_t> triple{0, 0, 0};
};
JacobiDefect jacobi_defect(const LieAlgebra& g);

class PseudoEuclideanLieAlgebra {
 public:
  PseudoEuclideanLieAlgebra() = default;
  // Rejects a degenerate or mis-sized metric and mixed backends.
  PseudoEuclideanLieAlgebra(LieAlgebra alg, BilinearForm metric, const Tolerance& tol = {});

  std::size_t dim() const { return alg_.dim(); }
  Backend backend() const { return alg_.backend(); }
  const LieAlgebra& alg() const { return alg_; }
  const BilinearForm& metric() const { return metric_; }
  const Matrix& G() const { return metric_.matrix(); }
  Scalar ip(const Vector& u, const Vector& v) const { return metric_(u, v); }
  Signature signature(const Tolerance& tol = {}) const { return signature_of_form(metric_, tol); }
  bool is_lorentzian(const Tolerance& tol = {}) const;
  bool is_euclidean(const Tolerance& tol = {}) const;
  PseudoEuclideanLieAlgebra to_backend(Backend b) const;

 private:
  LieAlgebra alg_;
  BilinearForm metric_;
};

// Solves G H = t with t_i = tr(ad_{b_i}).
Vector trace_vector_H(const PseudoEuclideanLieAlgebra& g);

// Block-diagonal sum; basis names of the second summand are suffixed on clash.
PseudoEuclideanLieAlgebra direct_sum(const PseudoEuclideanLieAlgebra& g1,
                                     const PseudoEuclideanLieAlgebra& g2);

// Throws NotLieAlgebra when the Jacobi defect is not negligible.
void require_lie_algebra(const LieAlgebra& g, const Tolerance& tol = {});

}  // namespace lcz
