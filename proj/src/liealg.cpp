#include "lcz/liealg.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace lcz {

LieAlgebra::LieAlgebra(std::vector<std::string> names, Backend b)
    : names_(std::move(names)), backend_(b) {
  const std::size_t n = names_.size();
  c_.assign(n, std::vector<Vector>(n, zero_vector(n, b)));
}

LieAlgebra::LieAlgebra(std::vector<std::string> names, std::vector<std::vector<Vector>> table,
                       const Tolerance& tol)
    : names_(std::move(names)), c_(std::move(table)) {
  const std::size_t n = names_.size();
  if (c_.size() != n) fail(ErrorCode::DimensionMismatch, "structure table size");
  backend_ = n ? c_[0][0].empty() ? Backend::Exact : c_[0][0][0].backend() : Backend::Exact;
  double scale = 0;
  for (const auto& row : c_) {
    if (row.size() != n) fail(ErrorCode::DimensionMismatch, "structure table size");
    for (const auto& v : row) {
      if (v.size() != n) fail(ErrorCode::DimensionMismatch, "structure table size");
      for (const auto& x : v)
        if (x.backend() != backend_) fail(ErrorCode::BackendMismatch, "structure table backend");
      scale = std::max(scale, max_abs(v));
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!negligible(c_[i][j][k] + c_[j][i][k], scale, tol))
          fail(ErrorCode::BadParam, "structure constants are not antisymmetric at (" + names_[i] +
                                        "," + names_[j] + ")");
}

double LieAlgebra::max_constant() const {
  double m = 0;
  for (const auto& row : c_)
    for (const auto& v : row) m = std::max(m, max_abs(v));
  return m;
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vector& v) {
  const std::size_t n = dim();
  if (i >= n || j >= n || v.size() != n) fail(ErrorCode::DimensionMismatch, "set_bracket");
  if (i == j) fail(ErrorCode::BadParam, "self-bracket must vanish");
  for (const auto& x : v)
    if (x.backend() != backend_) fail(ErrorCode::BackendMismatch, "bracket backend");
  c_[i][j] = v;
  c_[j][i] = Scalar::integer(-1, backend_) * v;
}

Vector LieAlgebra::bracket(const Vector& u, const Vector& v) const {
  const std::size_t n = dim();
  if (u.size() != n || v.size() != n) fail(ErrorCode::DimensionMismatch, "bracket operands");
  Vector r = zero_vector(n, backend_);
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || v[j].is_zero()) continue;
      Scalar w = u[i] * v[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!c_[i][j][k].is_zero()) r[k] += w * c_[i][j][k];
    }
  }
  return r;
}

Matrix LieAlgebra::ad_matrix(const Vector& u) const {
  const std::size_t n = dim();
  if (u.size() != n) fail(ErrorCode::DimensionMismatch, "ad operand");
  Matrix m(n, n, backend_);
  for (std::size_t j = 0; j < n; ++j) m.set_column(j, bracket(u, unit_vector(n, j, backend_)));
  return m;
}

Matrix LieAlgebra::ad_basis(std::size_t i) const {
  const std::size_t n = dim();
  Matrix m(n, n, backend_);
  for (std::size_t j = 0; j < n; ++j) m.set_column(j, c_[i][j]);
  return m;
}

LieAlgebra LieAlgebra::to_backend(Backend b) const {
  LieAlgebra out(names_, b);
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) out.c_[i][j] = lcz::to_backend(c_[i][j], b);
  return out;
}

JacobiDefect jacobi_defect(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  const Backend b = g.backend();
  JacobiDefect d{Scalar::zero(b), {0, 0, 0}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector bi = unit_vector(n, i, b), bj = unit_vector(n, j, b), bk = unit_vector(n, k, b);
        Vector s = g.bracket(bi, g.structure(j, k)) + g.bracket(bj, g.structure(k, i)) +
                   g.bracket(bk, g.structure(i, j));
        for (const auto& x : s)
          if (d.value < x.abs()) {
            d.value = x.abs();
            d.triple = {i, j, k};
          }
      }
  return d;
}

void require_lie_algebra(const LieAlgebra& g, const Tolerance& tol) {
  JacobiDefect d = jacobi_defect(g);
  double scale = g.max_constant();
  if (!negligible(d.value, scale * scale, tol))
    fail(ErrorCode::NotLieAlgebra, "Jacobi identity fails (defect " + d.value.str() + ")");
}

PseudoEuclideanLieAlgebra::PseudoEuclideanLieAlgebra(LieAlgebra alg, BilinearForm metric,
                                                     const Tolerance& tol)
    : alg_(std::move(alg)), metric_(std::move(metric)) {
  if (metric_.dim() != alg_.dim()) fail(ErrorCode::DimensionMismatch, "metric size differs from algebra");
  if (alg_.dim() > 0 && metric_.backend() != alg_.backend())
    fail(ErrorCode::BackendMismatch, "metric and structure constants use different backends");
  if (!metric_.nondegenerate(tol)) fail(ErrorCode::DegenerateMetric, "metric is degenerate");
}

bool PseudoEuclideanLieAlgebra::is_lorentzian(const Tolerance& tol) const {
  Signature s = signature(tol);
  return s.q == 1 && s.p + 1 == dim();
}

bool PseudoEuclideanLieAlgebra::is_euclidean(const Tolerance& tol) const {
  return signature(tol).p == dim();
}

PseudoEuclideanLieAlgebra PseudoEuclideanLieAlgebra::to_backend(Backend b) const {
  return PseudoEuclideanLieAlgebra(alg_.to_backend(b), BilinearForm(G().to_backend(b)));
}

Vector trace_vector_H(const PseudoEuclideanLieAlgebra& g) {
  const std::size_t n = g.dim();
  Matrix t(n, 1, g.backend());
  for (std::size_t i = 0; i < n; ++i) t(i, 0) = g.alg().ad_basis(i).trace();
  return (g.metric().inverse() * t).column(0);
}

PseudoEuclideanLieAlgebra direct_sum(const PseudoEuclideanLieAlgebra& g1,
                                     const PseudoEuclideanLieAlgebra& g2) {
  if (g1.dim() == 0) return g2;
  if (g2.dim() == 0) return g1;
  if (g1.backend() != g2.backend()) fail(ErrorCode::BackendMismatch, "direct sum of mixed backends");
  const std::size_t n1 = g1.dim(), n2 = g2.dim(), n = n1 + n2;
  const Backend b = g1.backend();
  std::vector<std::string> names = g1.alg().names();
  std::set<std::string> used(names.begin(), names.end());
  for (const auto& s : g2.alg().names()) {
    std::string name = s;
    while (used.count(name)) name += "'";
    used.insert(name);
    names.push_back(name);
  }
  LieAlgebra alg(names, b);
  Matrix G(n, n, b);
  auto embed = [&](const Vector& v, std::size_t off) {
    Vector r = zero_vector(n, b);
    for (std::size_t k = 0; k < v.size(); ++k) r[off + k] = v[k];
    return r;
  };
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = i + 1; j < n1; ++j) alg.set_bracket(i, j, embed(g1.alg().structure(i, j), 0));
    for (std::size_t j = 0; j < n1; ++j) G(i, j) = g1.G()(i, j);
  }
  for (std::size_t i = 0; i < n2; ++i) {
    for (std::size_t j = i + 1; j < n2; ++j)
      alg.set_bracket(n1 + i, n1 + j, embed(g2.alg().structure(i, j), n1));
    for (std::size_t j = 0; j < n2; ++j) G(n1 + i, n1 + j) = g2.G()(i, j);
  }
  return PseudoEuclideanLieAlgebra(alg, BilinearForm(G));
}

}  // namespace lcz
