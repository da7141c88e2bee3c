#include "lcz/geometry.hpp"

#include <cmath>

namespace lcz {

Matrix LeviCivita::apply(const Vector& u) const {
  if (u.size() != L.size()) fail(ErrorCode::DimensionMismatch, "Levi-Civita operand");
  const std::size_t n = L.size();
  Backend b = n ? L[0].backend() : Backend::Exact;
  Matrix m(n, n, b);
  for (std::size_t i = 0; i < n; ++i)
    if (!u[i].is_zero()) m += u[i] * L[i];
  return m;
}

LeviCivita levi_civita(const PseudoEuclideanLieAlgebra& g) {
  const std::size_t n = g.dim();
  const Backend b = g.backend();
  const LieAlgebra& a = g.alg();
  const Matrix& G = g.G();
  const Matrix& Gi = g.metric().inverse();
  // cb[i][j][w] = <[b_i,b_j], b_w>
  std::vector<std::vector<Vector>> cb(n, std::vector<Vector>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cb[i][j] = G * a.structure(i, j);  // G symmetric
  const Scalar half = Scalar::ratio(1, 2, b);
  LeviCivita lc;
  lc.L.assign(n, Matrix(n, n, b));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector rhs = zero_vector(n, b);
      for (std::size_t w = 0; w < n; ++w) rhs[w] = half * (cb[i][j][w] + cb[w][i][j] + cb[w][j][i]);
      lc.L[i].set_column(j, Gi * rhs);
    }
  return lc;
}

Matrix curvature(const PseudoEuclideanLieAlgebra& g, const LeviCivita& lc, const Vector& u,
                 const Vector& v) {
  Matrix Lu = lc.apply(u), Lv = lc.apply(v);
  return lc.apply(g.alg().bracket(u, v)) - commutator(Lu, Lv);
}

namespace {

RicciData finish(const PseudoEuclideanLieAlgebra& g, Matrix ric) {
  RicciData r;
  r.Ric = g.metric().inverse() * ric;
  r.ric = std::move(ric);
  r.scalar_curv = r.Ric.trace();
  return r;
}

}  // namespace

RicciData ricci_operator(const PseudoEuclideanLieAlgebra& g, const LeviCivita& lc) {
  const std::size_t n = g.dim();
  const Backend b = g.backend();
  Matrix ric(n, n, b);
  for (std::size_t i = 0; i < n; ++i) {
    Vector bi = unit_vector(n, i, b);
    for (std::size_t k = 0; k < n; ++k) {
      Matrix K = curvature(g, lc, bi, unit_vector(n, k, b));
      for (std::size_t j = 0; j < n; ++j) ric(i, j) += K(k, j);
    }
  }
  return finish(g, std::move(ric));
}

RicciData ricci_operator(const PseudoEuclideanLieAlgebra& g) {
  return ricci_operator(g, levi_civita(g));
}

RicciData ricci_structural(const PseudoEuclideanLieAlgebra& g, const Tolerance& tol) {
  require_lie_algebra(g.alg(), tol);
  const std::size_t n = g.dim();
  const Backend b = g.backend();
  const LieAlgebra& a = g.alg();
  std::vector<Matrix> ad, adstar, J;
  for (std::size_t i = 0; i < n; ++i) {
    ad.push_back(a.ad_basis(i));
    adstar.push_back(adjoint_wrt_form(ad.back(), g.metric()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    Matrix Ji(n, n, b);
    for (std::size_t j = 0; j < n; ++j) Ji.set_column(j, adstar[j].column(i));
    J.push_back(std::move(Ji));
  }
  Vector H = trace_vector_H(g);
  const Scalar half = Scalar::ratio(1, 2, b), quarter = Scalar::ratio(1, 4, b);
  Matrix ric(n, n, b);
  for (std::size_t i = 0; i < n; ++i) {
    Vector bi = unit_vector(n, i, b);
    for (std::size_t j = 0; j < n; ++j) {
      Vector bj = unit_vector(n, j, b);
      Scalar s = -half * (ad[i] * ad[j]).trace() - half * (adstar[i] * ad[j]).trace() -
                 quarter * (J[i] * J[j]).trace() -
                 half * (g.ip(a.bracket(H, bi), bj) + g.ip(a.bracket(H, bj), bi));
      ric(i, j) = s;
    }
  }
  return finish(g, std::move(ric));
}

Matrix nabla_ric(const LeviCivita& lc, const RicciData& r, const Vector& u) {
  return commutator(lc.apply(u), r.Ric);
}

ParallelReport ricci_parallel_report(const PseudoEuclideanLieAlgebra& g, const Tolerance& tol) {
  const std::size_t n = g.dim();
  const Backend b = g.backend();
  LeviCivita lc = levi_civita(g);
  RicciData r = ricci_operator(g, lc);
  ParallelReport rep;
  rep.defect = Scalar::zero(b);
  for (std::size_t u = 0; u < n; ++u) {
    Matrix D = nabla_ric(lc, r, unit_vector(n, u, b));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rep.defect < D(i, j).abs()) {
          rep.defect = D(i, j).abs();
          rep.worst = u;
        }
  }
  rep.parallel = b == Backend::Exact ? rep.defect.is_zero()
                                     : rep.defect.to_double() <= tol.rel * (1.0 + r.Ric.norm_inf());
  return rep;
}

bool is_ricci_parallel(const PseudoEuclideanLieAlgebra& g, const Tolerance& tol) {
  return ricci_parallel_report(g, tol).parallel;
}

std::optional<Scalar> einstein_constant(const Matrix& Ric, const Tolerance& tol) {
  const std::size_t n = Ric.rows();
  if (n == 0) return std::nullopt;
  const Backend b = Ric.backend();
  Scalar alpha = Scalar::zero(b);
  for (std::size_t i = 0; i < n; ++i) alpha += Ric(i, i);
  alpha /= Scalar::integer(static_cast<long>(n), b);
  const double cut = tol.rel * (1.0 + Ric.norm_inf());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar d = i == j ? Ric(i, j) - alpha : Ric(i, j);
      if (b == Backend::Exact ? !d.is_zero() : std::fabs(d.to_double()) > cut) return std::nullopt;
    }
  return alpha;
}

std::optional<Scalar> is_einstein(const PseudoEuclideanLieAlgebra& g, const Tolerance& tol) {
  return einstein_constant(ricci_operator(g).Ric, tol);
}

}  // namespace lcz
