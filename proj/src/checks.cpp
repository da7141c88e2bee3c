#include "lcz/checks.hpp"

#include <sstream>

namespace lcz {

namespace {

bool small(const Scalar& x, double bound) {
  return x.is_exact() ? x.is_zero() : std::fabs(x.to_double()) <= bound;
}

std::string idx(std::size_t i, std::size_t j, std::size_t k) {
  std::ostringstream os;
  os << "(" << i << "," << j << "," << k << ")";
  return os.str();
}

}  // namespace

CheckResult check_levi_civita(const PseudoEuclideanLieAlgebra& g, const Tolerance& tol) {
  const std::size_t n = g.dim();
  const Backend b = g.backend();
  LeviCivita lc = levi_civita(g);
  double scale = 1;
  for (const auto& L : lc.L) scale = std::max(scale, L.max_abs() * std::max(1.0, g.G().max_abs()));
  const double bound = tol.abs + tol.rel * scale;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix GL = g.G() * lc.L[i];
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (!small(GL(r, c) + GL(c, r), bound)) return {false, "L_" + std::to_string(i) + " is not skew"};
    for (std::size_t j = 0; j < n; ++j) {
      Vector t = lc.L[i] * unit_vector(n, j, b) - lc.L[j] * unit_vector(n, i, b) - g.alg().structure(i, j);
      for (const auto& x : t)
        if (!small(x, bound)) return {false, "torsion at (" + std::to_string(i) + "," + std::to_string(j) + ")"};
    }
  }
  return {};
}

CheckResult check_bianchi(const PseudoEuclideanLieAlgebra& g, double abs_tol) {
  const std::size_t n = g.dim();
  const Backend b = g.backend();
  LeviCivita lc = levi_civita(g);
  std::vector<Vector> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(unit_vector(n, i, b));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector s = curvature(g, lc, e[i], e[j]) * e[k] + curvature(g, lc, e[j], e[k]) * e[i] +
                   curvature(g, lc, e[k], e[i]) * e[j];
        for (const auto& x : s)
          if (!small(x, abs_tol)) return {false, "Bianchi fails at " + idx(i, j, k)};
      }
  return {};
}

CheckResult check_dual_ricci(const PseudoEuclideanLieAlgebra& g, double abs_tol) {
  RicciData a = ricci_operator(g);
  RicciData s = ricci_structural(g);
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!small(a.Ric(i, j) - s.Ric(i, j), abs_tol))
        return {false, "Ricci formulas differ at (" + std::to_string(i) + "," + std::to_string(j) + "): " +
                           a.Ric(i, j).str() + " vs " + s.Ric(i, j).str()};
  return {};
}

CheckResult check_implication_chain(const PseudoEuclideanLieAlgebra& g, const Tolerance& tol) {
  const bool ein = is_einstein(g, tol).has_value();
  const bool par = is_ricci_parallel(g, tol);
  const bool har = has_harmonic_curvature(g, tol).is_codazzi;
  if (ein && !par) return {false, "Einstein but not Ricci-parallel"};
  if (par && !har) return {false, "Ricci-parallel but not harmonic"};
  return {};
}

CheckResult check_formulations(const PseudoEuclideanLieAlgebra& g, const std::vector<Matrix>& ops,
                               const Tolerance& tol) {
  for (std::size_t t = 0; t < ops.size(); ++t) {
    CodazziReport d = codazzi_defect(g, ops[t], tol);
    CodazziReport p = codazzi_defect_bracket(g, ops[t], tol);
    if (d.is_codazzi != p.is_codazzi)
      return {false, "operator " + std::to_string(t) + ": defining says " + (d.is_codazzi ? "yes" : "no") +
                         " (" + d.defect.str() + "), bracket form says " + (p.is_codazzi ? "yes" : "no") + " (" +
                         p.defect.str() + ")"};
  }
  return {};
}

Matrix random_self_adjoint(const BilinearForm& G, std::mt19937_64& rng) {
  const std::size_t n = G.dim();
  const Backend b = G.backend();
  Matrix S(n, n, b);
  std::uniform_int_distribution<long> ik(-3, 3);
  std::uniform_real_distribution<double> rk(-1.0, 1.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Scalar v = b == Backend::Exact ? Scalar::integer(ik(rng), b) : Scalar(rk(rng));
      S(i, j) = v;
      S(j, i) = v;
    }
  return G.inverse() * S;
}

std::vector<Matrix> formulation_operators(const PseudoEuclideanLieAlgebra& g, std::size_t random,
                                          std::mt19937_64& rng) {
  const Backend b = g.backend();
  const std::size_t n = g.dim();
  const Matrix Ric = ricci_operator(g).Ric;
  const Matrix I = Matrix::identity(n, b);
  std::vector<Matrix> ops{Ric, Scalar::zero(b) * I, I, Scalar::integer(-2, b) * I};
  std::uniform_int_distribution<long> ik(-3, 3);
  for (std::size_t t = 0; t < random; ++t) {
    if (t % 2 == 0) {
      // generic perturbation; almost never Codazzi
      ops.push_back(Ric + Scalar::ratio(1, 10, b) * random_self_adjoint(g.metric(), rng));
    } else {
      // affine in Ric; Codazzi exactly when Ric is
      long c = ik(rng);
      if (c == 0) c = 1;
      ops.push_back(Scalar::integer(c, b) * Ric + Scalar::integer(ik(rng), b) * I);
    }
  }
  return ops;
}

}  // namespace lcz
