#pragma once

#include <optional>
#include <vector>

#include "lcz/liealg.hpp"

namespace lcz {

// L[i] is the matrix of L_{b_i}: v -> L_{b_i} v.
struct LeviCivita {
  std::vector<Matrix> L;
  Matrix apply(const Vector& u) const;  // matrix of L_u
};

struct RicciData {
  Matrix ric;   // ric(b_i, b_j)
  Matrix Ric;   // Ricci operator, G Ric = ric
  Scalar scalar_curv;
};

LeviCivita levi_civita(const PseudoEuclideanLieAlgebra& g);

// K(u,v) = L_[u,v] - [L_u, L_v].
Matrix curvature(const PseudoEuclideanLieAlgebra& g, const LeviCivita& lc, const Vector& u,
                 const Vector& v);

// ric(u,v) = tr(w -> K(u,w)v).
RicciData ricci_operator(const PseudoEuclideanLieAlgebra& g, const LeviCivita& lc);
RicciData ricci_operator(const PseudoEuclideanLieAlgebra& g);

// Trace formula in terms of ad, ad*, J_u v = ad_v* u and the trace vector H.
// Requires the Jacobi identity.
RicciData ricci_structural(const PseudoEuclideanLieAlgebra& g, const Tolerance& tol = {});

// (nabla_u Ric) = L_u Ric - Ric L_u.
Matrix nabla_ric(const LeviCivita& lc, const RicciData& r, const Vector& u);

struct ParallelReport {
  bool parallel = false;
  Scalar defect;            // max entry over basis directions
  std::size_t worst = 0;    // basis index attaining the defect
};
ParallelReport ricci_parallel_report(const PseudoEuclideanLieAlgebra& g, const Tolerance& tol = {});
bool is_ricci_parallel(const PseudoEuclideanLieAlgebra& g, const Tolerance& tol = {});

// Ric = alpha Id; float threshold rel*(1+|Ric|).
std::optional<Scalar> is_einstein(const PseudoEuclideanLieAlgebra& g, const Tolerance& tol = {});
std::optional<Scalar> einstein_constant(const Matrix& Ric, const Tolerance& tol = {});

}  // namespace lcz
