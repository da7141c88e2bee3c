#pragma once

#include <random>
#include <string>
#include <vector>

#include "lcz/codazzi.hpp"
#include "lcz/geometry.hpp"

namespace lcz {

// Invariant checks shared by the self-test runner, the unit tests and the
// acceptance driver. Exact algebras are held to exact zero.
struct CheckResult {
  bool ok = true;
  std::string detail;
};

// Torsion-free and metric-compatible.
CheckResult check_levi_civita(const PseudoEuclideanLieAlgebra& g, const Tolerance& tol = {});
// K(u,v)w + K(v,w)u + K(w,u)v = 0 over basis triples; float bound is absolute.
CheckResult check_bianchi(const PseudoEuclideanLieAlgebra& g, double abs_tol = 1e-10);
// ricci_operator against ricci_structural, entrywise.
CheckResult check_dual_ricci(const PseudoEuclideanLieAlgebra& g, double abs_tol = 1e-9);
// Einstein => Ricci-parallel => harmonic.
CheckResult check_implication_chain(const PseudoEuclideanLieAlgebra& g, const Tolerance& tol = {});
// Both Codazzi formulations agree on every operator.
CheckResult check_formulations(const PseudoEuclideanLieAlgebra& g, const std::vector<Matrix>& ops,
                               const Tolerance& tol = {});

// G^{-1} S with S symmetric: small integers (exact) or uniform in [-1,1] (float).
Matrix random_self_adjoint(const BilinearForm& G, std::mt19937_64& rng);

// Ric, 0, Id, -2 Id, then `random` operators Ric + small self-adjoint perturbations.
std::vector<Matrix> formulation_operators(const PseudoEuclideanLieAlgebra& g, std::size_t random,
                                          std::mt19937_64& rng);

}  // namespace lcz
