#pragma once

#include <array>
#include <string>
#include <vector>

#include "lcz/decomposition.hpp"
#include "lcz/geometry.hpp"

namespace lcz {

// Defining: <L_u v,Aw> + <L_u w,Av> = <L_v u,Aw> + <L_v w,Au>.
// Bracket:  the same condition rewritten with brackets only (no L).
enum class Formulation { Defining, Bracket };

const char* formulation_name(Formulation f);

struct CodazziReport {
  bool is_codazzi = false;
  Scalar defect;
  std::array<std::size_t, 3> worst_triple{0, 0, 0};
  Formulation formulation = Formulation::Defining;
};

// Throws NotSelfAdjoint unless GA is symmetric.
void require_self_adjoint(const PseudoEuclideanLieAlgebra& g, const Matrix& A, const Tolerance& tol = {});

CodazziReport codazzi_defect(const PseudoEuclideanLieAlgebra& g, const Matrix& A, const Tolerance& tol = {});
CodazziReport codazzi_defect(const PseudoEuclideanLieAlgebra& g, const LeviCivita& lc, const Matrix& A,
                             const Tolerance& tol = {});
CodazziReport codazzi_defect_bracket(const PseudoEuclideanLieAlgebra& g, const Matrix& A,
                                     const Tolerance& tol = {});
CodazziReport has_harmonic_curvature(const PseudoEuclideanLieAlgebra& g, const Tolerance& tol = {});

struct ConditionItem {
  std::string key;        // "item1", "item4", ...
  bool pass = true;
  Scalar residual;        // largest equation residual in the item
  std::size_t equations = 0;
};

struct ConditionReport {
  OperatorType type = OperatorType::Diag;
  bool solved = false;
  std::vector<ConditionItem> items;
  bool overall = true;
};

// Raw or solved condition system for the decomposition's type, evaluated over
// the stored block bases. Throws BadDecomposition for an inconsistent D.
ConditionReport check_type_conditions(const PseudoEuclideanLieAlgebra& g, const SplitDecomposition& d,
                                      bool solved, const Tolerance& tol = {});

}  // namespace lcz
