#pragma once

#include <string>
#include <vector>

#include "lcz/decomposition.hpp"
#include "lcz/liealg.hpp"

namespace lcz {

struct FamilyResult {
  PseudoEuclideanLieAlgebra g;
  SplitDecomposition d;  // expected Ricci decomposition, same backend as g
};

// h Euclidean, X in h coordinates.
struct A2FamilySpec {
  PseudoEuclideanLieAlgebra h;
  Vector X;
  Scalar alpha;
};

// C acts on h coordinates. Y and T are derived from X, U and the Einstein
// constant of h.
struct A3FamilySpec {
  PseudoEuclideanLieAlgebra h;
  Vector X;
  Vector U;
  Matrix C;
};

struct ZZCoreParams {
  double alpha = -1;
  int epsilon = 1;
};

// Basis (X1,X2,X3); exact when alpha is exact.
PseudoEuclideanLieAlgebra sl2_harmonic(const Scalar& alpha);

// Basis (e, ebar, f); float.
PseudoEuclideanLieAlgebra zz_core(const ZZCoreParams& p);
// Columns f1, f2, f3 (in e, ebar, f coordinates) satisfying the sl2 table
// [f1,f2]=2f3, [f3,f1]=2f2, [f3,f2]=2f1.
Matrix zz_core_sl2_frame(const ZZCoreParams& p);
// Automorphism of sl2 in (X1,X2,X3) relating the two epsilon frames' metrics.
Matrix sl2_automorphism_Q();

// sl2_harmonic(alpha) + h with h Euclidean alpha-Einstein. Always float (the
// null pair needs square roots).
FamilyResult build_zz_product(const Scalar& alpha, const PseudoEuclideanLieAlgebra& h);

// Basis: h names, then e, eb.
FamilyResult build_a2(const A2FamilySpec& spec);
// Basis: h names, then e, f, eb.
FamilyResult build_a3(const A3FamilySpec& spec);

struct ExampleInfo {
  int sign = 1;          // requested sign of the root of a^2 + a - c = 0
  int root_used = 1;     // sign actually used
  double a = 0;
  double l = 0;
  double alpha = 0;
  std::string note;
};

// 5-d (dim h = 2) and 6-d (dim h = 3) instances with X = U = aH.
FamilyResult example_5d(int sign, ExampleInfo* info = nullptr);
FamilyResult example_6d(int sign, ExampleInfo* info = nullptr);
// The 5-d table with the e-coefficient of [eb,H] uncorrected,
// (2l-1)a/l instead of (2l-3)a/l. Used to show that value fails.
PseudoEuclideanLieAlgebra example_5d_uncorrected_table(int sign);

struct CatalogEntry {
  std::string name;
  PseudoEuclideanLieAlgebra g;
};
std::vector<CatalogEntry> fixture_catalog();

}  // namespace lcz
