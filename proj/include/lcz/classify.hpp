#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lcz/decomposition.hpp"
#include "lcz/liealg.hpp"

namespace lcz {

struct ClassifyOptions {
  Tolerance tol;
  // Float eigenvalues closer than tight_cluster*(1+|A|) are merged. Up to
  // cluster*(1+|A|) apart they are merged only when their eigenvectors are
  // nearly parallel (sine <= parallel_sine), the trace of a Jordan block split
  // by rounding. Nearly parallel eigenvectors up to 10x cluster apart, or
  // neither parallel nor well separated within cluster: DefectiveAmbiguity.
  double tight_cluster = 1e-7;
  double cluster = 1e-4;
  double parallel_sine = 1e-3;
  // Singular values below rank_cut*max(1,|A|) count as zero.
  double rank_cut = 1e-8;
};

// Eigen-data are exact under the exact backend. The basis change needs square
// roots, so P, its inverse and the canonical pair are always binary64.
struct OperatorClassification {
  OperatorType type = OperatorType::Diag;
  Backend backend = Backend::Float;
  std::vector<Scalar> alphas;          // ascending, with multiplicity, L block excluded
  std::optional<Scalar> a;             // ZZbar / A2 / A3
  std::optional<Scalar> b_squared;     // ZZbar
  double b = 0;                        // ZZbar, > 0
  int a2_sign = 0;                     // A2: +1 or -1 (an isometry invariant)
  Matrix P;                            // working coordinates -> canonical coordinates
  Matrix basis;                        // columns: canonical basis vectors, P^{-1}
  Matrix canonical_A;                  // P A P^{-1}
  Matrix canonical_G;                  // P^{-T} G P^{-1}
  std::vector<Scalar> column_alpha;    // eigenvalue of each h column of basis
};

OperatorClassification classify_symmetric_operator(const Matrix& A, const BilinearForm& G,
                                                   const ClassifyOptions& opt = {});

// Float decomposition built from the columns of C.basis.
SplitDecomposition decomposition_from_classification(const OperatorClassification& C,
                                                     const PseudoEuclideanLieAlgebra& g);

std::pair<OperatorClassification, SplitDecomposition> ricci_type(const PseudoEuclideanLieAlgebra& g,
                                                                  const ClassifyOptions& opt = {});

}  // namespace lcz
