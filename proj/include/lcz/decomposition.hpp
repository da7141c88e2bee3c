#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcz/liealg.hpp"

namespace lcz {

enum class OperatorType { Diag, ZZbar, A2, A3 };

const char* operator_type_name(OperatorType t);

// A restricted to h_i is alpha * Id.
struct HBlock {
  Scalar alpha;
  std::vector<Vector> basis;
};

// Null pair (e, ebar) with <e,ebar> = 1, plus f for A3.
//   ZZbar: A e = a e - b ebar, A ebar = b e + a ebar
//   A2:    A e = a e,          A ebar = s e + a ebar   (s = a2_sign)
//   A3:    A e = a e, A f = e + a f, A ebar = f + a ebar
struct LPart {
  OperatorType type = OperatorType::ZZbar;
  Vector e, ebar, f;
  Scalar a, b;
  int a2_sign = 1;
};

struct SplitDecomposition {
  std::vector<HBlock> h_blocks;
  std::optional<LPart> l_part;  // empty for Diag

  OperatorType type() const { return l_part ? l_part->type : OperatorType::Diag; }
  std::size_t dim() const;
  // Columns: block vectors in order, then e, ebar (ZZbar/A2) or e, f, ebar (A3).
  Matrix basis_matrix(Backend b) const;
  // The operator the decomposition describes, in working coordinates.
  Matrix operator_matrix(Backend b) const;
  SplitDecomposition to_backend(Backend b) const;
};

// Orthogonality, null-pair normalization, dimension count, distinct alphas,
// independence. Throws BadDecomposition.
void validate_decomposition(const PseudoEuclideanLieAlgebra& g, const SplitDecomposition& d,
                            const Tolerance& tol = {});

}  // namespace lcz
