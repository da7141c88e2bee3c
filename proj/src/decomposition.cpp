#include "lcz/decomposition.hpp"

#include <algorithm>

namespace lcz {

const char* operator_type_name(OperatorType t) {
  switch (t) {
    case OperatorType::Diag: return "Diag";
    case OperatorType::ZZbar: return "ZZbar";
    case OperatorType::A2: return "A2";
    case OperatorType::A3: return "A3";
  }
  return "?";
}

std::size_t SplitDecomposition::dim() const {
  std::size_t n = 0;
  for (const auto& h : h_blocks) n += h.basis.size();
  if (l_part) n += l_part->type == OperatorType::A3 ? 3 : 2;
  return n;
}

namespace {

std::vector<Vector> l_vectors(const LPart& l) {
  if (l.type == OperatorType::A3) return {l.e, l.f, l.ebar};
  return {l.e, l.ebar};
}

}  // namespace

Matrix SplitDecomposition::basis_matrix(Backend b) const {
  std::vector<Vector> cols;
  for (const auto& h : h_blocks)
    for (const auto& v : h.basis) cols.push_back(lcz::to_backend(v, b));
  if (l_part)
    for (const auto& v : l_vectors(*l_part)) cols.push_back(lcz::to_backend(v, b));
  return Matrix::from_columns(cols, dim(), b);
}

Matrix SplitDecomposition::operator_matrix(Backend b) const {
  const std::size_t n = dim();
  Matrix C(n, n, b);
  std::size_t k = 0;
  for (const auto& h : h_blocks)
    for (std::size_t t = 0; t < h.basis.size(); ++t, ++k) C(k, k) = h.alpha.to_backend(b);
  if (l_part) {
    const Scalar a = l_part->a.to_backend(b), one = Scalar::one(b);
    switch (l_part->type) {
      case OperatorType::ZZbar: {
        const Scalar bb = l_part->b.to_backend(b);
        C(k, k) = a;
        C(k + 1, k) = -bb;
        C(k, k + 1) = bb;
        C(k + 1, k + 1) = a;
        break;
      }
      case OperatorType::A2:
        C(k, k) = a;
        C(k, k + 1) = Scalar::integer(l_part->a2_sign, b);
        C(k + 1, k + 1) = a;
        break;
      case OperatorType::A3:
        C(k, k) = a;
        C(k, k + 1) = one;
        C(k + 1, k + 1) = a;
        C(k + 1, k + 2) = one;
        C(k + 2, k + 2) = a;
        break;
      case OperatorType::Diag: break;
    }
  }
  Matrix B = basis_matrix(b);
  return B * C * inverse(B);
}

SplitDecomposition SplitDecomposition::to_backend(Backend b) const {
  SplitDecomposition out;
  for (const auto& h : h_blocks) {
    HBlock nb{h.alpha.to_backend(b), {}};
    for (const auto& v : h.basis) nb.basis.push_back(lcz::to_backend(v, b));
    out.h_blocks.push_back(std::move(nb));
  }
  if (l_part) {
    LPart l = *l_part;
    l.e = lcz::to_backend(l.e, b);
    l.ebar = lcz::to_backend(l.ebar, b);
    if (!l.f.empty()) l.f = lcz::to_backend(l.f, b);
    l.a = l.a.to_backend(b);
    l.b = l.b.to_backend(b);
    out.l_part = l;
  }
  return out;
}

void validate_decomposition(const PseudoEuclideanLieAlgebra& g, const SplitDecomposition& d,
                            const Tolerance& tol) {
  const std::size_t n = g.dim();
  const Backend b = g.backend();
  auto bad = [](const std::string& why) { fail(ErrorCode::BadDecomposition, why); };
  if (d.dim() != n) bad("block dimensions do not sum to the algebra dimension");
  double vmax = 0;
  auto check_vec = [&](const Vector& v) {
    if (v.size() != n) bad("vector length differs from the algebra dimension");
    for (const auto& x : v)
      if (x.backend() != b) fail(ErrorCode::BackendMismatch, "decomposition backend differs from the algebra");
    vmax = std::max(vmax, max_abs(v));
  };
  for (const auto& h : d.h_blocks) {
    if (h.basis.empty()) bad("empty block");
    if (h.alpha.backend() != b) fail(ErrorCode::BackendMismatch, "block eigenvalue backend");
    for (const auto& v : h.basis) check_vec(v);
  }
  std::vector<Vector> lv;
  if (d.l_part) {
    const LPart& l = *d.l_part;
    if (l.type == OperatorType::Diag) bad("Diag decompositions carry no null pair");
    lv = l_vectors(l);
    for (const auto& v : lv) check_vec(v);
    if (l.a.backend() != b) fail(ErrorCode::BackendMismatch, "eigenvalue backend");
    if (l.type == OperatorType::ZZbar && (l.b.backend() != b || l.b.is_zero())) bad("ZZbar requires b != 0");
    if (l.type == OperatorType::A2 && l.a2_sign != 1 && l.a2_sign != -1) bad("a2_sign must be +1 or -1");
  }
  const double scale = g.G().max_abs() * vmax * vmax;
  auto zero = [&](const Scalar& x) { return negligible(x, scale, tol); };
  const Scalar one = Scalar::one(b);
  for (std::size_t i = 0; i < d.h_blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < d.h_blocks.size(); ++j) {
      if (zero(d.h_blocks[i].alpha - d.h_blocks[j].alpha)) bad("two blocks share an eigenvalue");
      for (const auto& u : d.h_blocks[i].basis)
        for (const auto& w : d.h_blocks[j].basis)
          if (!zero(g.ip(u, w))) bad("blocks are not orthogonal");
    }
    for (const auto& u : d.h_blocks[i].basis)
      for (const auto& w : lv)
        if (!zero(g.ip(u, w))) bad("a block is not orthogonal to the null pair");
  }
  if (d.l_part) {
    const LPart& l = *d.l_part;
    if (!zero(g.ip(l.e, l.e)) || !zero(g.ip(l.ebar, l.ebar))) bad("e and ebar must be null");
    if (!zero(g.ip(l.e, l.ebar) - one)) bad("<e,ebar> must be 1");
    if (l.type == OperatorType::A3) {
      if (!zero(g.ip(l.f, l.f) - one)) bad("<f,f> must be 1");
      if (!zero(g.ip(l.e, l.f)) || !zero(g.ip(l.ebar, l.f))) bad("f must be orthogonal to e and ebar");
    }
  }
  if (rank(d.basis_matrix(b), 1e-10) != n) bad("decomposition vectors are linearly dependent");
}

}  // namespace lcz
