#include "lcz/forms.hpp"

#include <cmath>

namespace lcz {

BilinearForm::BilinearForm(Matrix G, const Tolerance& tol) : G_(std::move(G)) {
  if (!G_.square()) fail(ErrorCode::DimensionMismatch, "bilinear form matrix must be square");
  const double scale = G_.max_abs();
  for (std::size_t i = 0; i < G_.rows(); ++i)
    for (std::size_t j = i + 1; j < G_.cols(); ++j)
      if (!negligible(G_(i, j) - G_(j, i), scale, tol))
        fail(ErrorCode::BadParam, "bilinear form matrix is not symmetric");
}

bool BilinearForm::nondegenerate(const Tolerance& tol) const {
  Signature s = signature_of_form(*this, tol);
  return s.p + s.q == dim();
}

const Matrix& BilinearForm::inverse() const {
  if (!have_inv_) {
    inv_ = lcz::inverse(G_);
    have_inv_ = true;
  }
  return inv_;
}

Signature signature_of_form(const BilinearForm& G, const Tolerance& tol) {
  return signature_of_form(G.matrix(), tol);
}

Signature signature_of_form(const Matrix& Gm, const Tolerance& tol) {
  Matrix a = Gm;
  const std::size_t n = a.rows();
  const bool exact = a.backend() == Backend::Exact;
  const double cut = tol.rel * std::max(1e-300, Gm.max_abs());
  auto small = [&](const Scalar& x) { return exact ? x.is_zero() : std::fabs(x.to_double()) <= cut; };
  Signature sig;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    // Diagonal pivot: first nonzero (exact) or largest (float).
    std::size_t piv = n;
    double best = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || small(a(i, i))) continue;
      double v = std::fabs(a(i, i).to_double());
      if (exact) {
        piv = i;
        break;
      }
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (piv == n) {
      // All remaining diagonal entries vanish: use an off-diagonal entry
      // x_i <- x_i + x_j to create a nonzero diagonal 2*a(i,j).
      std::size_t pi = n, pj = n;
      best = 0;
      for (std::size_t i = 0; i < n && !(exact && pi < n); ++i) {
        if (done[i]) continue;
        for (std::size_t j = i + 1; j < n; ++j) {
          if (done[j] || small(a(i, j))) continue;
          double v = std::fabs(a(i, j).to_double());
          if (exact || v > best) {
            best = v;
            pi = i;
            pj = j;
            if (exact) break;
          }
        }
      }
      if (pi == n) break;  // remaining block is zero: degenerate
      for (std::size_t k = 0; k < n; ++k) a(pi, k) += a(pj, k);
      for (std::size_t k = 0; k < n; ++k) a(k, pi) += a(k, pj);
      piv = pi;
    }
    Scalar d = a(piv, piv);
    if (d.sign() > 0) ++sig.p;
    else ++sig.q;
    done[piv] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || a(i, piv).is_zero()) continue;
      Scalar f = a(i, piv) / d;
      for (std::size_t k = 0; k < n; ++k) a(i, k) -= f * a(piv, k);
      for (std::size_t k = 0; k < n; ++k) a(k, i) = a(i, k);
    }
  }
  return sig;
}

Matrix adjoint_wrt_form(const Matrix& M, const BilinearForm& G) {
  if (M.rows() != G.dim() || M.cols() != G.dim()) fail(ErrorCode::DimensionMismatch, "adjoint");
  return G.inverse() * M.transpose() * G.matrix();
}

std::vector<Scalar> char_poly(const Matrix& M) {
  // Faddeev-LeVerrier: N_k = M N_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(M N_k)/k.
  if (!M.square()) fail(ErrorCode::DimensionMismatch, "characteristic polynomial of a non-square matrix");
  const std::size_t n = M.rows();
  const Backend b = M.backend();
  std::vector<Scalar> c(n + 1, Scalar::zero(b));
  c[n] = Scalar::one(b);
  Matrix N = Matrix::identity(n, b);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix MN = M * N;
    c[n - k] = -MN.trace() / Scalar::integer(static_cast<long>(k), b);
    N = MN;
    for (std::size_t i = 0; i < n; ++i) N(i, i) += c[n - k];
  }
  return c;
}

}  // namespace lcz
