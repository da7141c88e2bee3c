#include "lcz/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace lcz {

namespace {

void check_same(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(ErrorCode::DimensionMismatch, std::string(what) + ": shape mismatch");
  if (a.backend() != b.backend())
    fail(ErrorCode::BackendMismatch, std::string(what) + ": backend mismatch");
}

}  // namespace

Vector zero_vector(std::size_t n, Backend b) { return Vector(n, Scalar::zero(b)); }

Vector unit_vector(std::size_t n, std::size_t i, Backend b) {
  Vector v = zero_vector(n, b);
  v[i] = Scalar::one(b);
  return v;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) fail(ErrorCode::DimensionMismatch, "vector sum");
  Vector r(a);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) fail(ErrorCode::DimensionMismatch, "vector difference");
  Vector r(a);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

Vector operator*(const Scalar& s, const Vector& v) {
  Vector r(v);
  for (auto& x : r) x = s * x;
  return r;
}

double max_abs(const Vector& v) {
  double m = 0;
  for (const auto& x : v) m = std::max(m, std::fabs(x.to_double()));
  return m;
}

Vector to_backend(const Vector& v, Backend b) {
  Vector r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(x.to_backend(b));
  return r;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, Backend b)
    : r_(rows), c_(cols), b_(b), d_(rows * cols, Scalar::zero(b)) {}

Matrix Matrix::identity(std::size_t n, Backend b) {
  Matrix m(n, n, b);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(b);
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows, Backend b) {
  Matrix m(rows, cols.size(), b);
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
  return m;
}

Matrix Matrix::from_doubles(const std::vector<std::vector<double>>& rows) {
  std::size_t n = rows.size(), c = n ? rows[0].size() : 0;
  Matrix m(n, c, Backend::Float);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != c) fail(ErrorCode::DimensionMismatch, "ragged matrix");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_rationals(const std::vector<std::vector<long>>& rows) {
  std::size_t n = rows.size(), c = n ? rows[0].size() : 0;
  Matrix m(n, c, Backend::Exact);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != c) fail(ErrorCode::DimensionMismatch, "ragged matrix");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(mpq_class(rows[i][j]));
  }
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector v;
  v.reserve(r_);
  for (std::size_t i = 0; i < r_; ++i) v.push_back((*this)(i, j));
  return v;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(d_.begin() + static_cast<long>(i * c_), d_.begin() + static_cast<long>((i + 1) * c_));
}

void Matrix::set_column(std::size_t j, const Vector& v) {
  if (v.size() != r_) fail(ErrorCode::DimensionMismatch, "column length");
  for (std::size_t i = 0; i < r_; ++i) {
    if (v[i].backend() != b_) fail(ErrorCode::BackendMismatch, "column backend");
    (*this)(i, j) = v[i];
  }
}

Matrix Matrix::transpose() const {
  Matrix t(c_, r_, b_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Scalar Matrix::trace() const {
  if (!square()) fail(ErrorCode::DimensionMismatch, "trace of a non-square matrix");
  Scalar s = Scalar::zero(b_);
  for (std::size_t i = 0; i < r_; ++i) s += (*this)(i, i);
  return s;
}

double Matrix::max_abs() const {
  double m = 0;
  for (const auto& x : d_) m = std::max(m, std::fabs(x.to_double()));
  return m;
}

double Matrix::norm_inf() const {
  double m = 0;
  for (std::size_t i = 0; i < r_; ++i) {
    double s = 0;
    for (std::size_t j = 0; j < c_; ++j) s += std::fabs((*this)(i, j).to_double());
    m = std::max(m, s);
  }
  return m;
}

Matrix Matrix::to_backend(Backend b) const {
  Matrix m(r_, c_, b);
  for (std::size_t k = 0; k < d_.size(); ++k) m.d_[k] = d_[k].to_backend(b);
  return m;
}

std::vector<std::vector<double>> Matrix::to_doubles() const {
  std::vector<std::vector<double>> out(r_, std::vector<double>(c_));
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) out[i][j] = (*this)(i, j).to_double();
  return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  check_same(*this, o, "matrix sum");
  for (std::size_t k = 0; k < d_.size(); ++k) d_[k] += o.d_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  check_same(*this, o, "matrix difference");
  for (std::size_t k = 0; k < d_.size(); ++k) d_[k] -= o.d_[k];
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) fail(ErrorCode::DimensionMismatch, "matrix product");
  if (a.backend() != b.backend()) fail(ErrorCode::BackendMismatch, "matrix product");
  Matrix m(a.rows(), b.cols(), a.backend());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) m(i, j) += x * b(k, j);
    }
  return m;
}

Matrix operator*(const Scalar& s, Matrix a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = s * a(i, j);
  return a;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols() != v.size()) fail(ErrorCode::DimensionMismatch, "matrix-vector product");
  Vector r = zero_vector(a.rows(), a.backend());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero() && !v[j].is_zero()) r[i] += a(i, j) * v[j];
  return r;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Scalar dot(const Vector& u, const Vector& v) {
  if (u.size() != v.size()) fail(ErrorCode::DimensionMismatch, "dot product");
  if (u.empty()) return Scalar();
  Scalar s = Scalar::zero(u[0].backend());
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!u[i].is_zero() && !v[i].is_zero()) s += u[i] * v[i];
  return s;
}

Scalar inner(const Matrix& G, const Vector& u, const Vector& v) { return dot(u, G * v); }

Echelon row_reduce(const Matrix& m, double tol) {
  Echelon e{m, {}};
  Matrix& a = e.reduced;
  const bool exact = a.backend() == Backend::Exact;
  const double cut = tol * std::max(1.0, m.max_abs());
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = a.rows();
    if (exact) {
      for (std::size_t i = row; i < a.rows(); ++i)
        if (!a(i, col).is_zero()) {
          piv = i;
          break;
        }
    } else {
      double best = cut;
      for (std::size_t i = row; i < a.rows(); ++i) {
        double v = std::fabs(a(i, col).to_double());
        if (v > best) {
          best = v;
          piv = i;
        }
      }
    }
    if (piv == a.rows()) {
      if (!exact)
        for (std::size_t i = row; i < a.rows(); ++i) a(i, col) = Scalar::zero(a.backend());
      continue;
    }
    if (piv != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(row, j));
    Scalar p = a(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) /= p;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      Scalar f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
      a(i, col) = Scalar::zero(a.backend());
    }
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

std::size_t rank(const Matrix& m, double tol) { return row_reduce(m, tol).pivots.size(); }

std::vector<Vector> null_space(const Matrix& m, double tol) {
  Echelon e = row_reduce(m, tol);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto p : e.pivots) is_piv[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_piv[free]) continue;
    Vector v = unit_vector(m.cols(), free, m.backend());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(v);
  }
  return basis;
}

Scalar determinant(const Matrix& m) {
  if (!m.square()) fail(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  Matrix a = m;
  const std::size_t n = a.rows();
  const bool exact = a.backend() == Backend::Exact;
  Scalar det = Scalar::one(a.backend());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    double best = 0;
    for (std::size_t i = col; i < n; ++i) {
      if (a(i, col).is_zero()) continue;
      if (exact) {
        piv = i;
        break;
      }
      double v = std::fabs(a(i, col).to_double());
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (piv == n) return Scalar::zero(a.backend());
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col).is_zero()) continue;
      Scalar f = a(i, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

Matrix solve(const Matrix& a, const Matrix& b, double tol) {
  if (!a.square() || a.rows() != b.rows()) fail(ErrorCode::DimensionMismatch, "linear solve");
  if (a.backend() != b.backend()) fail(ErrorCode::BackendMismatch, "linear solve");
  const std::size_t n = a.rows();
  Matrix aug(n, n + b.cols(), a.backend());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug(i, n + j) = b(i, j);
  }
  // Only the left block decides singularity.
  Echelon e = row_reduce(aug, tol);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1)
    fail(ErrorCode::DegenerateMetric, "singular matrix in linear solve");
  Matrix x(n, b.cols(), a.backend());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(i, j) = e.reduced(i, n + j);
  return x;
}

Matrix inverse(const Matrix& m, double tol) {
  return solve(m, Matrix::identity(m.rows(), m.backend()), tol);
}

}  // namespace lcz
