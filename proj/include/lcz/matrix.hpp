#pragma once

#include <cstddef>
#include <vector>

#include "lcz/scalar.hpp"

namespace lcz {

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n, Backend b);
Vector unit_vector(std::size_t n, std::size_t i, Backend b);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);
double max_abs(const Vector& v);
Vector to_backend(const Vector& v, Backend b);

// Dense row-major matrix over one backend.
class Matrix {
 public:
  Matrix() : Matrix(0, 0, Backend::Exact) {}
  Matrix(std::size_t rows, std::size_t cols, Backend b);

  static Matrix identity(std::size_t n, Backend b);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows, Backend b);
  static Matrix from_doubles(const std::vector<std::vector<double>>& rows);
  static Matrix from_rationals(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Backend backend() const { return b_; }
  bool square() const { return r_ == c_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return d_[i * c_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }

  Vector column(std::size_t j) const;
  Vector row(std::size_t i) const;
  void set_column(std::size_t j, const Vector& v);

  Matrix transpose() const;
  Scalar trace() const;
  double max_abs() const;   // largest entry magnitude
  double norm_inf() const;  // max row sum
  Matrix to_backend(Backend b) const;
  std::vector<std::vector<double>> to_doubles() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);

 private:
  std::size_t r_, c_;
  Backend b_;
  std::vector<Scalar> d_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& s, Matrix a);
Vector operator*(const Matrix& a, const Vector& v);
Matrix commutator(const Matrix& a, const Matrix& b);

// <u, v>_G = u^T G v; with G omitted, the plain dot product.
Scalar dot(const Vector& u, const Vector& v);
Scalar inner(const Matrix& G, const Vector& u, const Vector& v);

// Gaussian elimination. Float pivots on the largest magnitude and treats
// entries below tol*scale as zero; exact pivots on the first nonzero entry.
struct Echelon {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column per nonzero row
};
Echelon row_reduce(const Matrix& m, double tol = 1e-12);
std::size_t rank(const Matrix& m, double tol = 1e-12);
std::vector<Vector> null_space(const Matrix& m, double tol = 1e-12);
Scalar determinant(const Matrix& m);
// Throws DegenerateMetric when m is singular (the common caller is a metric).
Matrix inverse(const Matrix& m, double tol = 1e-12);
Matrix solve(const Matrix& a, const Matrix& b, double tol = 1e-12);

}  // namespace lcz
