#pragma once

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>
#include <vector>

#include "lcz/liealg.hpp"

namespace lcz::test {

struct Br {
  std::size_t i, j;
  std::vector<long> v;  // integer coefficients of [b_i, b_j]
};

inline PseudoEuclideanLieAlgebra exact_algebra(const std::vector<std::string>& names, const std::vector<Br>& brs,
                                               const std::vector<std::vector<long>>& G) {
  LieAlgebra a(names, Backend::Exact);
  for (const auto& b : brs) {
    Vector v;
    for (long x : b.v) v.push_back(Scalar::integer(x, Backend::Exact));
    a.set_bracket(b.i, b.j, v);
  }
  return PseudoEuclideanLieAlgebra(a, BilinearForm(Matrix::from_rationals(G)));
}

inline Matrix Q(const std::vector<std::vector<long>>& m) { return Matrix::from_rationals(m); }
inline Scalar q(long p, long d = 1) { return Scalar::ratio(p, d, Backend::Exact); }

inline bool same(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

inline bool eq_vec(const Vector& a, const Vector& b) { return a == b; }

inline double max_diff(const Matrix& a, const Matrix& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m = std::max(m, std::fabs(a(i, j).to_double() - b(i, j).to_double()));
  return m;
}

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::ParseError;
}

}  // namespace lcz::test
