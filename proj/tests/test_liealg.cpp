#include <random>

#include "common.hpp"
#include "support.hpp"

using namespace lcz;
using namespace lcz::test;

namespace {

PseudoEuclideanLieAlgebra h3() { return exact_algebra({"e1", "e2", "e3"}, {{0, 1, {0, 0, 1}}}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}); }

Vector ev(std::size_t n, std::size_t i) { return unit_vector(n, i, Backend::Exact); }

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.push_back(q(x));
  return v;
}

bool eq(const Vector& a, const Vector& b) { return a == b; }

}  // namespace

TEST_CASE("brackets") {
  auto ab = exact_algebra({"a", "b", "c"}, {}, {{1, 0, 0}, {0, 1, 0}, {0, 0, -1}});
  CHECK(eq(ab.alg().bracket(vec({1, 2, 3}), vec({-4, 0, 7})), vec({0, 0, 0})));

  auto h = h3();
  CHECK(eq(h.alg().bracket(ev(3, 0), ev(3, 1)), vec({0, 0, 1})));
  CHECK(eq(h.alg().bracket(ev(3, 1), ev(3, 0)), vec({0, 0, -1})));

  auto sl = sl2_harmonic(q(-1));
  CHECK(eq(sl.alg().bracket(ev(3, 0), ev(3, 1)), vec({0, 0, 2})));
  CHECK(eq(sl.alg().bracket(ev(3, 2), ev(3, 0)), vec({0, 2, 0})));
  CHECK(eq(sl.alg().bracket(ev(3, 2), ev(3, 1)), vec({2, 0, 0})));
}

TEST_CASE("ad matrices") {
  auto ab = exact_algebra({"a", "b", "c"}, {}, {{1, 0, 0}, {0, 1, 0}, {0, 0, -1}});
  CHECK(same(ab.alg().ad_matrix(vec({1, 1, 1})), Matrix(3, 3, Backend::Exact)));

  CHECK(same(h3().alg().ad_matrix(ev(3, 0)), Q({{0, 0, 0}, {0, 0, 0}, {0, 1, 0}})));
  // columns: ad_X3 X1 = 2 X2, ad_X3 X2 = 2 X1
  CHECK(same(sl2_harmonic(q(-1)).alg().ad_matrix(ev(3, 2)), Q({{0, 2, 0}, {2, 0, 0}, {0, 0, 0}})));
}

TEST_CASE("antisymmetry and linearity") {
  auto sl = sl2_harmonic(q(-3, 2));
  const auto& A = sl.alg();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(eq(A.bracket(ev(3, i), ev(3, j)), q(-1) * A.bracket(ev(3, j), ev(3, i))));
  const Vector u = vec({1, -2, 3}), v = vec({0, 5, -1});
  CHECK(same(A.ad_matrix(q(2) * u + q(-3) * v), q(2) * A.ad_matrix(u) + q(-3) * A.ad_matrix(v)));

  // a raw table that is not antisymmetric is rejected
  std::vector<std::vector<Vector>> c(2, std::vector<Vector>(2, vec({0, 0})));
  c[0][1] = vec({1, 0});
  CHECK(code_of([&] { LieAlgebra({"a", "b"}, c); }) == ErrorCode::BadParam);
  CHECK(code_of([] { LieAlgebra a({"a", "b"}, Backend::Exact); a.set_bracket(1, 1, vec({0, 0})); }) ==
        ErrorCode::BadParam);
}

TEST_CASE("Jacobi defect") {
  CHECK(jacobi_defect(h3().alg()).value.is_zero());
  CHECK(jacobi_defect(sl2_harmonic(q(-1)).alg()).value.is_zero());

  // basis (e, f, eb): [e,eb] = x e + y f, [e,f] = 5y e, [eb,f] = z e - 2y eb - x/2 f
  for (long y : {0L, 1L, -2L}) {
    const long x = 2, z = 3;
    LieAlgebra L({"e", "f", "eb"}, Backend::Exact);
    L.set_bracket(0, 2, vec({x, y, 0}));
    L.set_bracket(0, 1, vec({5 * y, 0, 0}));
    L.set_bracket(2, 1, {q(z), q(-x, 2), q(-2 * y)});
    const Vector e = ev(3, 0), f = ev(3, 1), eb = ev(3, 2);
    const Vector cyc = L.bracket(e, L.bracket(eb, f)) + L.bracket(eb, L.bracket(f, e)) + L.bracket(f, L.bracket(e, eb));
    CHECK(eq(cyc, {q(-9 * y * x, 2), q(3 * y * y), q(0)}));
    CHECK(jacobi_defect(L).value.is_zero() == (y == 0));
  }

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(-3, 3);
  LieAlgebra R({"a", "b", "c", "d"}, Backend::Exact);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) R.set_bracket(i, j, vec({d(rng), d(rng), d(rng), d(rng)}));
  CHECK(!jacobi_defect(R).value.is_zero());
  CHECK(code_of([&] { require_lie_algebra(R); }) == ErrorCode::NotLieAlgebra);
}

TEST_CASE("trace vector H") {
  for (const auto& g : {h3(), sl2_harmonic(q(-1))}) {
    const Vector H = trace_vector_H(g);
    for (const auto& x : H) CHECK(x.is_zero());
  }
  auto aff = exact_algebra({"H", "e1"}, {{0, 1, {0, 1}}}, {{1, 0}, {0, 1}});
  CHECK(eq(trace_vector_H(aff), vec({1, 0})));

  // <H,u> = tr(ad_u)
  auto g = exact_algebra({"a", "b", "c"}, {{0, 1, {0, 2, 1}}, {0, 2, {0, -1, 3}}}, {{2, 1, 0}, {1, 1, 0}, {0, 0, -1}});
  const Vector H = trace_vector_H(g);
  for (std::size_t i = 0; i < 3; ++i) CHECK(g.ip(H, ev(3, i)) == g.alg().ad_basis(i).trace());

  // a2 family: H lies in h
  A2FamilySpec s{affine_plane(Backend::Float, Scalar(1.0)),
                 {Scalar((-1 + std::sqrt(5.0)) / 4), Scalar(0.0)},
                 Scalar(-1.0)};
  const Vector Ha = trace_vector_H(build_a2(s).g);
  CHECK(std::fabs(Ha[2].to_double()) < 1e-12);
  CHECK(std::fabs(Ha[3].to_double()) < 1e-12);
}

TEST_CASE("direct sums") {
  auto empty = PseudoEuclideanLieAlgebra(LieAlgebra({}, Backend::Exact), BilinearForm(Matrix(0, 0, Backend::Exact)));
  auto h = h3();
  auto s = direct_sum(h, empty);
  CHECK(s.dim() == 3);
  CHECK(same(s.G(), h.G()));

  auto a1 = exact_algebra({"a"}, {}, {{1}});
  auto a2 = exact_algebra({"b", "c"}, {}, {{1, 0}, {0, -1}});
  auto ab = direct_sum(a1, a2);
  CHECK(ab.dim() == 3);
  CHECK(ab.alg().max_constant() == 0);
  CHECK(ab.is_lorentzian());

  LieAlgebra R({"a", "b", "c"}, Backend::Exact);
  R.set_bracket(0, 1, vec({1, 1, 0}));
  R.set_bracket(1, 2, vec({0, 0, 1}));
  R.set_bracket(0, 2, vec({1, 0, 0}));
  auto bad = PseudoEuclideanLieAlgebra(R, BilinearForm(Matrix::identity(3, Backend::Exact)));
  auto sum = direct_sum(h, bad);
  CHECK(jacobi_defect(sum.alg()).value == jacobi_defect(R).value);

  auto hh = direct_sum(h, h);
  auto names = hh.alg().names();
  std::sort(names.begin(), names.end());
  CHECK(std::unique(names.begin(), names.end()) == names.end());
}

TEST_CASE("metric contract") {
  auto a = LieAlgebra({"a", "b"}, Backend::Exact);
  CHECK(code_of([&] { PseudoEuclideanLieAlgebra(a, BilinearForm(Q({{1, 1}, {1, 1}}))); }) ==
        ErrorCode::DegenerateMetric);
  CHECK(code_of([&] { PseudoEuclideanLieAlgebra(a, BilinearForm(Matrix::identity(3, Backend::Exact))); }) ==
        ErrorCode::DimensionMismatch);
  CHECK(code_of([&] { PseudoEuclideanLieAlgebra(a, BilinearForm(Matrix::identity(2, Backend::Float))); }) ==
        ErrorCode::BackendMismatch);
  CHECK(exact_algebra({"a", "b", "c"}, {}, {{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}}).is_lorentzian());
  CHECK(!exact_algebra({"a", "b", "c"}, {}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}).is_lorentzian());
  CHECK(!exact_algebra({"a", "b", "c", "d"}, {}, {{-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}).is_lorentzian());
}
