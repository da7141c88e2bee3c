#include "common.hpp"
#include "lcz/checks.hpp"
#include "lcz/codazzi.hpp"
#include "support.hpp"

using namespace lcz;
using namespace lcz::test;

namespace {

PseudoEuclideanLieAlgebra abelian3() { return exact_algebra({"a", "b", "c"}, {}, {{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}}); }
PseudoEuclideanLieAlgebra h3() { return exact_algebra({"e1", "e2", "e3"}, {{0, 1, {0, 0, 1}}}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}); }
PseudoEuclideanLieAlgebra so3() {
  return exact_algebra({"e1", "e2", "e3"}, {{0, 1, {0, 0, 1}}, {1, 2, {1, 0, 0}}, {2, 0, {0, 1, 0}}},
                       {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
}
Vector ev(std::size_t n, std::size_t i, Backend b = Backend::Exact) { return unit_vector(n, i, b); }

bool is_zero(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

// G M + M^T G = 0
bool metric_skew(const PseudoEuclideanLieAlgebra& g, const Matrix& M) {
  return is_zero(g.G() * M + M.transpose() * g.G());
}

}  // namespace

TEST_CASE("Levi-Civita product") {
  for (const auto& L : levi_civita(abelian3()).L) CHECK(is_zero(L));

  auto lc = levi_civita(h3());
  CHECK(eq_vec(lc.L[0] * ev(3, 1), {q(0), q(0), q(1, 2)}));
  CHECK(eq_vec(lc.L[1] * ev(3, 0), {q(0), q(0), q(-1, 2)}));

  // sl2 with alpha = -1, solved independently
  auto s = levi_civita(sl2_harmonic(q(-1)));
  CHECK(same(s.L[0], Q({{0, -2, 0}, {2, 0, -2}, {0, 0, 0}})));
  CHECK(same(s.L[1], Q({{-2, 0, 0}, {0, 0, 0}, {-2, 0, 2}})));
  CHECK(same(s.L[2], Q({{0, 2, 0}, {0, 0, 2}, {0, 2, 0}})));
  CHECK(same(s.apply({q(1), q(-1), q(2)}), s.L[0] - s.L[1] + q(2) * s.L[2]));
}

TEST_CASE("Koszul formula reproduced on the catalog") {
  for (const auto& c : fixture_catalog()) {
    CAPTURE(c.name);
    const auto& g = c.g;
    const std::size_t n = g.dim();
    const Backend b = g.backend();
    auto lc = levi_civita(g);
    double worst = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const Vector u = ev(n, i, b), v = ev(n, j, b), w = ev(n, k, b);
          const auto& A = g.alg();
          Scalar lhs = Scalar::integer(2, b) * g.ip(lc.L[i] * v, w);
          Scalar rhs = g.ip(A.bracket(u, v), w) + g.ip(A.bracket(w, u), v) + g.ip(A.bracket(w, v), u);
          if (b == Backend::Exact)
            CHECK(lhs == rhs);
          else
            worst = std::max(worst, std::fabs((lhs - rhs).to_double()));
        }
    CHECK(worst <= 1e-9);
    CHECK(check_levi_civita(g).ok);
    CHECK(check_bianchi(g).ok);
  }
}

TEST_CASE("curvature") {
  auto ab = abelian3();
  auto lca = levi_civita(ab);
  CHECK(is_zero(curvature(ab, lca, ev(3, 0), ev(3, 2))));

  auto g = sl2_harmonic(q(-1));
  auto lc = levi_civita(g);
  const Vector u{q(1), q(2), q(-1)}, v{q(0), q(3, 2), q(1)};
  CHECK(is_zero(curvature(g, lc, u, u)));
  CHECK(same(curvature(g, lc, u, v), q(-1) * curvature(g, lc, v, u)));
  Matrix K12 = curvature(g, lc, ev(3, 0), ev(3, 1));
  CHECK(!is_zero(K12));
  CHECK(metric_skew(g, K12));
  // direct from the L table
  CHECK(same(K12, q(2) * lc.L[2] - commutator(lc.L[0], lc.L[1])));
}

TEST_CASE("Ricci operator") {
  CHECK(is_zero(ricci_operator(abelian3()).Ric));
  CHECK(*is_einstein(abelian3()) == q(0));
  CHECK(is_ricci_parallel(abelian3()));

  for (long num : {-1L, -3L, -7L}) {
    for (long den : {1L, 2L}) {
      const Scalar al = q(num, den);
      auto g = sl2_harmonic(al);
      RicciData r = ricci_operator(g);
      CHECK(same(r.Ric, q(0) * Q({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}) +
                            Matrix::from_columns({{q(0), q(0), al}, {q(0), al, q(0)}, {-al, q(0), -al}}, 3,
                                                 Backend::Exact)));
      CHECK(r.scalar_curv == r.Ric.trace());
      CHECK(same(g.G() * r.Ric, r.ric));
      CHECK(same(adjoint_wrt_form(r.Ric, g.metric()), r.Ric));
      CHECK(!is_einstein(g));
      CHECK(!is_ricci_parallel(g));
      CHECK(same(ricci_structural(g).Ric, r.Ric));
    }
  }

  auto e = is_einstein(so3());
  REQUIRE(e);
  CHECK(*e == q(1, 2));
  CHECK(is_ricci_parallel(so3()));

  // equal alpha on both sides keeps Ric scalar
  auto s2 = direct_sum(so3(), so3());
  CHECK(*is_einstein(s2) == q(1, 2));
  CHECK(is_ricci_parallel(s2));
}

TEST_CASE("dual Ricci formula on the catalog") {
  auto cat = fixture_catalog();
  CHECK(cat.size() >= 8);
  for (const auto& c : cat) {
    CAPTURE(c.name);
    CHECK(check_dual_ricci(c.g).ok);
    CHECK(check_implication_chain(c.g).ok);
    RicciData r = ricci_operator(c.g);
    CHECK(max_diff(adjoint_wrt_form(r.Ric, c.g.metric()), r.Ric) <= 1e-12);
  }
  // a Jacobi-violating table is refused by the structural formula
  LieAlgebra R({"a", "b", "c"}, Backend::Exact);
  R.set_bracket(0, 1, {q(1), q(1), q(0)});
  R.set_bracket(1, 2, {q(0), q(0), q(1)});
  R.set_bracket(0, 2, {q(1), q(0), q(0)});
  CHECK(code_of([&] { ricci_structural(PseudoEuclideanLieAlgebra(R, BilinearForm(Matrix::identity(3, Backend::Exact)))); }) ==
        ErrorCode::NotLieAlgebra);
}

TEST_CASE("nabla Ric") {
  auto s = so3();
  auto lc = levi_civita(s);
  auto r = ricci_operator(s, lc);
  for (std::size_t i = 0; i < 3; ++i) CHECK(is_zero(nabla_ric(lc, r, ev(3, i))));

  // the six-term bracket expansion equals 2 <(nabla_X Ric) v, w>
  for (const auto& c : fixture_catalog()) {
    CAPTURE(c.name);
    const auto& g = c.g;
    const std::size_t n = g.dim();
    const Backend b = g.backend();
    auto L = levi_civita(g);
    auto R = ricci_operator(g, L);
    double worst = 0;
    for (std::size_t x = 0; x < n; ++x) {
      Matrix N = nabla_ric(L, R, ev(n, x, b));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          Scalar lhs = Scalar::integer(2, b) * g.ip(N * ev(n, i, b), ev(n, j, b));
          Scalar rhs = six_term(g, R.Ric, ev(n, x, b), ev(n, i, b), ev(n, j, b));
          if (b == Backend::Exact)
            CHECK(lhs == rhs);
          else
            worst = std::max(worst, std::fabs((lhs - rhs).to_double()));
        }
    }
    CHECK(worst <= 1e-9);
  }

  auto rp = ricci_parallel_report(sl2_harmonic(q(-1)));
  CHECK(!rp.parallel);
  CHECK(rp.defect == q(4));
}

TEST_CASE("a2 family Ricci values") {
  // h = affine plane with metric c Id is (-1/c)-Einstein; alpha = -4|X|^2 - 2 tr(ad_X) fixes X = x H
  for (double c : {1.0, 0.5, 2.0, 3.0}) {
    CAPTURE(c);
    const double al = -1 / c;
    const double cc = c;
    const double x = (-2 + std::sqrt(4 - 16 * cc * al)) / (8 * cc);
    A2FamilySpec s{affine_plane(Backend::Float, Scalar(c)), {Scalar(x), Scalar(0.0)}, Scalar(al)};
    FamilyResult fr = build_a2(s);
    const auto& g = fr.g;
    const std::size_t n = g.dim();
    const Vector e = ev(n, 2, Backend::Float), eb = ev(n, 3, Backend::Float);
    RicciData r = ricci_operator(g);
    RicciData rs = ricci_structural(g);
    CHECK(g.ip(r.Ric * eb, eb).to_double() == doctest::Approx(1).epsilon(1e-12));
    CHECK(std::fabs(g.ip(r.Ric * e, e).to_double()) < 1e-12);
    CHECK(max_diff(r.Ric, rs.Ric) < 1e-12);
    // ric(eb,eb) = rho (2|X|^2 + tr ad_X) with rho = -2/alpha
    const double x2 = c * x * x, tr = x;
    CHECK(g.ip(rs.Ric * eb, eb).to_double() == doctest::Approx(-2 / al * (2 * x2 + tr)).epsilon(1e-12));

    auto lc = levi_civita(g);
    const Vector X = ev(n, 0, Backend::Float);
    const Scalar nab = g.ip(nabla_ric(lc, r, Scalar(x) * X) * eb, eb);
    // the bracket expansion is -4|X|^2, twice the covariant value
    CHECK(six_term(g, r.Ric, Scalar(x) * X, eb, eb).to_double() == doctest::Approx(-4 * x2).epsilon(1e-10));
    CHECK(nab.to_double() == doctest::Approx(-2 * x2).epsilon(1e-10));
  }
}
