#include <random>

#include "common.hpp"
#include "support.hpp"

using namespace lcz;
using namespace lcz::test;

namespace {

BilinearForm form(const std::vector<std::vector<long>>& m) { return BilinearForm(Q(m)); }

double dist(const Matrix& a, const Matrix& b) { return inf_norm(a - b); }

}  // namespace

TEST_CASE("diagonal canonical input") {
  auto C = classify_symmetric_operator(Q({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}), form({{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}));
  CHECK(C.type == OperatorType::Diag);
  CHECK(C.backend == Backend::Exact);
  REQUIRE(C.alphas.size() == 3);
  CHECK(C.alphas[0] == q(1));
  CHECK(C.alphas[1] == q(2));
  CHECK(C.alphas[2] == q(3));
  CHECK(!C.a);
  // timelike column goes last; otherwise the identity
  CHECK(dist(C.P.to_backend(Backend::Float), Matrix::identity(3, Backend::Float)) < 1e-12);
}

TEST_CASE("canonical A3 input") {
  for (std::size_t extra : {0u, 2u}) {
    const std::size_t n = 3 + extra;
    Matrix A(n, n, Backend::Exact), G(n, n, Backend::Exact);
    for (std::size_t i = 0; i < extra; ++i) {
      A(i, i) = q(long(i) + 5);
      G(i, i) = q(1);
    }
    const std::size_t e = extra, f = extra + 1, eb = extra + 2;
    G(e, eb) = G(eb, e) = G(f, f) = q(1);
    A(e, f) = A(f, eb) = q(1);
    auto C = classify_symmetric_operator(A, BilinearForm(G));
    CHECK(C.type == OperatorType::A3);
    REQUIRE(C.a);
    CHECK(C.a->is_zero());
    CHECK(C.alphas.size() == extra);
    CHECK(dist(C.P, Matrix::identity(n, Backend::Float)) < 1e-12);
    CHECK(dist(C.canonical_A, A.to_backend(Backend::Float)) < 1e-12);
    CHECK(dist(C.canonical_G, G.to_backend(Backend::Float)) < 1e-12);
  }
}

TEST_CASE("sl2 Ricci operator is ZZbar") {
  for (long al : {-1L, -2L, -5L}) {
    auto g = sl2_harmonic(q(al));
    auto C = classify_symmetric_operator(ricci_operator(g).Ric, g.metric());
    CHECK(C.type == OperatorType::ZZbar);
    REQUIRE(C.alphas.size() == 1);
    CHECK(C.alphas[0] == q(al));
    REQUIRE(C.a);
    CHECK(*C.a == q(-al, 2));
    REQUIRE(C.b_squared);
    CHECK(*C.b_squared == q(3 * al * al, 4));
    CHECK(C.b == doctest::Approx(std::sqrt(3.0) / 2 * std::fabs(double(al))).epsilon(1e-12));

    // decomposition checks out against the metric
    auto [C2, d] = ricci_type(g);
    CHECK(d.type() == OperatorType::ZZbar);
    CHECK(d.h_blocks.size() == 1);
    validate_decomposition(g.to_backend(Backend::Float), d);
    CHECK(dist(d.operator_matrix(Backend::Float), ricci_operator(g).Ric.to_backend(Backend::Float)) < 1e-9);
  }
}

TEST_CASE("contract errors") {
  CHECK(code_of([] { classify_symmetric_operator(Q({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}), form({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})); }) ==
        ErrorCode::NotLorentzian);
  CHECK(code_of([] { classify_symmetric_operator(Q({{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}), form({{1, 0, 0}, {0, 1, 0}, {0, 0, -1}})); }) ==
        ErrorCode::NotSelfAdjoint);
  // n >= 3 is a precondition
  CHECK(code_of([] { classify_symmetric_operator(Q({{1, 0}, {0, 2}}), form({{1, 0}, {0, -1}})); }) ==
        ErrorCode::BadParam);
  auto euc = exact_algebra({"a", "b", "c"}, {}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(code_of([&] { ricci_type(euc); }) == ErrorCode::NotLorentzian);
  // irrational real eigenvalues cannot stay exact: x^2 - 2 on the spacelike plane
  CHECK(code_of([] { classify_symmetric_operator(Q({{0, 2, 0}, {1, 0, 0}, {0, 0, 1}}), form({{1, 0, 0}, {0, 2, 0}, {0, 0, -1}})); }) ==
        ErrorCode::ExactUnsupported);
}

TEST_CASE("examples") {
  ExampleInfo i5, i6;
  auto f5 = example_5d(1, &i5);
  auto [C5, d5] = ricci_type(f5.g);
  CHECK(C5.type == OperatorType::A3);
  CHECK(std::fabs(C5.a->to_double()) < 1e-9);
  REQUIRE(C5.alphas.size() == 2);
  CHECK(C5.alphas[0].to_double() == doctest::Approx(-i5.l).epsilon(1e-9));
  CHECK(C5.alphas[1].to_double() == doctest::Approx(-i5.l).epsilon(1e-9));

  auto f6 = example_6d(1, &i6);
  auto [C6, d6] = ricci_type(f6.g);
  CHECK(C6.type == OperatorType::A3);
  CHECK(std::fabs(C6.a->to_double()) < 1e-9);
  REQUIRE(C6.alphas.size() == 3);
  for (const auto& al : C6.alphas) CHECK(al.to_double() == doctest::Approx(-i6.l / 2).epsilon(1e-9));

  // zz product: one h block plus the ZZbar pair
  auto fz = family_instances()[0].base;
  auto [Cz, dz] = ricci_type(fz.g);
  CHECK(Cz.type == OperatorType::ZZbar);
  CHECK(dz.h_blocks.size() == 1);
  CHECK(dz.h_blocks[0].basis.size() == 3);
}

TEST_CASE("round trip over all types") {
  std::mt19937_64 rng(20240601);
  for (OperatorType t : {OperatorType::Diag, OperatorType::ZZbar, OperatorType::A2, OperatorType::A3}) {
    int fails = 0;
    double worst = 0;
    std::string first;
    for (int k = 0; k < 200; ++k) {
      const std::size_t n = 3 + k % 4;
      RoundTrip r = round_trip_once(t, n, rng);
      worst = std::max(worst, r.residual);
      if (!r.ok) {
        ++fails;
        if (first.empty()) first = r.why;
      }
    }
    CAPTURE(operator_type_name(t));
    CAPTURE(first);
    CHECK(fails == 0);
    CHECK(worst <= 1e-7);
  }
}

TEST_CASE("isometry invariance") {
  std::mt19937_64 rng(99);
  for (OperatorType t : {OperatorType::Diag, OperatorType::ZZbar, OperatorType::A2, OperatorType::A3}) {
    for (int k = 0; k < 20; ++k) {
      const std::size_t n = 4 + k % 3;
      CanonicalSample s = random_canonical(t, n, rng);
      const Matrix Q1 = random_isometry(s.G, rng), Q2 = random_isometry(s.G, rng);
      auto C1 = classify_symmetric_operator(inverse(Q1) * s.A * Q1, BilinearForm(s.G));
      auto C2 = classify_symmetric_operator(inverse(Q2) * s.A * Q2, BilinearForm(s.G));
      CAPTURE(operator_type_name(t));
      CHECK(C1.type == C2.type);
      REQUIRE(C1.alphas.size() == C2.alphas.size());
      for (std::size_t i = 0; i < C1.alphas.size(); ++i)
        CHECK(std::fabs(C1.alphas[i].to_double() - C2.alphas[i].to_double()) < 1e-8);
      if (t != OperatorType::Diag) CHECK(std::fabs(C1.a->to_double() - C2.a->to_double()) < 1e-8);
      CHECK(std::fabs(C1.b - C2.b) < 1e-8);
      CHECK(C1.a2_sign == C2.a2_sign);
      if (t == OperatorType::ZZbar) CHECK(C1.b > 0);
    }
  }
}

TEST_CASE("exact conjugation keeps exact eigen-data") {
  // Q^T G Q = G for a rational boost in the (b, c) plane of diag(1,1,-1)
  const Matrix G = Q({{1, 0, 0}, {0, 1, 0}, {0, 0, -1}});
  Matrix B = Matrix::from_columns({{q(1), q(0), q(0)}, {q(0), q(5, 4), q(3, 4)}, {q(0), q(3, 4), q(5, 4)}}, 3,
                                  Backend::Exact);
  CHECK(same(B.transpose() * G * B, G));
  const Matrix A = inverse(B) * Q({{2, 0, 0}, {0, -1, 0}, {0, 0, 2}}) * B;
  auto C = classify_symmetric_operator(A, BilinearForm(G));
  CHECK(C.type == OperatorType::Diag);
  CHECK(C.backend == Backend::Exact);
  CHECK(C.alphas[0] == q(-1));
  CHECK(C.alphas[1] == q(2));
  CHECK(C.alphas[2] == q(2));
  CHECK(dist(C.basis * C.canonical_A * C.P, A.to_backend(Backend::Float)) < 1e-12);
}
