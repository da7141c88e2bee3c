#include "lcz/families.hpp"

#include <algorithm>
#include <cmath>

#include "lcz/geometry.hpp"

namespace lcz {

namespace {

constexpr double kSpecTol = 1e-8;

bool near_zero(const Scalar& x) {
  return x.is_exact() ? x.is_zero() : std::fabs(x.to_double()) <= kSpecTol;
}

void require(bool ok, const std::string& family, const std::string& what) {
  if (!ok) fail(ErrorCode::ConstraintViolation, family + " family: " + what);
}

PseudoEuclideanLieAlgebra make(const std::vector<std::string>& names, Backend b,
                               const std::vector<std::tuple<std::size_t, std::size_t, std::vector<double>>>& br,
                               const std::vector<std::vector<double>>& G) {
  LieAlgebra alg(names, b);
  const std::size_t n = names.size();
  for (const auto& [i, j, v] : br) {
    Vector w = zero_vector(n, b);
    for (std::size_t k = 0; k < n; ++k) w[k] = Scalar(v[k]).to_backend(b);
    alg.set_bracket(i, j, w);
  }
  return PseudoEuclideanLieAlgebra(alg, BilinearForm(Matrix::from_doubles(G).to_backend(b)));
}

// Exact small-integer tables.
PseudoEuclideanLieAlgebra make_exact(const std::vector<std::string>& names,
                                     const std::vector<std::tuple<std::size_t, std::size_t, std::vector<long>>>& br,
                                     const std::vector<std::vector<long>>& G) {
  LieAlgebra alg(names, Backend::Exact);
  const std::size_t n = names.size();
  for (const auto& [i, j, v] : br) {
    Vector w = zero_vector(n, Backend::Exact);
    for (std::size_t k = 0; k < n; ++k) w[k] = Scalar::integer(v[k], Backend::Exact);
    alg.set_bracket(i, j, w);
  }
  return PseudoEuclideanLieAlgebra(alg, BilinearForm(Matrix::from_rationals(G)));
}

std::string fresh_name(const std::vector<std::string>& taken, std::string name) {
  while (std::find(taken.begin(), taken.end(), name) != taken.end()) name += "'";
  return name;
}

// Embeds h coordinates into the first k slots of an n-vector.
Vector embed(const Vector& v, std::size_t n, Backend b) {
  Vector out = zero_vector(n, b);
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

Scalar trace_ad(const LieAlgebra& h, const Vector& x) { return h.ad_matrix(x).trace(); }

void check_h(const PseudoEuclideanLieAlgebra& h, const std::string& family) {
  if (h.dim() == 0) fail(ErrorCode::BadParam, family + " family: h must be nonzero");
  require(h.is_euclidean(), family, "h must be Euclidean");
  require_lie_algebra(h.alg());
}

void check_perp_derived(const PseudoEuclideanLieAlgebra& h, const Vector& X, const std::string& family) {
  const std::size_t k = h.dim();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      require(near_zero(h.ip(X, h.alg().structure(i, j))), family, "X must be orthogonal to [h,h]");
}

}  // namespace

PseudoEuclideanLieAlgebra sl2_harmonic(const Scalar& alpha) {
  if (alpha.sign() >= 0) fail(ErrorCode::BadParam, "sl2_harmonic needs alpha < 0");
  const Backend b = alpha.backend();
  LieAlgebra alg({"X1", "X2", "X3"}, b);
  const Scalar two = Scalar::integer(2, b);
  alg.set_bracket(0, 1, two * unit_vector(3, 2, b));
  alg.set_bracket(2, 0, two * unit_vector(3, 1, b));
  alg.set_bracket(2, 1, two * unit_vector(3, 0, b));
  Matrix G = Matrix::from_rationals({{1, 0, -1}, {0, 1, 0}, {-1, 0, 0}}).to_backend(b);
  G = (Scalar::integer(-8, b) / alpha) * G;
  return PseudoEuclideanLieAlgebra(alg, BilinearForm(G));
}

PseudoEuclideanLieAlgebra zz_core(const ZZCoreParams& p) {
  if (!(p.alpha < 0)) fail(ErrorCode::BadParam, "zz_core needs alpha < 0");
  if (p.epsilon != 1 && p.epsilon != -1) fail(ErrorCode::BadParam, "zz_core needs epsilon = +1 or -1");
  const double q = -p.alpha / 4, s3 = std::sqrt(3.0) * p.epsilon;
  return make({"e", "eb", "f"}, Backend::Float,
              {{0, 2, {q, q * s3, 0}}, {1, 2, {q * s3, -q, 0}}, {0, 1, {0, 0, 1}}},
              {{0, 1, 0}, {1, 0, 0}, {0, 0, -p.alpha / 2}});
}

Matrix zz_core_sl2_frame(const ZZCoreParams& p) {
  if (!(p.alpha < 0)) fail(ErrorCode::BadParam, "zz_core needs alpha < 0");
  const double s3 = std::sqrt(3.0), al = p.alpha;
  if (p.epsilon == 1) {
    const double b = std::sqrt(-4 * s3 / al);
    return Matrix::from_doubles({{s3 * b / 3, 0, -2 * s3 * b / 3}, {b, 0, 0}, {0, 4 / al, 0}});
  }
  if (p.epsilon == -1) {
    const double b = std::sqrt(-16 * s3 / (3 * al));
    return Matrix::from_doubles({{b, 0, -b / 2}, {0, 0, s3 * b / 2}, {0, 4 / al, 0}});
  }
  fail(ErrorCode::BadParam, "zz_core needs epsilon = +1 or -1");
}

Matrix sl2_automorphism_Q() {
  const double r = std::sqrt(3.0) / 3;
  return Matrix::from_doubles({{-2 * r, 0, r}, {0, -1, 0}, {-r, 0, 2 * r}});
}

FamilyResult build_zz_product(const Scalar& alpha, const PseudoEuclideanLieAlgebra& h) {
  if (alpha.sign() >= 0) fail(ErrorCode::BadParam, "zz product needs alpha < 0");
  if (h.dim() > 0) {
    if (!h.is_euclidean()) fail(ErrorCode::BadParam, "zz product: h must be Euclidean");
    require_lie_algebra(h.alg());
    auto ein = is_einstein(h);
    if (!ein || !near_zero(*ein - alpha.to_backend(h.backend())))
      fail(ErrorCode::NotEinstein, "zz product: h is not alpha-Einstein");
  }
  const Backend hb = h.dim() > 0 ? h.backend() : alpha.backend();
  PseudoEuclideanLieAlgebra s = sl2_harmonic(alpha.to_backend(hb));
  PseudoEuclideanLieAlgebra g = (h.dim() > 0 ? direct_sum(s, h) : s).to_backend(Backend::Float);
  const std::size_t n = g.dim();

  const double al = alpha.to_double(), s3 = std::sqrt(3.0);
  const double sq = std::sqrt(-4 * s3 / al);
  auto vec = [n](std::vector<double> x) {
    Vector v = zero_vector(n, Backend::Float);
    for (std::size_t i = 0; i < x.size(); ++i) v[i] = Scalar(x[i]);
    return v;
  };
  const double ec = -s3 / (2 * sq);  // e = ec * X3
  Vector e = vec({0, 0, ec});
  Vector eb = vec({1 / sq, 0, -(s3 * sq / 3) * ec / sq});
  Vector f = vec({0, 1 / std::sqrt(-8 / al), 0});

  FamilyResult out{g, {}};
  HBlock blk{Scalar(al), {f}};
  for (std::size_t i = 3; i < n; ++i) blk.basis.push_back(unit_vector(n, i, Backend::Float));
  out.d.h_blocks.push_back(blk);
  LPart l;
  l.type = OperatorType::ZZbar;
  l.e = e;
  l.ebar = eb;
  l.a = Scalar(-al / 2);
  l.b = Scalar(s3 / 2 * std::fabs(al));
  out.d.l_part = l;
  return out;
}

FamilyResult build_a2(const A2FamilySpec& spec) {
  const std::string fam = "a2";
  const PseudoEuclideanLieAlgebra& h = spec.h;
  check_h(h, fam);
  const std::size_t k = h.dim();
  const Backend b = h.backend();
  if (spec.X.size() != k) fail(ErrorCode::DimensionMismatch, "a2 family: X has the wrong length");
  if (spec.alpha.backend() != b || spec.X[0].backend() != b)
    fail(ErrorCode::BackendMismatch, "a2 family: spec mixes backends");
  const Scalar& alpha = spec.alpha;
  require(alpha.sign() < 0 && !near_zero(alpha), fam, "alpha must be negative");
  auto ein = is_einstein(h);
  require(ein && near_zero(*ein - alpha), fam, "h must be alpha-Einstein");
  const Vector& X = spec.X;
  const Scalar x2 = h.ip(X, X);
  require(!near_zero(x2), fam, "X must be nonzero");
  check_perp_derived(h, X, fam);
  const Scalar trX = trace_ad(h.alg(), X);
  require(near_zero(alpha + Scalar::integer(4, b) * x2 + Scalar::integer(2, b) * trX), fam,
          "alpha = -4|X|^2 - 2 tr(ad_X) fails");

  std::vector<std::string> names = h.alg().names();
  const std::size_t n = k + 2, ie = k, ieb = k + 1;
  names.push_back(fresh_name(names, "e"));
  names.push_back(fresh_name(names, "eb"));
  LieAlgebra alg(names, b);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) alg.set_bracket(i, j, embed(h.alg().structure(i, j), n, b));
  const Scalar two_over = Scalar::integer(2, b) / alpha;
  for (std::size_t i = 0; i < k; ++i) {
    const Scalar x = h.ip(X, unit_vector(k, i, b));
    Vector ve = zero_vector(n, b), veb = zero_vector(n, b);
    ve[ie] = x;
    veb[ie] = -x * two_over;
    veb[ieb] = -x;
    alg.set_bracket(ie, i, ve);
    alg.set_bracket(ieb, i, veb);
  }
  Matrix G(n, n, b);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) G(i, j) = h.G()(i, j);
  G(ie, ieb) = Scalar::one(b);
  G(ieb, ie) = Scalar::one(b);

  FamilyResult out{PseudoEuclideanLieAlgebra(alg, BilinearForm(G)), {}};
  HBlock blk{alpha, {}};
  for (std::size_t i = 0; i < k; ++i) blk.basis.push_back(unit_vector(n, i, b));
  out.d.h_blocks.push_back(blk);
  LPart l;
  l.type = OperatorType::A2;
  l.e = unit_vector(n, ie, b);
  l.ebar = unit_vector(n, ieb, b);
  l.a = Scalar::zero(b);
  l.b = Scalar::zero(b);
  l.a2_sign = 1;
  out.d.l_part = l;
  return out;
}

FamilyResult build_a3(const A3FamilySpec& spec) {
  const std::string fam = "a3";
  const PseudoEuclideanLieAlgebra& h = spec.h;
  check_h(h, fam);
  const std::size_t k = h.dim();
  const Backend b = h.backend();
  const Vector &X = spec.X, &U = spec.U;
  const Matrix& C = spec.C;
  if (X.size() != k || U.size() != k || C.rows() != k || C.cols() != k)
    fail(ErrorCode::DimensionMismatch, "a3 family: X, U or C has the wrong size");
  if (X[0].backend() != b || U[0].backend() != b || C.backend() != b)
    fail(ErrorCode::BackendMismatch, "a3 family: spec mixes backends");
  auto ein = is_einstein(h);
  require(ein.has_value(), fam, "h must be Einstein");
  const Scalar alpha = *ein;
  require(alpha.sign() < 0 && !near_zero(alpha), fam, "the Einstein constant of h must be negative");

  const LieAlgebra& ha = h.alg();
  auto ip = [&](const Vector& u, const Vector& v) { return h.ip(u, v); };
  auto k_ = [b](long p, long q = 1) { return Scalar::ratio(p, q, b); };

  const Matrix skew = h.G() * C + C.transpose() * h.G();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) require(near_zero(skew(i, j)), fam, "C must be skew-symmetric");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const Vector ui = unit_vector(k, i, b), uj = unit_vector(k, j, b);
      Vector d = C * ha.bracket(ui, uj) - ha.bracket(C * ui, uj) - ha.bracket(ui, C * uj);
      for (const auto& x : d) require(near_zero(x), fam, "C must be a derivation of h");
    }
  for (const auto& x : C * X) require(near_zero(x), fam, "CX must vanish");
  for (const auto& x : C * U) require(near_zero(x), fam, "CU must vanish");

  const Scalar x2 = ip(X, X), u2 = ip(U, U), xu = ip(X, U);
  require(!near_zero(x2), fam, "X must be nonzero");
  check_perp_derived(h, X, fam);
  require(near_zero(ip(U, ha.bracket(U, X)) - (u2 * x2 - xu * xu)), fam,
          "<U,[U,X]> = |U|^2|X|^2 - <U,X>^2 fails");
  {
    Matrix M(2, k, b);
    const Vector gx = h.G() * X, gu = h.G() * U;
    for (std::size_t j = 0; j < k; ++j) {
      M(0, j) = gx[j];
      M(1, j) = gu[j];
    }
    for (const auto& w : null_space(M))
      for (std::size_t i = 0; i < k; ++i)
        require(near_zero(ip(ha.bracket(unit_vector(k, i, b), w), U)), fam,
                "<[h,P^perp],U> = 0 fails");
  }
  const Scalar trX = trace_ad(ha, X), trU = trace_ad(ha, U);
  require(near_zero(trX + alpha + x2), fam, "tr(ad_X) = -alpha - |X|^2 fails");
  require(near_zero(trU - (-(k_(5) / (k_(2) * alpha)) * x2 - k_(3) * xu + k_(3, 2))), fam,
          "tr(ad_U) = -(5/(2 alpha))|X|^2 - 3<X,U> + 3/2 fails");

  const Vector Y = (-(k_(1) / alpha)) * ((k_(2) * U) + ((k_(3) / alpha) * X));
  const Vector T = ((-(k_(2) / alpha)) * X) - U;
  const Scalar kappa = ip(T, X) / x2;

  std::vector<std::string> names = ha.names();
  const std::size_t n = k + 3, ie = k, jf = k + 1, ieb = k + 2;
  names.push_back(fresh_name(names, "e"));
  names.push_back(fresh_name(names, "f"));
  names.push_back(fresh_name(names, "eb"));
  LieAlgebra alg(names, b);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) alg.set_bracket(i, j, embed(ha.structure(i, j), n, b));
  for (std::size_t i = 0; i < k; ++i) {
    const Vector u = unit_vector(k, i, b);
    const Vector cu = C * u;
    Vector ve = zero_vector(n, b);
    ve[ie] = ip(X, u);
    Vector vf = embed(cu, n, b);
    vf[ie] = ip(U, u);
    Vector veb = embed(kappa * cu, n, b);
    veb[ie] = ip(Y, u);
    veb[ieb] = -ip(X, u);
    veb[jf] = ip(T, u);
    alg.set_bracket(ie, i, ve);
    alg.set_bracket(jf, i, vf);
    alg.set_bracket(ieb, i, veb);
  }
  Matrix G(n, n, b);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) G(i, j) = h.G()(i, j);
  G(ie, ieb) = Scalar::one(b);
  G(ieb, ie) = Scalar::one(b);
  G(jf, jf) = Scalar::one(b);
  require(near_zero(jacobi_defect(alg).value), fam, "assembled brackets violate the Jacobi identity");

  FamilyResult out{PseudoEuclideanLieAlgebra(alg, BilinearForm(G)), {}};
  HBlock blk{alpha, {}};
  for (std::size_t i = 0; i < k; ++i) blk.basis.push_back(unit_vector(n, i, b));
  out.d.h_blocks.push_back(blk);
  LPart l;
  l.type = OperatorType::A3;
  l.e = unit_vector(n, ie, b);
  l.f = unit_vector(n, jf, b);
  l.ebar = unit_vector(n, ieb, b);
  l.a = Scalar::zero(b);
  l.b = Scalar::zero(b);
  out.d.l_part = l;
  return out;
}

namespace {

struct ExampleData {
  double a, l;
};

// a solves a^2 + a - c = 0; l in closed form.
ExampleData example_data(bool six, int sign) {
  if (six) {
    const double r = std::sqrt(3.0);
    return {(-1 + sign * r) / 2, 2 * (4 * r - sign) / (3 * r - sign)};
  }
  const double r = std::sqrt(5.0);
  return {(-1 + sign * r) / 2, (4 * r - sign) / (3 * r - sign)};
}

A3FamilySpec example_spec(bool six, const ExampleData& d) {
  const double l = d.l;
  A3FamilySpec s;
  if (!six) {
    s.h = make({"H", "e1"}, Backend::Float, {{0, 1, {0, l}}}, {{l, 0}, {0, 1}});
    s.C = Matrix(2, 2, Backend::Float);
    s.X = {Scalar(d.a), Scalar(0.0)};
  } else {
    s.h = make({"H", "e1", "e2"}, Backend::Float, {{0, 1, {0, l / 2, 0}}, {0, 2, {0, 0, l / 2}}},
               {{l, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    s.C = Matrix::from_doubles({{0, 0, 0}, {0, 0, -1}, {0, 1, 0}});
    s.X = {Scalar(d.a), Scalar(0.0), Scalar(0.0)};
  }
  s.U = s.X;
  return s;
}

FamilyResult example(bool six, int sign, ExampleInfo* info) {
  if (sign != 1 && sign != -1) fail(ErrorCode::BadParam, "example sign must be +1 or -1");
  ExampleInfo inf;
  inf.sign = sign;
  for (int s : {sign, -sign}) {
    const ExampleData d = example_data(six, s);
    try {
      FamilyResult r = build_a3(example_spec(six, d));
      inf.root_used = s;
      inf.a = d.a;
      inf.l = d.l;
      inf.alpha = six ? -d.l / 2 : -d.l;
      inf.note = s == sign ? "requested root" : "requested root fails its constraints; alternate root used";
      if (info) *info = inf;
      return r;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ConstraintViolation || s != sign) throw;
    }
  }
  fail(ErrorCode::ConstraintViolation, "no root satisfies the example constraints");
}

}  // namespace

FamilyResult example_5d(int sign, ExampleInfo* info) { return example(false, sign, info); }
FamilyResult example_6d(int sign, ExampleInfo* info) { return example(true, sign, info); }

PseudoEuclideanLieAlgebra example_5d_uncorrected_table(int sign) {
  if (sign != 1 && sign != -1) fail(ErrorCode::BadParam, "example sign must be +1 or -1");
  const ExampleData d = example_data(false, sign);
  const double a = d.a, l = d.l;
  // basis H, e1, e, f, eb; brackets as [x, H] rows
  return make({"H", "e1", "e", "f", "eb"}, Backend::Float,
              {{0, 1, {0, l, 0, 0, 0}},
               {2, 0, {0, 0, a * l, 0, 0}},
               {4, 0, {0, 0, (2 * l - 1) * a / l, (2 - l) * a, -a * l}},
               {3, 0, {0, 0, a * l, 0, 0}}},
              {{l, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 0, 0, 1}, {0, 0, 0, 1, 0}, {0, 0, 1, 0, 0}});
}

std::vector<CatalogEntry> fixture_catalog() {
  std::vector<CatalogEntry> c;
  c.push_back({"abelian3_lorentzian", make_exact({"x1", "x2", "x3"}, {}, {{1, 0, 0}, {0, 1, 0}, {0, 0, -1}})});
  c.push_back({"heisenberg_euclidean",
               make_exact({"x1", "x2", "x3"}, {{0, 1, {0, 0, 1}}}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})});
  c.push_back({"heisenberg_lorentzian",
               make_exact({"x1", "x2", "x3"}, {{0, 1, {0, 0, 1}}}, {{1, 0, 0}, {0, 1, 0}, {0, 0, -1}})});
  c.push_back({"so3", make_exact({"x1", "x2", "x3"}, {{0, 1, {0, 0, 1}}, {1, 2, {1, 0, 0}}, {2, 0, {0, 1, 0}}},
                                 {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})});
  c.push_back({"sl2_harmonic", sl2_harmonic(Scalar::integer(-1, Backend::Exact))});
  c.push_back({"e11_solvable", make_exact({"H", "x1", "x2"}, {{0, 1, {0, 1, 0}}, {0, 2, {0, 0, -1}}},
                                          {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})});
  {
    auto h = make_exact({"H", "y1"}, {{0, 1, {0, 1}}}, {{1, 0}, {0, 1}});
    c.push_back({"zz_product", direct_sum(sl2_harmonic(Scalar::integer(-1, Backend::Exact)), h)});
  }
  c.push_back({"zz_core", zz_core({-1.0, 1})});
  {
    A2FamilySpec s;
    s.h = make({"H", "y1"}, Backend::Float, {{0, 1, {0, 1}}}, {{1, 0}, {0, 1}});
    s.X = {Scalar((-1 + std::sqrt(5.0)) / 4), Scalar(0.0)};
    s.alpha = Scalar(-1.0);
    c.push_back({"a2_family", build_a2(s).g});
  }
  c.push_back({"a3_example_5d", example_5d(1).g});
  c.push_back({"a3_example_6d", example_6d(1).g});
  return c;
}

}  // namespace lcz
