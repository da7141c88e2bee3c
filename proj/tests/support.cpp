#include "support.hpp"

#include <algorithm>
#include <cmath>

#include "lcz/geometry.hpp"

namespace lcz::test {

Scalar six_term(const PseudoEuclideanLieAlgebra& g, const Matrix& Ric, const Vector& X, const Vector& v,
                const Vector& w) {
  const LieAlgebra& A = g.alg();
  const Vector Rv = Ric * v, Rw = Ric * w;
  return g.ip(A.bracket(X, Rv), w) + g.ip(A.bracket(w, Rv), X) + g.ip(A.bracket(w, X), Rv) -
         g.ip(A.bracket(X, v), Rw) - g.ip(A.bracket(Rw, v), X) - g.ip(A.bracket(Rw, X), v);
}

Vector embed(const Vector& x, std::size_t n) {
  Vector out = zero_vector(n, x.empty() ? Backend::Float : x[0].backend());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i];
  return out;
}

PseudoEuclideanLieAlgebra affine_plane(Backend b, const Scalar& c) {
  LieAlgebra h({"H", "y1"}, b);
  h.set_bracket(0, 1, unit_vector(2, 1, b));
  return PseudoEuclideanLieAlgebra(h, BilinearForm(c * Matrix::identity(2, b)));
}

double inf_norm(const Matrix& m) { return m.norm_inf(); }

CanonicalSample random_canonical(OperatorType t, std::size_t n, std::mt19937_64& rng) {
  CanonicalSample s;
  s.type = t;
  std::uniform_int_distribution<int> grid(-8, 8);
  std::uniform_real_distribution<double> bdist(0.4, 2.0);
  std::bernoulli_distribution coin(0.5);
  const std::size_t lsize = t == OperatorType::Diag ? 0 : t == OperatorType::A3 ? 3 : 2;
  const std::size_t nh = n - lsize;
  if (t != OperatorType::Diag) s.a = grid(rng) / 4.0;
  // alphas on a quarter grid, repeats allowed, kept away from a
  for (std::size_t i = 0; i < nh; ++i) {
    double x;
    do {
      x = grid(rng) / 4.0;
    } while (t != OperatorType::Diag && std::fabs(x - s.a) < 0.2);
    s.alphas.push_back(x);
  }
  if (t == OperatorType::ZZbar) s.b = bdist(rng);
  if (t == OperatorType::A2) s.sign = coin(rng) ? 1 : -1;
  s.A = Matrix(n, n, Backend::Float);
  s.G = Matrix(n, n, Backend::Float);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      s.A(i, j) = Scalar(0.0);
      s.G(i, j) = Scalar(0.0);
    }
  for (std::size_t i = 0; i < nh; ++i) {
    s.A(i, i) = Scalar(s.alphas[i]);
    s.G(i, i) = Scalar(1.0);
  }
  if (t == OperatorType::Diag) {
    s.G(n - 1, n - 1) = Scalar(-1.0);
  } else if (t == OperatorType::A3) {
    const std::size_t e = nh, f = nh + 1, eb = nh + 2;
    s.G(e, eb) = s.G(eb, e) = s.G(f, f) = Scalar(1.0);
    s.A(e, e) = s.A(f, f) = s.A(eb, eb) = Scalar(s.a);
    s.A(e, f) = Scalar(1.0);   // A f = e + a f
    s.A(f, eb) = Scalar(1.0);  // A eb = f + a eb
  } else {
    const std::size_t e = nh, eb = nh + 1;
    s.G(e, eb) = s.G(eb, e) = Scalar(1.0);
    s.A(e, e) = s.A(eb, eb) = Scalar(s.a);
    if (t == OperatorType::ZZbar) {
      s.A(e, eb) = Scalar(s.b);
      s.A(eb, e) = Scalar(-s.b);
    } else {
      s.A(e, eb) = Scalar(double(s.sign));
    }
  }
  std::sort(s.alphas.begin(), s.alphas.end());
  return s;
}

Matrix random_isometry(const Matrix& G, std::mt19937_64& rng, double scale) {
  const std::size_t n = G.rows();
  std::uniform_real_distribution<double> u(-scale, scale);
  Matrix K(n, n, Backend::Float);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const double x = i == j ? 0.0 : u(rng);
      K(i, j) = Scalar(x);
      K(j, i) = Scalar(-x);
    }
  // S = G^{-1} K is G-skew, so exp(S) is a G-isometry. Scaling and squaring
  // with a truncated Taylor series.
  Matrix S = inverse(G) * K;
  int squarings = 0;
  while (S.norm_inf() > 0.5) {
    S = Scalar(0.5) * S;
    ++squarings;
  }
  const Matrix I = Matrix::identity(n, Backend::Float);
  Matrix E = I, term = I;
  for (int k = 1; k <= 18; ++k) {
    term = Scalar(1.0 / k) * (term * S);
    E += term;
  }
  for (int k = 0; k < squarings; ++k) E = E * E;
  return E;
}

namespace {

PseudoEuclideanLieAlgebra with_metric_entry(const PseudoEuclideanLieAlgebra& g, std::size_t i, std::size_t j,
                                            double t) {
  Matrix G = g.G();
  G(i, j) += Scalar(t);
  if (i != j) G(j, i) += Scalar(t);
  return PseudoEuclideanLieAlgebra(g.alg(), BilinearForm(G));
}

PseudoEuclideanLieAlgebra with_bracket(const PseudoEuclideanLieAlgebra& g, std::size_t i, std::size_t j,
                                       const Vector& v) {
  LieAlgebra a = g.alg();
  a.set_bracket(i, j, v);
  return PseudoEuclideanLieAlgebra(a, g.metric());
}

void metric_perturbations(std::vector<Perturbed>& out, const std::string& tag, const PseudoEuclideanLieAlgebra& g,
                          const std::vector<std::pair<std::size_t, std::size_t>>& entries,
                          const std::vector<double>& ts) {
  const auto& nm = g.alg().names();
  for (double t : ts)
    for (auto [i, j] : entries) {
      PseudoEuclideanLieAlgebra p = with_metric_entry(g, i, j, t);
      if (!p.is_lorentzian()) continue;
      out.push_back({tag + "metric(" + nm[i] + "," + nm[j] + ")" + (t > 0 ? "+" : "") + format_double(t), p});
    }
}

}  // namespace

std::vector<FamilyInstance> family_instances() {
  std::vector<FamilyInstance> v;
  v.push_back({"zz_product", build_zz_product(Scalar(-1.0), affine_plane(Backend::Float, Scalar(1.0)))});
  A2FamilySpec s{affine_plane(Backend::Float, Scalar(1.0)),
                 {Scalar((-1 + std::sqrt(5.0)) / 4), Scalar(0.0)},
                 Scalar(-1.0)};
  v.push_back({"a2", build_a2(s)});
  v.push_back({"a3_5d", example_5d(1)});
  v.push_back({"a3_6d", example_6d(1)});
  return v;
}

namespace {

using Entries = std::vector<std::pair<std::size_t, std::size_t>>;

Entries upper(std::size_t n) {
  Entries e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) e.push_back({i, j});
  return e;
}

Entries without(const Entries& all, const Entries& drop) {
  Entries out;
  for (const auto& x : all)
    if (std::find(drop.begin(), drop.end(), x) == drop.end()) out.push_back(x);
  return out;
}

// a2 basis H y1 e eb
const Entries kA2Breaking{{1, 2}, {1, 3}, {2, 2}};
// 5d basis H e1 e f eb, 6d basis H e1 e2 e f eb. Entries pairing H with H or
// with the null triple stay harmonic; in 5d so does (H,e1), and scaling e1 is
// an automorphism.
Entries a3_neutral(std::size_t n) {
  if (n == 5) return {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 1}};
  return {{0, 0}, {0, 3}, {0, 4}, {0, 5}};
}

}  // namespace

std::vector<Perturbed> structured_perturbations(const std::string& family) {
  std::vector<Perturbed> out;
  const Backend F = Backend::Float;
  if (family == "zz_product") {
    // basis X1 X2 X3 H y1; the affine plane keeps constant curvature under any
    // metric change of its own, so only entries touching sl(2) are used
    FamilyResult fr = build_zz_product(Scalar(-1.0), affine_plane(F, Scalar(1.0)));
    const auto& g = fr.g;
    Entries entries;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i; j < 5; ++j) entries.push_back({i, j});
    metric_perturbations(out, "", g, entries, {0.15, -0.1});
    // rescale one sl(2) bracket; any such table is still a Lie algebra
    for (auto [i, j] : Entries{{0, 1}, {0, 2}, {1, 2}})
      out.push_back({"bracket(" + g.alg().names()[i] + "," + g.alg().names()[j] + ")x1.3",
                     with_bracket(g, i, j, Scalar(1.3) * g.alg().structure(i, j))});
    // H acts on sl(2) through an inner derivation
    for (std::size_t z = 0; z < 3; ++z) {
      LieAlgebra a = g.alg();
      for (std::size_t x = 0; x < 3; ++x)
        a.set_bracket(3, x, a.structure(3, x) + Scalar(0.4) * a.structure(z, x));
      out.push_back({"inner_derivation(" + g.alg().names()[z] + ")", PseudoEuclideanLieAlgebra(a, g.metric())});
    }
  } else if (family == "a2") {
    FamilyResult fr = family_instances()[1].base;
    const auto& g = fr.g;
    metric_perturbations(out, "", g, kA2Breaking, {0.15, -0.1, 0.3, -0.25});
    const std::size_t H = 0, e = 2, eb = 3;
    const Vector ve = g.alg().structure(e, H), veb = g.alg().structure(eb, H);
    for (double s : {0.7, 1.3, 1.6}) {
      // |X| off the value fixed by alpha = -4|X|^2 - 2 tr(ad_X)
      LieAlgebra a = g.alg();
      a.set_bracket(e, H, Scalar(s) * ve);
      a.set_bracket(eb, H, Scalar(s) * veb);
      out.push_back({"X x" + format_double(s), PseudoEuclideanLieAlgebra(a, g.metric())});
    }
    for (double s : {0.5, 1.5, 2.0})
      out.push_back({"bracket(e,H) x" + format_double(s), with_bracket(g, e, H, Scalar(s) * ve)});
    for (double s : {0.7, 1.3, 1.6}) {
      Vector v = veb;
      v[eb] = Scalar(s) * v[eb];
      out.push_back({"bracket(eb,H).eb x" + format_double(s), with_bracket(g, eb, H, v)});
    }
  } else if (family == "a3") {
    FamilyResult f5 = example_5d(1), f6 = example_6d(1);
    metric_perturbations(out, "5d:", f5.g, without(upper(5), a3_neutral(5)), {0.15});
    metric_perturbations(out, "6d:", f6.g, without(upper(6), a3_neutral(6)), {0.15});
  }
  return out;
}

std::vector<Perturbed> neutral_perturbations(const std::string& family) {
  std::vector<Perturbed> out;
  if (family == "a2") {
    FamilyResult fr = family_instances()[1].base;
    const auto& g = fr.g;
    metric_perturbations(out, "", g, without(upper(4), kA2Breaking), {0.15, -0.1});
    const std::size_t H = 0, e = 2, eb = 3;
    Vector v = g.alg().structure(eb, H);
    v[e] = Scalar(1.3) * v[e];
    out.push_back({"bracket(eb,H).e x1.3", with_bracket(g, eb, H, v)});
  } else if (family == "a3") {
    metric_perturbations(out, "5d:", example_5d(1).g, a3_neutral(5), {0.15});
    metric_perturbations(out, "6d:", example_6d(1).g, a3_neutral(6), {0.15});
  } else if (family == "zz_product") {
    FamilyResult fr = build_zz_product(Scalar(-1.0), affine_plane(Backend::Float, Scalar(1.0)));
    metric_perturbations(out, "", fr.g, Entries{{3, 3}, {3, 4}, {4, 4}}, {0.15, -0.1});
  }
  return out;
}

Verdicts verdicts(const PseudoEuclideanLieAlgebra& g, const SplitDecomposition& d, const Tolerance& tol) {
  Verdicts v;
  v.type = d.type();
  v.raw = check_type_conditions(g, d, false, tol).overall;
  v.solved = check_type_conditions(g, d, true, tol).overall;
  v.codazzi = has_harmonic_curvature(g, tol).is_codazzi;
  return v;
}

Verdicts verdicts(const PseudoEuclideanLieAlgebra& g, const Tolerance& tol) {
  auto [c, d] = ricci_type(g);
  (void)c;
  return verdicts(g, d, tol);
}

}  // namespace lcz::test

namespace lcz::test {

RoundTrip round_trip_once(OperatorType t, std::size_t n, std::mt19937_64& rng, double tol) {
  RoundTrip rt;
  auto bad = [&](const std::string& w) {
    rt.ok = false;
    if (rt.why.empty()) rt.why = w;
  };
  const CanonicalSample s = random_canonical(t, n, rng);
  const Matrix Q = random_isometry(s.G, rng);
  const Matrix A = inverse(Q) * s.A * Q;
  OperatorClassification C;
  try {
    C = classify_symmetric_operator(A, BilinearForm(s.G, Tolerance{1e-8, 1e-12}));
  } catch (const Error& e) {
    bad(std::string(error_code_name(e.code())) + ": " + e.what());
    return rt;
  }
  if (C.type != t) {
    bad(std::string("type ") + operator_type_name(C.type));
    return rt;
  }
  if (C.alphas.size() != s.alphas.size()) {
    bad("alpha count");
    return rt;
  }
  for (std::size_t i = 0; i < s.alphas.size(); ++i)
    if (std::fabs(C.alphas[i].to_double() - s.alphas[i]) > tol) bad("alpha " + std::to_string(i));
  if (t != OperatorType::Diag && (!C.a || std::fabs(C.a->to_double() - s.a) > tol)) bad("a");
  if (t == OperatorType::ZZbar && std::fabs(C.b - s.b) > tol) bad("b");
  if (t == OperatorType::A2 && C.a2_sign != s.sign) bad("a2 sign");
  const double scale = std::max(1.0, inf_norm(A));
  rt.residual = inf_norm(C.basis * C.canonical_A * C.P - A) / scale;
  if (rt.residual > tol) bad("reconstruction residual " + format_double(rt.residual));
  const double gres = inf_norm(C.basis.transpose() * s.G * C.basis - C.canonical_G);
  if (gres > tol * std::max(1.0, inf_norm(s.G))) bad("metric residual " + format_double(gres));
  return rt;
}

}  // namespace lcz::test
