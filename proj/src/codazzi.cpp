#include "lcz/codazzi.hpp"

#include <cmath>
#include <functional>
#include <limits>

namespace lcz {

const char* formulation_name(Formulation f) {
  return f == Formulation::Defining ? "defining" : "bracket";
}

void require_self_adjoint(const PseudoEuclideanLieAlgebra& g, const Matrix& A, const Tolerance& tol) {
  const std::size_t n = g.dim();
  if (A.rows() != n || A.cols() != n) fail(ErrorCode::DimensionMismatch, "operator size differs from the algebra");
  if (A.backend() != g.backend()) fail(ErrorCode::BackendMismatch, "operator backend differs from the algebra");
  Matrix GA = g.G() * A;
  const double scale = GA.max_abs();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!negligible(GA(i, j) - GA(j, i), scale, tol))
        fail(ErrorCode::NotSelfAdjoint, "operator is not self-adjoint for the metric");
}

namespace {

// Max |sum| over ordered basis triples; ties keep the first triple.
template <class F>
CodazziReport scan_triples(std::size_t n, Backend b, Formulation form, const Tolerance& tol, F&& terms) {
  CodazziReport rep;
  rep.formulation = form;
  rep.defect = Scalar::zero(b);
  double scale = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t w = 0; w < n; ++w) {
        double mag = 0;
        Scalar s = terms(u, v, w, mag);
        scale = std::max(scale, mag);
        if (rep.defect < s.abs()) {
          rep.defect = s.abs();
          rep.worst_triple = {u, v, w};
        }
      }
  rep.is_codazzi = negligible(rep.defect, scale, tol);
  return rep;
}

Scalar signed_sum(std::initializer_list<Scalar> plus, std::initializer_list<Scalar> minus, double& mag) {
  Scalar s = Scalar::zero(plus.begin()->backend());
  for (const auto& x : plus) {
    s += x;
    mag += std::fabs(x.to_double());
  }
  for (const auto& x : minus) {
    s -= x;
    mag += std::fabs(x.to_double());
  }
  return s;
}

}  // namespace

CodazziReport codazzi_defect(const PseudoEuclideanLieAlgebra& g, const LeviCivita& lc, const Matrix& A,
                             const Tolerance& tol) {
  require_self_adjoint(g, A, tol);
  const Matrix GA = g.G() * A;  // <x, A b_w> = x . GA[:,w]
  const std::size_t n = g.dim();
  std::vector<Vector> Aw(n);
  for (std::size_t w = 0; w < n; ++w) Aw[w] = GA.column(w);
  auto Lcol = [&](std::size_t u, std::size_t v) { return lc.L[u].column(v); };
  return scan_triples(n, g.backend(), Formulation::Defining, tol,
                      [&](std::size_t u, std::size_t v, std::size_t w, double& mag) {
                        return signed_sum({dot(Lcol(u, v), Aw[w]), dot(Lcol(u, w), Aw[v])},
                                          {dot(Lcol(v, u), Aw[w]), dot(Lcol(v, w), Aw[u])}, mag);
                      });
}

CodazziReport codazzi_defect(const PseudoEuclideanLieAlgebra& g, const Matrix& A, const Tolerance& tol) {
  require_self_adjoint(g, A, tol);
  return codazzi_defect(g, levi_civita(g), A, tol);
}

CodazziReport codazzi_defect_bracket(const PseudoEuclideanLieAlgebra& g, const Matrix& A,
                                     const Tolerance& tol) {
  require_self_adjoint(g, A, tol);
  const std::size_t n = g.dim();
  const Backend b = g.backend();
  const LieAlgebra& alg = g.alg();
  std::vector<Vector> e(n), Ae(n);
  for (std::size_t i = 0; i < n; ++i) {
    e[i] = unit_vector(n, i, b);
    Ae[i] = A.column(i);
  }
  auto br = [&](const Vector& x, const Vector& y, const Vector& z) { return g.ip(alg.bracket(x, y), z); };
  const Scalar two = Scalar::integer(2, b);
  return scan_triples(n, b, Formulation::Bracket, tol,
                      [&](std::size_t u, std::size_t v, std::size_t w, double& mag) {
                        const Vector &U = e[u], &V = e[v], &W = e[w];
                        return signed_sum({two * br(U, V, Ae[w]), br(Ae[v], W, U), br(U, W, Ae[v])},
                                          {br(Ae[u], V, W), br(U, Ae[v], W), br(V, W, Ae[u]),
                                           br(Ae[u], W, V)},
                                          mag);
                      });
}

CodazziReport has_harmonic_curvature(const PseudoEuclideanLieAlgebra& g, const Tolerance& tol) {
  LeviCivita lc = levi_civita(g);
  return codazzi_defect(g, lc, ricci_operator(g, lc).Ric, tol);
}

// ---------------------------------------------------------------------------
// condition systems

namespace {

struct Term {
  Scalar coef;
  Scalar value;
};

class ItemEval {
 public:
  ItemEval(std::string key, Backend b, double ref, const Tolerance& tol)
      : b_(b), ref_(ref), tol_(tol) {
    item_.key = std::move(key);
    item_.residual = Scalar::zero(b);
  }

  void eq(std::initializer_list<Term> terms) {
    Scalar s = Scalar::zero(b_);
    double mag = 0, coefs = 0;
    for (const auto& t : terms) {
      const Scalar x = t.coef * t.value;
      s += x;
      mag += std::fabs(x.to_double());
      coefs += std::fabs(t.coef.to_double());
    }
    ++item_.equations;
    if (item_.residual < s.abs()) item_.residual = s.abs();
    // relative to the terms actually present, plus a rounding floor for
    // ill-conditioned block bases
    const double floor = 1e3 * std::numeric_limits<double>::epsilon() * coefs * ref_;
    if (!negligible(s, mag, tol_) && std::fabs(s.to_double()) > floor) item_.pass = false;
  }

  ConditionItem done() const { return item_; }

 private:
  Backend b_;
  double ref_;
  Tolerance tol_;
  ConditionItem item_;
};

class ConditionSystems {
 public:
  ConditionSystems(const PseudoEuclideanLieAlgebra& g, const SplitDecomposition& d, const Tolerance& tol)
      : g_(g), d_(d), tol_(tol), b_(g.backend()) {
    double vmax = 0;
    for (const auto& h : d.h_blocks)
      for (const auto& v : h.basis) vmax = std::max(vmax, max_abs(v));
    if (d.l_part) {
      vmax = std::max({vmax, max_abs(d.l_part->e), max_abs(d.l_part->ebar)});
      if (!d.l_part->f.empty()) vmax = std::max(vmax, max_abs(d.l_part->f));
    }
    ref_ = std::max(1.0, g.alg().max_constant() * std::max(1.0, g.G().max_abs()) * vmax * vmax * vmax);
  }

  ConditionReport run(bool solved) {
    ConditionReport rep;
    rep.type = d_.type();
    rep.solved = solved;
    common(rep);
    if (d_.l_part) {
      const LPart& l = *d_.l_part;
      e_ = l.e;
      eb_ = l.ebar;
      f_ = l.f;
      a_ = l.a;
      bb_ = l.b;
      switch (l.type) {
        case OperatorType::ZZbar: solved ? zz_solved(rep) : zz_raw(rep); break;
        case OperatorType::A2: solved ? a2_solved(rep) : a2_raw(rep); break;
        case OperatorType::A3: solved ? a3_solved(rep) : a3_raw(rep); break;
        case OperatorType::Diag: break;
      }
    }
    for (const auto& it : rep.items) rep.overall = rep.overall && it.pass;
    return rep;
  }

  // The A2 systems assume A ebar = e + a ebar; for the -1 sign, -A has that
  // form with negated eigenvalues and the Codazzi condition is linear in A.
  static SplitDecomposition positive_a2(const SplitDecomposition& d) {
    SplitDecomposition out = d;
    for (auto& h : out.h_blocks) h.alpha = -h.alpha;
    out.l_part->a = -out.l_part->a;
    out.l_part->a2_sign = 1;
    return out;
  }

 private:
  const PseudoEuclideanLieAlgebra& g_;
  const SplitDecomposition& d_;
  Tolerance tol_;
  Backend b_;
  double ref_ = 1;
  Vector e_, eb_, f_;
  Scalar a_, bb_;

  Scalar k(long p, long q = 1) const { return Scalar::ratio(p, q, b_); }
  Scalar B(const Vector& x, const Vector& y, const Vector& z) const {
    return g_.ip(g_.alg().bracket(x, y), z);
  }
  ItemEval item(const std::string& key) const { return ItemEval(key, b_, ref_, tol_); }
  std::size_t r() const { return d_.h_blocks.size(); }
  const Scalar& al(std::size_t i) const { return d_.h_blocks[i].alpha; }
  const std::vector<Vector>& hb(std::size_t i) const { return d_.h_blocks[i].basis; }
  bool zero_shift(const Scalar& ai) const {
    return negligible(ai, std::max({1.0, std::fabs(a_.to_double())}), tol_);
  }

  // Over all ordered block pairs (i, j) and basis vectors u in h_i, v in h_j.
  void each_pair(const std::function<void(std::size_t, std::size_t, const Vector&, const Vector&)>& fn) const {
    for (std::size_t i = 0; i < r(); ++i)
      for (std::size_t j = 0; j < r(); ++j)
        for (const auto& u : hb(i))
          for (const auto& v : hb(j)) fn(i, j, u, v);
  }
  void each_single(const std::function<void(std::size_t, const Vector&)>& fn) const {
    for (std::size_t i = 0; i < r(); ++i)
      for (const auto& u : hb(i)) fn(i, u);
  }

  void common(ConditionReport& rep) const {
    ItemEval i1 = item("item1");
    for (std::size_t i = 0; i < r(); ++i)
      for (std::size_t j = 0; j < r(); ++j) {
        if (i == j) continue;
        for (const auto& u : hb(i))
          for (const auto& v : hb(i))
            for (const auto& w : hb(j)) {
              i1.eq({{k(1), B(u, v, w)}});
              i1.eq({{k(1), B(w, u, v)}, {k(1), B(w, v, u)}});
            }
      }
    rep.items.push_back(i1.done());
    ItemEval i2 = item("item2");
    for (std::size_t i = 0; i < r(); ++i)
      for (std::size_t j = 0; j < r(); ++j)
        for (std::size_t kk = 0; kk < r(); ++kk) {
          if (i == j || j == kk || i == kk) continue;
          Scalar dij = al(i) - al(j), djk = al(j) - al(kk);
          for (const auto& ui : hb(i))
            for (const auto& uj : hb(j))
              for (const auto& uk : hb(kk))
                i2.eq({{dij * dij, B(uj, uk, ui)}, {djk * djk, B(uj, ui, uk)}});
        }
    rep.items.push_back(i2.done());
  }

  // --- {n-2, zzbar} -------------------------------------------------------

  void zz_item3(ConditionReport& rep) const {
    ItemEval it = item("item3");
    it.eq({{k(1), B(e_, eb_, e_)}});
    it.eq({{k(1), B(e_, eb_, eb_)}});
    rep.items.push_back(it.done());
  }

  void zz_raw(ConditionReport& rep) const {
    zz_item3(rep);
    const Scalar& a = a_;
    const Scalar& b = bb_;
    const Vector &e = e_, &eb = eb_;
    ItemEval it = item("item4");
    each_pair([&](std::size_t i, std::size_t j, const Vector& u, const Vector& v) {
      const Scalar ai = al(i), aj = al(j);
      const Scalar s = k(2) * a - ai - aj, dj = aj - ai, t = k(2) * aj - ai - a, ma = a - ai;
      it.eq({{s, B(u, v, e)}, {-k(2) * b, B(u, v, eb)}, {dj, B(u, e, v)}, {dj, B(v, e, u)}});
      it.eq({{k(2) * b, B(u, v, e)}, {s, B(u, v, eb)}, {dj, B(u, eb, v)}, {dj, B(v, eb, u)}});
      it.eq({{t, B(u, e, v)}, {b, B(u, eb, v)}, {ma, B(e, v, u)}, {-b, B(eb, v, u)}, {ma, B(u, v, e)},
             {-b, B(u, v, eb)}});
      it.eq({{t, B(u, eb, v)}, {-b, B(u, e, v)}, {ma, B(eb, v, u)}, {b, B(e, v, u)}, {ma, B(u, v, eb)},
             {b, B(u, v, e)}});
    });
    each_single([&](std::size_t i, const Vector& u) {
      const Scalar ma = a - al(i);
      it.eq({{-ma, B(e, eb, u)}, {b, B(eb, u, eb)}, {b, B(e, u, e)}});
      it.eq({{k(2) * ma, B(e, u, e)}, {-k(3) * b, B(e, u, eb)}, {b, B(eb, u, e)}, {-b, B(e, eb, u)}});
      it.eq({{k(2) * ma, B(eb, u, eb)}, {k(3) * b, B(eb, u, e)}, {-b, B(e, u, eb)}, {-b, B(e, eb, u)}});
      it.eq({{k(2) * b, B(e, u, e)}, {ma, B(e, u, eb)}, {ma, B(eb, u, e)}, {-ma, B(e, eb, u)}});
      it.eq({{ma, B(eb, u, e)}, {-k(2) * b, B(eb, u, eb)}, {ma, B(e, u, eb)}, {ma, B(e, eb, u)}});
    });
    rep.items.push_back(it.done());
  }

  void zz_solved(ConditionReport& rep) const {
    zz_item3(rep);
    const Scalar& b = bb_;
    const Vector &e = e_, &eb = eb_;
    ItemEval i4 = item("item4");
    for (std::size_t i = 0; i < r(); ++i) {
      const Scalar ai = a_ - al(i);
      for (const auto& u : hb(i))
        for (const auto& v : hb(i)) {
          i4.eq({{k(1), B(u, v, e)}});
          i4.eq({{k(1), B(u, v, eb)}});
          i4.eq({{k(1), B(e, u, v)}, {k(1), B(e, v, u)}});
          i4.eq({{k(1), B(eb, u, v)}, {k(1), B(eb, v, u)}});
        }
      const Scalar c1 = ai / (k(2) * b), c2 = (ai * ai - b * b) / (k(4) * b * b);
      for (const auto& u : hb(i)) {
        const Scalar U = B(e, eb, u);
        i4.eq({{k(1), B(e, u, e)}, {-c1, U}});
        i4.eq({{k(1), B(eb, u, eb)}, {-c1, U}});
        i4.eq({{k(1), B(e, u, eb)}, {-c2, U}});
        i4.eq({{k(1), B(eb, u, e)}, {c2, U}});
      }
    }
    rep.items.push_back(i4.done());
    ItemEval i5 = item("item5");
    each_pair([&](std::size_t i, std::size_t j, const Vector& u, const Vector& v) {
      if (i == j) return;
      const Scalar ai = a_ - al(i), d2 = (al(i) - al(j)) * (al(i) - al(j));
      const Scalar p = (b * b - ai * ai) / d2, q = k(2) * b * ai / d2;
      i5.eq({{k(1), B(u, e, v)}, {-p, B(u, v, e)}, {-q, B(u, v, eb)}});
      i5.eq({{k(1), B(u, eb, v)}, {q, B(u, v, e)}, {-p, B(u, v, eb)}});
    });
    rep.items.push_back(i5.done());
  }

  // --- {n, a2} ------------------------------------------------------------

  void a2_item3(ConditionReport& rep) const {
    ItemEval it = item("item3");
    it.eq({{k(1), B(e_, eb_, e_)}});
    rep.items.push_back(it.done());
  }

  void a2_raw(ConditionReport& rep) const {
    a2_item3(rep);
    const Scalar& a = a_;
    const Vector &e = e_, &eb = eb_;
    ItemEval it = item("item4");
    each_pair([&](std::size_t i, std::size_t j, const Vector& u, const Vector& v) {
      const Scalar ai = al(i), aj = al(j);
      const Scalar s = k(2) * a - ai - aj, dj = aj - ai, t = k(2) * aj - ai - a, ma = a - ai;
      it.eq({{s, B(u, v, e)}, {dj, B(u, e, v)}, {dj, B(v, e, u)}});
      it.eq({{k(2), B(u, v, e)}, {s, B(u, v, eb)}, {dj, B(u, eb, v)}, {dj, B(v, eb, u)}});
      it.eq({{t, B(u, e, v)}, {ma, B(e, v, u)}, {ma, B(u, v, e)}});
      it.eq({{k(-1), B(u, e, v)}, {k(-1), B(v, e, u)}, {t, B(u, eb, v)}, {ma, B(eb, v, u)},
             {ma, B(u, v, eb)}, {k(1), B(u, v, e)}});
    });
    each_single([&](std::size_t i, const Vector& u) {
      const Scalar ma = a - al(i);
      it.eq({{-k(2) * ma, B(e, eb, u)}, {k(2), B(e, u, e)}});
      it.eq({{k(2) * ma, B(e, u, e)}});
      it.eq({{k(3), B(eb, u, e)}, {k(2) * ma, B(eb, u, eb)}, {k(-1), B(e, u, eb)}, {k(-1), B(e, eb, u)}});
      it.eq({{k(2), B(e, u, e)}, {ma, B(e, u, eb)}, {ma, B(eb, u, e)}, {-ma, B(e, eb, u)}});
      it.eq({{ma, B(eb, u, e)}, {ma, B(e, u, eb)}, {-ma, B(eb, e, u)}});
    });
    rep.items.push_back(it.done());
  }

  void a2_solved(ConditionReport& rep) const {
    a2_item3(rep);
    const Vector &e = e_, &eb = eb_;
    ItemEval i4 = item("item4");
    for (std::size_t i = 0; i < r(); ++i) {
      const Scalar ai = a_ - al(i);
      const bool z = zero_shift(ai);
      for (const auto& u : hb(i))
        for (const auto& v : hb(i)) {
          i4.eq({{k(1), B(u, v, e)}});
          i4.eq({{k(1), B(e, u, v)}, {k(1), B(e, v, u)}});
          if (!z) {
            i4.eq({{k(1), B(u, v, eb)}});
            i4.eq({{k(1), B(eb, u, v)}, {k(1), B(eb, v, u)}});
          }
        }
      for (const auto& u : hb(i)) {
        i4.eq({{k(1), B(e, u, e)}});
        if (z) {
          i4.eq({{k(1), B(e, eb, u)}, {k(-3), B(eb, u, e)}, {k(1), B(e, u, eb)}});
        } else {
          i4.eq({{k(1), B(e, eb, u)}});
          i4.eq({{k(1), B(u, eb, e)}, {k(1), B(u, e, eb)}});
          i4.eq({{k(1), B(eb, u, eb)}, {-k(2) / ai, B(e, u, eb)}});
        }
      }
    }
    rep.items.push_back(i4.done());
    ItemEval i5 = item("item5");
    each_pair([&](std::size_t i, std::size_t j, const Vector& u, const Vector& v) {
      if (i == j) return;
      const Scalar ai = a_ - al(i), d2 = (al(i) - al(j)) * (al(i) - al(j));
      i5.eq({{k(1), B(e, u, v)}, {-ai * ai / d2, B(u, v, e)}});
      i5.eq({{k(1), B(eb, u, v)}, {-k(2) * ai / d2, B(u, v, e)}, {-ai * ai / d2, B(u, v, eb)}});
    });
    rep.items.push_back(i5.done());
  }

  // --- {n, a3} ------------------------------------------------------------

  void a3_raw(ConditionReport& rep) const {
    const Scalar& a = a_;
    const Vector &e = e_, &eb = eb_, &f = f_;
    ItemEval i3 = item("item3");
    i3.eq({{k(1), B(e, f, e)}});
    i3.eq({{k(1), B(f, e, f)}});
    i3.eq({{k(1), B(e, eb, e)}});
    i3.eq({{k(3), B(e, eb, f)}, {k(-1), B(e, f, eb)}, {k(1), B(f, eb, e)}});
    i3.eq({{k(2), B(eb, f, f)}, {k(-1), B(eb, e, eb)}});
    i3.eq({{k(3), B(eb, f, e)}, {k(-1), B(eb, e, f)}, {k(1), B(e, f, eb)}});
    rep.items.push_back(i3.done());
    ItemEval it = item("item4");
    each_pair([&](std::size_t i, std::size_t j, const Vector& u, const Vector& v) {
      const Scalar ai = al(i), aj = al(j);
      const Scalar s = k(2) * a - ai - aj, dj = aj - ai, t = k(2) * aj - ai - a, ma = a - ai;
      it.eq({{s, B(u, v, e)}, {dj, B(u, e, v)}, {dj, B(v, e, u)}});
      it.eq({{k(2), B(u, v, e)}, {s, B(u, v, f)}, {dj, B(u, f, v)}, {dj, B(v, f, u)}});
      it.eq({{k(2), B(u, v, f)}, {s, B(u, v, eb)}, {dj, B(u, eb, v)}, {dj, B(v, eb, u)}});
      it.eq({{t, B(u, e, v)}, {ma, B(e, v, u)}, {ma, B(u, v, e)}});
      it.eq({{k(-1), B(u, e, v)}, {k(-1), B(v, e, u)}, {t, B(u, f, v)}, {ma, B(f, v, u)}, {ma, B(u, v, f)},
             {k(1), B(u, v, e)}});
      it.eq({{k(-1), B(u, f, v)}, {k(-1), B(v, f, u)}, {t, B(u, eb, v)}, {ma, B(eb, v, u)},
             {ma, B(u, v, eb)}, {k(1), B(u, v, f)}});
    });
    each_single([&](std::size_t i, const Vector& u) {
      const Scalar ma = a - al(i);
      const Scalar n2 = -k(2) * ma;  // 2 alpha_i - 2a
      it.eq({{n2, B(e, f, u)}, {k(2), B(e, u, e)}});
      it.eq({{n2, B(e, eb, u)}, {k(-1), B(e, f, u)}, {k(1), B(f, u, e)}, {k(1), B(e, u, f)}});
      it.eq({{n2, B(f, eb, u)}, {k(-1), B(e, eb, u)}, {k(-1), B(eb, u, e)}, {k(-1), B(e, u, eb)},
             {k(2), B(f, u, f)}});
      it.eq({{k(2) * ma, B(e, u, e)}});
      it.eq({{k(3), B(f, u, e)}, {k(2) * ma, B(f, u, f)}, {k(-1), B(e, u, f)}, {k(-1), B(e, f, u)}});
      it.eq({{k(3), B(eb, u, f)}, {k(2) * ma, B(eb, u, eb)}, {k(-1), B(f, u, eb)}, {k(-1), B(f, eb, u)}});
      it.eq({{k(2), B(e, u, e)}, {ma, B(e, u, f)}, {ma, B(f, u, e)}, {-ma, B(e, f, u)}});
      it.eq({{ma, B(f, u, e)}, {ma, B(e, u, f)}, {ma, B(e, f, u)}});
      it.eq({{k(2), B(e, u, f)}, {ma, B(e, u, eb)}, {ma, B(eb, u, e)}, {ma, B(eb, e, u)}});
      it.eq({{ma, B(eb, u, e)}, {ma, B(e, u, eb)}, {k(-1), B(f, u, e)}, {k(1), B(e, u, f)}, {k(1), B(e, f, u)},
             {ma, B(e, eb, u)}});
      it.eq({{k(2), B(f, u, f)}, {ma, B(f, u, eb)}, {k(-1), B(e, u, eb)}, {k(1), B(eb, u, e)},
             {ma, B(eb, u, f)}, {-ma, B(f, eb, u)}, {k(-1), B(e, eb, u)}});
      it.eq({{k(2), B(eb, u, e)}, {ma, B(eb, u, f)}, {ma, B(f, u, eb)}, {ma, B(f, eb, u)}});
    });
    rep.items.push_back(it.done());
  }

  void a3_solved(ConditionReport& rep) const {
    const Vector &e = e_, &eb = eb_, &f = f_;
    ItemEval i3 = item("item3");
    i3.eq({{k(1), B(e, f, e)}});
    i3.eq({{k(1), B(f, e, f)}});
    i3.eq({{k(1), B(e, eb, e)}});
    i3.eq({{k(1), B(eb, f, e)}, {k(2), B(e, eb, f)}});
    i3.eq({{k(1), B(eb, f, f)}, {k(1, 2), B(e, eb, eb)}});
    i3.eq({{k(1), B(e, f, eb)}, {k(-5), B(e, eb, f)}});
    rep.items.push_back(i3.done());
    ItemEval i4 = item("item4");
    for (std::size_t i = 0; i < r(); ++i) {
      const Scalar ai = a_ - al(i);
      const bool z = zero_shift(ai);
      for (const auto& u : hb(i))
        for (const auto& v : hb(i)) {
          i4.eq({{k(1), B(u, v, e)}});
          i4.eq({{k(1), B(u, v, f)}});
          i4.eq({{k(1), B(u, e, v)}, {k(1), B(v, e, u)}});
          i4.eq({{k(1), B(u, f, v)}, {k(1), B(v, f, u)}});
          if (!z) {
            i4.eq({{k(1), B(u, v, eb)}});
            i4.eq({{k(1), B(eb, u, v)}, {k(1), B(eb, v, u)}});
          }
        }
      for (const auto& u : hb(i)) {
        if (z) {
          i4.eq({{k(1), B(e, u, e)}});
          i4.eq({{k(1), B(e, u, f)}});
          i4.eq({{k(1), B(eb, u, e)}});
          i4.eq({{k(1), B(e, f, u)}});
          i4.eq({{k(1), B(f, u, e)}});
          i4.eq({{k(-1), B(e, eb, u)}, {k(-1), B(e, u, eb)}, {k(2), B(f, u, f)}});
          i4.eq({{k(3), B(eb, u, f)}, {k(-1), B(f, u, eb)}, {k(-1), B(f, eb, u)}});
        } else {
          const Scalar T = B(f, eb, u), W = B(eb, u, eb), V = B(eb, u, f);
          i4.eq({{k(1), B(e, f, u)}});
          i4.eq({{k(1), B(e, u, e)}});
          i4.eq({{k(1), B(e, eb, u)}});
          i4.eq({{k(1), B(e, u, f)}, {-ai * ai / k(3), T}});
          i4.eq({{k(1), B(f, u, e)}, {ai * ai / k(3), T}});
          i4.eq({{k(1), B(f, u, f)}, {-k(2) * ai / k(3), T}});
          i4.eq({{k(1), B(e, u, eb)}, {-ai * ai, W}, {-k(2) * ai, V}, {k(2) * ai / k(3), T}});
          i4.eq({{k(1), B(eb, u, e)}, {ai * ai, W}, {k(2) * ai, V}});
          i4.eq({{k(1), B(f, u, eb)}, {-k(2) * ai, W}, {k(-3), V}, {k(1), T}});
        }
      }
    }
    rep.items.push_back(i4.done());
    ItemEval i5 = item("item5");
    each_pair([&](std::size_t i, std::size_t j, const Vector& u, const Vector& v) {
      if (i == j) return;
      const Scalar ai = a_ - al(i), d2 = (al(i) - al(j)) * (al(i) - al(j));
      i5.eq({{k(1), B(u, e, v)}, {ai * ai / d2, B(u, v, e)}});
      // coupling through <[u,v],e>, not ebar
      i5.eq({{k(1), B(u, f, v)}, {ai * ai / d2, B(u, v, f)}, {k(2) * ai / d2, B(u, v, e)}});
      i5.eq({{k(1), B(u, eb, v)}, {ai * ai / d2, B(u, v, eb)}, {k(2) * ai / d2, B(u, v, f)},
             {k(1) / d2, B(u, v, e)}});
    });
    rep.items.push_back(i5.done());
  }
};

}  // namespace

ConditionReport check_type_conditions(const PseudoEuclideanLieAlgebra& g, const SplitDecomposition& d,
                                      bool solved, const Tolerance& tol) {
  validate_decomposition(g, d, tol);
  if (d.l_part && d.l_part->type == OperatorType::A2 && d.l_part->a2_sign == -1) {
    SplitDecomposition flipped = ConditionSystems::positive_a2(d);
    ConditionReport rep = ConditionSystems(g, flipped, tol).run(solved);
    return rep;
  }
  return ConditionSystems(g, d, tol).run(solved);
}

}  // namespace lcz
