#include "lcz/classify.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numeric>

#include "lcz/forms.hpp"
#include "lcz/geometry.hpp"

namespace lcz {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

MatrixXd to_eigen(const Matrix& m) {
  MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_double();
  return out;
}

Matrix from_eigen(const MatrixXd& m) {
  Matrix out(m.rows(), m.cols(), Backend::Float);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Scalar(m(i, j));
  return out;
}

struct RealEig {
  Scalar value;
  double approx = 0;
  std::size_t alg = 0;
  std::size_t geo = 0;
};

struct Spectrum {
  std::vector<RealEig> real;
  bool complex_pair = false;
  Scalar a_re, b_sq;  // complex pair a +- i b
  double a = 0, b = 0;
};

std::vector<std::complex<double>> float_eigenvalues(const MatrixXd& A) {
  Eigen::EigenSolver<MatrixXd> es(A, false);
  std::vector<std::complex<double>> ev;
  for (Eigen::Index i = 0; i < A.rows(); ++i) ev.push_back(es.eigenvalues()(i));
  return ev;
}

std::size_t float_rank(const MatrixXd& M, double cut) {
  Eigen::JacobiSVD<MatrixXd> svd(M);
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > cut) ++r;
  return r;
}

// Orthonormal basis (Euclidean) for the k smallest right singular directions.
MatrixXd null_basis(const MatrixXd& M, std::size_t k) {
  Eigen::JacobiSVD<MatrixXd> svd(M, Eigen::ComputeFullV);
  const Eigen::Index n = M.cols();
  return svd.matrixV().rightCols(static_cast<Eigen::Index>(k)).eval().leftCols(static_cast<Eigen::Index>(k)).topRows(n);
}

MatrixXd mat_pow(const MatrixXd& M, std::size_t k) {
  MatrixXd r = MatrixXd::Identity(M.rows(), M.cols());
  for (std::size_t i = 0; i < k; ++i) r = r * M;
  return r;
}

// ---- float spectral analysis ------------------------------------------------

Spectrum spectrum_float(const MatrixXd& A, const ClassifyOptions& opt) {
  const Eigen::Index n = A.rows();
  const double normA = A.cwiseAbs().rowwise().sum().maxCoeff();
  const double tau = opt.cluster * (1.0 + normA);
  const double cut = opt.rank_cut * std::max(1.0, normA);
  const double tight = opt.tight_cluster * (1.0 + normA);
  Eigen::EigenSolver<MatrixXd> es(A, true);
  std::vector<std::complex<double>> ev;
  for (Eigen::Index i = 0; i < n; ++i) ev.push_back(es.eigenvalues()(i));
  Eigen::MatrixXcd V = es.eigenvectors();
  for (Eigen::Index j = 0; j < n; ++j) V.col(j).normalize();
  // sine of the angle between two computed eigenvectors; a Jordan block split
  // by rounding leaves them nearly parallel
  auto sine = [&](std::size_t i, std::size_t j) {
    Eigen::MatrixXcd P(n, 2);
    P.col(0) = V.col(static_cast<Eigen::Index>(i));
    P.col(1) = V.col(static_cast<Eigen::Index>(j));
    return Eigen::JacobiSVD<Eigen::MatrixXcd>(P).singularValues()(1);
  };
  // single-linkage clustering
  std::vector<std::size_t> parent(ev.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> root = [&](std::size_t i) {
    return parent[i] == i ? i : parent[i] = root(parent[i]);
  };
  for (std::size_t i = 0; i < ev.size(); ++i)
    for (std::size_t j = i + 1; j < ev.size(); ++j) {
      const double gap = std::abs(ev[i] - ev[j]);
      if (gap <= tight) {
        parent[root(i)] = root(j);
      } else if (gap <= 10 * tau) {
        const double s = sine(i, j);
        if (s <= opt.parallel_sine && gap <= tau) parent[root(i)] = root(j);
        else if (s <= opt.parallel_sine || (gap <= tau && s < 0.1))
          fail(ErrorCode::DefectiveAmbiguity, "eigenvalue clusters closer than the ambiguity band");
      }
    }
  std::vector<std::vector<std::size_t>> groups;
  std::vector<long> gid(ev.size(), -1);
  for (std::size_t i = 0; i < ev.size(); ++i) {
    std::size_t r = root(i);
    if (gid[r] < 0) {
      gid[r] = static_cast<long>(groups.size());
      groups.emplace_back();
    }
    groups[static_cast<std::size_t>(gid[r])].push_back(i);
  }

  Spectrum sp;
  std::size_t n_complex = 0;
  for (const auto& grp : groups) {
    std::complex<double> mu = 0;
    for (auto i : grp) mu += ev[i];
    mu /= static_cast<double>(grp.size());
    if (std::fabs(mu.imag()) > tau) {
      ++n_complex;
      if (grp.size() != 1) fail(ErrorCode::DefectiveAmbiguity, "repeated complex eigenvalue");
      if (mu.imag() > 0) {
        sp.complex_pair = true;
        sp.a = mu.real();
        sp.b = mu.imag();
      }
      continue;
    }
    RealEig r;
    r.approx = mu.real();
    r.value = Scalar(mu.real());
    r.alg = grp.size();
    MatrixXd N = A - r.approx * MatrixXd::Identity(n, n);
    r.geo = static_cast<std::size_t>(n) - float_rank(N, cut);
    if (r.geo == 0 || r.geo > r.alg) fail(ErrorCode::DefectiveAmbiguity, "eigenspace rank is inconsistent");
    // the unique nontrivial Jordan block must close at its size
    std::size_t k = r.alg - r.geo + 1;
    if (float_rank(mat_pow(N, k), cut) != static_cast<std::size_t>(n) - r.alg)
      fail(ErrorCode::DefectiveAmbiguity, "generalized eigenspace rank is inconsistent");
    sp.real.push_back(r);
  }
  if (n_complex != 0 && n_complex != 2)
    fail(ErrorCode::DefectiveAmbiguity, "complex spectrum is not a single conjugate pair");
  if (sp.complex_pair) {
    sp.a_re = Scalar(sp.a);
    sp.b_sq = Scalar(sp.b * sp.b);
  }
  return sp;
}

// ---- exact spectral analysis ------------------------------------------------

std::vector<mpq_class> divide_root(const std::vector<mpq_class>& c, const mpq_class& r) {
  // c ascending; returns c / (x - r)
  const std::size_t d = c.size() - 1;
  std::vector<mpq_class> q(d);
  mpq_class carry = c[d];
  for (std::size_t i = d; i-- > 0;) {
    q[i] = carry;
    carry = c[i] + carry * r;
  }
  return q;
}

mpq_class horner(const std::vector<mpq_class>& c, const mpq_class& x) {
  mpq_class v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
  return v;
}

std::vector<mpz_class> divisors(mpz_class v) {
  v = abs(v);
  std::vector<std::pair<mpz_class, unsigned>> fac;
  for (mpz_class p = 2; p * p <= v && p < 1000000; ++p) {
    unsigned e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    if (e) fac.emplace_back(p, e);
  }
  if (v > 1) fac.emplace_back(v, 1);
  std::vector<mpz_class> ds{1};
  for (const auto& [p, e] : fac) {
    std::size_t cur = ds.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < cur; ++i) ds.push_back(ds[i] * pk);
    }
  }
  return ds;
}

Spectrum spectrum_exact(const Matrix& A, const MatrixXd& Af) {
  const std::size_t n = A.rows();
  std::vector<Scalar> cs = char_poly(A);
  std::vector<mpq_class> c;
  for (const auto& s : cs) c.push_back(s.rational());

  std::vector<std::pair<mpq_class, std::size_t>> roots;
  std::size_t zero_mult = 0;
  while (c.size() > 1 && c[0] == 0) {
    c.erase(c.begin());
    ++zero_mult;
  }
  if (zero_mult) roots.emplace_back(0, zero_mult);

  if (c.size() > 1) {
    mpz_class den = 1;
    for (const auto& x : c) den = lcm(den, mpz_class(x.get_den()));
    mpz_class a0 = mpz_class(c.front() * den), an = mpz_class(c.back() * den);
    // candidates p/q from the rational root theorem, filtered by the float spectrum
    auto ev = float_eigenvalues(Af);
    std::vector<mpq_class> cands;
    auto pd = divisors(a0), qd = divisors(an);
    for (const auto& p : pd)
      for (const auto& q : qd)
        for (int s : {1, -1}) {
          mpq_class r(s * p, q);
          r.canonicalize();
          double rd = r.get_d();
          bool near = false;
          for (const auto& z : ev)
            if (std::abs(z - std::complex<double>(rd, 0)) <= 1e-3 * (1 + std::fabs(rd))) near = true;
          if (near && std::find(cands.begin(), cands.end(), r) == cands.end()) cands.push_back(r);
        }
    std::sort(cands.begin(), cands.end());
    for (const auto& r : cands) {
      std::size_t m = 0;
      while (c.size() > 1 && horner(c, r) == 0) {
        c = divide_root(c, r);
        ++m;
      }
      if (m) roots.emplace_back(r, m);
    }
  }
  Spectrum sp;
  const std::size_t left = c.size() - 1;
  if (left == 2) {
    // x^2 + p x + q after normalizing
    mpq_class p = c[1] / c[2], q = c[0] / c[2];
    mpq_class disc = p * p - 4 * q;
    if (disc >= 0) fail(ErrorCode::ExactUnsupported, "irrational real eigenvalues need the float backend");
    sp.complex_pair = true;
    sp.a_re = Scalar(mpq_class(-p / 2));
    sp.b_sq = Scalar(mpq_class(-disc / 4));
    sp.a = sp.a_re.to_double();
    sp.b = std::sqrt(sp.b_sq.to_double());
  } else if (left != 0) {
    fail(ErrorCode::ExactUnsupported, "characteristic polynomial has an irreducible factor of degree > 2");
  }
  std::sort(roots.begin(), roots.end());
  for (const auto& [r, m] : roots) {
    RealEig e;
    e.value = Scalar(r);
    e.approx = e.value.to_double();
    e.alg = m;
    Matrix N = A - e.value * Matrix::identity(n, Backend::Exact);
    e.geo = n - rank(N);
    std::size_t k = e.alg - e.geo + 1;
    Matrix Nk = Matrix::identity(n, Backend::Exact);
    for (std::size_t i = 0; i < k; ++i) Nk = Nk * N;
    if (rank(Nk) != n - e.alg) fail(ErrorCode::NotLorentzian, "Jordan structure impossible for a Lorentzian metric");
    sp.real.push_back(e);
  }
  return sp;
}

// ---- canonical basis --------------------------------------------------------

struct Builder {
  const MatrixXd& A;
  const MatrixXd& G;
  std::size_t n;
  double cut;

  double ip(const VectorXd& u, const VectorXd& v) const { return u.dot(G * v); }

  // G-orthonormal eigenvectors for mu inside the subspace selected by proj;
  // keeps the `count` directions with largest |norm|.
  std::vector<std::pair<VectorXd, int>> eigvecs(double mu, std::size_t geo, std::size_t count,
                                                const std::function<VectorXd(const VectorXd&)>& proj) const {
    MatrixXd V = null_basis(A - mu * MatrixXd::Identity(n, n), geo);
    for (Eigen::Index j = 0; j < V.cols(); ++j) V.col(j) = proj(V.col(j));
    MatrixXd K = V.transpose() * G * V;
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(K);
    std::vector<Eigen::Index> idx(static_cast<std::size_t>(K.rows()));
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](auto x, auto y) {
      return std::fabs(es.eigenvalues()(x)) > std::fabs(es.eigenvalues()(y));
    });
    std::vector<std::pair<VectorXd, int>> out;
    for (std::size_t t = 0; t < count; ++t) {
      double d = es.eigenvalues()(idx[t]);
      VectorXd v = V * es.eigenvectors().col(idx[t]) / std::sqrt(std::fabs(d));
      out.emplace_back(v, d > 0 ? 1 : -1);
    }
    return out;
  }
};

Matrix canonical_l_block(OperatorType t, double a, double b, int sign) {
  switch (t) {
    case OperatorType::ZZbar: return Matrix::from_doubles({{a, b}, {-b, a}});
    case OperatorType::A2: return Matrix::from_doubles({{a, double(sign)}, {0, a}});
    case OperatorType::A3: return Matrix::from_doubles({{a, 1, 0}, {0, a, 1}, {0, 0, a}});
    default: return Matrix(0, 0, Backend::Float);
  }
}

}  // namespace

OperatorClassification classify_symmetric_operator(const Matrix& Ain, const BilinearForm& Gin,
                                                   const ClassifyOptions& opt) {
  const std::size_t n = Ain.rows();
  if (!Ain.square() || Gin.dim() != n) fail(ErrorCode::DimensionMismatch, "operator and metric sizes differ");
  if (Ain.backend() != Gin.backend()) fail(ErrorCode::BackendMismatch, "operator and metric backends differ");
  if (n < 3) fail(ErrorCode::BadParam, "classification needs dimension at least 3");
  Signature sig = signature_of_form(Gin, opt.tol);
  if (!(sig.q == 1 && sig.p + 1 == n)) fail(ErrorCode::NotLorentzian, "metric is not Lorentzian");
  {
    Matrix GA = Gin.matrix() * Ain;
    const double scale = GA.max_abs();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (!negligible(GA(i, j) - GA(j, i), scale, opt.tol))
          fail(ErrorCode::NotSelfAdjoint, "operator is not self-adjoint for the metric");
  }
  const Backend bk = Ain.backend();
  const MatrixXd A = to_eigen(Ain), G = to_eigen(Gin.matrix());
  const double normA = A.cwiseAbs().rowwise().sum().maxCoeff();
  Spectrum sp = bk == Backend::Exact ? spectrum_exact(Ain, A) : spectrum_float(A, opt);

  OperatorClassification C;
  C.backend = bk;
  // type from Jordan data
  const RealEig* defective = nullptr;
  for (const auto& r : sp.real)
    if (r.alg > r.geo) {
      if (defective) fail(ErrorCode::DefectiveAmbiguity, "more than one defective eigenvalue");
      defective = &r;
    }
  if (sp.complex_pair) {
    if (defective) fail(ErrorCode::DefectiveAmbiguity, "defective eigenvalue next to a complex pair");
    C.type = OperatorType::ZZbar;
    C.a = sp.a_re;
    C.b_squared = sp.b_sq;
    C.b = sp.b;
  } else if (defective) {
    std::size_t k = defective->alg - defective->geo + 1;
    if (k == 2) C.type = OperatorType::A2;
    else if (k == 3) C.type = OperatorType::A3;
    else fail(ErrorCode::NotLorentzian, "Jordan block larger than 3");
    C.a = defective->value;
  } else {
    C.type = OperatorType::Diag;
  }

  Builder bd{A, G, n, opt.rank_cut * std::max(1.0, normA)};
  std::vector<VectorXd> lvec;  // e, ebar (or e, f, ebar)
  auto id = [](const VectorXd& v) { return v; };
  std::function<VectorXd(const VectorXd&)> proj = id;

  if (C.type == OperatorType::ZZbar) {
    const double a = sp.a, b = sp.b;
    MatrixXd Q = (A - a * MatrixXd::Identity(n, n)) * (A - a * MatrixXd::Identity(n, n)) +
                 b * b * MatrixXd::Identity(n, n);
    MatrixXd W = null_basis(Q, 2);
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(W.transpose() * G * W);
    double dm = es.eigenvalues()(0), dp = es.eigenvalues()(1);
    if (!(dm < 0 && dp > 0)) fail(ErrorCode::DefectiveAmbiguity, "complex-pair plane is not Lorentzian");
    VectorXd wp = W * es.eigenvectors().col(1) / std::sqrt(dp);
    VectorXd wm = W * es.eigenvectors().col(0) / std::sqrt(-dm);
    VectorXd n1 = (wp + wm) / std::sqrt(2.0), n2 = (wp - wm) / std::sqrt(2.0);
    double r = bd.ip(A * n2, n2);  // coefficient of n1 in A n2
    if (r < 0) std::swap(n1, n2);
    r = bd.ip(A * n2, n2);
    double s = bd.ip(A * n1, n1);  // coefficient of n2 in A n1
    double lam = std::pow(-r / s, 0.25);
    lvec = {lam * n1, n2 / lam};
  } else if (C.type == OperatorType::A2) {
    const double a = defective->approx;
    MatrixXd N = A - a * MatrixXd::Identity(n, n);
    MatrixXd V = null_basis(N * N, defective->alg);
    Eigen::JacobiSVD<MatrixXd> svd(N * V, Eigen::ComputeFullV);
    VectorXd x = V * svd.matrixV().col(0);
    VectorXd e0 = N * x;
    double c = bd.ip(e0, x);
    int sigma = c > 0 ? 1 : -1;
    double lam = 1.0 / std::sqrt(std::fabs(c));
    VectorXd eb = lam * x, e = sigma * lam * e0;
    eb -= 0.5 * bd.ip(eb, eb) * e;
    C.a2_sign = sigma;
    lvec = {e, eb};
  } else if (C.type == OperatorType::A3) {
    const double a = defective->approx;
    MatrixXd N = A - a * MatrixXd::Identity(n, n);
    MatrixXd V = null_basis(N * N * N, defective->alg);
    Eigen::JacobiSVD<MatrixXd> svd(N * N * V, Eigen::ComputeFullV);
    VectorXd x = V * svd.matrixV().col(0);
    VectorXd f0 = N * x, e0 = N * f0;
    double c = bd.ip(e0, x);
    if (c <= 0) fail(ErrorCode::DefectiveAmbiguity, "Jordan-3 chain has the wrong causal character");
    double p = bd.ip(x, x), q = bd.ip(x, f0);
    double beta = -q / (2 * c);
    double gamma = -(p + 2 * beta * q + beta * beta * c) / (2 * c);
    VectorXd xs = x + beta * f0 + gamma * e0, fs = f0 + beta * e0;
    double lam = 1.0 / std::sqrt(c);
    lvec = {lam * e0, lam * fs, lam * xs};
  }

  if (C.type == OperatorType::ZZbar || C.type == OperatorType::A2) {
    VectorXd e = lvec[0], eb = lvec[1];
    proj = [&bd, e, eb](const VectorXd& v) -> VectorXd {
      return v - bd.ip(v, eb) * e - bd.ip(v, e) * eb;
    };
  } else if (C.type == OperatorType::A3) {
    VectorXd e = lvec[0], f = lvec[1], eb = lvec[2];
    proj = [&bd, e, f, eb](const VectorXd& v) -> VectorXd {
      return v - bd.ip(v, eb) * e - bd.ip(v, f) * f - bd.ip(v, e) * eb;
    };
  }

  // h columns: spacelike first in ascending eigenvalue order; a Diag timelike
  // vector goes last.
  std::vector<std::pair<VectorXd, Scalar>> hcols;
  std::optional<std::pair<VectorXd, Scalar>> timelike;
  std::vector<RealEig> reals = sp.real;
  std::sort(reals.begin(), reals.end(), [](const RealEig& x, const RealEig& y) { return x.approx < y.approx; });
  for (const auto& r : reals) {
    std::size_t count = r.alg;
    if (defective && r.approx == defective->approx) count = r.alg - (r.alg - r.geo + 1);
    if (count == 0) continue;
    for (auto& [v, sg] : bd.eigvecs(r.approx, r.geo, count, proj)) {
      if (sg < 0) {
        if (C.type != OperatorType::Diag || timelike)
          fail(ErrorCode::DefectiveAmbiguity, "unexpected timelike eigenvector");
        timelike = std::make_pair(v, r.value);
      } else {
        hcols.emplace_back(v, r.value);
      }
    }
    for (std::size_t t = 0; t < count; ++t) C.alphas.push_back(r.value);
  }
  if (C.type == OperatorType::Diag) {
    if (!timelike) fail(ErrorCode::DefectiveAmbiguity, "no timelike eigenvector found");
    hcols.push_back(*timelike);
  }

  MatrixXd B(n, n);
  std::size_t col = 0;
  for (const auto& [v, al] : hcols) {
    B.col(static_cast<Eigen::Index>(col++)) = v;
    C.column_alpha.push_back(al);
  }
  for (const auto& v : lvec) B.col(static_cast<Eigen::Index>(col++)) = v;
  if (col != n) fail(ErrorCode::DefectiveAmbiguity, "canonical basis has the wrong size");

  const std::size_t nh = hcols.size();
  Matrix cA(n, n, Backend::Float), cG(n, n, Backend::Float);
  for (std::size_t i = 0; i < nh; ++i) {
    cA(i, i) = Scalar(C.column_alpha[i].to_double());
    cG(i, i) = Scalar(1.0);
  }
  if (C.type == OperatorType::Diag) cG(n - 1, n - 1) = Scalar(-1.0);
  Matrix blk = canonical_l_block(C.type, C.a ? C.a->to_double() : 0.0, C.b, C.a2_sign);
  for (std::size_t i = 0; i < blk.rows(); ++i)
    for (std::size_t j = 0; j < blk.cols(); ++j) cA(nh + i, nh + j) = blk(i, j);
  if (C.type == OperatorType::ZZbar || C.type == OperatorType::A2) {
    cG(nh, nh + 1) = Scalar(1.0);
    cG(nh + 1, nh) = Scalar(1.0);
  } else if (C.type == OperatorType::A3) {
    cG(nh, nh + 2) = Scalar(1.0);
    cG(nh + 1, nh + 1) = Scalar(1.0);
    cG(nh + 2, nh) = Scalar(1.0);
  }
  C.basis = from_eigen(B);
  C.P = from_eigen(B.inverse());
  C.canonical_A = cA;
  C.canonical_G = cG;
  return C;
}

SplitDecomposition decomposition_from_classification(const OperatorClassification& C,
                                                     const PseudoEuclideanLieAlgebra& g) {
  const std::size_t n = g.dim();
  if (C.basis.rows() != n) fail(ErrorCode::DimensionMismatch, "classification does not match the algebra");
  SplitDecomposition d;
  const std::size_t nh = C.column_alpha.size();
  for (std::size_t j = 0; j < nh; ++j) {
    const Scalar& al = C.column_alpha[j];
    auto it = std::find_if(d.h_blocks.begin(), d.h_blocks.end(), [&](const HBlock& h) {
      return h.alpha.to_double() == al.to_double();
    });
    if (it == d.h_blocks.end()) {
      d.h_blocks.push_back({Scalar(al.to_double()), {}});
      it = d.h_blocks.end() - 1;
    }
    it->basis.push_back(C.basis.column(j));
  }
  if (C.type != OperatorType::Diag) {
    LPart l;
    l.type = C.type;
    l.a = Scalar(C.a->to_double());
    l.b = Scalar(C.b);
    l.a2_sign = C.type == OperatorType::A2 ? C.a2_sign : 1;
    l.e = C.basis.column(nh);
    if (C.type == OperatorType::A3) {
      l.f = C.basis.column(nh + 1);
      l.ebar = C.basis.column(nh + 2);
    } else {
      l.ebar = C.basis.column(nh + 1);
    }
    d.l_part = l;
  }
  return d;
}

std::pair<OperatorClassification, SplitDecomposition> ricci_type(const PseudoEuclideanLieAlgebra& g,
                                                                  const ClassifyOptions& opt) {
  if (!g.is_lorentzian(opt.tol)) fail(ErrorCode::NotLorentzian, "metric is not Lorentzian");
  RicciData r = ricci_operator(g);
  OperatorClassification C = classify_symmetric_operator(r.Ric, g.metric(), opt);
  return {C, decomposition_from_classification(C, g)};
}

}  // namespace lcz
