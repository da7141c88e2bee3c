#include "lcz/lcz.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <map>
#include <sstream>

#include "lcz/families.hpp"
#include "lcz/report.hpp"

struct lcz_algebra {
  lcz::PseudoEuclideanLieAlgebra g;
};

namespace {

thread_local std::string g_last_error;

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class F>
lcz_status guard(F&& f) {
  try {
    f();
    g_last_error.clear();
    return LCZ_OK;
  } catch (const lcz::Error& e) {
    g_last_error = e.what();
    return static_cast<lcz_status>(static_cast<int>(e.code()));
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LCZ_INTERNAL;
  }
}

lcz_status null_arg(const char* what) {
  g_last_error = std::string("null argument: ") + what;
  return LCZ_BAD_PARAM;
}

lcz::Tolerance tolerance(double rel) {
  lcz::Tolerance t = lcz::default_tolerance();
  if (rel > 0) t.rel = rel;
  return t;
}

lcz::ReportFormat fmt_of(lcz_format f) {
  return f == LCZ_FORMAT_KV ? lcz::ReportFormat::Kv : lcz::ReportFormat::Text;
}

using Params = std::map<std::string, std::string>;

Params parse_params(const char* text) {
  Params p;
  if (!text) return p;
  std::istringstream is(text);
  std::string w;
  while (is >> w) {
    auto eq = w.find('=');
    if (eq == std::string::npos || eq == 0) lcz::fail(lcz::ErrorCode::BadParam, "expected key=value, got '" + w + "'");
    p[w.substr(0, eq)] = w.substr(eq + 1);
  }
  return p;
}

void allow_only(const Params& p, std::initializer_list<const char*> keys, const std::string& fam) {
  for (const auto& [k, v] : p) {
    bool ok = false;
    for (const char* a : keys) ok = ok || k == a;
    if (!ok) lcz::fail(lcz::ErrorCode::BadParam, "family " + fam + " takes no parameter '" + k + "'");
  }
}

int int_param(const Params& p, const std::string& key, int def) {
  auto it = p.find(key);
  if (it == p.end()) return def;
  char* end = nullptr;
  long v = std::strtol(it->second.c_str(), &end, 10);
  if (!end || *end) lcz::fail(lcz::ErrorCode::BadParam, key + " must be an integer");
  return static_cast<int>(v);
}

int sign_param(const Params& p) {
  auto it = p.find("sign");
  if (it == p.end()) return 1;
  if (it->second == "+" || it->second == "1" || it->second == "+1") return 1;
  if (it->second == "-" || it->second == "-1") return -1;
  lcz::fail(lcz::ErrorCode::BadParam, "sign must be + or -");
}

lcz::Scalar alpha_param(const Params& p, lcz::Backend b) {
  auto it = p.find("alpha");
  const std::string s = it == p.end() ? "-1" : it->second;
  try {
    return lcz::parse_scalar(s, b);
  } catch (const lcz::Error& e) {
    if (e.code() == lcz::ErrorCode::ExactUnsupported) return lcz::parse_scalar(s, lcz::Backend::Float);
    lcz::fail(lcz::ErrorCode::BadParam, "alpha: " + std::string(e.what()));
  }
}

// R^{k+1} with [H,y_i] = y_i and metric (-k/alpha) Id: Euclidean, Einstein constant alpha.
lcz::PseudoEuclideanLieAlgebra hyperbolic(int k, const lcz::Scalar& alpha) {
  using namespace lcz;
  if (k < 1 || k > 16) fail(ErrorCode::BadParam, "k must be between 1 and 16");
  if (alpha.sign() >= 0) fail(ErrorCode::BadParam, "alpha must be negative");
  const Backend b = alpha.backend();
  std::vector<std::string> names{"H"};
  for (int i = 1; i <= k; ++i) names.push_back("y" + std::to_string(i));
  const std::size_t n = names.size();
  LieAlgebra alg(names, b);
  for (std::size_t i = 1; i < n; ++i) alg.set_bracket(0, i, unit_vector(n, i, b));
  return PseudoEuclideanLieAlgebra(alg, BilinearForm(Scalar::integer(-k, b) / alpha * Matrix::identity(n, b)));
}

std::string family_text(const std::string& name, const Params& p) {
  using namespace lcz;
  std::ostringstream note;
  PseudoEuclideanLieAlgebra g;
  if (name == "sl2") {
    allow_only(p, {"alpha"}, name);
    Scalar a = alpha_param(p, Backend::Exact);
    if (a.is_zero()) fail(ErrorCode::BadParam, "alpha must be nonzero");
    g = sl2_harmonic(a);
    note << "sl(2,R) with the harmonic metric, alpha=" << a.str();
  } else if (name == "zzcore") {
    allow_only(p, {"alpha", "epsilon"}, name);
    ZZCoreParams zp;
    zp.alpha = alpha_param(p, Backend::Float).to_double();
    zp.epsilon = int_param(p, "epsilon", 1);
    g = zz_core(zp);
    note << "zz core, alpha=" << format_double(zp.alpha) << " epsilon=" << zp.epsilon;
  } else if (name == "zzprod") {
    allow_only(p, {"alpha", "k"}, name);
    Scalar a = alpha_param(p, Backend::Exact);
    const int k = int_param(p, "k", 1);
    g = build_zz_product(a, hyperbolic(k, a)).g;
    note << "sl(2,R) x (" << k + 1 << "-dim hyperbolic algebra), alpha=" << a.str();
  } else if (name == "a2") {
    allow_only(p, {"alpha", "k", "sign"}, name);
    Scalar a = alpha_param(p, Backend::Float);
    const int k = int_param(p, "k", 1);
    const int s = sign_param(p);
    PseudoEuclideanLieAlgebra h = hyperbolic(k, a).to_backend(Backend::Float);
    // X = x H with alpha + 4c x^2 + 2k x = 0, c = |H|^2
    const double al = a.to_double(), c = -k / al;
    const double x = (-2.0 * k + s * std::sqrt(4.0 * k * k - 16.0 * c * al)) / (8.0 * c);
    Vector X = zero_vector(h.dim(), Backend::Float);
    X[0] = Scalar(x);
    g = build_a2({h, X, Scalar(al)}).g;
    note << "a2 family over the " << k + 1 << "-dim hyperbolic algebra, alpha=" << format_double(al)
         << " X=" << format_double(x) << "*H";
  } else if (name == "a3" || name == "ex5d" || name == "ex6d") {
    const bool five = name == "ex5d" || (name == "a3" && int_param(p, "dim", 3) == 2);
    if (name == "a3") {
      allow_only(p, {"sign", "dim"}, name);
      const int d = int_param(p, "dim", 3);
      if (d != 2 && d != 3) fail(ErrorCode::BadParam, "dim must be 2 or 3");
    } else {
      allow_only(p, {"sign"}, name);
    }
    ExampleInfo info;
    const int s = sign_param(p);
    g = (five ? example_5d(s, &info) : example_6d(s, &info)).g;
    note << (five ? "5" : "6") << "-dim A3 example, root sign " << (info.root_used > 0 ? "+" : "-") << " ("
         << info.note << "), a=" << format_double(info.a) << " l=" << format_double(info.l);
  } else {
    fail(ErrorCode::BadParam, "unknown family '" + name + "'");
  }
  return emit_definition(g, note.str());
}

}  // namespace

extern "C" {

lcz_status lcz_algebra_parse(const char* text, const char* mode, lcz_algebra** out) {
  if (!text) return null_arg("text");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guard([&] {
    lcz::DefinitionDocument doc = lcz::parse_definition(text);
    lcz::Backend b = lcz::preferred_backend(doc);
    if (mode && *mode) {
      if (!std::strcmp(mode, "exact")) b = lcz::Backend::Exact;
      else if (!std::strcmp(mode, "float")) b = lcz::Backend::Float;
      else lcz::fail(lcz::ErrorCode::BadParam, std::string("mode must be exact or float, got '") + mode + "'");
    }
    auto g = lcz::build_algebra(doc, b);
    lcz::require_lie_algebra(g.alg());
    *out = new lcz_algebra{std::move(g)};
  });
}

void lcz_algebra_free(lcz_algebra* g) { delete g; }

size_t lcz_algebra_dim(const lcz_algebra* g) { return g ? g->g.dim() : 0; }

int lcz_algebra_is_exact(const lcz_algebra* g) { return g && g->g.backend() == lcz::Backend::Exact; }

lcz_status lcz_algebra_emit(const lcz_algebra* g, char** out) {
  if (!g || !out) return null_arg("algebra/out");
  return guard([&] { *out = dup(lcz::emit_definition(g->g)); });
}

lcz_status lcz_ricci(const lcz_algebra* g, double* out, size_t capacity) {
  if (!g || !out) return null_arg("algebra/out");
  return guard([&] {
    const std::size_t n = g->g.dim();
    if (capacity < n * n) lcz::fail(lcz::ErrorCode::DimensionMismatch, "output buffer too small");
    lcz::Matrix R = lcz::ricci_operator(g->g).Ric;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out[i * n + j] = R(i, j).to_double();
  });
}

lcz_status lcz_analyze(const lcz_algebra* g, double rel_tol, lcz_format fmt, char** out) {
  if (!g || !out) return null_arg("algebra/out");
  return guard([&] { *out = dup(lcz::emit_report(lcz::analyze(g->g, tolerance(rel_tol)), fmt_of(fmt))); });
}

lcz_status lcz_classify(const lcz_algebra* g, const char* operator_text, double rel_tol, lcz_format fmt,
                        char** out) {
  if (!g || !out || !operator_text) return null_arg("algebra/operator/out");
  return guard([&] {
    lcz::Matrix A = lcz::parse_operator(operator_text, g->g.backend());
    if (A.rows() != g->g.dim()) lcz::fail(lcz::ErrorCode::DimensionMismatch, "operator size does not match dim");
    lcz::ClassifyOptions opt;
    opt.tol = tolerance(rel_tol);
    *out = dup(lcz::emit_classification(lcz::classify_symmetric_operator(A, g->g.metric(), opt), fmt_of(fmt)));
  });
}

lcz_status lcz_codazzi(const lcz_algebra* g, const char* operator_text, lcz_formulation which, double rel_tol,
                       lcz_format fmt, char** out) {
  if (!g || !out || !operator_text) return null_arg("algebra/operator/out");
  return guard([&] {
    lcz::Matrix A = lcz::parse_operator(operator_text, g->g.backend());
    if (A.rows() != g->g.dim()) lcz::fail(lcz::ErrorCode::DimensionMismatch, "operator size does not match dim");
    const lcz::Tolerance tol = tolerance(rel_tol);
    lcz::CodazziOutcome o;
    if (which == LCZ_CODAZZI_DEFINING || which == LCZ_CODAZZI_BOTH) o.defining = lcz::codazzi_defect(g->g, A, tol);
    if (which == LCZ_CODAZZI_BRACKET || which == LCZ_CODAZZI_BOTH)
      o.bracket = lcz::codazzi_defect_bracket(g->g, A, tol);
    if (!o.defining && !o.bracket) lcz::fail(lcz::ErrorCode::BadParam, "unknown formulation");
    *out = dup(lcz::emit_codazzi(o, fmt_of(fmt)));
  });
}

lcz_status lcz_family(const char* name, const char* params, char** out) {
  if (!name || !out) return null_arg("name/out");
  return guard([&] { *out = dup(family_text(name, parse_params(params))); });
}

lcz_status lcz_selftest(double rel_tol, char** out, size_t* failures) {
  if (!out) return null_arg("out");
  return guard([&] {
    lcz::SelftestResult r = lcz::run_selftest(tolerance(rel_tol));
    std::string s;
    for (const auto& l : r.lines) s += l + "\n";
    s += std::to_string(r.lines.size() - r.failures) + "/" + std::to_string(r.lines.size()) + " passed\n";
    if (failures) *failures = r.failures;
    *out = dup(s);
  });
}

const char* lcz_last_error(void) { return g_last_error.c_str(); }

const char* lcz_status_name(lcz_status s) {
  if (s == LCZ_OK) return "OK";
  if (s == LCZ_INTERNAL) return "INTERNAL";
  return lcz::error_code_name(static_cast<lcz::ErrorCode>(static_cast<int>(s)));
}

void lcz_string_free(char* s) { std::free(s); }

}  // extern "C"
