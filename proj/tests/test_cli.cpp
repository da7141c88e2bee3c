#include "common.hpp"
#include "lcz/report.hpp"
#include "support.hpp"

using namespace lcz;
using namespace lcz::test;

namespace {

PseudoEuclideanLieAlgebra load(const std::string& text) {
  auto doc = parse_definition(text);
  return build_algebra(doc, preferred_backend(doc));
}

std::string kv(const PseudoEuclideanLieAlgebra& g) { return emit_report(analyze(g), ReportFormat::Kv); }

bool has_line(const std::string& text, const std::string& line) {
  return ("\n" + text).find("\n" + line + "\n") != std::string::npos;
}

std::string err_msg(const std::string& text) {
  try {
    parse_definition(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

const char* kSl2 =
    "# sl2\n"
    "dim = 3\n"
    "basis = X1 X2 X3\n"
    "metric = [[8,0,-8],[0,8,0],[-8,0,0]]\n"
    "bracket X1 X2 = 2*X3\n"
    "bracket X1 X3 = -2*X2\n"
    "bracket X2 X3 = -2*X1\n";

}  // namespace

TEST_CASE("abelian document") {
  auto g = load("dim = 3\nbasis = a b c\nmetric = [[1,0,0],[0,1,0],[0,0,-1]]\n");
  CHECK(g.dim() == 3);
  CHECK(g.backend() == Backend::Exact);
  CHECK(g.alg().max_constant() == 0);
  const std::string r = kv(g);
  CHECK(has_line(r, "einstein=true"));
  CHECK(has_line(r, "einstein.alpha=0"));
  CHECK(has_line(r, "harmonic=true"));
  CHECK(has_line(r, "harmonic.defect=0"));
  CHECK(has_line(r, "ricci_parallel=true"));
}

TEST_CASE("sl2 document") {
  auto g = load(kSl2);
  auto ref = sl2_harmonic(q(-1));
  CHECK(same(g.G(), ref.G()));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(g.alg().structure(i, j) == ref.alg().structure(i, j));
  const std::string r = kv(g);
  CHECK(has_line(r, "mode=exact"));
  CHECK(has_line(r, "lorentzian=true"));
  CHECK(has_line(r, "ricci_type=ZZbar"));
  CHECK(has_line(r, "ricci_type.a=1/2"));
  CHECK(has_line(r, "ricci_type.b=0.86602540378443865"));
  CHECK(has_line(r, "ricci_type.b_squared=3/4"));
  CHECK(has_line(r, "harmonic=true"));
  CHECK(has_line(r, "harmonic.defect=0"));
  CHECK(has_line(r, "ricci_parallel=false"));
  CHECK(has_line(r, "einstein=false"));
  // byte-stable
  CHECK(r == kv(load(kSl2)));
  CHECK(emit_report(analyze(g), ReportFormat::Text).find("ZZbar") != std::string::npos);
}

TEST_CASE("round trip through the definition format") {
  std::vector<PseudoEuclideanLieAlgebra> algs{sl2_harmonic(q(-1)), sl2_harmonic(q(-3, 7))};
  for (const auto& fi : family_instances()) algs.push_back(fi.base.g);
  for (const auto& c : fixture_catalog()) algs.push_back(c.g);
  algs.push_back(zz_core({-1.0, -1}));
  for (const auto& g : algs) {
    const std::string text = emit_definition(g, "round trip");
    auto back = load(text);
    CAPTURE(text);
    CHECK(back.backend() == g.backend());
    CHECK(back.alg().names() == g.alg().names());
    CHECK(same(back.G(), g.G()));
    CHECK(kv(back) == kv(g));
    CHECK(emit_definition(back, "round trip") == text);
  }
}

TEST_CASE("parse errors") {
  CHECK(code_of([] { parse_definition("dim = 2\nbasis = e f\nmetric = [[1,0],[0,-1]]\nbracket e e = f\n"); }) ==
        ErrorCode::ParseError);
  CHECK(err_msg("dim = 2\nbasis = e f\nmetric = [[1,0],[0,-1]]\nbracket e e = f\n").find("line 4") != std::string::npos);
  CHECK(code_of([] { parse_definition("dim = 2\nbasis = e f\nmetric = [[1,0],[0,-1]]\nbracket e f = f\nbracket f e = e\n"); }) ==
        ErrorCode::DuplicateBracket);
  CHECK(code_of([] { parse_definition("dim = 2\nbasis = e f\nmetric = [[1,0],[0,-1]]\nbracket e g = f\n"); }) ==
        ErrorCode::UnknownName);
  CHECK(code_of([] { parse_definition("dim = 2\nbasis = e f\nmetric = [[1,0],[0,-1]]\nbracket e f = 2*z\n"); }) ==
        ErrorCode::UnknownName);
  CHECK(code_of([] { parse_definition("dim = 2\nbasis = e f\nmetric = [[1,0],[0,-1]]\nbracket e f = f +\n"); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { parse_definition("dim = 2\nbasis = e f\nmetric = [[1,0],[0,-1]]\ncolour = red\n"); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { parse_definition("dim = 2\ndim = 2\nbasis = e f\nmetric = [[1,0],[0,-1]]\n"); }) ==
        ErrorCode::ParseError);
  // a document whose sizes disagree is malformed text
  CHECK(code_of([] { parse_definition("dim = 3\nbasis = e f\nmetric = [[1,0],[0,-1]]\n"); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { parse_definition("dim = 2\nbasis = e e\nmetric = [[1,0],[0,-1]]\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { load("dim = 2\nbasis = e f\nmetric = [[1,1],[1,1]]\n"); }) == ErrorCode::DegenerateMetric);
}

TEST_CASE("grammar details") {
  // continuation lines in the metric, comments, reversed bracket order, irrational literal
  auto g = load(
      "# comment\n"
      "dim = 3\n"
      "basis = a b c\n"
      "metric = [[1, 0, 0],\n"
      "          [0, 1, 0],\n"
      "          [0, 0, -1]]\n"
      "bracket b a = -c   # same as [a,b] = c\n");
  CHECK(g.alg().structure(0, 1) == Vector{q(0), q(0), q(1)});
  auto f = load("dim = 2\nbasis = h y\nmetric = [[1,0],[0,1]]\nbracket h y = sqrt(2)*y\n");
  CHECK(f.backend() == Backend::Float);
  CHECK(f.alg().structure(0, 1)[1].to_double() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  auto m = load("mode = float\ndim = 2\nbasis = h y\nmetric = [[1,0],[0,1]]\nbracket h y = y\n");
  CHECK(m.backend() == Backend::Float);
  CHECK(code_of([] { load("dim = 2\nbasis = h y\nmetric = [[1,0],[0,1]]\nmode = exact\nbracket h y = sqrt(2)*y\n"); }) ==
        ErrorCode::ExactUnsupported);

  auto j = load(R"({"dim": 3, "basis": ["X1","X2","X3"],
                    "metric": [["8","0","-8"],["0","8","0"],["-8","0","0"]],
                    "brackets": [{"left":"X1","right":"X2","value":{"X3":"2"}},
                                 {"left":"X1","right":"X3","value":{"X2":"-2"}},
                                 {"left":"X2","right":"X3","value":{"X1":"-2"}}]})");
  CHECK(kv(j) == kv(load(kSl2)));
}

TEST_CASE("operator files and classification output") {
  const Matrix A = parse_operator("# Ric\noperator = [[0,0,1],[0,-1,0],[-1,0,1]]\n", Backend::Exact);
  auto g = sl2_harmonic(q(-1));
  CHECK(same(A, ricci_operator(g).Ric));
  CHECK(same(parse_operator("[[1,2],[3,4]]", Backend::Exact), Q({{1, 2}, {3, 4}})));
  auto C = classify_symmetric_operator(A, g.metric());
  const std::string out = emit_classification(C, ReportFormat::Kv);
  CHECK(has_line(out, "classify.type=ZZbar"));
  CHECK(out.find("classify.P.row0=") != std::string::npos);

  CodazziOutcome co{codazzi_defect(g, A), codazzi_defect_bracket(g, A)};
  const std::string cz = emit_codazzi(co, ReportFormat::Kv);
  CHECK(has_line(cz, "codazzi.defining=true"));
  CHECK(has_line(cz, "codazzi.bracket=true"));
  CHECK(has_line(cz, "codazzi.defining.defect=0"));
}

TEST_CASE("non-Lorentzian analysis skips the Ricci type") {
  auto h = load("dim = 3\nbasis = a b c\nmetric = [[1,0,0],[0,1,0],[0,0,1]]\nbracket a b = c\n");
  const std::string r = kv(h);
  CHECK(has_line(r, "ricci_type=skipped"));
  CHECK(has_line(r, "lorentzian=false"));
  CHECK(r.find("ricci_type.notice=") != std::string::npos);
}

TEST_CASE("self-test runner") {
  auto st = run_selftest();
  CHECK(st.failures == 0);
  CHECK(!st.lines.empty());
  for (const auto& l : st.lines) CHECK_MESSAGE(l.rfind("PASS", 0) == 0, l);
}
