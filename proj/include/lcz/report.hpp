#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lcz/classify.hpp"
#include "lcz/codazzi.hpp"
#include "lcz/geometry.hpp"

namespace lcz {

struct BracketTerm {
  std::string literal;
  std::string name;  // empty for a bare literal, which must evaluate to zero
  bool negate = false;
};

struct BracketEntry {
  std::string left, right;
  std::vector<BracketTerm> terms;
  std::size_t line = 0;
};

struct DefinitionDocument {
  std::size_t dim = 0;
  std::vector<std::string> basis;
  std::vector<std::vector<std::string>> metric;  // literals
  std::vector<BracketEntry> brackets;
  std::optional<Backend> mode;
};

// Line grammar:
//   dim = N
//   basis = a b c
//   metric = [[..],[..]]
//   bracket a b = 2*c - 1/2*d
//   mode = exact|float
//   # comment
// A document starting with '{' is read as JSON with the same fields.
DefinitionDocument parse_definition(const std::string& text);

// Exact unless the document or a literal forces float.
Backend preferred_backend(const DefinitionDocument& doc);
PseudoEuclideanLieAlgebra build_algebra(const DefinitionDocument& doc, Backend b);

// "operator = [[..]]" or a bare matrix literal, with optional comments.
Matrix parse_operator(const std::string& text, Backend b);
Matrix parse_matrix_literal(const std::string& text, Backend b, std::size_t line = 1);

std::string emit_definition(const PseudoEuclideanLieAlgebra& g, const std::string& comment = "");

enum class ReportFormat { Text, Kv };

struct RicciTypeInfo {
  bool computed = false;
  std::string notice;  // why classification was skipped or changed backend
  OperatorClassification c;
};

struct AnalysisReport {
  Backend mode = Backend::Exact;
  std::size_t dim = 0;
  std::vector<std::string> names;
  Signature signature;
  bool lorentzian = false;
  Scalar jacobi_defect;
  bool jacobi_ok = false;
  std::optional<Scalar> einstein;
  Matrix ricci;
  Scalar scalar_curvature;
  RicciTypeInfo ricci_type;
  CodazziReport harmonic;
  ParallelReport parallel;
};

AnalysisReport analyze(const PseudoEuclideanLieAlgebra& g, const Tolerance& tol = {});
std::string emit_report(const AnalysisReport& r, ReportFormat f);

std::string emit_classification(const OperatorClassification& c, ReportFormat f);

struct CodazziOutcome {
  std::optional<CodazziReport> defining, bracket;
};
std::string emit_codazzi(const CodazziOutcome& c, ReportFormat f);

// Runs the built-in invariant suites on the fixture catalog. Each line is
// "PASS name" or "FAIL name: detail".
struct SelftestResult {
  std::vector<std::string> lines;
  std::size_t failures = 0;
};
SelftestResult run_selftest(const Tolerance& tol = {});

// Reads LCZ_DEFAULT_TOL (relative tolerance) when set and valid.
Tolerance default_tolerance();

}  // namespace lcz
