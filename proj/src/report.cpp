#include "lcz/report.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "lcz/checks.hpp"
#include "lcz/families.hpp"

namespace lcz {

namespace {

[[noreturn]] void perr(ErrorCode c, std::size_t line, std::size_t col, const std::string& msg) {
  std::ostringstream os;
  os << "line " << line;
  if (col) os << ", column " << col;
  os << ": " << msg;
  fail(c, os.str());
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  });
}

std::string strip_comment(const std::string& s) {
  auto p = s.find('#');
  return p == std::string::npos ? s : s.substr(0, p);
}

int bracket_balance(const std::string& s) {
  int d = 0;
  for (char c : s) d += c == '[' ? 1 : c == ']' ? -1 : 0;
  return d;
}

// Splits at top-level separators (depth counts both bracket kinds).
std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<BracketTerm> parse_rhs(const std::string& rhs, std::size_t line, std::size_t col0) {
  std::vector<BracketTerm> terms;
  int depth = 0;
  std::string cur;
  bool neg = false;
  auto flush = [&](std::size_t at) {
    std::string t = trim(cur);
    cur.clear();
    if (t.empty()) perr(ErrorCode::ParseError, line, col0 + at, "empty term");
    BracketTerm term;
    term.negate = neg;
    if (is_identifier(t)) {
      term.literal = "1";
      term.name = t;
    } else {
      auto star = split_top(t, '*');
      std::string last = trim(star.back());
      if (star.size() > 1 && is_identifier(last)) {
        term.name = last;
        term.literal = trim(t.substr(0, t.rfind('*')));
      } else {
        term.literal = t;
      }
    }
    terms.push_back(term);
  };
  bool pending = false;  // an operator is waiting for its term
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    const char c = rhs[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    const bool sign = (c == '+' || c == '-') && depth == 0;
    // exponent sign inside a decimal such as 1e-5
    const bool exponent = sign && i >= 2 && (rhs[i - 1] == 'e' || rhs[i - 1] == 'E') &&
                          (std::isdigit(static_cast<unsigned char>(rhs[i - 2])) || rhs[i - 2] == '.');
    if (sign && !exponent) {
      if (!trim(cur).empty()) {
        flush(i);
        neg = false;
      } else if (pending) {
        perr(ErrorCode::ParseError, line, col0 + i, "dangling operator");
      }
      neg = c == '-';
      pending = true;
      continue;
    }
    cur += c;
    if (!std::isspace(static_cast<unsigned char>(c))) pending = false;
  }
  if (trim(cur).empty()) perr(ErrorCode::ParseError, line, col0 + rhs.size(), "missing term");
  flush(rhs.size());
  return terms;
}

Scalar lit(const std::string& s, Backend b, std::size_t line) {
  try {
    return parse_scalar(s, b);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) perr(ErrorCode::ParseError, line, 0, e.what());
    throw;
  }
}

std::vector<std::vector<std::string>> matrix_cells(const std::string& text, std::size_t line) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') perr(ErrorCode::ParseError, line, 0, "expected [[...],...]");
  if (bracket_balance(t) != 0) perr(ErrorCode::ParseError, line, 0, "unbalanced brackets");
  std::vector<std::vector<std::string>> rows;
  for (auto& r : split_top(t.substr(1, t.size() - 2), ',')) {
    std::string row = trim(r);
    if (row.size() < 2 || row.front() != '[' || row.back() != ']') perr(ErrorCode::ParseError, line, 0, "bad matrix row");
    std::vector<std::string> cells;
    for (auto& c : split_top(row.substr(1, row.size() - 2), ',')) {
      std::string cell = trim(c);
      if (cell.empty()) perr(ErrorCode::ParseError, line, 0, "empty matrix entry");
      cells.push_back(cell);
    }
    rows.push_back(cells);
  }
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) perr(ErrorCode::ParseError, line, 0, "ragged matrix");
  return rows;
}

void finish_document(DefinitionDocument& d, bool have_dim, bool have_metric) {
  if (!have_dim) fail(ErrorCode::ParseError, "missing 'dim'");
  if (d.basis.empty() && d.dim > 0) fail(ErrorCode::ParseError, "missing 'basis'");
  if (d.basis.size() != d.dim) fail(ErrorCode::ParseError, "basis has " + std::to_string(d.basis.size()) +
                                                                " names but dim is " + std::to_string(d.dim));
  std::set<std::string> names;
  for (const auto& n : d.basis) {
    if (!is_identifier(n)) fail(ErrorCode::ParseError, "bad basis name '" + n + "'");
    if (!names.insert(n).second) fail(ErrorCode::ParseError, "repeated basis name '" + n + "'");
  }
  if (!have_metric) fail(ErrorCode::ParseError, "missing 'metric'");
  if (d.metric.size() != d.dim || (d.dim > 0 && d.metric.front().size() != d.dim))
    fail(ErrorCode::ParseError, "metric must be " + std::to_string(d.dim) + "x" + std::to_string(d.dim));
  std::set<std::pair<std::string, std::string>> pairs;
  for (const auto& br : d.brackets) {
    for (const auto* nm : {&br.left, &br.right})
      if (!names.count(*nm)) perr(ErrorCode::UnknownName, br.line, 0, "unknown basis name '" + *nm + "'");
    for (const auto& t : br.terms)
      if (!t.name.empty() && !names.count(t.name))
        perr(ErrorCode::UnknownName, br.line, 0, "unknown basis name '" + t.name + "'");
    auto key = std::minmax(br.left, br.right);
    if (!pairs.insert(key).second)
      perr(ErrorCode::DuplicateBracket, br.line, 0, "bracket " + br.left + " " + br.right + " given twice");
  }
}

DefinitionDocument parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail(ErrorCode::ParseError, std::string("JSON: ") + e.what());
  }
  auto str = [](const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number()) return v.dump();
    fail(ErrorCode::ParseError, "JSON: scalar must be a string or a number");
  };
  DefinitionDocument d;
  try {
    bool have_dim = j.contains("dim"), have_metric = j.contains("metric");
    if (have_dim) d.dim = j.at("dim").get<std::size_t>();
    if (j.contains("basis"))
      for (const auto& n : j.at("basis")) d.basis.push_back(n.get<std::string>());
    if (have_metric)
      for (const auto& row : j.at("metric")) {
        std::vector<std::string> r;
        for (const auto& c : row) r.push_back(str(c));
        d.metric.push_back(r);
      }
    if (j.contains("mode")) {
      auto m = j.at("mode").get<std::string>();
      if (m == "exact") d.mode = Backend::Exact;
      else if (m == "float") d.mode = Backend::Float;
      else fail(ErrorCode::ParseError, "JSON: mode must be exact or float");
    }
    if (j.contains("brackets"))
      for (const auto& b : j.at("brackets")) {
        BracketEntry e;
        e.left = b.at("left").get<std::string>();
        e.right = b.at("right").get<std::string>();
        if (e.left == e.right) fail(ErrorCode::ParseError, "JSON: self-bracket " + e.left);
        for (auto it = b.at("value").begin(); it != b.at("value").end(); ++it)
          e.terms.push_back({str(it.value()), it.key(), false});
        d.brackets.push_back(e);
      }
    if (d.metric.size() && d.metric.front().size() != d.metric.size())
      fail(ErrorCode::ParseError, "JSON: metric must be square");
    finish_document(d, have_dim, have_metric);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("JSON: ") + e.what());
  }
  return d;
}

std::string join_scalars(const std::vector<Scalar>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s;
}

std::string matrix_str(const Matrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? "," : "") + m(i, j).str();
    s += "]";
  }
  return s + "]";
}

const char* yn(bool b) { return b ? "true" : "false"; }

// Shortest 17-significant-digit decimal of sqrt(q), rounded to nearest.
std::string sqrt_decimal17(const mpq_class& q) {
  if (q == 0) return "0";
  const double approx = std::sqrt(q.get_d());
  long E = static_cast<long>(std::floor(std::log10(approx)));
  mpz_class N;
  for (int attempt = 0; attempt < 3; ++attempt) {
    const long k = 16 - E;
    mpq_class x = q;
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(2 * k)));
    if (k >= 0) x *= p10;
    else x /= p10;
    mpz_class y = (x.get_num() * 4) / x.get_den();  // floor(4x)
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), y.get_mpz_t());
    N = (s + 1) / 2;
    const std::size_t digits = N.get_str().size();
    if (digits == 17) break;
    E += digits > 17 ? 1 : -1;
  }
  std::string d = N.get_str();
  while (d.size() > 1 && d.back() == '0') d.pop_back();
  std::string out;
  if (E >= -5 && E < 17) {
    if (E < 0) {
      out = "0." + std::string(static_cast<std::size_t>(-E - 1), '0') + d;
    } else if (static_cast<long>(d.size()) <= E + 1) {
      out = d + std::string(static_cast<std::size_t>(E + 1 - static_cast<long>(d.size())), '0');
    } else {
      out = d.substr(0, static_cast<std::size_t>(E + 1)) + "." + d.substr(static_cast<std::size_t>(E + 1));
    }
  } else {
    out = d.substr(0, 1) + (d.size() > 1 ? "." + d.substr(1) : "") + (E < 0 ? "e-" : "e+") +
          (std::labs(E) < 10 ? "0" : "") + std::to_string(std::labs(E));
  }
  return out;
}

std::string b_str(const OperatorClassification& c) {
  if (c.b_squared && c.b_squared->is_exact()) {
    const mpq_class& q = c.b_squared->rational();
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), q.get_den_mpz_t());
    if (sn * sn == q.get_num() && sd * sd == q.get_den()) return Scalar(mpq_class(sn, sd)).str();
    return sqrt_decimal17(q);
  }
  return format_double(c.b);
}

using KV = std::vector<std::pair<std::string, std::string>>;

void classification_kv(KV& kv, const std::string& p, const OperatorClassification& c) {
  kv.push_back({p, operator_type_name(c.type)});
  kv.push_back({p + ".alphas", join_scalars(c.alphas)});
  if (c.a) kv.push_back({p + ".a", c.a->str()});
  if (c.type == OperatorType::ZZbar) {
    kv.push_back({p + ".b", b_str(c)});
    if (c.b_squared) kv.push_back({p + ".b_squared", c.b_squared->str()});
  }
  if (c.type == OperatorType::A2) kv.push_back({p + ".a2_sign", std::to_string(c.a2_sign)});
}

std::string render(const KV& kv) {
  std::string s;
  for (const auto& [k, v] : kv) s += k + "=" + v + "\n";
  return s;
}

std::string triple_str(const std::array<std::size_t, 3>& t) {
  return std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]);
}

std::string text_matrix(const Matrix& m, const std::string& indent) {
  std::vector<std::vector<std::string>> cells(m.rows());
  std::size_t w = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cells[i].push_back(m(i, j).str());
      w = std::max(w, cells[i].back().size());
    }
  std::string s;
  for (const auto& r : cells) {
    s += indent + "[";
    for (std::size_t j = 0; j < r.size(); ++j) s += (j ? " " : "") + std::string(w - r[j].size(), ' ') + r[j];
    s += "]\n";
  }
  return s;
}

std::string classification_text(const OperatorClassification& c) {
  std::string s = std::string("type ") + operator_type_name(c.type);
  if (c.a) s += "  a=" + c.a->str();
  if (c.type == OperatorType::ZZbar) s += "  b=" + b_str(c) + (c.b_squared ? "  b^2=" + c.b_squared->str() : "");
  if (c.type == OperatorType::A2) s += "  sign=" + std::to_string(c.a2_sign);
  s += "\n  alphas: " + (c.alphas.empty() ? std::string("(none)") : join_scalars(c.alphas)) + "\n";
  return s;
}

}  // namespace

DefinitionDocument parse_definition(const std::string& text) {
  {
    std::string t = trim(text);
    if (!t.empty() && t.front() == '{') return parse_json(t);
  }
  DefinitionDocument d;
  bool have_dim = false, have_basis = false, have_metric = false, have_mode = false;
  std::vector<std::string> lines;
  {
    std::istringstream is(text);
    std::string l;
    while (std::getline(is, l)) lines.push_back(l);
  }
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const std::size_t ln = li + 1;
    std::string raw = strip_comment(lines[li]);
    std::string t = trim(raw);
    if (t.empty()) continue;
    const std::size_t indent = raw.find_first_not_of(" \t");
    if (t.rfind("bracket", 0) == 0 && t.size() > 7 && std::isspace(static_cast<unsigned char>(t[7]))) {
      auto eq = raw.find('=');
      if (eq == std::string::npos) perr(ErrorCode::ParseError, ln, indent + 1, "bracket line needs '='");
      std::istringstream lhs(raw.substr(indent + 7, eq - indent - 7));
      std::vector<std::string> names;
      std::string w;
      while (lhs >> w) names.push_back(w);
      if (names.size() != 2) perr(ErrorCode::ParseError, ln, indent + 1, "bracket needs exactly two names");
      for (const auto& n : names)
        if (!is_identifier(n)) perr(ErrorCode::ParseError, ln, raw.find(n) + 1, "bad name '" + n + "'");
      if (names[0] == names[1]) {
        const std::size_t c1 = raw.find(names[0], indent + 7);
        perr(ErrorCode::ParseError, ln, raw.find(names[1], c1 + names[0].size()) + 1,
             "self-bracket [" + names[0] + "," + names[0] + "] is always zero");
      }
      BracketEntry e;
      e.left = names[0];
      e.right = names[1];
      e.line = ln;
      e.terms = parse_rhs(raw.substr(eq + 1), ln, eq + 2);
      d.brackets.push_back(e);
      continue;
    }
    auto eq = t.find('=');
    if (eq == std::string::npos) perr(ErrorCode::ParseError, ln, indent + 1, "expected 'key = value'");
    std::string key = trim(t.substr(0, eq));
    std::string val = trim(t.substr(eq + 1));
    auto dup = [&](bool& flag) {
      if (flag) perr(ErrorCode::ParseError, ln, indent + 1, "'" + key + "' given twice");
      flag = true;
    };
    if (key == "dim") {
      dup(have_dim);
      if (val.empty() || !std::all_of(val.begin(), val.end(), ::isdigit))
        perr(ErrorCode::ParseError, ln, indent + eq + 2, "dim must be a non-negative integer");
      d.dim = std::stoul(val);
    } else if (key == "basis") {
      dup(have_basis);
      std::istringstream is(val);
      std::string w;
      while (is >> w) d.basis.push_back(w);
    } else if (key == "metric") {
      dup(have_metric);
      while (bracket_balance(val) > 0 && li + 1 < lines.size()) val += trim(strip_comment(lines[++li]));
      d.metric = matrix_cells(val, ln);
    } else if (key == "mode") {
      dup(have_mode);
      if (val == "exact") d.mode = Backend::Exact;
      else if (val == "float") d.mode = Backend::Float;
      else perr(ErrorCode::ParseError, ln, indent + eq + 2, "mode must be exact or float");
    } else {
      perr(ErrorCode::ParseError, ln, indent + 1, "unknown key '" + key + "'");
    }
  }
  finish_document(d, have_dim, have_metric);
  return d;
}

Backend preferred_backend(const DefinitionDocument& doc) {
  if (doc.mode) return *doc.mode;
  auto exact_ok = [](const std::string& s) {
    try {
      parse_scalar(s, Backend::Exact);
      return true;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ExactUnsupported) return false;
      return true;  // malformed literals are reported by build_algebra
    }
  };
  for (const auto& r : doc.metric)
    for (const auto& c : r)
      if (!exact_ok(c)) return Backend::Float;
  for (const auto& br : doc.brackets)
    for (const auto& t : br.terms)
      if (!exact_ok(t.literal)) return Backend::Float;
  return Backend::Exact;
}

PseudoEuclideanLieAlgebra build_algebra(const DefinitionDocument& doc, Backend b) {
  const std::size_t n = doc.dim;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[doc.basis[i]] = i;
  Matrix G(n, n, b);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) G(i, j) = lit(doc.metric[i][j], b, 0);
  LieAlgebra alg(doc.basis, b);
  for (const auto& br : doc.brackets) {
    Vector v = zero_vector(n, b);
    for (const auto& t : br.terms) {
      Scalar c = lit(t.literal, b, br.line);
      if (t.negate) c = -c;
      if (t.name.empty()) {
        if (!c.is_zero()) perr(ErrorCode::ParseError, br.line, 0, "constant term '" + t.literal + "' in a bracket");
        continue;
      }
      v[index.at(t.name)] += c;
    }
    std::size_t i = index.at(br.left), j = index.at(br.right);
    if (i > j) {
      std::swap(i, j);
      v = Scalar::integer(-1, b) * v;
    }
    alg.set_bracket(i, j, v);
  }
  return PseudoEuclideanLieAlgebra(alg, BilinearForm(G));
}

Matrix parse_matrix_literal(const std::string& text, Backend b, std::size_t line) {
  auto cells = matrix_cells(text, line);
  Matrix m(cells.size(), cells.empty() ? 0 : cells.front().size(), b);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = lit(cells[i][j], b, line);
  return m;
}

Matrix parse_operator(const std::string& text, Backend b) {
  std::istringstream is(text);
  std::string l, all;
  std::size_t first = 0, ln = 0;
  while (std::getline(is, l)) {
    ++ln;
    std::string t = trim(strip_comment(l));
    if (t.empty()) continue;
    if (!first) first = ln;
    all += t;
  }
  if (all.rfind("operator", 0) == 0) {
    auto eq = all.find('=');
    if (eq == std::string::npos) perr(ErrorCode::ParseError, first, 1, "expected 'operator = [[...]]'");
    all = trim(all.substr(eq + 1));
  }
  Matrix m = parse_matrix_literal(all, b, first ? first : 1);
  if (!m.square()) perr(ErrorCode::ParseError, first, 0, "operator must be square");
  return m;
}

std::string emit_definition(const PseudoEuclideanLieAlgebra& g, const std::string& comment) {
  std::ostringstream os;
  if (!comment.empty()) os << "# " << comment << "\n";
  const std::size_t n = g.dim();
  const auto& names = g.alg().names();
  os << "mode = " << backend_name(g.backend()) << "\n";
  os << "dim = " << n << "\n";
  os << "basis =";
  for (const auto& s : names) os << " " << s;
  os << "\n";
  os << "metric = " << matrix_str(g.G()) << "\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector& v = g.alg().structure(i, j);
      std::string rhs;
      for (std::size_t k = 0; k < n; ++k) {
        if (v[k].is_zero()) continue;
        const bool neg = v[k].sign() < 0;
        const std::string c = v[k].abs().str();
        if (rhs.empty()) rhs += neg ? "-" : "";
        else rhs += neg ? " - " : " + ";
        rhs += c + "*" + names[k];
      }
      if (!rhs.empty()) os << "bracket " << names[i] << " " << names[j] << " = " << rhs << "\n";
    }
  return os.str();
}

AnalysisReport analyze(const PseudoEuclideanLieAlgebra& g, const Tolerance& tol) {
  AnalysisReport r;
  r.mode = g.backend();
  r.dim = g.dim();
  r.names = g.alg().names();
  r.signature = g.signature(tol);
  r.lorentzian = g.is_lorentzian(tol);
  JacobiDefect jd = jacobi_defect(g.alg());
  r.jacobi_defect = jd.value;
  const double mc = g.alg().max_constant();
  r.jacobi_ok = negligible(jd.value, mc * mc, tol);
  LeviCivita lc = levi_civita(g);
  RicciData rd = ricci_operator(g, lc);
  r.ricci = rd.Ric;
  r.scalar_curvature = rd.scalar_curv;
  r.einstein = einstein_constant(rd.Ric, tol);
  r.harmonic = codazzi_defect(g, lc, rd.Ric, tol);
  r.parallel = ricci_parallel_report(g, tol);
  if (!r.lorentzian) {
    r.ricci_type.notice = "metric is not Lorentzian; classification skipped";
  } else if (g.dim() < 3) {
    r.ricci_type.notice = "dimension below 3; classification skipped";
  } else {
    ClassifyOptions opt;
    opt.tol = tol;
    try {
      r.ricci_type.c = classify_symmetric_operator(rd.Ric, g.metric(), opt);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ExactUnsupported) throw;
      r.ricci_type.c = classify_symmetric_operator(rd.Ric.to_backend(Backend::Float),
                                                   BilinearForm(g.G().to_backend(Backend::Float)), opt);
      r.ricci_type.notice = "irrational eigenvalues; classified with the float backend";
    }
    r.ricci_type.computed = true;
  }
  return r;
}

std::string emit_report(const AnalysisReport& r, ReportFormat f) {
  const std::string worst_dir = r.names.empty() ? std::string() : r.names[r.parallel.worst];
  if (f == ReportFormat::Kv) {
    KV kv;
    kv.push_back({"mode", backend_name(r.mode)});
    kv.push_back({"dim", std::to_string(r.dim)});
    kv.push_back({"signature.p", std::to_string(r.signature.p)});
    kv.push_back({"signature.q", std::to_string(r.signature.q)});
    kv.push_back({"lorentzian", yn(r.lorentzian)});
    kv.push_back({"jacobi.defect", r.jacobi_defect.str()});
    kv.push_back({"jacobi.ok", yn(r.jacobi_ok)});
    kv.push_back({"einstein", yn(r.einstein.has_value())});
    if (r.einstein) kv.push_back({"einstein.alpha", r.einstein->str()});
    kv.push_back({"ricci.matrix", matrix_str(r.ricci)});
    kv.push_back({"scalar_curvature", r.scalar_curvature.str()});
    if (r.ricci_type.computed) classification_kv(kv, "ricci_type", r.ricci_type.c);
    else kv.push_back({"ricci_type", "skipped"});
    if (!r.ricci_type.notice.empty()) kv.push_back({"ricci_type.notice", r.ricci_type.notice});
    kv.push_back({"harmonic", yn(r.harmonic.is_codazzi)});
    kv.push_back({"harmonic.defect", r.harmonic.defect.str()});
    kv.push_back({"harmonic.worst_triple", triple_str(r.harmonic.worst_triple)});
    kv.push_back({"ricci_parallel", yn(r.parallel.parallel)});
    kv.push_back({"ricci_parallel.defect", r.parallel.defect.str()});
    kv.push_back({"ricci_parallel.worst_direction", worst_dir});
    return render(kv);
  }
  std::ostringstream os;
  os << "dimension " << r.dim << ", " << backend_name(r.mode) << " arithmetic\n";
  os << "signature (" << r.signature.p << "," << r.signature.q << ")" << (r.lorentzian ? ", Lorentzian" : "") << "\n";
  os << "Jacobi defect " << r.jacobi_defect.str() << (r.jacobi_ok ? "" : "  (not a Lie algebra)") << "\n";
  os << "Ricci operator:\n" << text_matrix(r.ricci, "  ");
  os << "scalar curvature " << r.scalar_curvature.str() << "\n";
  os << "Einstein: " << (r.einstein ? "yes, alpha=" + r.einstein->str() : std::string("no")) << "\n";
  os << "Ricci ";
  if (r.ricci_type.computed) os << classification_text(r.ricci_type.c);
  else os << "type skipped\n";
  if (!r.ricci_type.notice.empty()) os << "  note: " << r.ricci_type.notice << "\n";
  os << "harmonic curvature: " << (r.harmonic.is_codazzi ? "yes" : "no") << " (defect " << r.harmonic.defect.str()
     << ")\n";
  os << "Ricci-parallel: " << (r.parallel.parallel ? "yes" : "no") << " (defect " << r.parallel.defect.str();
  if (!r.parallel.parallel) os << ", worst direction " << worst_dir;
  os << ")\n";
  return os.str();
}

std::string emit_classification(const OperatorClassification& c, ReportFormat f) {
  if (f == ReportFormat::Kv) {
    KV kv;
    kv.push_back({"mode", backend_name(c.backend)});
    classification_kv(kv, "classify.type", c);
    for (std::size_t i = 0; i < c.P.rows(); ++i) {
      std::string row;
      for (std::size_t j = 0; j < c.P.cols(); ++j) row += (j ? "," : "") + c.P(i, j).str();
      kv.push_back({"classify.P.row" + std::to_string(i), row});
    }
    kv.push_back({"classify.canonical_A", matrix_str(c.canonical_A)});
    kv.push_back({"classify.canonical_G", matrix_str(c.canonical_G)});
    return render(kv);
  }
  std::string s = classification_text(c);
  s += "P (working -> canonical coordinates):\n" + text_matrix(c.P, "  ");
  s += "canonical A:\n" + text_matrix(c.canonical_A, "  ");
  s += "canonical G:\n" + text_matrix(c.canonical_G, "  ");
  return s;
}

std::string emit_codazzi(const CodazziOutcome& c, ReportFormat f) {
  std::string s;
  for (const auto* r : {&c.defining, &c.bracket}) {
    if (!*r) continue;
    const CodazziReport& x = **r;
    const std::string name = formulation_name(x.formulation);
    if (f == ReportFormat::Kv) {
      KV kv{{"codazzi." + name, yn(x.is_codazzi)},
            {"codazzi." + name + ".defect", x.defect.str()},
            {"codazzi." + name + ".worst_triple", triple_str(x.worst_triple)}};
      s += render(kv);
    } else {
      s += name + ": " + (x.is_codazzi ? "Codazzi" : "not Codazzi") + " (defect " + x.defect.str() +
           ", worst triple " + triple_str(x.worst_triple) + ")\n";
    }
  }
  return s;
}

SelftestResult run_selftest(const Tolerance& tol) {
  SelftestResult res;
  auto record = [&](const std::string& name, const CheckResult& c) {
    res.lines.push_back((c.ok ? "PASS " : "FAIL ") + name + (c.ok ? "" : ": " + c.detail));
    if (!c.ok) ++res.failures;
  };
  auto guarded = [&](const std::string& name, const std::function<CheckResult()>& fn) {
    try {
      record(name, fn());
    } catch (const std::exception& e) {
      record(name, {false, std::string("exception: ") + e.what()});
    }
  };
  std::mt19937_64 rng(20240601);
  for (const auto& entry : fixture_catalog()) {
    const auto& g = entry.g;
    guarded("levi_civita." + entry.name, [&] { return check_levi_civita(g, tol); });
    guarded("bianchi." + entry.name, [&] { return check_bianchi(g); });
    guarded("dual_ricci." + entry.name, [&] { return check_dual_ricci(g); });
    guarded("implication_chain." + entry.name, [&] { return check_implication_chain(g, tol); });
    guarded("formulations." + entry.name,
            [&] { return check_formulations(g, formulation_operators(g, 10, rng), tol); });
  }
  auto family_check = [&](const std::string& name, const FamilyResult& fr) {
    guarded("conditions." + name, [&]() -> CheckResult {
      const bool raw = check_type_conditions(fr.g, fr.d, false, tol).overall;
      const bool sol = check_type_conditions(fr.g, fr.d, true, tol).overall;
      const bool cod = has_harmonic_curvature(fr.g, tol).is_codazzi;
      if (raw && sol && cod) return {};
      return {false, std::string("raw=") + yn(raw) + " solved=" + yn(sol) + " codazzi=" + yn(cod)};
    });
  };
  {
    LieAlgebra h({"H", "y1"}, Backend::Exact);
    h.set_bracket(0, 1, unit_vector(2, 1, Backend::Exact));
    PseudoEuclideanLieAlgebra hh(h, BilinearForm(Matrix::identity(2, Backend::Exact)));
    guarded("family.zz_product", [&] {
      family_check("zz_product", build_zz_product(Scalar::integer(-1, Backend::Exact), hh));
      return CheckResult{};
    });
    guarded("family.a2", [&] {
      A2FamilySpec s{hh.to_backend(Backend::Float), {Scalar((-1 + std::sqrt(5.0)) / 4), Scalar(0.0)}, Scalar(-1.0)};
      family_check("a2", build_a2(s));
      return CheckResult{};
    });
  }
  guarded("family.example_5d", [&] {
    family_check("example_5d", example_5d(1));
    return CheckResult{};
  });
  guarded("family.example_6d", [&] {
    family_check("example_6d", example_6d(1));
    return CheckResult{};
  });
  return res;
}

Tolerance default_tolerance() {
  Tolerance t;
  if (const char* v = std::getenv("LCZ_DEFAULT_TOL")) {
    char* end = nullptr;
    double x = std::strtod(v, &end);
    if (end && *end == '\0' && x > 0 && x < 1) t.rel = x;
  }
  return t;
}

}  // namespace lcz
