#include "lcz/scalar.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>

namespace lcz {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::ExactUnsupported: return "EXACT_UNSUPPORTED";
    case ErrorCode::DegenerateMetric: return "DEGENERATE_METRIC";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::NotLieAlgebra: return "NOT_LIE_ALGEBRA";
    case ErrorCode::NotSelfAdjoint: return "NOT_SELF_ADJOINT";
    case ErrorCode::BadDecomposition: return "BAD_DECOMPOSITION";
    case ErrorCode::TypeMismatch: return "TYPE_MISMATCH";
    case ErrorCode::NotLorentzian: return "NOT_LORENTZIAN";
    case ErrorCode::DefectiveAmbiguity: return "DEFECTIVE_AMBIGUITY";
    case ErrorCode::BadParam: return "BAD_PARAM";
    case ErrorCode::NotEinstein: return "NOT_EINSTEIN";
    case ErrorCode::ConstraintViolation: return "CONSTRAINT_VIOLATION";
    case ErrorCode::DuplicateBracket: return "DUPLICATE_BRACKET";
    case ErrorCode::UnknownName: return "UNKNOWN_NAME";
    case ErrorCode::BackendMismatch: return "BACKEND_MISMATCH";
  }
  return "UNKNOWN";
}

const char* backend_name(Backend b) { return b == Backend::Exact ? "exact" : "float"; }

namespace {

// mpq_get_d truncates; pick the nearer of the two candidate doubles.
double nearest_double(const mpq_class& q) {
  double d0 = q.get_d();
  if (!std::isfinite(d0)) return d0;
  double d1 = std::nextafter(d0, q >= 0 ? HUGE_VAL : -HUGE_VAL);
  if (!std::isfinite(d1)) return d0;
  mpq_class e0 = abs(mpq_class(d0) - q);
  mpq_class e1 = abs(mpq_class(d1) - q);
  return e1 < e0 ? d1 : d0;
}

void same_backend(const Scalar& a, const Scalar& b) {
  if (a.backend() != b.backend())
    fail(ErrorCode::BackendMismatch, "arithmetic between exact and float scalars");
}

}  // namespace

Scalar Scalar::integer(long k, Backend b) {
  return b == Backend::Exact ? Scalar(mpq_class(k)) : Scalar(static_cast<double>(k));
}

Scalar Scalar::ratio(long p, long q, Backend b) {
  if (q == 0) fail(ErrorCode::BadParam, "zero denominator");
  if (b == Backend::Exact) return Scalar(mpq_class(p, q));
  return Scalar(static_cast<double>(p) / static_cast<double>(q));
}

const mpq_class& Scalar::rational() const {
  if (!is_exact()) fail(ErrorCode::BackendMismatch, "float scalar has no rational value");
  return std::get<0>(v_);
}

double Scalar::to_double() const {
  return is_exact() ? nearest_double(std::get<0>(v_)) : std::get<1>(v_);
}

Scalar Scalar::to_backend(Backend b) const {
  if (b == backend()) return *this;
  if (b == Backend::Float) return Scalar(to_double());
  double x = std::get<1>(v_);
  if (!std::isfinite(x)) fail(ErrorCode::ExactUnsupported, "non-finite value has no rational form");
  return Scalar(mpq_class(x));
}

bool Scalar::is_zero() const {
  return is_exact() ? sgn(std::get<0>(v_)) == 0 : std::get<1>(v_) == 0.0;
}

int Scalar::sign() const {
  if (is_exact()) return sgn(std::get<0>(v_));
  double x = std::get<1>(v_);
  return (x > 0) - (x < 0);
}

Scalar Scalar::abs() const {
  if (is_exact()) return Scalar(mpq_class(::abs(std::get<0>(v_))));
  return Scalar(std::fabs(std::get<1>(v_)));
}

Scalar Scalar::sqrt() const {
  if (sign() < 0) fail(ErrorCode::BadParam, "square root of a negative scalar");
  if (!is_exact()) return Scalar(std::sqrt(std::get<1>(v_)));
  const mpq_class& q = std::get<0>(v_);
  if (mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t())) {
    mpz_class n = ::sqrt(mpz_class(q.get_num())), d = ::sqrt(mpz_class(q.get_den()));
    return Scalar(mpq_class(n, d));
  }
  fail(ErrorCode::ExactUnsupported, "irrational square root under the exact backend");
}

Scalar& Scalar::operator+=(const Scalar& o) {
  same_backend(*this, o);
  if (is_exact()) std::get<0>(v_) += std::get<0>(o.v_);
  else std::get<1>(v_) += std::get<1>(o.v_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  same_backend(*this, o);
  if (is_exact()) std::get<0>(v_) -= std::get<0>(o.v_);
  else std::get<1>(v_) -= std::get<1>(o.v_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  same_backend(*this, o);
  if (is_exact()) std::get<0>(v_) *= std::get<0>(o.v_);
  else std::get<1>(v_) *= std::get<1>(o.v_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  same_backend(*this, o);
  if (o.is_zero()) fail(ErrorCode::BadParam, "division by zero");
  if (is_exact()) std::get<0>(v_) /= std::get<0>(o.v_);
  else std::get<1>(v_) /= std::get<1>(o.v_);
  return *this;
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(mpq_class(-std::get<0>(v_)));
  return Scalar(-std::get<1>(v_));
}

bool operator==(const Scalar& a, const Scalar& b) {
  same_backend(a, b);
  if (a.is_exact()) return std::get<0>(a.v_) == std::get<0>(b.v_);
  return std::get<1>(a.v_) == std::get<1>(b.v_);
}

bool operator<(const Scalar& a, const Scalar& b) {
  same_backend(a, b);
  if (a.is_exact()) return std::get<0>(a.v_) < std::get<0>(b.v_);
  return std::get<1>(a.v_) < std::get<1>(b.v_);
}

std::string format_double(double x) {
  if (x == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string Scalar::str() const {
  if (is_exact()) return std::get<0>(v_).get_str();
  return format_double(std::get<1>(v_));
}

bool negligible(const Scalar& x, double scale, const Tolerance& tol) {
  if (x.is_exact()) return x.is_zero();
  return std::fabs(x.to_double()) <= tol.abs + tol.rel * scale;
}

// ---------------------------------------------------------------------------
// literal parser

namespace {

// q0 + sum_d q_d*sqrt(d), evaluated alongside a binary64 shadow so that float
// literals round exactly like strtod.
struct QuadSum {
  mpq_class rat = 0;
  std::map<long, mpq_class> rad;
  double approx = 0.0;

  bool has_radical() const {
    for (const auto& [d, c] : rad)
      if (c != 0) return true;
    return false;
  }
};

class LiteralParser {
 public:
  explicit LiteralParser(const std::string& s) : s_(s) {}

  QuadSum parse() {
    QuadSum v = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected character");
    return v;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;

  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorCode::ParseError,
         "scalar literal '" + s_ + "' column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  QuadSum expr() {
    QuadSum v = term();
    for (;;) {
      if (eat('+')) add(v, term(), 1);
      else if (eat('-')) add(v, term(), -1);
      else return v;
    }
  }

  static void add(QuadSum& a, const QuadSum& b, int s) {
    a.rat += s * b.rat;
    for (const auto& [d, c] : b.rad) a.rad[d] += s * c;
    a.approx += s * b.approx;
  }

  QuadSum term() {
    QuadSum v = unary();
    for (;;) {
      if (eat('*')) v = mul(v, unary());
      else if (eat('/')) v = div(v, unary());
      else return v;
    }
  }

  QuadSum mul(const QuadSum& a, const QuadSum& b) {
    if (a.has_radical() && b.has_radical()) error("product of radicals is outside the grammar");
    const QuadSum& r = a.has_radical() ? a : b;
    const QuadSum& k = a.has_radical() ? b : a;
    QuadSum out;
    out.rat = r.rat * k.rat;
    for (const auto& [d, c] : r.rad) out.rad[d] = c * k.rat;
    out.approx = a.approx * b.approx;
    return out;
  }

  QuadSum div(const QuadSum& a, const QuadSum& b) {
    if (b.has_radical()) error("division by a radical is outside the grammar");
    if (b.rat == 0) error("division by zero");
    QuadSum out;
    out.rat = a.rat / b.rat;
    for (const auto& [d, c] : a.rad) out.rad[d] = c / b.rat;
    out.approx = a.approx / b.approx;
    return out;
  }

  QuadSum unary() {
    if (eat('-')) {
      QuadSum v = unary();
      v.rat = -v.rat;
      for (auto& [d, c] : v.rad) c = -c;
      v.approx = -v.approx;
      return v;
    }
    if (eat('+')) return unary();
    return atom();
  }

  QuadSum atom() {
    skip();
    if (pos_ >= s_.size()) error("expected a number");
    if (eat('(')) {
      QuadSum v = expr();
      if (!eat(')')) error("expected ')'");
      return v;
    }
    if (s_.compare(pos_, 4, "sqrt") == 0) {
      pos_ += 4;
      if (!eat('(')) error("expected '(' after sqrt");
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) error("sqrt expects a positive integer");
      mpz_class d(s_.substr(start, pos_ - start), 10);
      if (!eat(')')) error("expected ')'");
      if (d <= 0) error("sqrt argument must be positive");
      for (mpz_class p = 2; p * p <= d; ++p)
        if (d % (p * p) == 0) error("sqrt argument must be square-free");
      QuadSum v;
      if (d == 1) {
        v.rat = 1;
        v.approx = 1.0;
      } else {
        if (!d.fits_slong_p()) error("sqrt argument too large");
        v.rad[d.get_si()] = 1;
        v.approx = std::sqrt(d.get_d());
      }
      return v;
    }
    return number();
  }

  QuadSum number() {
    std::size_t start = pos_;
    auto digits = [&] {
      std::size_t b = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return s_.substr(b, pos_ - b);
    };
    std::string ip = digits();
    std::string fp;
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      fp = digits();
    }
    if (ip.empty() && fp.empty()) error("expected a number");
    long ex = 0;
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      ++pos_;
      int sg = 1;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) sg = s_[pos_++] == '-' ? -1 : 1;
      std::string e = digits();
      if (e.empty() || e.size() > 6) error("bad exponent");
      ex = sg * std::stol(e);
    }
    std::string text = s_.substr(start, pos_ - start);
    mpz_class mant((ip.empty() ? "0" : ip) + fp, 10);
    long scale = ex - static_cast<long>(fp.size());
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
    QuadSum v;
    v.rat = scale >= 0 ? mpq_class(mant * p10) : mpq_class(mant, p10);
    v.rat.canonicalize();
    v.approx = std::strtod(text.c_str(), nullptr);
    return v;
  }
};

}  // namespace

Scalar parse_scalar(const std::string& text, Backend backend) {
  QuadSum v = LiteralParser(text).parse();
  if (backend == Backend::Float) return Scalar(v.approx);
  if (v.has_radical()) fail(ErrorCode::ExactUnsupported, "irrational literal '" + text + "' under the exact backend");
  return Scalar(v.rat);
}

}  // namespace lcz
