#pragma once

#include <gmpxx.h>

#include <string>
#include <variant>

#include "lcz/error.hpp"

namespace lcz {

enum class Backend { Exact, Float };

const char* backend_name(Backend b);

// Default rel=1e-9, abs=1e-12. The exact backend ignores both.
struct Tolerance {
  double rel = 1e-9;
  double abs = 1e-12;
};

// Exact rational (GMP) or binary64. Arithmetic between the two backends throws
// BackendMismatch; conversion is always explicit.
class Scalar {
 public:
  Scalar() : v_(mpq_class(0)) {}
  explicit Scalar(const mpq_class& q) : v_(q) { std::get<0>(v_).canonicalize(); }
  explicit Scalar(double x) : v_(x) {}

  static Scalar integer(long k, Backend b);
  static Scalar ratio(long p, long q, Backend b);
  static Scalar zero(Backend b) { return integer(0, b); }
  static Scalar one(Backend b) { return integer(1, b); }

  Backend backend() const { return v_.index() == 0 ? Backend::Exact : Backend::Float; }
  bool is_exact() const { return v_.index() == 0; }
  const mpq_class& rational() const;
  double to_double() const;
  Scalar to_backend(Backend b) const;

  bool is_zero() const;
  int sign() const;
  Scalar abs() const;
  Scalar sqrt() const;  // float backend only

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  // Same-backend comparisons; float compares the stored binary64 values.
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator<(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

  // Exact: reduced fraction ("-8/5", "0"). Float: 17 significant digits.
  std::string str() const;

 private:
  std::variant<mpq_class, double> v_;
};

std::string format_double(double x);

// True when x is exactly zero (exact) or |x| <= abs + rel*scale (float).
bool negligible(const Scalar& x, double scale, const Tolerance& tol);

// Literal grammar: INT | INT/POSINT | DECIMAL | a (+|-) b*sqrt(d), with
// rational a, b and square-free d > 0. Products and parentheses of these are
// accepted as long as at most one radical factor appears per term.
Scalar parse_scalar(const std::string& text, Backend backend);

}  // namespace lcz
