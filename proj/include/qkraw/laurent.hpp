#pragma once

// Exact Laurent polynomials in the deformation parameter q, with
// arbitrary-precision rational coefficients.  This is the coefficient
// ring for everything symbolic in the library; anything involving a
// square root lives in the numeric layer instead.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qkraw {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Cplx = std::complex<double>;

inline Rational rational_pow(const Rational& x, long e) {
  if (e == 0) return Rational(1);
  if (x == 0) {
    if (e < 0) throw std::domain_error("rational_pow: 0 to a negative power");
    return Rational(0);
  }
  Rational base = e < 0 ? Rational(1) / x : x;
  long n = e < 0 ? -e : e;
  Rational acc(1);
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

/// Laurent polynomial sum_e c_e q^e with exact rational c_e.
/// Canonical form: no zero coefficient is ever stored.
class LaurentScalar {
 public:
  LaurentScalar() = default;
  explicit LaurentScalar(long c) { set_term(0, Rational(c)); }
  explicit LaurentScalar(const Rational& c) { set_term(0, c); }

  static LaurentScalar zero() { return LaurentScalar(); }
  static LaurentScalar one() { return LaurentScalar(1); }

  /// c * q^e
  static LaurentScalar q_power(long e, const Rational& c = Rational(1)) {
    LaurentScalar s;
    s.set_term(e, c);
    return s;
  }

  bool is_zero() const { return terms_.empty(); }

  const std::map<long, Rational>& terms() const { return terms_; }

  void set_term(long e, const Rational& c) {
    if (c == 0)
      terms_.erase(e);
    else
      terms_[e] = c;
  }

  void add_term(long e, const Rational& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (c != 0) terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentScalar& operator+=(const LaurentScalar& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentScalar& operator-=(const LaurentScalar& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) {
    a += b;
    return a;
  }
  friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b) {
    a -= b;
    return a;
  }
  LaurentScalar operator-() const {
    LaurentScalar r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
    LaurentScalar r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  LaurentScalar& operator*=(const LaurentScalar& o) { return *this = *this * o; }
  LaurentScalar& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
  }

  LaurentScalar pow(unsigned n) const {
    LaurentScalar acc = one(), base = *this;
    while (n > 0) {
      if (n & 1) acc *= base;
      base *= base;
      n >>= 1;
    }
    return acc;
  }

  /// Substitution q -> q^s (s may be negative; s = 0 only for constants).
  LaurentScalar scaled_exponents(long s) const {
    LaurentScalar r;
    for (const auto& [e, c] : terms_) {
      if (s == 0 && e != 0)
        throw std::domain_error("scaled_exponents: q -> 1 on a non-constant");
      r.add_term(e * s, c);
    }
    return r;
  }

  bool operator==(const LaurentScalar& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentScalar& o) const { return !(*this == o); }

  /// Exact evaluation at a nonzero rational point; a ring homomorphism.
  Rational eval_exact(const Rational& q0) const {
    if (q0 == 0) throw std::domain_error("eval_exact: q0 must be nonzero");
    Rational r(0);
    for (const auto& [e, c] : terms_) r += c * rational_pow(q0, e);
    return r;
  }

  double eval(double q0) const {
    double r = 0.0;
    for (const auto& [e, c] : terms_)
      r += static_cast<double>(c) * std::pow(q0, static_cast<double>(e));
    return r;
  }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c << ")";
      if (e != 0) os << "*q^" << e;
    }
    return os.str();
  }

 private:
  std::map<long, Rational> terms_;
};

/// Evaluation context for the numeric layer: a rational base point in
/// (0,1) together with the default comparison tolerance.
struct EvalContext {
  Rational q0 = Rational(3, 5);
  double rel_tol = 1e-10;

  EvalContext() = default;
  EvalContext(Rational q, double tol = 1e-10) : q0(std::move(q)), rel_tol(tol) {
    if (!(q0 > 0 && q0 < 1))
      throw std::domain_error("EvalContext: q0 must lie in (0,1)");
  }
  double q() const { return static_cast<double>(q0); }
};

namespace detail {

// Decimal-digit accumulation; immune to the octal reading a string
// constructor would give leading zeros.
inline Integer parse_digits(const std::string& s) {
  if (s.empty()) throw std::domain_error("parse_rational: empty number");
  Integer acc = 0;
  for (char c : s) {
    if (c < '0' || c > '9')
      throw std::domain_error("parse_rational: bad digit in \"" + s + "\"");
    acc = acc * 10 + (c - '0');
  }
  return acc;
}

inline Integer parse_signed(const std::string& s) {
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    Integer v = parse_digits(s.substr(1));
    return s[0] == '-' ? Integer(-v) : v;
  }
  return parse_digits(s);
}

}  // namespace detail

/// Parse "num/den" or a plain integer/decimal string into an exact rational.
inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Integer num = detail::parse_signed(s.substr(0, slash));
    Integer den = detail::parse_signed(s.substr(slash + 1));
    if (den == 0) throw std::domain_error("parse_rational: zero denominator");
    return Rational(num, den);
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) return Rational(detail::parse_signed(s));
  bool neg = !s.empty() && s[0] == '-';
  std::string head = s.substr(neg || s[0] == '+' ? 1 : 0,
                              dot - (neg || s[0] == '+' ? 1 : 0));
  std::string tail = s.substr(dot + 1);
  if (head.empty() && tail.empty())
    throw std::domain_error("parse_rational: empty number");
  Integer num = detail::parse_digits(head.empty() ? "0" : head);
  for (char c : tail) {
    if (c < '0' || c > '9')
      throw std::domain_error("parse_rational: bad digit in \"" + s + "\"");
    num = num * 10 + (c - '0');
  }
  Integer den = 1;
  for (size_t i = 0; i < tail.size(); ++i) den *= 10;
  Rational r(num, den);
  return neg ? Rational(-r) : r;
}

inline std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << numerator(r) << "/" << denominator(r);
  return os.str();
}

}  // namespace qkraw
