#pragma once

// q-Pochhammer symbols, Gaussian binomial/multinomial coefficients and
// terminating basic hypergeometric series.  Exact routines return
// LaurentScalar values; numeric routines work in complex doubles.

#include "qkraw/laurent.hpp"

#include <array>
#include <optional>
#include <vector>

namespace qkraw {

// Truncation threshold for infinite products: stop once |a q^k| drops
// below the resolution of an accumulated double product.
inline constexpr double kInfProductCutoff = 1e-18;

/// Integer power by binary exponentiation; deterministic across call
/// sites, unlike the transcendental complex pow.
inline Cplx qpow(Cplx q, long e) {
  if (e < 0) return 1.0 / qpow(q, -e);
  Cplx acc(1.0), base = q;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

/// (q^s; q^step)_n = prod_{k=0}^{n-1} (1 - q^{s + k*step}), exact.
inline LaurentScalar qpoch_exact(long s_exp, long step_exp, long n) {
  if (n < 0) throw std::domain_error("qpoch_exact: negative length");
  LaurentScalar acc = LaurentScalar::one();
  for (long k = 0; k < n; ++k) {
    acc *= LaurentScalar::one() - LaurentScalar::q_power(s_exp + k * step_exp);
    if (acc.is_zero()) break;
  }
  return acc;
}

/// (a; q)_n, numeric.
inline Cplx qpoch(Cplx a, Cplx q, long n) {
  if (n < 0) throw std::domain_error("qpoch: negative length");
  Cplx acc = 1.0;
  Cplx aq = a;
  for (long k = 0; k < n; ++k) {
    acc *= 1.0 - aq;
    aq *= q;
  }
  return acc;
}

/// (a; q)_infinity, numeric; requires |q| < 1.
inline Cplx qpoch_inf(Cplx a, Cplx q) {
  if (!(std::abs(q) < 1.0))
    throw std::domain_error("qpoch_inf: |q| must be < 1");
  Cplx acc = 1.0;
  Cplx aq = a;
  while (std::abs(aq) >= kInfProductCutoff) {
    acc *= 1.0 - aq;
    aq *= q;
  }
  return acc;
}

/// q-Pochhammer argument descriptor: the base is either an exact power
/// of q (usable formally) or a plain complex number (numeric only).
/// length == nullopt requests the infinite product.
struct QPochSpec {
  enum class Kind { ExactPower, Numeric };
  Kind kind = Kind::Numeric;
  long a_exp = 0;        // a = q^{a_exp}   (ExactPower)
  Cplx a_value = 0.0;    // a directly      (Numeric)
  std::optional<long> length;

  static QPochSpec exact_power(long e, std::optional<long> n) {
    QPochSpec s;
    s.kind = Kind::ExactPower;
    s.a_exp = e;
    s.length = n;
    return s;
  }
  static QPochSpec numeric(Cplx a, std::optional<long> n) {
    QPochSpec s;
    s.a_value = a;
    s.length = n;
    return s;
  }
};

/// Exact dispatch for QPochSpec; infinite length is rejected here.
inline LaurentScalar q_pochhammer_exact(const QPochSpec& spec, long step_exp = 1) {
  if (spec.kind != QPochSpec::Kind::ExactPower)
    throw std::domain_error("q_pochhammer_exact: numeric base in exact mode");
  if (!spec.length)
    throw std::domain_error("q_pochhammer_exact: infinite length in exact mode");
  return qpoch_exact(spec.a_exp, step_exp, *spec.length);
}

/// Numeric dispatch for QPochSpec at base point q.
inline Cplx q_pochhammer(const QPochSpec& spec, Cplx q) {
  Cplx a = spec.kind == QPochSpec::Kind::ExactPower
               ? qpow(q, spec.a_exp)
               : spec.a_value;
  if (spec.length) return qpoch(a, q, *spec.length);
  return qpoch_inf(a, q);
}

/// Gaussian binomial [n, k]_q as a polynomial in q (Pascal recurrence,
/// so q = 1 is a valid evaluation point).  Zero outside 0 <= k <= n.
inline LaurentScalar gauss_binomial(long n, long k) {
  if (n < 0) throw std::domain_error("gauss_binomial: negative n");
  if (k < 0 || k > n) return LaurentScalar::zero();
  // row-by-row DP over [i, j]_q = [i-1, j-1]_q + q^j [i-1, j]_q
  std::vector<LaurentScalar> row(static_cast<size_t>(k) + 1);
  row[0] = LaurentScalar::one();
  for (long i = 1; i <= n; ++i) {
    long jmax = std::min<long>(i, k);
    for (long j = jmax; j >= 1; --j) {
      LaurentScalar v = row[j - 1];
      if (j < i) v += LaurentScalar::q_power(j) * row[j];
      row[j] = v;
    }
  }
  return row[k];
}

/// [n, k] at base q^{base_exp}; exact for any nonzero integer exponent.
inline LaurentScalar gauss_binomial(long n, long k, long base_exp) {
  return gauss_binomial(n, k).scaled_exponents(base_exp);
}

/// Gaussian trinomial [N; m1, m2, m3]_q with m1+m2+m3 = N.
inline LaurentScalar gauss_multinomial(long N, const std::array<long, 3>& m) {
  if (m[0] < 0 || m[1] < 0 || m[2] < 0 || m[0] + m[1] + m[2] != N)
    throw std::domain_error("gauss_multinomial: marginals do not sum to N");
  return gauss_binomial(N, m[0]) * gauss_binomial(N - m[0], m[1]);
}

inline LaurentScalar gauss_multinomial(long N, const std::array<long, 3>& m,
                                       long base_exp) {
  return gauss_multinomial(N, m).scaled_exponents(base_exp);
}

/// Numeric [n, k]_q; valid at q = 1 as well.
inline Cplx q_binomial(long n, long k, Cplx q) {
  if (n < 0) throw std::domain_error("q_binomial: negative n");
  if (k < 0 || k > n) return 0.0;
  std::vector<Cplx> row(static_cast<size_t>(k) + 1, 0.0);
  row[0] = 1.0;
  for (long i = 1; i <= n; ++i) {
    long jmax = std::min<long>(i, k);
    for (long j = jmax; j >= 1; --j) {
      Cplx v = row[j - 1];
      if (j < i) v += qpow(q, j) * row[j];
      row[j] = v;
    }
  }
  return row[k];
}

inline Cplx q_multinomial(long N, const std::array<long, 3>& m, Cplx q) {
  if (m[0] < 0 || m[1] < 0 || m[2] < 0 || m[0] + m[1] + m[2] != N)
    throw std::domain_error("q_multinomial: marginals do not sum to N");
  return q_binomial(N, m[0], q) * q_binomial(N - m[0], m[1], q);
}

/// Terminating 2phi1 with explicit parameter values:
///   sum_{j=0}^{n} [(a;q)_j (b;q)_j / ((c;q)_j (q;q)_j)] z^j.
/// The caller supplies the exact termination index n (for q-power
/// parameters this must be the structural truncation point: a factor
/// like 1 - q^{-x} q^x is not exactly zero in floating point, and with
/// |z| > 1 a missed termination lets ghost terms explode).
inline Cplx phi21_terminating_vals(Cplx a, Cplx b, Cplx c, long n, Cplx q,
                                   Cplx z) {
  if (n < 0) throw std::domain_error("phi21: negative termination index");
  Cplx sum = 1.0;
  Cplx term = 1.0;
  Cplx aq = a, bq = b, cq = c, qq = q;
  for (long j = 0; j < n; ++j) {
    Cplx den = (1.0 - cq) * (1.0 - qq);
    Cplx num = (1.0 - aq) * (1.0 - bq);
    if (num == 0.0) break;  // exact earlier termination (b = 0 or exact hit)
    if (std::abs(den) == 0.0)
      throw std::domain_error("phi21: denominator Pochhammer vanishes");
    term *= num / den * z;
    sum += term;
    aq *= q;
    bq *= q;
    cq *= q;
    qq *= q;
  }
  return sum;
}

/// Terminating 2phi1(q^{alpha_exp}, q^{beta_exp}; q^{gamma_exp}; q; z)
/// with alpha_exp = -n <= 0 enforcing termination.  Truncation points
/// and vanishing denominators are derived from the integer exponents, so
/// termination is exact.
inline Cplx phi21_terminating(long alpha_exp, long beta_exp, long gamma_exp,
                              Cplx q, Cplx z) {
  if (alpha_exp > 0)
    throw std::domain_error("phi21_terminating: upper exponent must be <= 0");
  long n = -alpha_exp;
  long jstop = n;
  if (beta_exp <= 0) jstop = std::min(jstop, -beta_exp);
  // (q^{gamma}; q)_j vanishes once j > -gamma
  if (gamma_exp <= 0 && -gamma_exp < jstop)
    throw std::domain_error("phi21: denominator Pochhammer vanishes");
  Cplx sum = 1.0;
  Cplx term = 1.0;
  for (long j = 0; j < jstop; ++j) {
    Cplx num = (1.0 - qpow(q, alpha_exp + j)) * (1.0 - qpow(q, beta_exp + j));
    Cplx den = (1.0 - qpow(q, gamma_exp + j)) * (1.0 - qpow(q, j + 1));
    term *= num / den * z;
    sum += term;
  }
  return sum;
}

}  // namespace qkraw
