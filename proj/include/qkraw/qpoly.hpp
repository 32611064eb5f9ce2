#pragma once

// Quantum q-Krawtchouk polynomials (univariate and bivariate of Tratnik
// type), their weights and normalizations, weighted Wall polynomials,
// and the scalar factors of the shift operators realized by the matrix
// elements in the representations.  Everything here is numeric: the
// closed forms involve square roots and infinite products that are
// irrational in q.  Weights can be complex intermediates; products that
// must be real are checked downstream via their imaginary residual.

#include "qkraw/qseries.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>

namespace qkraw {

inline double parity_sign(long e) { return (((e % 2) + 2) % 2 == 0) ? 1.0 : -1.0; }

/// k_n(q^{-x}; p, N, q) =
///   (-1)^n (q^{-N};q)_n q^{n(n-1)/2} 2phi1(q^{-n}, q^{-x}; q^{-N}; q; p q^{n+1}).
inline Cplx kraw1(long n, long x, Cplx p, long N, Cplx q) {
  if (n < 0 || n > N)
    throw std::domain_error("kraw1: degree must satisfy 0 <= n <= N");
  Cplx pre = parity_sign(n) * qpoch(qpow(q, -N), q, n) * qpow(q, n * (n - 1) / 2);
  Cplx series = phi21_terminating(-n, -x, -N, q, p * qpow(q, n + 1));
  return pre * series;
}

/// Square root of the orthogonality weight at lattice point x:
/// w_x(p) = [ (-1)^{N-x} q^{x(x-1)/2} [N,x]_q (pq;q)_{N-x}/(q;q)_N p^{-N}
///            q^{-N(N+1)/2} ]^{1/2}.
inline Cplx kraw1_weight(long x, Cplx p, long N, Cplx q) {
  if (x < 0 || x > N)
    throw std::domain_error("kraw1_weight: x must satisfy 0 <= x <= N");
  Cplx inner = parity_sign(N - x) * qpow(q, x * (x - 1) / 2) *
               q_binomial(N, x, q) * qpoch(p * q, q, N - x) / qpoch(q, q, N) *
               qpow(p, -N) *
               qpow(q, -N * (N + 1) / 2);
  return std::sqrt(inner);
}

/// Normalization factor:
/// Theta_n(p) = q^{-n(n-1)/2}/(q^{-N};q)_n
///              [ (-1)^n q^{n(n+1)/2 - Nn} [N,n]_q (q;q)_N/(qp;q)_n ]^{1/2}.
inline Cplx kraw1_norm(long n, Cplx p, long N, Cplx q) {
  if (n < 0 || n > N)
    throw std::domain_error("kraw1_norm: degree must satisfy 0 <= n <= N");
  Cplx inner = parity_sign(n) * qpow(q, n * (n + 1) / 2 - N * n) *
               q_binomial(N, n, q) * qpoch(q, q, N) / qpoch(q * p, q, n);
  return qpow(q, -(n * (n - 1) / 2)) / qpoch(qpow(q, -N), q, n) * std::sqrt(inner);
}

namespace detail {

// k_n on a sub-lattice of size L: vanishes for n > L because the leading
// Pochhammer (q^{-L};q)_n is zero.  The coupled factors of the Tratnik
// product hit this case whenever the first degree exceeds x+y.
inline Cplx kraw1_or_zero(long n, long x, Cplx p, long L, Cplx q) {
  if (n > L) return 0.0;
  return kraw1(n, x, p, L, q);
}

}  // namespace detail

/// Bivariate polynomial of Tratnik type.  The parameters enter as powers
/// of the base q: with u_exp = u+1 and v_exp = v+1 this evaluates
///   k_n(x; q^{-v_exp}, x+y, q) k_m(x+y-n; q^{-u_exp}, N-n, q).
inline Cplx kraw2_tratnik(long n, long m, long x, long y, long u_exp, long v_exp,
                          long N, Cplx q) {
  if (n < 0 || m < 0 || n + m > N)
    throw std::domain_error("kraw2_tratnik: degrees outside simplex");
  if (x < 0 || y < 0 || x + y > N)
    throw std::domain_error("kraw2_tratnik: lattice point outside simplex");
  Cplx first = detail::kraw1_or_zero(n, x, qpow(q, -v_exp), x + y, q);
  if (first == Cplx(0.0)) return 0.0;
  return first * kraw1(m, x + y - n, qpow(q, -u_exp), N - n, q);
}

/// Square-rooted bivariate weight W^{(N)}_{n1,n2}(u,v); q is the small
/// base (the formula lives at base q^2), u and v are integers.
inline Cplx kraw2_weight(long n1, long n2, long u, long v, long N, Cplx q) {
  if (n1 < 0 || n2 < 0 || n1 + n2 > N)
    throw std::domain_error("kraw2_weight: indices outside simplex");
  Cplx q2 = q * q;
  Cplx inner = parity_sign(N - n1) * qpow(q, 2 * v * (n1 + n2)) *
               qpow(q, n1 * (n1 - 1)) *
               q_multinomial(N, {n1, n2, N - n1 - n2}, q2) *
               qpoch(qpow(q, -2 * v), q2, n2) *
               qpoch(qpow(q, -2 * u), q2, N - n1 - n2) *
               qpow(q, 2 * N * (u + 1)) * qpow(q, -N * (N + 1));
  return std::sqrt(inner);
}

/// Bivariate normalization N^{(N)}_{m1,m2}(u,v).
inline Cplx kraw2_norm(long m1, long m2, long u, long v, long N, Cplx q) {
  if (m1 < 0 || m2 < 0 || m1 + m2 > N)
    throw std::domain_error("kraw2_norm: indices outside simplex");
  Cplx q2 = q * q;
  Cplx outer = qpow(q, -m1 * (m1 - 1) - m2 * (m2 - 1)) * qpow(q, -m1 * (u + 1)) *
               qpoch(q2, q2, N - m1 - m2) / qpoch(q2, q2, N);
  Cplx inner = parity_sign(m1 + m2) * q_multinomial(N, {m1, m2, N - m1 - m2}, q2) *
               qpow(q, 2 * N * (m1 + m2) + 4 * m1 + 2 * m2 - 2 * m1 * m2 -
                           m1 * (m1 - 1) - m2 * (m2 - 1)) /
               (qpoch(qpow(q, -2 * u), q2, m2) * qpoch(qpow(q, -2 * v), q2, m1));
  return outer * std::sqrt(inner);
}

namespace detail {

using Quad = boost::multiprecision::cpp_bin_float_quad;

inline Quad quad_ipow(Quad base, long e) {
  if (e < 0) return 1 / quad_ipow(base, -e);
  Quad acc(1);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

inline Quad quad_qpoch(Quad a, const Quad& q, long n) {
  Quad acc(1);
  for (long k = 0; k < n; ++k) {
    acc *= 1 - a;
    a *= q;
  }
  return acc;
}

inline Quad quad_qpoch_inf(Quad a, const Quad& q) {
  Quad acc(1);
  while (abs(a) >= kInfProductCutoff) {
    acc *= 1 - a;
    a *= q;
  }
  return acc;
}

}  // namespace detail

/// Weighted, normalized Wall polynomial
///   pbar_v(q^{2w}; q^{2s}; q^2) = (-1)^{v+w}
///     sqrt( q^{2(w-v)(s+1)} (q^{2s+2};q^2)_inf (q^{2s+2};q^2)_v
///           / ((q^2;q^2)_v (q^2;q^2)_w) )
///     2phi1(q^{-2v}, 0; q^{2s+2}; q^2; q^{2w+2}).
/// Indices outside the lattice (v < 0 or w < 0) give 0.  For w < v the
/// alternating series cancels almost completely against an exponentially
/// large prefactor, so the evaluation runs in quadruple precision.
inline Cplx wall_pbar(long v, long w, long s, Cplx q) {
  if (q.imag() != 0.0 || !(q.real() > 0.0 && q.real() < 1.0))
    throw std::domain_error("wall_pbar: q must lie in (0,1)");
  if (s < 0) throw std::domain_error("wall_pbar: negative lattice parameter");
  if (v < 0 || w < 0) return 0.0;
  using detail::Quad;
  const Quad qq(q.real());
  const Quad q2 = qq * qq;
  Quad inner = detail::quad_ipow(qq, 2 * (w - v) * (s + 1)) *
               detail::quad_qpoch_inf(detail::quad_ipow(qq, 2 * s + 2), q2) *
               detail::quad_qpoch(detail::quad_ipow(qq, 2 * s + 2), q2, v) /
               (detail::quad_qpoch(q2, q2, v) * detail::quad_qpoch(q2, q2, w));
  // terminating 2phi1 with a zero upper parameter
  Quad sum(1), term(1);
  Quad aq = detail::quad_ipow(qq, -2 * v);
  Quad cq = detail::quad_ipow(qq, 2 * s + 2);
  Quad qj = q2;
  const Quad z = detail::quad_ipow(qq, 2 * w + 2);
  for (long j = 0; j < v; ++j) {
    term *= (1 - aq) / ((1 - cq) * (1 - qj)) * z;
    sum += term;
    aq *= q2;
    cq *= q2;
    qj *= q2;
  }
  Quad val = parity_sign(v + w) * sqrt(inner) * sum;
  return Cplx(static_cast<double>(val), 0.0);
}

/// Scalar factor of the univariate shift operator: the value
/// t_{m,n,T}(k).  The closed form is stated at a shifted argument, so we
/// substitute k -> k + T - n before applying
///   (-1)^{n-m} w_n(p) Theta_m(p) k_m(q^{-2n}; p, T, q^2),  p = q^{-2(k+1)}.
/// A shift target below the bottom of the lattice gives 0.
inline Cplx uni_shift_scalar(long m, long n, long T, long k, Cplx q) {
  if (m < 0 || m > T || n < 0 || n > T)
    throw std::domain_error("uni_shift_scalar: need 0 <= m, n <= T");
  if (k + T - m - n < 0) return 0.0;
  long kk = k + T - n;
  Cplx q2 = q * q;
  Cplx p = qpow(q, -2 * (kk + 1));
  return parity_sign(n - m) * kraw1_weight(n, p, T, q2) * kraw1_norm(m, p, T, q2) *
         kraw1(m, n, p, T, q2);
}

/// Scalar factor of the bivariate shift operator t^{(21)}_{m,n}(u,v):
/// substitute u -> u + N - n1 - n2, v -> v + n2, then
///   (-1)^{m1-n2} W_{n1,n2}(u,v) N_{m1,m2}(u,v)
///   K_{m1,m2}(n1, n2; q^{u+1}, q^{v+1}, N, q^2).
/// Inadmissible middle indices or shift targets below the lattice give 0.
inline Cplx bi_shift_scalar(long m1, long m2, long n1, long n2, long N, long u,
                            long v, Cplx q) {
  if (m1 < 0 || m2 < 0 || m1 + m2 > N || n1 < 0 || n2 < 0 || n1 + n2 > N)
    throw std::domain_error("bi_shift_scalar: indices outside simplex");
  if (m1 > n1 + n2) return 0.0;
  if (u - m2 + N - n1 - n2 < 0 || v + n2 - m1 < 0) return 0.0;
  long uu = u + N - n1 - n2;
  long vv = v + n2;
  Cplx q2 = q * q;
  return parity_sign(m1 - n2) * kraw2_weight(n1, n2, uu, vv, N, q) *
         kraw2_norm(m1, m2, uu, vv, N, q) *
         kraw2_tratnik(m1, m2, n1, n2, uu + 1, vv + 1, N, q2);
}

/// Coefficient of the Wall product identity:
///   C^{(N)}_{m,n,j}(u,v,w,t) = w_{n1}(q^{-2(t+1)}) Theta_j(q^{-2(t+1)})
///     W_{j,n1+n2-j}(u, v-j) / W_{n1,n2}(u, w)
///     sqrt( (q^{-2w};q^2)_{m1} / (q^{-2v+2j};q^2)_{m1} ),
/// with the univariate weight and normalization on the lattice of size
/// n1+n2.  The sign is +1: composing the shift-operator scalars with the
/// Clebsch-Gordan map cancels all parities.
inline Cplx coeff_C(long m1, long m2, long n1, long n2, long j, long N, long u,
                    long v, long w, long t, Cplx q) {
  if (j < 0 || j > N) throw std::domain_error("coeff_C: need 0 <= j <= N");
  if (j > n1 + n2)
    throw std::domain_error("coeff_C: j exceeds the univariate lattice");
  (void)m2;
  Cplx q2 = q * q;
  Cplx p = qpow(q, -2 * (t + 1));
  Cplx wden = kraw2_weight(n1, n2, u, w, N, q);
  if (wden == 0.0) throw std::domain_error("coeff_C: vanishing weight W(u,w)");
  Cplx ratio = std::sqrt(qpoch(qpow(q, -2 * w), q2, m1) /
                         qpoch(qpow(q, -2 * v + 2 * j), q2, m1));
  return kraw1_weight(n1, p, n1 + n2, q2) * kraw1_norm(j, p, n1 + n2, q2) *
         kraw2_weight(j, n1 + n2 - j, u, v - j, N, q) / wden * ratio;
}

}  // namespace qkraw
