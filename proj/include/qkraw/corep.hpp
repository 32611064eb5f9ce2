#pragma once

// Matrix elements of the symmetric corepresentations.  The level-N
// comodule has the monomial basis z^m with |m| = N, where the z_i
// satisfy z_i z_j = q z_j z_i for i < j.  coaction_expand computes the
// coaction coefficients by direct expansion in the tensor algebra and
// serves as the independent oracle for the closed-form h_element.

#include "qkraw/ncalg.hpp"
#include "qkraw/qseries.hpp"
#include "qkraw/threading.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace qkraw {

/// Composition of N into three nonnegative parts.
using MultiIndex3 = std::array<long, 3>;

inline long level(const MultiIndex3& m) { return m[0] + m[1] + m[2]; }

/// All |m| = N in ascending lexicographic order by (m1, m2).
inline std::vector<MultiIndex3> multi_indices(long N) {
  std::vector<MultiIndex3> out;
  for (long m1 = 0; m1 <= N; ++m1)
    for (long m2 = 0; m2 + m1 <= N; ++m2) out.push_back({m1, m2, N - m1 - m2});
  return out;
}

/// 3x3 nonnegative integer matrix, row-major.
using IndexMatrix3 = std::array<long, 9>;

inline IndexMatrix3 transpose(const IndexMatrix3& a) {
  IndexMatrix3 t{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[j * 3 + i] = a[i * 3 + j];
  return t;
}

/// All matrices with row marginals m and column marginals n, in
/// lexicographic order of the flattened rows.
inline std::vector<IndexMatrix3> index_matrices(const MultiIndex3& m,
                                                const MultiIndex3& n) {
  if (level(m) != level(n))
    throw std::domain_error("index_matrices: marginal sums differ");
  std::vector<IndexMatrix3> out;
  for (long a11 = 0; a11 <= std::min(m[0], n[0]); ++a11)
    for (long a12 = 0; a11 + a12 <= m[0] && a12 <= n[1]; ++a12) {
      long a13 = m[0] - a11 - a12;
      if (a13 > n[2]) continue;
      for (long a21 = 0; a21 <= std::min(m[1], n[0] - a11); ++a21)
        for (long a22 = 0; a21 + a22 <= m[1] && a12 + a22 <= n[1]; ++a22) {
          long a23 = m[1] - a21 - a22;
          long a31 = n[0] - a11 - a21;
          long a32 = n[1] - a12 - a22;
          long a33 = n[2] - a13 - a23;
          if (a23 + a13 > n[2] || a31 < 0 || a32 < 0 || a33 < 0) continue;
          if (a31 + a32 + a33 != m[2]) continue;
          out.push_back({a11, a12, a13, a21, a22, a23, a31, a32, a33});
        }
    }
  return out;
}

/// Q(a) = q^{-f(a)} with
/// f(a) = a13(a21+a22+a32) + a31(a12+a22+a23) + a12 a21 + a13 a31 + a23 a32;
/// symmetric under transposition of a.
inline LaurentScalar q_twist(const IndexMatrix3& a) {
  auto at = [&](int i, int j) { return a[(i - 1) * 3 + (j - 1)]; };
  long f = at(1, 3) * (at(2, 1) + at(2, 2) + at(3, 2)) +
           at(3, 1) * (at(1, 2) + at(2, 2) + at(2, 3)) +
           at(1, 2) * at(2, 1) + at(1, 3) * at(3, 1) + at(2, 3) * at(3, 2);
  return LaurentScalar::q_power(-f);
}

/// Product over rows i of [m_i; a_i1, a_i2, a_i3] at base q^{base_exp}.
inline LaurentScalar row_multinomial(const MultiIndex3& m, const IndexMatrix3& a,
                                     long base_exp) {
  LaurentScalar out = LaurentScalar::one();
  for (int i = 0; i < 3; ++i)
    out *= gauss_multinomial(m[i], {a[i * 3], a[i * 3 + 1], a[i * 3 + 2]},
                             base_exp);
  return out;
}

/// [N; m1, m2, m3] at base q^{-2}: the level normalization.
inline LaurentScalar level_multinomial(long N, const MultiIndex3& m) {
  return gauss_multinomial(N, {m[0], m[1], m[2]}, -2);
}

namespace detail {

// Column-major generator word prod_k prod_i x_ik^{a_ik}.
inline std::vector<int> column_major_word(const IndexMatrix3& a) {
  std::vector<int> w;
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (long r = 0; r < a[i * 3 + k]; ++r) w.push_back(i * 3 + k);
  return w;
}

}  // namespace detail

/// Unnormalized matrix element of the level-N left comodule:
///   h_{m,n} = sum_a Q(a) [m; a]_{q^{-2}} prod_k prod_i x_ik^{a_ik},
/// an exact polynomial with Laurent coefficients.
inline NCPoly h_element(long N, const MultiIndex3& m, const MultiIndex3& n) {
  if (level(m) != N || level(n) != N)
    throw std::domain_error("h_element: indices must have |m| = |n| = N");
  NCPoly out;
  for (const auto& a : index_matrices(m, n)) {
    LaurentScalar coeff = q_twist(a) * row_multinomial(m, a, -2);
    NCPoly mono = normal_order_codes(detail::column_major_word(a));
    mono *= coeff;
    out += mono;
  }
  return out;
}

/// Unitary matrix element: t_{m,n} = sqrt([N;m]/[N;n] at q^{-2}) h_{m,n}.
/// The square-root normalization is kept as a separate numeric factor so
/// the polynomial part stays exact.
struct TElement {
  NCPoly h;
  double factor = 1.0;
};

inline double t_norm_factor(long N, const MultiIndex3& m, const MultiIndex3& n,
                            const Rational& q0) {
  Rational num = level_multinomial(N, m).eval_exact(q0);
  Rational den = level_multinomial(N, n).eval_exact(q0);
  return std::sqrt(static_cast<double>(num / den));
}

inline TElement t_element(long N, const MultiIndex3& m, const MultiIndex3& n,
                          const Rational& q0) {
  return TElement{h_element(N, m, n), t_norm_factor(N, m, n, q0)};
}

/// Right-comodule matrix element: sum over b with row sums n and column
/// sums m of Q(b) [prod_j (m_j; column j of b)]_{q^{-2}} and the
/// column-major monomial prod_j prod_k x_kj^{b_kj}.  At level one this
/// gives h_right(1, e_k, e_i) = x_ik.
inline NCPoly h_right_element(long N, const MultiIndex3& m, const MultiIndex3& n) {
  if (level(m) != N || level(n) != N)
    throw std::domain_error("h_right_element: indices must have |m| = |n| = N");
  NCPoly out;
  for (const auto& b : index_matrices(n, m)) {
    // columns of b decompose m; multinomials run down columns
    LaurentScalar coeff = q_twist(b);
    for (int j = 0; j < 3; ++j)
      coeff *= gauss_multinomial(m[j], {b[j], b[3 + j], b[6 + j]}, -2);
    std::vector<int> w;
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (long r = 0; r < b[k * 3 + j]; ++r) w.push_back(k * 3 + j);
    NCPoly mono = normal_order_codes(std::move(w));
    mono *= coeff;
    out += mono;
  }
  return out;
}

/// Element of (algebra) tensor (q-symmetric z-algebra); the z-leg is a
/// commutative-up-to-q monomial z1^a z2^b z3^c.
class CoactionPoly {
 public:
  using ZMono = std::array<long, 3>;
  using Key = std::pair<NCMonomial, ZMono>;

  static CoactionPoly one() {
    CoactionPoly p;
    p.terms_[{nc_one(), {0, 0, 0}}] = LaurentScalar::one();
    return p;
  }

  const std::map<Key, LaurentScalar>& terms() const { return terms_; }

  void add_term(const NCMonomial& x, const ZMono& z, const LaurentScalar& c) {
    if (c.is_zero()) return;
    Key k{x, z};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(std::move(k), c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Multiply by sum_k x_ik (x) z_k, the coaction image of z_i.
  CoactionPoly coact_with(int i) const {
    CoactionPoly out;
    for (const auto& [key, c] : terms_) {
      const auto& [xm, zm] = key;
      for (int k = 1; k <= 3; ++k) {
        // x-leg: existing monomial times x_ik
        std::vector<int> w = detail::monomial_word(xm);
        w.push_back((i - 1) * 3 + (k - 1));
        NCPoly xprod = normal_order_codes(std::move(w));
        // z-leg: z^zm * z_k picks up q^{-(number of z_j with j > k)}
        long twist = 0;
        for (int j = k; j < 3; ++j) twist += zm[j];
        ZMono z2 = zm;
        ++z2[k - 1];
        LaurentScalar zc = LaurentScalar::q_power(-twist, Rational(1));
        for (const auto& [mx, cx] : xprod.terms())
          out.add_term(mx, z2, c * zc * cx);
      }
    }
    return out;
  }

 private:
  std::map<Key, LaurentScalar> terms_;
};

/// Expand the coaction of z^m = z1^{m1} z2^{m2} z3^{m3} by multiplying
/// out prod_i (sum_k x_ik (x) z_k)^{m_i} and collecting the coefficient
/// polynomial of each z^n.  Independent oracle for h_element.
inline std::map<MultiIndex3, NCPoly> coaction_expand(const MultiIndex3& m) {
  CoactionPoly acc = CoactionPoly::one();
  for (int i = 1; i <= 3; ++i)
    for (long r = 0; r < m[i - 1]; ++r) acc = acc.coact_with(i);
  std::map<MultiIndex3, NCPoly> out;
  for (const auto& [key, c] : acc.terms()) {
    const auto& [xm, zm] = key;
    out[zm].add_term(xm, c);
  }
  return out;
}

/// Matrix element table for one level: (m,n) -> exact polynomial, plus
/// the numeric unitary normalization when a base point is supplied.
struct MatrixElementTable {
  long N = 0;
  std::map<std::pair<MultiIndex3, MultiIndex3>, NCPoly> h;
  std::map<std::pair<MultiIndex3, MultiIndex3>, double> t_factor;

  /// Entries are computed independently (in parallel) and merged in a
  /// fixed order, so the table is deterministic.
  static MatrixElementTable build(long N, const Rational* q0 = nullptr) {
    MatrixElementTable tab;
    tab.N = N;
    auto idx = multi_indices(N);
    std::vector<std::pair<MultiIndex3, MultiIndex3>> pairs;
    for (const auto& m : idx)
      for (const auto& n : idx) pairs.emplace_back(m, n);
    std::vector<NCPoly> hs(pairs.size());
    std::vector<double> fs(pairs.size(), 1.0);
    parallel_for(pairs.size(), [&](size_t i) {
      hs[i] = h_element(N, pairs[i].first, pairs[i].second);
      if (q0) fs[i] = t_norm_factor(N, pairs[i].first, pairs[i].second, *q0);
    });
    for (size_t i = 0; i < pairs.size(); ++i) {
      tab.h[pairs[i]] = std::move(hs[i]);
      if (q0) tab.t_factor[pairs[i]] = fs[i];
    }
    return tab;
  }
};

}  // namespace qkraw
