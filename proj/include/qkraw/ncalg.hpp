#pragma once

// The quantum matrix algebra on nine generators x_ij (1 <= i,j <= 3).
// Defining relations, oriented toward row-major order:
//   same column, i < j :  x_ik x_jk = q x_jk x_ik
//   same row,    i < j :  x_ki x_kj = q x_kj x_ki
//   i < j, k < l        :  x_il x_jk = x_jk x_il
//   i < j, k < l        :  x_jl x_ik = x_ik x_jl - (q - 1/q) x_il x_jk
// Ordered monomials x11^a11 x12^a12 ... x33^a33 form a basis, so the
// rewrite system below is terminating and confluent; the test suite
// checks confluence by comparing reduction strategies.

#include "qkraw/laurent.hpp"
#include "qkraw/qseries.hpp"

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace qkraw {

/// One of the nine generators, by matrix position (1-based).
struct GeneratorIdx {
  int row = 1;
  int col = 1;

  GeneratorIdx() = default;
  GeneratorIdx(int r, int c) : row(r), col(c) {
    if (r < 1 || r > 3 || c < 1 || c > 3)
      throw std::domain_error("GeneratorIdx: indices must be in 1..3");
  }
  /// Row-major code in 0..8; the total generator order.
  int code() const { return (row - 1) * 3 + (col - 1); }
  static GeneratorIdx from_code(int c) {
    return GeneratorIdx(c / 3 + 1, c % 3 + 1);
  }
  bool operator==(const GeneratorIdx& o) const {
    return row == o.row && col == o.col;
  }
};

/// Ordered monomial: exponent of each generator in row-major order.
using NCMonomial = std::array<int, 9>;

inline NCMonomial nc_one() { return NCMonomial{0, 0, 0, 0, 0, 0, 0, 0, 0}; }

inline int degree(const NCMonomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

inline std::string monomial_str(const NCMonomial& m) {
  std::string s;
  for (int g = 0; g < 9; ++g)
    for (int r = 0; r < m[g]; ++r) {
      if (!s.empty()) s += ' ';
      s += 'x';
      s += char('1' + g / 3);
      s += char('1' + g % 3);
    }
  return s.empty() ? "1" : s;
}

/// Noncommutative polynomial in canonical (row-major ordered) form.
class NCPoly {
 public:
  NCPoly() = default;
  explicit NCPoly(const LaurentScalar& c) {
    if (!c.is_zero()) terms_[nc_one()] = c;
  }

  static NCPoly zero() { return NCPoly(); }
  static NCPoly one() { return NCPoly(LaurentScalar::one()); }
  static NCPoly generator(GeneratorIdx g, LaurentScalar c = LaurentScalar::one()) {
    NCPoly p;
    NCMonomial m = nc_one();
    m[g.code()] = 1;
    if (!c.is_zero()) p.terms_[m] = c;
    return p;
  }
  static NCPoly monomial(const NCMonomial& m,
                         LaurentScalar c = LaurentScalar::one()) {
    NCPoly p;
    if (!c.is_zero()) p.terms_[m] = c;
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<NCMonomial, LaurentScalar>& terms() const { return terms_; }

  void add_term(const NCMonomial& m, const LaurentScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  NCPoly& operator+=(const NCPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  NCPoly& operator-=(const NCPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  NCPoly operator-() const {
    NCPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  NCPoly& operator*=(const LaurentScalar& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
  }
  friend NCPoly operator*(const LaurentScalar& c, NCPoly p) { return p *= c; }

  bool operator==(const NCPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const NCPoly& o) const { return !(*this == o); }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
      if (!s.empty()) s += "  +  ";
      s += "[" + c.str() + "] " + monomial_str(m);
    }
    return s;
  }

 private:
  std::map<NCMonomial, LaurentScalar> terms_;
};

enum class ReduceStrategy { LeftmostFirst, RightmostFirst };

namespace detail {

// Reduce coeff * (word of generator codes) to canonical form, adding the
// result into out.  The strategy picks which out-of-order adjacent pair
// gets rewritten first; results agree by confluence.
inline void reduce_word_into(std::vector<int> word, LaurentScalar coeff,
                             NCPoly& out, ReduceStrategy strat) {
  const LaurentScalar q_inv = LaurentScalar::q_power(-1);
  const LaurentScalar cross =
      -(LaurentScalar::q_power(1) - LaurentScalar::q_power(-1));

  std::vector<std::pair<std::vector<int>, LaurentScalar>> work;
  work.emplace_back(std::move(word), std::move(coeff));
  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();

    bool reduced = true;
    while (reduced) {
      reduced = false;
      long pos = -1;
      if (strat == ReduceStrategy::LeftmostFirst) {
        for (size_t i = 0; i + 1 < w.size(); ++i)
          if (w[i] > w[i + 1]) {
            pos = static_cast<long>(i);
            break;
          }
      } else {
        for (size_t i = w.size(); i >= 2; --i)
          if (w[i - 2] > w[i - 1]) {
            pos = static_cast<long>(i - 2);
            break;
          }
      }
      if (pos < 0) break;

      int a = w[pos], b = w[pos + 1];
      int ra = a / 3, ca = a % 3, rb = b / 3, cb = b % 3;
      if (ra == rb || ca == cb) {
        // q-commuting pair
        w[pos] = b;
        w[pos + 1] = a;
        c *= q_inv;
        reduced = true;
      } else if (ra > rb && ca < cb) {
        // commuting pair
        w[pos] = b;
        w[pos + 1] = a;
        reduced = true;
      } else {
        // ra > rb, ca > cb: swap plus a two-generator correction term
        std::vector<int> extra = w;
        extra[pos] = rb * 3 + ca;
        extra[pos + 1] = ra * 3 + cb;
        work.emplace_back(std::move(extra), c * cross);
        w[pos] = b;
        w[pos + 1] = a;
        reduced = true;
      }
    }

    NCMonomial m = nc_one();
    for (int g : w) ++m[g];
    out.add_term(m, c);
  }
}

inline std::vector<int> monomial_word(const NCMonomial& m) {
  std::vector<int> w;
  w.reserve(static_cast<size_t>(degree(m)));
  for (int g = 0; g < 9; ++g)
    for (int r = 0; r < m[g]; ++r) w.push_back(g);
  return w;
}

}  // namespace detail

/// Canonical form of an explicitly ordered product of generators.
inline NCPoly normal_order_word(const std::vector<GeneratorIdx>& word,
                                ReduceStrategy strat = ReduceStrategy::LeftmostFirst) {
  std::vector<int> codes;
  codes.reserve(word.size());
  for (const auto& g : word) codes.push_back(g.code());
  NCPoly out;
  detail::reduce_word_into(std::move(codes), LaurentScalar::one(), out, strat);
  return out;
}

inline NCPoly normal_order_codes(std::vector<int> codes,
                                 ReduceStrategy strat = ReduceStrategy::LeftmostFirst) {
  NCPoly out;
  detail::reduce_word_into(std::move(codes), LaurentScalar::one(), out, strat);
  return out;
}

inline NCPoly multiply(const NCPoly& lhs, const NCPoly& rhs,
                       ReduceStrategy strat = ReduceStrategy::LeftmostFirst) {
  NCPoly out;
  for (const auto& [ma, ca] : lhs.terms()) {
    std::vector<int> wa = detail::monomial_word(ma);
    for (const auto& [mb, cb] : rhs.terms()) {
      std::vector<int> w = wa;
      std::vector<int> wb = detail::monomial_word(mb);
      w.insert(w.end(), wb.begin(), wb.end());
      detail::reduce_word_into(std::move(w), ca * cb, out, strat);
    }
  }
  return out;
}

inline NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  return multiply(a, b);
}

/// Element of the two-fold tensor product of the algebra with itself;
/// legs multiply independently and never exchange.
class TensorNCPoly {
 public:
  using Key = std::pair<NCMonomial, NCMonomial>;

  TensorNCPoly() = default;

  static TensorNCPoly one() {
    TensorNCPoly t;
    t.terms_[{nc_one(), nc_one()}] = LaurentScalar::one();
    return t;
  }
  static TensorNCPoly pure(const NCPoly& l, const NCPoly& r) {
    TensorNCPoly t;
    for (const auto& [ml, cl] : l.terms())
      for (const auto& [mr, cr] : r.terms()) t.add_term(ml, mr, cl * cr);
    return t;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, LaurentScalar>& terms() const { return terms_; }

  void add_term(const NCMonomial& l, const NCMonomial& r, const LaurentScalar& c) {
    if (c.is_zero()) return;
    Key k{l, r};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(std::move(k), c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TensorNCPoly& operator+=(const TensorNCPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
  }
  TensorNCPoly& operator-=(const TensorNCPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
  }
  friend TensorNCPoly operator+(TensorNCPoly a, const TensorNCPoly& b) {
    return a += b;
  }
  friend TensorNCPoly operator-(TensorNCPoly a, const TensorNCPoly& b) {
    return a -= b;
  }

  friend TensorNCPoly operator*(const TensorNCPoly& a, const TensorNCPoly& b) {
    TensorNCPoly out;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) {
        NCPoly left = multiply(NCPoly::monomial(ka.first),
                               NCPoly::monomial(kb.first));
        NCPoly right = multiply(NCPoly::monomial(ka.second),
                                NCPoly::monomial(kb.second));
        LaurentScalar c = ca * cb;
        for (const auto& [ml, cl] : left.terms())
          for (const auto& [mr, cr] : right.terms())
            out.add_term(ml, mr, c * cl * cr);
      }
    return out;
  }
  TensorNCPoly& operator*=(const TensorNCPoly& o) { return *this = *this * o; }

  bool operator==(const TensorNCPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const TensorNCPoly& o) const { return !(*this == o); }

 private:
  std::map<Key, LaurentScalar> terms_;
};

/// Coproduct on a generator: x_ij -> sum_k x_ik (x) x_kj.
inline TensorNCPoly coproduct_generator(GeneratorIdx g) {
  TensorNCPoly t;
  for (int k = 1; k <= 3; ++k) {
    NCMonomial l = nc_one(), r = nc_one();
    l[GeneratorIdx(g.row, k).code()] = 1;
    r[GeneratorIdx(k, g.col).code()] = 1;
    t.add_term(l, r, LaurentScalar::one());
  }
  return t;
}

/// Algebra-homomorphic extension of the coproduct.
inline TensorNCPoly coproduct(const NCPoly& p) {
  TensorNCPoly out;
  for (const auto& [m, c] : p.terms()) {
    TensorNCPoly acc = TensorNCPoly::one();
    for (int g = 0; g < 9; ++g)
      for (int r = 0; r < m[g]; ++r)
        acc *= coproduct_generator(GeneratorIdx::from_code(g));
    for (const auto& [k, v] : acc.terms()) out.add_term(k.first, k.second, c * v);
  }
  return out;
}

/// Counit: x_ij -> delta_ij, extended as an algebra homomorphism.  A
/// monomial survives iff it involves only diagonal generators.
inline LaurentScalar counit(const NCPoly& p) {
  LaurentScalar out;
  for (const auto& [m, c] : p.terms()) {
    bool diag = true;
    for (int g = 0; g < 9 && diag; ++g)
      if (m[g] != 0 && g % 3 != g / 3) diag = false;
    if (diag) out += c;
  }
  return out;
}

/// Quantum minor: the 2x2 quantum determinant of the complementary
/// rows/cols of position (i,j).
inline NCPoly quantum_minor(int i, int j) {
  if (i < 1 || i > 3 || j < 1 || j > 3)
    throw std::domain_error("quantum_minor: indices must be in 1..3");
  std::array<int, 2> rows{}, cols{};
  int ri = 0, ci = 0;
  for (int r = 1; r <= 3; ++r)
    if (r != i) rows[ri++] = r;
  for (int c = 1; c <= 3; ++c)
    if (c != j) cols[ci++] = c;
  NCPoly out = normal_order_word(
      {GeneratorIdx(rows[0], cols[0]), GeneratorIdx(rows[1], cols[1])});
  NCPoly swapped = normal_order_word(
      {GeneratorIdx(rows[0], cols[1]), GeneratorIdx(rows[1], cols[0])});
  swapped *= LaurentScalar::q_power(1, Rational(-1));
  return out + swapped;
}

/// Six-term quantum determinant sum_{sigma} (-q)^{l(sigma)} x_{1 s1} x_{2 s2} x_{3 s3}.
inline NCPoly quantum_det() {
  static const std::array<std::array<int, 3>, 6> perms{{
      {1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}}};
  static const std::array<int, 6> len{0, 1, 1, 2, 2, 3};
  NCPoly out;
  for (size_t p = 0; p < perms.size(); ++p) {
    NCPoly term = normal_order_word({GeneratorIdx(1, perms[p][0]),
                                     GeneratorIdx(2, perms[p][1]),
                                     GeneratorIdx(3, perms[p][2])});
    Rational sign = (len[p] % 2 == 0) ? Rational(1) : Rational(-1);
    term *= LaurentScalar::q_power(len[p], sign);
    out += term;
  }
  return out;
}

/// Antipode on a generator: S(x_ij) = (-q)^{i-j} minor_{ji}.
inline NCPoly antipode_generator(GeneratorIdx g) {
  NCPoly m = quantum_minor(g.col, g.row);
  int e = g.row - g.col;
  Rational sign = (((e % 2) + 2) % 2 == 0) ? Rational(1) : Rational(-1);
  m *= LaurentScalar::q_power(e, sign);
  return m;
}

/// Anti-homomorphic extension: S(uv) = S(v) S(u).  This is the formal
/// minor map of the quantum matrix bialgebra; it becomes the Hopf
/// antipode once the quantum determinant is set to one.
inline NCPoly antipode(const NCPoly& p) {
  NCPoly out;
  for (const auto& [m, c] : p.terms()) {
    NCPoly acc = NCPoly::one();
    for (int g = 8; g >= 0; --g)
      for (int r = 0; r < m[g]; ++r)
        acc = multiply(acc, antipode_generator(GeneratorIdx::from_code(g)));
    acc *= c;
    out += acc;
  }
  return out;
}

/// Star on a generator: x_ij^* = (-q)^{j-i} minor_{ij}.
inline NCPoly star_generator(int i, int j) {
  NCPoly m = quantum_minor(i, j);
  int e = j - i;
  Rational sign = (((e % 2) + 2) % 2 == 0) ? Rational(1) : Rational(-1);
  m *= LaurentScalar::q_power(e, sign);
  return m;
}

/// Conjugate-linear anti-homomorphic extension of the star (q stays q,
/// rational coefficients are self-conjugate).
inline NCPoly star(const NCPoly& p) {
  NCPoly out;
  for (const auto& [m, c] : p.terms()) {
    NCPoly acc = NCPoly::one();
    for (int g = 8; g >= 0; --g)
      for (int r = 0; r < m[g]; ++r) {
        GeneratorIdx gi = GeneratorIdx::from_code(g);
        acc = multiply(acc, star_generator(gi.row, gi.col));
      }
    acc *= c;
    out += acc;
  }
  return out;
}

}  // namespace qkraw
