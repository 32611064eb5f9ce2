#pragma once

// Numeric representations on truncated tensor powers of the Fock-type
// basis |k>, k >= 0.  Operators built from a degree-d element shift any
// leg index by at most d, so they are exact on the safe window of
// states whose indices all lie in [d, K-d).

#include "qkraw/corep.hpp"
#include "qkraw/ncalg.hpp"

#include <cstdint>
#include <functional>
#include <optional>

namespace qkraw {

/// Truncated tensor-power state space: `legs` factors of dimension `dim`.
struct TruncatedSpace {
  int legs = 1;
  long dim = 0;

  TruncatedSpace() = default;
  TruncatedSpace(int l, long d) : legs(l), dim(d) {
    if (l < 1 || d < 1) throw std::domain_error("TruncatedSpace: bad shape");
    double total = std::pow(static_cast<double>(d), l);
    if (total > (1u << 26))
      throw std::domain_error("TruncatedSpace: truncation too large");
  }

  size_t size() const {
    size_t s = 1;
    for (int l = 0; l < legs; ++l) s *= static_cast<size_t>(dim);
    return s;
  }

  /// Leg 0 is the leftmost tensor factor (most significant digit).
  uint32_t flatten(const std::vector<long>& ks) const {
    uint32_t idx = 0;
    for (int l = 0; l < legs; ++l)
      idx = static_cast<uint32_t>(idx * dim + ks[static_cast<size_t>(l)]);
    return idx;
  }
  std::vector<long> unflatten(uint32_t idx) const {
    std::vector<long> ks(static_cast<size_t>(legs));
    for (int l = legs - 1; l >= 0; --l) {
      ks[static_cast<size_t>(l)] = static_cast<long>(idx % dim);
      idx = static_cast<uint32_t>(idx / dim);
    }
    return ks;
  }

  bool in_window(uint32_t idx, long margin) const {
    for (int l = 0; l < legs; ++l) {
      long k = static_cast<long>(idx % dim);
      if (k < margin || k >= dim - margin) return false;
      idx = static_cast<uint32_t>(idx / dim);
    }
    return true;
  }

  bool operator==(const TruncatedSpace& o) const {
    return legs == o.legs && dim == o.dim;
  }
};

/// One-dimensional torus character: x_ij -> alpha_i delta_ij with
/// |alpha_i| = 1 and alpha_1 alpha_2 alpha_3 = 1.
struct TorusChar {
  Cplx alpha1{1.0, 0.0};
  Cplx alpha2{1.0, 0.0};

  Cplx alpha(int i) const {
    switch (i) {
      case 1: return alpha1;
      case 2: return alpha2;
      default: return 1.0 / (alpha1 * alpha2);
    }
  }
  static TorusChar phases(double theta1, double theta2) {
    TorusChar t;
    t.alpha1 = std::polar(1.0, theta1);
    t.alpha2 = std::polar(1.0, theta2);
    return t;
  }
};

/// Complex sparse operator stored column-wise: cols[in] lists
/// (out, coeff) pairs sorted by out.
struct SparseOperator {
  TruncatedSpace space;
  std::vector<std::vector<std::pair<uint32_t, Cplx>>> cols;

  SparseOperator() = default;
  explicit SparseOperator(TruncatedSpace sp) : space(sp), cols(sp.size()) {}

  static SparseOperator identity(TruncatedSpace sp) {
    SparseOperator op(sp);
    for (uint32_t s = 0; s < op.cols.size(); ++s)
      op.cols[s].emplace_back(s, Cplx(1.0, 0.0));
    return op;
  }

  void add_entry(uint32_t out, uint32_t in, Cplx v) {
    auto& col = cols[in];
    auto it = std::lower_bound(
        col.begin(), col.end(), out,
        [](const auto& e, uint32_t o) { return e.first < o; });
    if (it != col.end() && it->first == out)
      it->second += v;
    else
      col.insert(it, {out, v});
  }

  size_t nnz() const {
    size_t n = 0;
    for (const auto& c : cols) n += c.size();
    return n;
  }

  SparseOperator& operator+=(const SparseOperator& o) {
    for (uint32_t s = 0; s < cols.size(); ++s)
      for (const auto& [t, v] : o.cols[s]) add_entry(t, s, v);
    return *this;
  }
  SparseOperator& operator*=(Cplx c) {
    for (auto& col : cols)
      for (auto& e : col) e.second *= c;
    return *this;
  }

  /// Operator product: (a * b)|v> = a(b|v>).
  friend SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
    if (!(a.space == b.space))
      throw std::domain_error("SparseOperator: mismatched spaces");
    SparseOperator c(a.space);
    std::vector<Cplx> acc(a.space.size(), Cplx(0.0));
    std::vector<uint32_t> touched;
    for (uint32_t s = 0; s < b.cols.size(); ++s) {
      touched.clear();
      for (const auto& [t, bv] : b.cols[s])
        for (const auto& [u, av] : a.cols[t]) {
          if (acc[u] == Cplx(0.0) &&
              std::find(touched.begin(), touched.end(), u) == touched.end())
            touched.push_back(u);
          acc[u] += av * bv;
        }
      std::sort(touched.begin(), touched.end());
      auto& col = c.cols[s];
      col.reserve(touched.size());
      for (uint32_t u : touched) {
        if (acc[u] != Cplx(0.0)) col.emplace_back(u, acc[u]);
        acc[u] = Cplx(0.0);
      }
    }
    return c;
  }

  /// Conjugate transpose.
  SparseOperator adjoint() const {
    SparseOperator c(space);
    for (uint32_t s = 0; s < cols.size(); ++s)
      for (const auto& [t, v] : cols[s]) c.cols[t].emplace_back(s, std::conj(v));
    for (auto& col : c.cols)
      std::sort(col.begin(), col.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
    return c;
  }

  /// Image of a basis state, as (out, coeff) pairs.
  const std::vector<std::pair<uint32_t, Cplx>>& column(uint32_t in) const {
    return cols[in];
  }

  /// Apply to a sparse vector.
  std::vector<std::pair<uint32_t, Cplx>> apply(
      const std::vector<std::pair<uint32_t, Cplx>>& vec) const {
    std::map<uint32_t, Cplx> acc;
    for (const auto& [s, v] : vec)
      for (const auto& [t, a] : cols[s]) acc[t] += a * v;
    std::vector<std::pair<uint32_t, Cplx>> out;
    out.reserve(acc.size());
    for (const auto& [t, v] : acc)
      if (v != Cplx(0.0)) out.emplace_back(t, v);
    return out;
  }

  /// Largest |entry| of (this - o) over columns inside the margin window.
  double max_deviation(const SparseOperator& o, long margin) const {
    double dev = 0.0;
    std::map<uint32_t, Cplx> diff;
    for (uint32_t s = 0; s < cols.size(); ++s) {
      if (!space.in_window(s, margin)) continue;
      diff.clear();
      for (const auto& [t, v] : cols[s]) diff[t] += v;
      for (const auto& [t, v] : o.cols[s]) diff[t] -= v;
      for (const auto& [t, v] : diff) dev = std::max(dev, std::abs(v));
    }
    return dev;
  }

  double max_abs_on_window(long margin) const {
    double dev = 0.0;
    for (uint32_t s = 0; s < cols.size(); ++s) {
      if (!space.in_window(s, margin)) continue;
      for (const auto& [t, v] : cols[s]) dev = std::max(dev, std::abs(v));
    }
    return dev;
  }
};

namespace detail {

struct LegHit {
  long out;
  Cplx coeff;
};

// Action of one generator in an elementary representation on |k>.
// Returns nothing when the image vanishes or leaves the truncation.
inline std::optional<LegHit> leg_action(int rep, int code, long k, long K,
                                        double q) {
  auto sq = [&](long kk) { return std::sqrt(1.0 - std::pow(q, 2.0 * kk)); };
  if (rep == 1) {
    switch (code) {
      case 0:  // x11: lowering
        if (k == 0) return std::nullopt;
        return LegHit{k - 1, sq(k)};
      case 1: return LegHit{k, std::pow(q, static_cast<double>(k + 1))};
      case 3: return LegHit{k, -std::pow(q, static_cast<double>(k))};
      case 4:  // x22: raising
        if (k + 1 >= K) return std::nullopt;
        return LegHit{k + 1, sq(k + 1)};
      case 8: return LegHit{k, 1.0};
      default: return std::nullopt;
    }
  }
  // rep == 2: same block shifted to rows/columns 2,3
  switch (code) {
    case 0: return LegHit{k, 1.0};
    case 4:
      if (k == 0) return std::nullopt;
      return LegHit{k - 1, sq(k)};
    case 5: return LegHit{k, std::pow(q, static_cast<double>(k + 1))};
    case 7: return LegHit{k, -std::pow(q, static_cast<double>(k))};
    case 8:
      if (k + 1 >= K) return std::nullopt;
      return LegHit{k + 1, sq(k + 1)};
    default: return std::nullopt;
  }
}

}  // namespace detail

/// pi_1 or pi_2 image of a single generator on one truncated leg.
inline SparseOperator elementary_op(int which, GeneratorIdx gen, long K,
                                    double q) {
  if (which != 1 && which != 2)
    throw std::domain_error("elementary_op: representation index must be 1 or 2");
  if (!(q > 0.0 && q < 1.0))
    throw std::domain_error("elementary_op: q must lie in (0,1)");
  SparseOperator op(TruncatedSpace(1, K));
  for (long k = 0; k < K; ++k)
    if (auto hit = detail::leg_action(which, gen.code(), k, K, q))
      op.cols[static_cast<size_t>(k)].emplace_back(
          static_cast<uint32_t>(hit->out), hit->coeff);
  return op;
}

/// Image of one generator under the word representation
/// (pi_{w1} (x) ... (x) pi_{wL}) o Delta^{(L-1)}: a sum over index paths
/// r = k0, k1, ..., kL = s of pure tensor operators.  An optional torus
/// character multiplies the image of x_{rs} by alpha_s.
inline SparseOperator word_generator_op(const std::vector<int>& word,
                                        GeneratorIdx gen, long K, double q,
                                        const TorusChar* torus = nullptr) {
  if (word.empty()) throw std::domain_error("word_generator_op: empty word");
  for (int w : word)
    if (w != 1 && w != 2)
      throw std::domain_error("word_generator_op: word letters must be 1 or 2");
  const int L = static_cast<int>(word.size());
  TruncatedSpace sp(L, K);
  SparseOperator op(sp);

  // enumerate paths (k0 = row, ..., kL = col) through the coproduct
  std::vector<std::array<int, 2>> legs(static_cast<size_t>(L));
  std::function<void(int, int)> walk = [&](int depth, int from) {
    if (depth == L - 1) {
      legs[static_cast<size_t>(depth)] = {from, gen.col};
      // one pure tensor: apply per-leg actions
      std::vector<long> in(static_cast<size_t>(L), 0);
      std::vector<long> out(static_cast<size_t>(L), 0);
      std::function<void(int, Cplx)> fill = [&](int leg, Cplx coeff) {
        if (leg == L) {
          Cplx c = coeff;
          if (torus) c *= torus->alpha(gen.col);
          op.add_entry(sp.flatten(out), sp.flatten(in), c);
          return;
        }
        int code = (legs[static_cast<size_t>(leg)][0] - 1) * 3 +
                   (legs[static_cast<size_t>(leg)][1] - 1);
        for (long k = 0; k < K; ++k) {
          auto hit = detail::leg_action(word[static_cast<size_t>(leg)], code, k,
                                        K, q);
          if (!hit) continue;
          in[static_cast<size_t>(leg)] = k;
          out[static_cast<size_t>(leg)] = hit->out;
          fill(leg + 1, coeff * hit->coeff);
        }
      };
      fill(0, Cplx(1.0));
      return;
    }
    for (int mid = 1; mid <= 3; ++mid) {
      legs[static_cast<size_t>(depth)] = {from, mid};
      walk(depth + 1, mid);
    }
  };
  walk(0, gen.row);
  return op;
}

/// Image of an explicit generator word (no symbolic reduction): the
/// operator product of the letter images, left factor applied last.
inline SparseOperator word_monomial_op(const std::vector<int>& word,
                                       const std::vector<GeneratorIdx>& gens,
                                       long K, double q,
                                       const TorusChar* torus = nullptr) {
  TruncatedSpace sp(static_cast<int>(word.size()), K);
  SparseOperator acc = SparseOperator::identity(sp);
  for (const auto& g : gens) acc = acc * word_generator_op(word, g, K, q, torus);
  return acc;
}

/// Linear extension to polynomials, coefficients evaluated at q.
inline SparseOperator word_op(const std::vector<int>& word, const NCPoly& p,
                              long K, double q,
                              const TorusChar* torus = nullptr) {
  TruncatedSpace sp(static_cast<int>(word.size()), K);
  // cache generator images
  std::array<std::optional<SparseOperator>, 9> gen_ops;
  auto gen_op = [&](int code) -> const SparseOperator& {
    if (!gen_ops[static_cast<size_t>(code)])
      gen_ops[static_cast<size_t>(code)] =
          word_generator_op(word, GeneratorIdx::from_code(code), K, q, torus);
    return *gen_ops[static_cast<size_t>(code)];
  };

  SparseOperator out(sp);
  for (const auto& [mono, coeff] : p.terms()) {
    SparseOperator acc = SparseOperator::identity(sp);
    for (int g = 0; g < 9; ++g)
      for (int r = 0; r < mono[g]; ++r) acc = acc * gen_op(g);
    acc *= Cplx(coeff.eval(q), 0.0);
    out += acc;
  }
  return out;
}

inline SparseOperator adjoint(const SparseOperator& op) { return op.adjoint(); }

/// Image vector of the unitary matrix element t_{m,n} applied to a basis
/// state, keyed by the output state tuple.
inline std::map<std::vector<long>, Cplx> apply_matrix_element(
    const std::vector<int>& word, long N, const MultiIndex3& m,
    const MultiIndex3& n, const std::vector<long>& state, long K,
    const Rational& q0) {
  TruncatedSpace sp(static_cast<int>(word.size()), K);
  if (state.size() != word.size())
    throw std::domain_error("apply_matrix_element: state arity != word length");
  for (long k : state)
    if (k < N || k >= K - N)
      throw std::domain_error("apply_matrix_element: state outside safe window");
  double q = static_cast<double>(q0);
  TElement t = t_element(N, m, n, q0);
  SparseOperator op = word_op(word, t.h, K, q);
  std::map<std::vector<long>, Cplx> out;
  for (const auto& [idx, v] : op.column(sp.flatten(state))) {
    Cplx scaled = v * t.factor;
    if (scaled != Cplx(0.0)) out[sp.unflatten(idx)] = scaled;
  }
  return out;
}

}  // namespace qkraw
